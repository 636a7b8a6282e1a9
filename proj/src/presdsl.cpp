#include "presdsl.hpp"

#include <algorithm>
#include <cctype>

namespace skewring {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }

  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    get();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      get();
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      fail("expected identifier");
    std::string s;
    while (std::isalpha(static_cast<unsigned char>(peek()))) s += get();
    return s;
  }

  int integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      get();
      neg = true;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    if (v == 0) fail("zero exponent");
    return neg ? -static_cast<int>(v) : static_cast<int>(v);
  }
};

int gen_index(const std::vector<std::string>& gens, const std::string& name) {
  auto it = std::find(gens.begin(), gens.end(), name);
  return it == gens.end() ? -1 : static_cast<int>(it - gens.begin());
}

bool all_single_letter(const std::vector<std::string>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const std::string& g) { return g.size() == 1; });
}

// One term: an identifier run with an optional exponent on its last letter.
void parse_term(Cursor& cur, const std::vector<std::string>& gens, Word& out) {
  std::string run = cur.ident();
  std::vector<int> indices;
  int whole = gen_index(gens, run);
  if (whole >= 0) {
    indices.push_back(whole);
  } else if (all_single_letter(gens)) {
    for (char c : run) {
      int gi = gen_index(gens, std::string(1, c));
      if (gi < 0) cur.fail("unknown generator '" + std::string(1, c) + "'");
      indices.push_back(gi);
    }
  } else {
    cur.fail("unknown generator '" + run + "'");
  }
  int exp = 1;
  if (cur.accept('^')) exp = cur.integer();
  for (size_t i = 0; i + 1 < indices.size(); ++i)
    out.push_back({indices[i], 1});
  out.push_back({indices.back(), exp});
}

Word parse_word_at(Cursor& cur, const std::vector<std::string>& gens) {
  cur.skip_ws();
  if (cur.peek() == '1') {
    cur.get();
    return {};
  }
  Word w;
  parse_term(cur, gens, w);
  for (;;) {
    cur.skip_ws();
    char c = cur.peek();
    if (c == '*') {
      cur.get();
      parse_term(cur, gens, w);
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      parse_term(cur, gens, w);
    } else {
      break;
    }
  }
  return normalize_word(w);
}

}  // namespace

Word normalize_word(const Word& w) {
  Word out;
  for (const Factor& f : w) {
    if (f.exp == 0) continue;
    if (!out.empty() && out.back().gen == f.gen) {
      out.back().exp += f.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(f);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return out;
}

Presentation parse_presentation(const std::string& text) {
  Cursor cur(text);
  cur.expect('<', "to open presentation");
  Presentation p;
  p.generators.push_back(cur.ident());
  while (cur.accept(',')) p.generators.push_back(cur.ident());
  for (size_t i = 0; i < p.generators.size(); ++i)
    for (size_t j = i + 1; j < p.generators.size(); ++j)
      if (p.generators[i] == p.generators[j])
        cur.fail("duplicate generator '" + p.generators[i] + "'");
  cur.expect('|', "between generators and relations");
  do {
    Word lhs = parse_word_at(cur, p.generators);
    if (cur.accept('=')) {
      Word rhs = parse_word_at(cur, p.generators);
      Word rel = lhs;
      Word rinv = inverse_word(rhs);
      rel.insert(rel.end(), rinv.begin(), rinv.end());
      p.relators.push_back(normalize_word(rel));
    } else {
      p.relators.push_back(lhs);
    }
  } while (cur.accept(','));
  cur.expect('>', "to close presentation");
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input after presentation");
  return p;
}

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  Cursor cur(text);
  Word w = parse_word_at(cur, gens);
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input after word");
  return w;
}

std::vector<Word> parse_word_list(const std::string& text,
                                  const std::vector<std::string>& gens) {
  Cursor cur(text);
  std::vector<Word> out;
  out.push_back(parse_word_at(cur, gens));
  while (cur.accept(',')) out.push_back(parse_word_at(cur, gens));
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input after word list");
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += gens.at(static_cast<size_t>(w[i].gen));
    if (w[i].exp != 1) s += '^' + std::to_string(w[i].exp);
  }
  return s;
}

}  // namespace skewring
