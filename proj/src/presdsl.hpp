#ifndef SKEWRING_PRESDSL_HPP
#define SKEWRING_PRESDSL_HPP

#include <string>
#include <vector>

#include "common.hpp"

namespace skewring {

// One factor of a word: generator index and a nonzero exponent.
struct Factor {
  int gen;
  int exp;
  bool operator==(const Factor&) const = default;
};

// Normalized word: adjacent factors have distinct generators, no zero
// exponents. The empty word is the identity.
using Word = std::vector<Factor>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // each relator w stands for w = 1
};

// Merge adjacent factors with the same generator, drop zero exponents.
Word normalize_word(const Word& w);

Word inverse_word(const Word& w);

// Grammar:
//   presentation := "<" genlist "|" relation { "," relation } ">"
//   genlist      := ident { "," ident }
//   relation     := word [ "=" word ]
//   word         := "1" | term { [ "*" ] term }
//   term         := ident [ "^" int ]
// "u = v" is stored as the relator u * v^-1. When every generator name is a
// single letter, "*" may be omitted ("ab" parses as "a*b").
Presentation parse_presentation(const std::string& text);

Word parse_word(const std::string& text, const std::vector<std::string>& gens);

// Comma-separated list of words, e.g. a kernel spec "a^2,a*b".
std::vector<Word> parse_word_list(const std::string& text,
                                  const std::vector<std::string>& gens);

// Inverse of parse_word: parse_word(format_word(w)) == w.
std::string format_word(const Word& w, const std::vector<std::string>& gens);

}  // namespace skewring

#endif
