#include "groupcore.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace skewring {

namespace {

// ---------------------------------------------------------------------------
// Todd-Coxeter coset enumeration over the trivial subgroup, HLT style with
// immediate coincidence processing. Deterministic: relators in input order,
// cosets in creation order.

class CosetTable {
 public:
  CosetTable(int ngens, const std::vector<Word>& relators, int limit)
      : ncols_(2 * ngens), limit_(limit) {
    for (const Word& r : relators) {
      std::vector<int> cols;
      for (const Factor& f : r) {
        int fwd = 2 * f.gen, bwd = 2 * f.gen + 1;
        for (int k = 0; k < std::abs(f.exp); ++k)
          cols.push_back(f.exp > 0 ? fwd : bwd);
      }
      if (!cols.empty()) relcols_.push_back(std::move(cols));
    }
    new_coset();
  }

  void enumerate() {
    // Repeat full passes until no coset is created or merged; the final
    // table is closed and satisfies every relator at every coset.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < static_cast<int>(p_.size()); ++c) {
        if (rep(c) != c) continue;
        size_t before_sz = tab_.size();
        size_t before_dead = dead_;
        for (const auto& relcols : relcols_) {
          scan_and_fill(c, relcols);
          if (rep(c) != c) break;
        }
        if (rep(c) == c)
          for (int col = 0; col < ncols_; ++col)
            if (entry(c, col) < 0) define(c, col);
        if (tab_.size() != before_sz || dead_ != before_dead) changed = true;
      }
    }
  }

  int invcol(int col) const { return col ^ 1; }

  // Live cosets in creation order, with 0 first.
  std::vector<int> live() const {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(p_.size()); ++c)
      if (p_[c] == c) out.push_back(c);
    return out;
  }

  int act(int c, int col) const { return entry(c, col); }

 private:
  int ncols_;
  int limit_;
  std::vector<std::vector<int>> relcols_;
  std::vector<int> tab_;  // tab_[c*ncols_ + col], -1 undefined
  std::vector<int> p_;    // union-find parent
  size_t dead_ = 0;

  int entry(int c, int col) const { return tab_[c * ncols_ + col]; }
  void set(int c, int col, int v) { tab_[c * ncols_ + col] = v; }

  int rep(int c) const {
    while (p_[c] != c) c = p_[c];
    return c;
  }

  int new_coset() {
    int live_count = static_cast<int>(p_.size() - dead_);
    if (live_count >= limit_)
      throw RealizeError("coset enumeration exceeded limit " +
                         std::to_string(limit_) +
                         " (group too large or infinite)");
    int id = static_cast<int>(p_.size());
    p_.push_back(id);
    tab_.resize(tab_.size() + ncols_, -1);
    return id;
  }

  int define(int c, int col) {
    int d = new_coset();
    set(c, col, d);
    set(d, invcol(col), c);
    return d;
  }

  void merge(int a, int b, std::deque<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    ++dead_;
    q.push_back(b);
  }

  void coincide(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int y = q.front();
      q.pop_front();
      for (int col = 0; col < ncols_; ++col) {
        int d = entry(y, col);
        if (d < 0) continue;
        // drop the companion entry of the dying row
        if (entry(d, invcol(col)) == y) set(d, invcol(col), -1);
        int mu = rep(y), nu = rep(d);
        int ex = entry(mu, col);
        if (ex >= 0) {
          merge(nu, ex, q);
        } else if (entry(nu, invcol(col)) >= 0) {
          merge(mu, entry(nu, invcol(col)), q);
        } else {
          set(mu, col, nu);
          set(nu, invcol(col), mu);
        }
      }
    }
    // rewrite stale references through representatives
    for (int c = 0; c < static_cast<int>(p_.size()); ++c) {
      if (p_[c] != c) continue;
      for (int col = 0; col < ncols_; ++col) {
        int d = entry(c, col);
        if (d >= 0) set(c, col, rep(d));
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c;
    size_t i = 0;
    int b = c;
    size_t j = w.size();
    for (;;) {
      while (i < j && entry(f, w[i]) >= 0) f = entry(f, w[i++]);
      if (i == j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j > i && entry(b, invcol(w[j - 1])) >= 0)
        b = entry(b, invcol(w[--j]));
      if (j == i) {
        if (f != b) coincide(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        set(b, invcol(w[i]), f);
        return;
      }
      define(f, w[i]);
    }
  }
};

std::string join_names(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + "*" + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

void FiniteGroup::finish(bool check_assoc) {
  const int n = n_;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw InputError("identity row/column invariant violated");
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) {
      int v = mul(x, y);
      if (v < 0 || v >= n || seen[v])
        throw InputError("multiplication table is not a Latin square");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n; ++y) seen[mul(y, x)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw InputError("multiplication table is not a Latin square");
  }
  inv_.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mul(x, y) == 0) {
        inv_[x] = y;
        break;
      }
  for (int x = 0; x < n; ++x)
    if (inv_[x] < 0 || mul(x, inv_[x]) != 0 || mul(inv_[x], x) != 0)
      throw InputError("inverse invariant violated");
  if (check_assoc || n <= 256) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z)))
            throw InputError("multiplication table is not associative");
  }
  elem_order_.assign(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int k = 1, v = x;
    while (v != 0) {
      v = mul(v, x);
      ++k;
    }
    elem_order_[x] = k;
  }
  if (names_.empty()) {
    names_.assign(static_cast<size_t>(n), std::string());
    names_[0] = "1";
    for (int x = 1; x < n; ++x) names_[x] = "g" + std::to_string(x);
  }
}

FiniteGroup FiniteGroup::realize(const Presentation& p, int coset_limit) {
  if (p.generators.empty()) throw InputError("presentation has no generators");
  if (coset_limit < 1) throw InputError("coset limit must be positive");
  CosetTable ct(static_cast<int>(p.generators.size()), p.relators,
                coset_limit);
  ct.enumerate();
  std::vector<int> live = ct.live();
  const int n = static_cast<int>(live.size());
  if (n > kMaxGroupOrder)
    throw RealizeError("group order " + std::to_string(n) +
                       " exceeds the configured cap of " +
                       std::to_string(kMaxGroupOrder));
  std::vector<int> idx(live.back() + 1, -1);
  for (int i = 0; i < n; ++i) idx[live[i]] = i;

  // Shortest word for each element, BFS from the identity coset.
  std::vector<Word> words(static_cast<size_t>(n));
  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::deque<int> bfs{0};
  visited[0] = 1;
  const int ncols = 2 * static_cast<int>(p.generators.size());
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop_front();
    for (int col = 0; col < ncols; ++col) {
      int d = idx[ct.act(live[c], col)];
      if (visited[d]) continue;
      visited[d] = 1;
      Word w = words[c];
      w.push_back({col / 2, (col % 2 == 0) ? 1 : -1});
      words[d] = normalize_word(w);
      bfs.push_back(d);
    }
  }

  FiniteGroup g;
  g.n_ = n;
  g.mul_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int c = live[x];
      for (const Factor& f : words[y]) {
        int col = 2 * f.gen + (f.exp > 0 ? 0 : 1);
        for (int k = 0; k < std::abs(f.exp); ++k) c = ct.act(c, col);
      }
      g.mul_[static_cast<size_t>(x) * n + y] = idx[c];
    }
  g.generator_names_ = p.generators;
  for (size_t i = 0; i < p.generators.size(); ++i)
    g.generator_elems_.push_back(idx[ct.act(0, 2 * static_cast<int>(i))]);
  g.names_.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    g.names_[x] = format_word(words[x], p.generators);
  g.finish(n <= 256);
  // every relator must evaluate to the identity
  for (const Word& r : p.relators)
    if (g.eval_word(r) != 0)
      throw RealizeError("internal error: relator not satisfied");
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  long long order = static_cast<long long>(a.order()) * b.order();
  if (order > kMaxGroupOrder)
    throw RealizeError("direct product order " + std::to_string(order) +
                       " exceeds the configured cap");
  FiniteGroup g;
  const int na = a.order(), nb = b.order(), n = na * nb;
  g.n_ = n;
  g.mul_.assign(static_cast<size_t>(n) * n, -1);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          g.mul_[static_cast<size_t>(x1 * nb + y1) * n + (x2 * nb + y2)] =
              a.mul(x1, x2) * nb + b.mul(y1, y2);
  g.names_.resize(static_cast<size_t>(n));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      g.names_[x * nb + y] = join_names(a.name(x), b.name(y));
  g.generator_names_ = a.generator_names_;
  for (int e : a.generator_elems_) g.generator_elems_.push_back(e * nb);
  for (size_t i = 0; i < b.generator_names_.size(); ++i) {
    std::string nm = b.generator_names_[i];
    while (std::find(g.generator_names_.begin(), g.generator_names_.end(),
                     nm) != g.generator_names_.end())
      nm += "x";
    g.generator_names_.push_back(nm);
    g.generator_elems_.push_back(b.generator_elems_[i]);
  }
  g.finish(n <= 256);
  return g;
}

FiniteGroup FiniteGroup::elementary_abelian(int rank) {
  if (rank < 0 || rank > 8) throw InputError("unsupported C2 rank");
  FiniteGroup g;
  const int n = 1 << rank;
  g.n_ = n;
  g.mul_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.mul_[static_cast<size_t>(x) * n + y] = x ^ y;
  g.names_.resize(static_cast<size_t>(n));
  for (int i = 0; i < rank; ++i) {
    g.generator_names_.push_back("e" + std::to_string(i + 1));
    g.generator_elems_.push_back(1 << i);
  }
  for (int x = 0; x < n; ++x) {
    std::string nm = "1";
    for (int i = 0; i < rank; ++i)
      if (x & (1 << i)) nm = join_names(nm, g.generator_names_[i]);
    g.names_[x] = nm;
  }
  g.finish(true);
  return g;
}

FiniteGroup FiniteGroup::from_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  int n = 0;
  if (!(in >> kw >> n) || kw != "order")
    throw InputError("expected header line 'order n'");
  if (n < 1 || n > kMaxGroupOrder)
    throw InputError("order out of range 1.." + std::to_string(kMaxGroupOrder));
  FiniteGroup g;
  g.n_ = n;
  g.mul_.assign(static_cast<size_t>(n) * n, -1);
  for (size_t i = 0; i < g.mul_.size(); ++i) {
    int v;
    if (!(in >> v)) throw InputError("truncated multiplication table");
    if (v < 0 || v >= n) throw InputError("table entry out of range");
    g.mul_[i] = v;
  }
  int extra;
  if (in >> extra) throw InputError("trailing data after table");
  g.finish(true);
  return g;
}

int FiniteGroup::pow(int x, int e) const {
  int base = e >= 0 ? x : inv(x);
  int r = 0;
  for (int k = 0; k < std::abs(e); ++k) r = mul(r, base);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

int FiniteGroup::eval_word(const Word& w) const {
  int r = 0;
  for (const Factor& f : w)
    r = mul(r, pow(generator_elems_.at(static_cast<size_t>(f.gen)), f.exp));
  return r;
}

FiniteGroup FiniteGroup::subgroup_as_group(
    const std::vector<int>& members) const {
  const int m = static_cast<int>(members.size());
  if (m == 0 || members[0] != 0)
    throw InputError("subgroup must contain the identity as first member");
  std::vector<int> pos(static_cast<size_t>(n_), -1);
  for (int i = 0; i < m; ++i) pos[members[i]] = i;
  FiniteGroup g;
  g.n_ = m;
  g.mul_.assign(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int v = pos[mul(members[i], members[j])];
      if (v < 0) throw InputError("member set is not closed");
      g.mul_[static_cast<size_t>(i) * m + j] = v;
    }
  g.names_.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) g.names_[i] = names_[members[i]];
  g.finish(m <= 256);
  Subgroup s{this, members};
  for (int e : subgroup_generators(s)) {
    g.generator_elems_.push_back(pos[e]);
    g.generator_names_.push_back(names_[e]);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool Subgroup::is_abelian() const {
  for (int x : members)
    for (int y : members)
      if (group->mul(x, y) != group->mul(y, x)) return false;
  return true;
}

bool Subgroup::is_normal() const {
  for (int x = 0; x < group->order(); ++x)
    for (int h : members)
      if (!contains(group->mul(group->mul(x, h), group->inv(x)))) return false;
  return true;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seeds) {
  std::vector<char> in(static_cast<size_t>(g.order()), 0);
  std::deque<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  push(0);
  for (int s : seeds) {
    if (s < 0 || s >= g.order()) throw InputError("seed element out of range");
    push(s);
  }
  std::vector<int> members;
  while (!work.empty()) {
    int x = work.front();
    work.pop_front();
    members.push_back(x);
    push(g.inv(x));
    for (int y = 0; y < g.order(); ++y)
      if (in[y]) {
        push(g.mul(x, y));
        push(g.mul(y, x));
      }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{&g, std::move(members)};
}

Subgroup center(const FiniteGroup& g) {
  std::vector<int> members;
  for (int z = 0; z < g.order(); ++z) {
    bool central = true;
    for (int x = 0; x < g.order() && central; ++x)
      central = g.mul(z, x) == g.mul(x, z);
    if (central) members.push_back(z);
  }
  return Subgroup{&g, std::move(members)};
}

Subgroup derived_and_squares(const FiniteGroup& g) {
  std::vector<int> seeds;
  for (int x = 0; x < g.order(); ++x) {
    seeds.push_back(g.mul(x, x));
    for (int y = 0; y < g.order(); ++y)
      seeds.push_back(g.mul(g.mul(x, y), g.inv(g.mul(y, x))));
  }
  return subgroup_closure(g, seeds);
}

std::vector<int> subgroup_generators(const Subgroup& s) {
  std::vector<int> gens;
  Subgroup span = subgroup_closure(*s.group, {});
  for (int x : s.members) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    std::vector<int> seeds = gens;
    span = subgroup_closure(*s.group, seeds);
    if (span.size() == s.size()) break;
  }
  return gens;
}

std::string subgroup_label(const Subgroup& s) {
  std::vector<int> gens = subgroup_generators(s);
  if (gens.empty()) return "{1}";
  std::string out = "<";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += s.group->name(gens[i]);
  }
  out += ">";
  return out;
}

}  // namespace skewring
