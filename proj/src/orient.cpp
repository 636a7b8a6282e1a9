#include "orient.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace skewring {

Orientation make_orientation(const FiniteGroup& g,
                             const std::vector<int>& seeds) {
  Subgroup k = subgroup_closure(g, seeds);
  if (k.size() * 2 != g.order())
    throw InputError("kernel seeds generate a subgroup of index " +
                     std::to_string(g.order() / k.size()) + ", need index 2");
  return Orientation{&g, std::move(k)};
}

std::vector<Subgroup> enumerate_kernels(const FiniteGroup& g) {
  const int n = g.order();
  Subgroup frat = derived_and_squares(g);

  // cosets of G'G^2, numbered by smallest member
  std::vector<int> coset_of(static_cast<size_t>(n), -1);
  std::vector<int> coset_rep;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(x);
    for (int k : frat.members) coset_of[g.mul(k, x)] = id;
  }
  const int q = static_cast<int>(coset_rep.size());
  auto qmul = [&](int a, int b) {
    return coset_of[g.mul(coset_rep[a], coset_rep[b])];
  };

  // greedy F2 basis from coset representatives in element-index order
  std::vector<int> basis;
  std::vector<char> in_span(static_cast<size_t>(q), 0);
  in_span[0] = 1;
  for (int c = 0; c < q; ++c) {
    if (in_span[c]) continue;
    basis.push_back(c);
    std::vector<char> next = in_span;
    for (int s = 0; s < q; ++s)
      if (in_span[s]) next[qmul(s, c)] = 1;
    in_span = std::move(next);
  }
  const int rank = static_cast<int>(basis.size());

  // coordinates: product over the subset bits, basis[0] first
  std::vector<unsigned> coord_of_coset(static_cast<size_t>(q), 0);
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    int c = 0;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) c = qmul(c, basis[i]);
    coord_of_coset[c] = mask;
  }

  // nonzero functionals in lexicographic order of coefficient vectors
  // (coefficient of basis[0] most significant)
  std::vector<Subgroup> out;
  for (unsigned lex = 1; lex < (1u << rank); ++lex) {
    unsigned f = 0;
    for (int i = 0; i < rank; ++i)
      if (lex & (1u << (rank - 1 - i))) f |= 1u << i;
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (std::popcount(f & coord_of_coset[coset_of[x]]) % 2 == 0)
        members.push_back(x);
    Subgroup s{&g, std::move(members)};
    if (s.size() * 2 != n || !s.is_normal())
      throw InputError("internal error: kernel enumeration inconsistent");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subgroup> enumerate_kernels_bruteforce(const FiniteGroup& g) {
  if (g.order() > 32)
    throw InputError("brute-force kernel enumeration capped at order 32");
  // every subgroup is a join of cyclic subgroups
  std::set<std::vector<int>> subs;
  std::vector<std::vector<int>> cyclic;
  for (int x = 0; x < g.order(); ++x) {
    auto c = subgroup_closure(g, {x}).members;
    subs.insert(c);
    cyclic.push_back(std::move(c));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(subs.begin(), subs.end());
    for (const auto& s : snapshot)
      for (const auto& c : cyclic) {
        std::vector<int> seeds = s;
        seeds.insert(seeds.end(), c.begin(), c.end());
        auto j = subgroup_closure(g, seeds).members;
        if (subs.insert(j).second) grew = true;
      }
  }
  std::vector<Subgroup> out;
  for (const auto& m : subs)
    if (static_cast<int>(m.size()) * 2 == g.order())
      out.push_back(Subgroup{&g, m});
  return out;
}

}  // namespace skewring
