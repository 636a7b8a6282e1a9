#include "groupstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "orient.hpp"

namespace skewring {

int exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order(); ++x)
    e = std::lcm(e, static_cast<long long>(g.elem_order(x)));
  return static_cast<int>(e);
}

bool is_2group(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x) {
    int o = g.elem_order(x);
    if ((o & (o - 1)) != 0) return false;
  }
  return true;
}

bool is_elementary_abelian_2(const FiniteGroup& g) {
  for (int x = 1; x < g.order(); ++x)
    if (g.elem_order(x) != 2) return false;
  return g.is_abelian();
}

bool is_elementary_abelian_2(const Subgroup& s) {
  for (int x : s.members)
    if (x != 0 && s.group->elem_order(x) != 2) return false;
  return s.is_abelian();
}

bool is_hamiltonian_2group(const FiniteGroup& g) {
  if (g.is_abelian() || !is_2group(g)) return false;
  for (int x = 1; x < g.order(); ++x) {
    Subgroup cyc = subgroup_closure(g, {x});
    for (int c = 0; c < g.order(); ++c)
      if (!cyc.contains(g.mul(g.mul(c, x), g.inv(c)))) return false;
  }
  return true;
}

FactorDecomposition strip_c2_factors(const FiniteGroup& g) {
  if (!is_2group(g)) throw InputError("strip_c2_factors requires a 2-group");
  FactorDecomposition fd{g, {}, 0};
  fd.core_embedding.resize(static_cast<size_t>(g.order()));
  std::iota(fd.core_embedding.begin(), fd.core_embedding.end(), 0);
  for (;;) {
    Subgroup z = center(fd.core);
    Subgroup frat = derived_and_squares(fd.core);
    int split = -1;
    for (int e : z.members)
      if (e != 0 && fd.core.elem_order(e) == 2 && !frat.contains(e)) {
        split = e;
        break;
      }
    if (split < 0) break;
    std::vector<Subgroup> kernels = enumerate_kernels(fd.core);
    const Subgroup* complement = nullptr;
    for (const Subgroup& k : kernels)
      if (!k.contains(split)) {
        complement = &k;
        break;
      }
    // a central involution outside the Frattini subgroup always has an
    // index-2 complement
    if (!complement)
      throw InputError("internal error: no complement for central involution");
    std::vector<int> emb;
    emb.reserve(complement->members.size());
    for (int m : complement->members) emb.push_back(fd.core_embedding[m]);
    fd.core = fd.core.subgroup_as_group(complement->members);
    fd.core_embedding = std::move(emb);
    ++fd.stripped_rank;
  }
  return fd;
}

namespace {

struct ElemClass {
  int order;
  bool central;
  bool in_frattini;
  bool in_kernel;
  bool is_square;
  auto operator<=>(const ElemClass&) const = default;
};

std::vector<ElemClass> classify_elements(const FiniteGroup& g,
                                         const Subgroup* kernel) {
  Subgroup z = center(g);
  Subgroup frat = derived_and_squares(g);
  std::vector<char> sq(static_cast<size_t>(g.order()), 0);
  for (int x = 0; x < g.order(); ++x) sq[g.mul(x, x)] = 1;
  std::vector<ElemClass> out;
  out.reserve(static_cast<size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    out.push_back({g.elem_order(x), z.contains(x), frat.contains(x),
                   kernel ? kernel->contains(x) : false, sq[x] != 0});
  return out;
}

// Greedy generating sequence: element of maximal order outside the closure
// of those already chosen, ties by index.
std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  Subgroup span = subgroup_closure(g, {});
  while (span.size() < g.order()) {
    int best = -1;
    for (int x = 0; x < g.order(); ++x)
      if (!span.contains(x) &&
          (best < 0 || g.elem_order(x) > g.elem_order(best)))
        best = x;
    gens.push_back(best);
    span = subgroup_closure(g, gens);
  }
  return gens;
}

struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<ElemClass> gclass, hclass;
  std::vector<int> gens;

  // Extend the partial map by x -> y and close under products of mapped
  // elements; returns false on any conflict.
  bool extend(std::vector<int>& pm, std::vector<int>& pre,
              std::vector<int>& mapped, int x, int y) const {
    std::vector<std::pair<int, int>> todo{{x, y}};
    while (!todo.empty()) {
      auto [a, b] = todo.back();
      todo.pop_back();
      if (pm[a] != -1) {
        if (pm[a] != b) return false;
        continue;
      }
      if (pre[b] != -1) return false;
      if (gclass[a] != hclass[b]) return false;
      pm[a] = b;
      pre[b] = a;
      mapped.push_back(a);  // before the loop so a*a is closed over too
      for (int m : mapped) {
        todo.emplace_back(g.mul(a, m), h.mul(b, pm[m]));
        todo.emplace_back(g.mul(m, a), h.mul(pm[m], b));
      }
    }
    return true;
  }

  std::optional<std::vector<int>> search(size_t k, const std::vector<int>& pm,
                                         const std::vector<int>& pre,
                                         const std::vector<int>& mapped) const {
    if (k == gens.size()) {
      for (int x = 0; x < g.order(); ++x)
        if (pm[x] < 0) return std::nullopt;
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          if (pm[g.mul(x, y)] != h.mul(pm[x], pm[y])) return std::nullopt;
      return pm;
    }
    int a = gens[k];
    for (int b = 0; b < h.order(); ++b) {
      if (pre[b] != -1 || hclass[b] != gclass[a]) continue;
      std::vector<int> pm2 = pm, pre2 = pre, mapped2 = mapped;
      if (!extend(pm2, pre2, mapped2, a, b)) continue;
      if (auto r = search(k + 1, pm2, pre2, mapped2)) return r;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                 const FiniteGroup& h,
                                                 const Subgroup* g_kernel,
                                                 const Subgroup* h_kernel) {
  if (g.order() != h.order()) return std::nullopt;
  if ((g_kernel == nullptr) != (h_kernel == nullptr))
    throw InputError("oriented search needs both kernels");
  if (g_kernel &&
      (g_kernel->index() != 2 || h_kernel->index() != 2))
    throw InputError("oriented search requires index-2 kernels");

  IsoSearch s{g, h, classify_elements(g, g_kernel),
              classify_elements(h, h_kernel), generating_sequence(g)};
  {
    // cheap global reject: the multiset of element classes must agree
    auto gc = s.gclass;
    auto hc = s.hclass;
    std::sort(gc.begin(), gc.end());
    std::sort(hc.begin(), hc.end());
    if (gc != hc) return std::nullopt;
  }
  std::vector<int> pm(static_cast<size_t>(g.order()), -1);
  std::vector<int> pre(static_cast<size_t>(h.order()), -1);
  std::vector<int> mapped;
  pm[0] = 0;
  pre[0] = 0;
  mapped.push_back(0);
  return s.search(0, pm, pre, mapped);
}

}  // namespace skewring
