#include "classify.hpp"

#include <map>
#include <tuple>

namespace skewring {

std::string case_label(CaseId c) {
  switch (c) {
    case CaseId::C1: return "C1";
    case CaseId::C2: return "C2";
    case CaseId::C3: return "C3";
    case CaseId::C4i: return "C4i";
    case CaseId::C4ii: return "C4ii";
    case CaseId::C5: return "C5";
    case CaseId::C6: return "C6";
    case CaseId::C7: return "C7";
    case CaseId::C8: return "C8";
    case CaseId::C9: return "C9";
    case CaseId::C10: return "C10";
  }
  return "?";
}

namespace {

CatalogEntry make_entry(const std::string& pres, CaseId id,
                        std::optional<RingClass> ring_req,
                        const std::vector<std::string>& kernel_specs,
                        const std::vector<std::string>& labels) {
  CatalogEntry e;
  Presentation p = parse_presentation(pres);
  e.base = std::make_unique<FiniteGroup>(FiniteGroup::realize(p));
  e.case_id = id;
  e.ring_requirement = ring_req;
  for (const std::string& spec : kernel_specs) {
    std::vector<int> seeds;
    for (const Word& w : parse_word_list(spec, p.generators))
      seeds.push_back(e.base->eval_word(w));
    Subgroup k = subgroup_closure(*e.base, seeds);
    if (k.index() != 2)
      throw RealizeError("catalog kernel '" + spec + "' does not have index 2");
    e.good_kernels.push_back(std::move(k));
  }
  e.kernel_labels = labels;
  return e;
}

}  // namespace

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(make_entry("<a,b | a^8=1, b^2=a^4, a*b=b*a^3>", CaseId::C1,
                           RingClass::R2Zero, {"a^2,a*b"}, {"<a^2,a*b>"}));
  out.push_back(make_entry("<a,b | a^8=1, b^2=a^4, a*b=b*a^-1>", CaseId::C2,
                           RingClass::Char4, {"a^2,b", "a^2,a*b"},
                           {"<a^2,b>", "<a^2,a*b>"}));
  out.push_back(make_entry("<a,b | a^4=1, b^4=1, a*b=b^-1*a>", CaseId::C5,
                           std::nullopt, {"a,b^2", "a*b,b^2"},
                           {"<a,b^2>", "<a*b,b^2>"}));
  out.push_back(make_entry(
      "<a,b,c | a^4=1, b^4=1, c^2=a^2, a*b=b*a, a*c=c*a^-1, b*c=c*b^-1>",
      CaseId::C6, RingClass::Char4, {"a,c,b^2", "a,b*c,b^2"},
      {"<a,c>x<b^2>", "<a,b*c>x<b^2>"}));
  out.push_back(make_entry(
      "<a,b,c | a^2=1, b^2=1, c^2=1, a*b*c=b*c*a, b*c*a=c*a*b>", CaseId::C7,
      RingClass::R2Zero, {"a,b", "a,c", "b,c"}, {"<a,b>", "<a,c>", "<b,c>"}));
  out.push_back(make_entry(
      "<a,b,c,d | a^4=1, b^2=1, c^2=1, d^2=1, a*b=b*a, a*c=c*a, a*d=d*a*b, "
      "b*c=c*b, b*d=d*b, c*d=d*a^2*c>",
      CaseId::C8, RingClass::R2Zero, {"b,c,d"}, {"<b>x<c,d>"}));
  out.push_back(make_entry(
      "<a,b,c | a^4=1, b^4=1, c^2=1, a*b=b*a, a*c=c*a^-1, b*c=c*a^2*b^-1>",
      CaseId::C9, RingClass::R2Zero, {"a,c,b^2"}, {"<a,c>x<b^2>"}));
  out.push_back(make_entry(
      "<a,b,c | a^4=1, b^4=1, c^2=1, a*b=b*a, a*c=c*a, b*c=c*a^2*b>",
      CaseId::C10, RingClass::R2Zero, {"b,c", "a*b,c"}, {"<b,c>", "<a*b,c>"}));
  return out;
}

namespace {

std::uint64_t table_hash(const FiniteGroup& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) { h = (h ^ v) * 1099511628211ull; };
  mix(static_cast<std::uint64_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      mix(static_cast<std::uint64_t>(g.mul(x, y)));
  return h;
}

struct RefPair {
  std::unique_ptr<FiniteGroup> group;  // null when rank == 0
  const FiniteGroup* view = nullptr;
  std::vector<Subgroup> kernels;
};

// B x C2^r with each good kernel extended to N0 x C2^r, built lazily
const RefPair& reference_pair(const std::vector<CatalogEntry>& catalog,
                              size_t entry, int rank) {
  static std::map<std::pair<size_t, int>, RefPair> cache;
  auto [it, fresh] = cache.try_emplace({entry, rank});
  if (!fresh) return it->second;
  RefPair& rp = it->second;
  const CatalogEntry& e = catalog[entry];
  if (rank == 0) {
    rp.view = e.base.get();
    rp.kernels = e.good_kernels;
  } else {
    FiniteGroup ea = FiniteGroup::elementary_abelian(rank);
    rp.group = std::make_unique<FiniteGroup>(
        FiniteGroup::direct_product(*e.base, ea));
    rp.view = rp.group.get();
    const int q = ea.order();
    for (const Subgroup& k : e.good_kernels) {
      std::vector<int> members;
      for (int x : k.members)
        for (int y = 0; y < q; ++y) members.push_back(x * q + y);
      rp.kernels.push_back(Subgroup{rp.view, std::move(members)});
    }
  }
  return rp;
}

// which good kernel of the entry (if any) makes (g, n) an oriented copy of
// (base x C2^r, kernel x C2^r); memoized since callers retry per ring class
std::optional<size_t> catalog_match(const std::vector<CatalogEntry>& catalog,
                                    size_t entry, const FiniteGroup& g,
                                    const Subgroup& n) {
  static std::map<std::tuple<std::uint64_t, std::vector<int>, size_t>,
                  std::optional<size_t>>
      memo;
  auto key = std::make_tuple(table_hash(g), n.members, entry);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::optional<size_t> result;
  const CatalogEntry& e = catalog[entry];
  int quot = g.order() / e.base->order();
  if (e.base->order() * quot == g.order() && (quot & (quot - 1)) == 0) {
    int rank = 0;
    while ((1 << rank) < quot) ++rank;
    const RefPair& rp = reference_pair(catalog, entry, rank);
    for (size_t i = 0; i < rp.kernels.size() && !result; ++i)
      if (find_isomorphism(*rp.view, g, &rp.kernels[i], &n)) result = i;
  }
  memo[key] = result;
  return result;
}

}  // namespace

std::optional<TheoremCase> classify(const FiniteGroup& g, const Subgroup& n,
                                    RingClass rc) {
  if (g.is_abelian()) throw InputError("classify expects a nonabelian group");
  if (n.group != &g || n.index() != 2)
    throw InputError("classify expects an index-2 kernel of the given group");

  if (rc == RingClass::R2Zero && is_elementary_abelian_2(n))
    return TheoremCase{CaseId::C3, ""};
  if (is_hamiltonian_2group(g)) {
    if (n.is_abelian()) return TheoremCase{CaseId::C4i, ""};
    if (rc == RingClass::Char4 &&
        is_hamiltonian_2group(g.subgroup_as_group(n.members)))
      return TheoremCase{CaseId::C4ii, ""};
  }

  if (!is_2group(g)) return std::nullopt;
  static const std::vector<CatalogEntry> catalog = build_catalog();
  for (size_t e = 0; e < catalog.size(); ++e) {
    if (!catalog[e].ring_ok(rc)) continue;
    if (auto k = catalog_match(catalog, e, g, n))
      return TheoremCase{catalog[e].case_id, catalog[e].kernel_labels[*k]};
  }
  return std::nullopt;
}

bool predict(const FiniteGroup& g, const Subgroup& n, RingClass rc) {
  if (g.is_abelian()) return true;
  return classify(g, n, rc).has_value();
}

}  // namespace skewring
