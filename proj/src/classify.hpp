#ifndef SKEWRING_CLASSIFY_HPP
#define SKEWRING_CLASSIFY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coeffring.hpp"
#include "groupstruct.hpp"
#include "orient.hpp"

namespace skewring {

enum class CaseId { C1, C2, C3, C4i, C4ii, C5, C6, C7, C8, C9, C10 };

std::string case_label(CaseId c);

struct TheoremCase {
  CaseId case_id;
  // for catalog cases, which listed kernel matched, e.g. "<a^2,a*b>"
  std::string kernel_variant;
};

struct CatalogEntry {
  std::unique_ptr<FiniteGroup> base;
  std::vector<Subgroup> good_kernels;
  std::vector<std::string> kernel_labels;
  CaseId case_id;
  // empty = valid for every ring class
  std::optional<RingClass> ring_requirement;

  bool ring_ok(RingClass rc) const {
    return !ring_requirement || *ring_requirement == rc;
  }
};

// The eight base groups with their good kernels. Built from the fixed
// presentations; any realization failure throws (fatal misconfiguration).
std::vector<CatalogEntry> build_catalog();

// Decision procedure: first matching case in the order C3, C4i, C4ii,
// C1, C2, C5, C6, C7, C8, C9, C10. Catalog cases match when (g, n) is
// isomorphic, as an oriented pair, to (B x C2^r, N0 x C2^r) for a good
// kernel N0 of the case's base B. Absent = predicted not commutative.
// Requires g nonabelian and n of index 2.
std::optional<TheoremCase> classify(const FiniteGroup& g, const Subgroup& n,
                                    RingClass rc);

// true iff g is abelian or classify finds a case
bool predict(const FiniteGroup& g, const Subgroup& n, RingClass rc);

}  // namespace skewring

#endif
