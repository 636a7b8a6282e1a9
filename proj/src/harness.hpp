#ifndef SKEWRING_HARNESS_HPP
#define SKEWRING_HARNESS_HPP

#include <string>
#include <vector>

#include "classify.hpp"
#include "groupring.hpp"

namespace skewring {

struct ReportRow {
  std::string group, kernel, ring;
  std::string brute, predicted;  // "comm" / "noncomm"
  std::string case_id;           // matched case label, "" if none
  std::string witness;           // "[l, r] = c" for noncommutative rows
  long long millis = 0;
  bool mismatch = false;
};

struct CensusReport {
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  bool ok() const;
};

// Named base presentations used by the suites; label -> realized group.
FiniteGroup realize_named(const std::string& label);

// Re-derive the full good/bad kernel partition of every cataloged group by
// brute force and compare against the expected lists.
CensusReport verify_paper();

// Cross-validate brute force against the structural classifier over
// {catalog bases, Q8, D4, Q8xC2} x C2^r plus a non-2-group control, every
// kernel, every ring. Commutative rows are additionally audited.
CensusReport census(int max_rank, const std::vector<CoeffRing>& rings);

struct AuditFinding {
  std::string assertion;
  bool violated = false;
  std::string detail;
};

// Structural invariants every commutative instance must satisfy:
//   exp8     - G is a 2-group of exponent dividing 8
//   sqcentral- exponent-4 groups have all squares central
//   invcentral - when R_2 != {0}, involutions are central
//   pairlaw  - the pairwise commutation trichotomies for g^2 != 1 != h^2
// Requires: is_skew_commutative(o, r) holds and the group is nonabelian.
std::vector<AuditFinding> audit_commutative_instance(const Orientation& o,
                                                     const CoeffRing& r);

// format "plain" or "tsv"; deterministic except for the millis column
std::string report_emit(const CensusReport& rep, const std::string& format);

}  // namespace skewring

#endif
