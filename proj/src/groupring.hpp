#ifndef SKEWRING_GROUPRING_HPP
#define SKEWRING_GROUPRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "coeffring.hpp"
#include "orient.hpp"

namespace skewring {

// Dense element of the group ring RG; coeffs[x] is the coefficient of
// basis element x, kept canonical.
struct GroupRingElement {
  const FiniteGroup* group = nullptr;
  CoeffRing ring{0};
  std::vector<RingElem> coeffs;

  bool is_zero() const;
  bool operator==(const GroupRingElement&) const = default;
};

GroupRingElement gr_zero(const FiniteGroup& g, const CoeffRing& r);
GroupRingElement gr_basis(const FiniteGroup& g, const CoeffRing& r, int x);
GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_neg(const GroupRingElement& a);
GroupRingElement gr_sub(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_scalar_mul(RingElem c, const GroupRingElement& a);
// convolution product, bilinear extension of the group's multiplication
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);
// [x, y] = xy - yx
GroupRingElement commutator(const GroupRingElement& a,
                            const GroupRingElement& b);

// sum_g r_g g  |->  sum_g r_g sigma(g) g^-1
GroupRingElement phi_sigma(const Orientation& o, const GroupRingElement& x);

// Display form using the group's element names, e.g. "a + a^-1" or
// "2*a*b - 2*a^-1*b".
std::string format_element(const GroupRingElement& a);

// Which of the four generating families a generator came from.
enum class GenFamily {
  InvolutionOutsideN,
  DifferenceInN,
  SumOutsideN,
  TorsionInN,
};

struct SkewGenerator {
  GroupRingElement elem;
  GenFamily family;
};

// The module generating set of the antisymmetric elements:
//   {g in G\N : g^2 = 1}  u  {g - g^-1 : g in N}
//   u  {g + g^-1 : g in G\N, g^2 != 1}  u  {r g : g in N, g^2 = 1, r in R_2}
// One representative per inverse pair in the difference and sum families;
// zero elements dropped. Requires char(R) != 2.
std::vector<SkewGenerator> antisym_generators(const Orientation& o,
                                              const CoeffRing& r);

struct Witness {
  GroupRingElement left, right;
  GroupRingElement comm;  // [left, right] != 0
};

struct CommVerdict {
  bool commutative = false;
  std::optional<Witness> witness;
};

// Decide whether the antisymmetric elements commute by scanning all
// unordered generator pairs; the first nonvanishing commutator (in the
// deterministic family order) is reported as the witness.
CommVerdict is_skew_commutative(const Orientation& o, const CoeffRing& r);

}  // namespace skewring

#endif
