#ifndef SKEWRING_COEFFRING_HPP
#define SKEWRING_COEFFRING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace skewring {

using RingElem = std::int64_t;

// The coefficient ring: Z (modulus 0) or Z/m with m >= 3. Characteristic 2
// is excluded; m = 1 (zero ring) is rejected.
struct CoeffRing {
  std::int64_t modulus = 0;

  explicit CoeffRing(std::int64_t m = 0) : modulus(m) {
    if (m < 0 || m == 1 || m == 2)
      throw InputError("ring modulus must be 0 (for Z) or >= 3");
  }

  bool operator==(const CoeffRing&) const = default;
};

// R_2 = {r : 2r = 0} drives the case split together with char(R) = 4.
enum class RingClass { R2Zero, Char4, Other };

std::int64_t characteristic(const CoeffRing& r);

// Additive generators of R_2: empty for Z or odd m, {m/2} for even m.
std::vector<RingElem> r2_generators(const CoeffRing& r);

RingClass ring_class(const CoeffRing& r);

std::string ring_label(const CoeffRing& r);
std::string ring_class_label(RingClass rc);

// "z" or "z/<m>"
CoeffRing parse_ring(const std::string& text);
RingClass parse_ring_class(const std::string& text);

// Exact arithmetic on canonical representatives (0 <= x < m for Z/m).
// Over Z overflow throws OverflowError rather than wrapping.
RingElem radd(const CoeffRing& r, RingElem a, RingElem b);
RingElem rneg(const CoeffRing& r, RingElem a);
RingElem rmul(const CoeffRing& r, RingElem a, RingElem b);
inline bool ris_zero(RingElem a) { return a == 0; }

}  // namespace skewring

#endif
