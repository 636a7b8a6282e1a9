#include "coeffring.hpp"

namespace skewring {

std::int64_t characteristic(const CoeffRing& r) { return r.modulus; }

std::vector<RingElem> r2_generators(const CoeffRing& r) {
  if (r.modulus == 0 || r.modulus % 2 != 0) return {};
  return {r.modulus / 2};
}

RingClass ring_class(const CoeffRing& r) {
  if (r2_generators(r).empty()) return RingClass::R2Zero;
  if (r.modulus == 4) return RingClass::Char4;
  return RingClass::Other;
}

std::string ring_label(const CoeffRing& r) {
  return r.modulus == 0 ? "z" : "z/" + std::to_string(r.modulus);
}

std::string ring_class_label(RingClass rc) {
  switch (rc) {
    case RingClass::R2Zero:
      return "r2zero";
    case RingClass::Char4:
      return "char4";
    case RingClass::Other:
      return "other";
  }
  return "?";
}

CoeffRing parse_ring(const std::string& text) {
  if (text == "z" || text == "Z") return CoeffRing(0);
  if (text.rfind("z/", 0) == 0 || text.rfind("Z/", 0) == 0) {
    try {
      size_t used = 0;
      long long m = std::stoll(text.substr(2), &used);
      if (used == text.size() - 2) return CoeffRing(m);
    } catch (const std::logic_error&) {
    }
  }
  throw InputError("bad ring '" + text + "', expected z or z/<m>");
}

RingClass parse_ring_class(const std::string& text) {
  if (text == "r2zero") return RingClass::R2Zero;
  if (text == "char4") return RingClass::Char4;
  if (text == "other") return RingClass::Other;
  throw InputError("bad ring class '" + text +
                   "', expected r2zero|char4|other");
}

namespace {

RingElem reduce(const CoeffRing& r, RingElem a) {
  if (r.modulus == 0) return a;
  a %= r.modulus;
  return a < 0 ? a + r.modulus : a;
}

}  // namespace

RingElem radd(const CoeffRing& r, RingElem a, RingElem b) {
  RingElem out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer overflow in ring addition");
  return reduce(r, out);
}

RingElem rneg(const CoeffRing& r, RingElem a) {
  if (a == INT64_MIN) throw OverflowError("integer overflow in ring negation");
  return reduce(r, -a);
}

RingElem rmul(const CoeffRing& r, RingElem a, RingElem b) {
  RingElem out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("integer overflow in ring multiplication");
  return reduce(r, out);
}

}  // namespace skewring
