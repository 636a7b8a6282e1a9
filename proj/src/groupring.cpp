#include "groupring.hpp"

#include <algorithm>

namespace skewring {

namespace {

void check_compatible(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.group != b.group) throw InputError("group ring elements over different groups");
  if (a.ring != b.ring) throw InputError("group ring elements over different rings");
}

}  // namespace

bool GroupRingElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](RingElem c) { return c == 0; });
}

GroupRingElement gr_zero(const FiniteGroup& g, const CoeffRing& r) {
  return {&g, r, std::vector<RingElem>(static_cast<size_t>(g.order()), 0)};
}

GroupRingElement gr_basis(const FiniteGroup& g, const CoeffRing& r, int x) {
  GroupRingElement e = gr_zero(g, r);
  e.coeffs.at(static_cast<size_t>(x)) = r.modulus == 0 ? 1 : 1 % r.modulus;
  return e;
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b) {
  check_compatible(a, b);
  GroupRingElement out = a;
  for (size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = radd(a.ring, a.coeffs[i], b.coeffs[i]);
  return out;
}

GroupRingElement gr_neg(const GroupRingElement& a) {
  GroupRingElement out = a;
  for (RingElem& c : out.coeffs) c = rneg(a.ring, c);
  return out;
}

GroupRingElement gr_sub(const GroupRingElement& a, const GroupRingElement& b) {
  return gr_add(a, gr_neg(b));
}

GroupRingElement gr_scalar_mul(RingElem c, const GroupRingElement& a) {
  GroupRingElement out = a;
  for (RingElem& v : out.coeffs) v = rmul(a.ring, c, v);
  return out;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b) {
  check_compatible(a, b);
  GroupRingElement out = gr_zero(*a.group, a.ring);
  const int n = a.group->order();
  for (int x = 0; x < n; ++x) {
    if (a.coeffs[x] == 0) continue;
    for (int y = 0; y < n; ++y) {
      if (b.coeffs[y] == 0) continue;
      int z = a.group->mul(x, y);
      out.coeffs[z] =
          radd(a.ring, out.coeffs[z], rmul(a.ring, a.coeffs[x], b.coeffs[y]));
    }
  }
  return out;
}

GroupRingElement commutator(const GroupRingElement& a,
                            const GroupRingElement& b) {
  return gr_sub(gr_mul(a, b), gr_mul(b, a));
}

GroupRingElement phi_sigma(const Orientation& o, const GroupRingElement& x) {
  if (x.group != o.group)
    throw InputError("element and orientation over different groups");
  GroupRingElement out = gr_zero(*x.group, x.ring);
  for (int g = 0; g < x.group->order(); ++g) {
    if (x.coeffs[g] == 0) continue;
    RingElem c = x.coeffs[g];
    if (o.sigma(g) < 0) c = rneg(x.ring, c);
    out.coeffs[x.group->inv(g)] = radd(x.ring, out.coeffs[x.group->inv(g)], c);
  }
  return out;
}

std::string format_element(const GroupRingElement& a) {
  std::string out;
  for (int x = 0; x < a.group->order(); ++x) {
    RingElem c = a.coeffs[x];
    if (c == 0) continue;
    // over Z/m show m/2..m-1 as negative for readability
    if (a.ring.modulus > 0 && c > a.ring.modulus / 2) c -= a.ring.modulus;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    RingElem mag = c < 0 ? -c : c;
    if (mag != 1 || x == 0) {
      out += std::to_string(mag);
      if (x != 0) out += "*";
    }
    if (x != 0) out += a.group->name(x);
  }
  return out.empty() ? "0" : out;
}

std::vector<SkewGenerator> antisym_generators(const Orientation& o,
                                              const CoeffRing& r) {
  const FiniteGroup& g = *o.group;
  std::vector<SkewGenerator> out;
  for (int x = 0; x < g.order(); ++x)
    if (o.sigma(x) < 0 && g.elem_order(x) == 2)
      out.push_back({gr_basis(g, r, x), GenFamily::InvolutionOutsideN});
  for (int x = 0; x < g.order(); ++x) {
    if (o.sigma(x) < 0 || g.inv(x) == x || g.inv(x) < x) continue;
    out.push_back({gr_sub(gr_basis(g, r, x), gr_basis(g, r, g.inv(x))),
                   GenFamily::DifferenceInN});
  }
  for (int x = 0; x < g.order(); ++x) {
    if (o.sigma(x) > 0 || g.elem_order(x) <= 2 || g.inv(x) < x) continue;
    out.push_back({gr_add(gr_basis(g, r, x), gr_basis(g, r, g.inv(x))),
                   GenFamily::SumOutsideN});
  }
  for (RingElem t : r2_generators(r))
    for (int x = 0; x < g.order(); ++x)
      if (o.sigma(x) > 0 && g.mul(x, x) == 0)
        out.push_back(
            {gr_scalar_mul(t, gr_basis(g, r, x)), GenFamily::TorsionInN});
  for (auto it = out.begin(); it != out.end();)
    it = it->elem.is_zero() ? out.erase(it) : it + 1;
  return out;
}

CommVerdict is_skew_commutative(const Orientation& o, const CoeffRing& r) {
  if (characteristic(r) == 2)
    throw InputError("characteristic 2 is out of scope");
  std::vector<SkewGenerator> gens = antisym_generators(o, r);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      GroupRingElement c = commutator(gens[i].elem, gens[j].elem);
      if (!c.is_zero())
        return {false, Witness{gens[i].elem, gens[j].elem, std::move(c)}};
    }
  return {true, std::nullopt};
}

}  // namespace skewring
