#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "groupring.hpp"

using namespace skewring;

namespace {

FiniteGroup make(const std::string& pres) {
  return FiniteGroup::realize(parse_presentation(pres));
}

const char* kQ8 = "<a,b | a^4=1, b^2=a^2, b^-1*a*b=a^-1>";
const char* kG16_4 = "<a,b | a^4=1, b^4=1, a*b=b^-1*a>";

GroupRingElement word_elem(const FiniteGroup& g, const CoeffRing& r,
                           const std::string& w) {
  return gr_basis(g, r, g.eval_word(parse_word(w, g.generator_names())));
}

Orientation orient(const FiniteGroup& g, const std::string& spec) {
  std::vector<int> seeds;
  for (const Word& w : parse_word_list(spec, g.generator_names()))
    seeds.push_back(g.eval_word(w));
  return make_orientation(g, seeds);
}

}  // namespace

TEST_CASE("ring axioms on random-ish elements") {
  FiniteGroup q8 = make(kQ8);
  CoeffRing z(0);
  auto a = word_elem(q8, z, "a");
  auto b = word_elem(q8, z, "b");
  auto x = gr_add(a, gr_scalar_mul(3, b));
  auto y = gr_sub(gr_basis(q8, z, 0), b);
  auto w = gr_add(gr_scalar_mul(-2, a), word_elem(q8, z, "a*b"));
  CHECK(gr_mul(gr_add(x, y), w) == gr_add(gr_mul(x, w), gr_mul(y, w)));
  CHECK(gr_mul(w, gr_add(x, y)) == gr_add(gr_mul(w, x), gr_mul(w, y)));
  CHECK(gr_mul(gr_mul(x, y), w) == gr_mul(x, gr_mul(y, w)));
  CHECK(gr_add(x, gr_neg(x)).is_zero());
  CHECK(gr_mul(gr_basis(q8, z, 0), x) == x);
}

TEST_CASE("zero divisor identity (1+a^2)(1-a^2) = 0") {
  FiniteGroup q8 = make(kQ8);
  CoeffRing z(0);
  auto one = gr_basis(q8, z, 0);
  auto a2 = word_elem(q8, z, "a^2");
  CHECK(gr_mul(gr_add(one, a2), gr_sub(one, a2)).is_zero());
}

TEST_CASE("phi is an involutive anti-automorphism") {
  FiniteGroup g = make(kG16_4);
  for (const Subgroup& k : enumerate_kernels(g)) {
    Orientation o{&g, k};
    for (const CoeffRing& r : {CoeffRing(0), CoeffRing(4)}) {
      for (int x = 0; x < g.order(); ++x) {
        auto bx = gr_basis(g, r, x);
        CHECK(phi_sigma(o, phi_sigma(o, bx)) == bx);
        for (int y = 0; y < g.order(); ++y) {
          auto by = gr_basis(g, r, y);
          CHECK(phi_sigma(o, gr_mul(bx, by)) ==
                gr_mul(phi_sigma(o, by), phi_sigma(o, bx)));
        }
      }
      // additivity on a couple of sums
      auto s = gr_add(gr_basis(g, r, 1), gr_scalar_mul(3, gr_basis(g, r, 5)));
      CHECK(phi_sigma(o, gr_add(s, s)) ==
            gr_add(phi_sigma(o, s), phi_sigma(o, s)));
    }
  }
}

TEST_CASE("generators are antisymmetric and cover the four families") {
  FiniteGroup g = make(kG16_4);
  Orientation o = orient(g, "a,b^2");
  CoeffRing r4(4);
  auto gens = antisym_generators(o, r4);
  CHECK(!gens.empty());
  std::set<GenFamily> fams;
  for (const SkewGenerator& s : gens) {
    fams.insert(s.family);
    CHECK(phi_sigma(o, s.elem) == gr_neg(s.elem));
  }
  CHECK(fams.count(GenFamily::DifferenceInN) == 1);
  CHECK(fams.count(GenFamily::SumOutsideN) == 1);
  CHECK(fams.count(GenFamily::TorsionInN) == 1);
}

TEST_CASE("Q8 generating set over Z") {
  FiniteGroup q8 = make(kQ8);
  Orientation o = orient(q8, "a");
  CoeffRing z(0);
  auto gens = antisym_generators(o, z);
  // no involutions outside N (b^2 = a^2 has order 2 but lies in N),
  // one difference a - a^-1, two sums b + b^-1 and ab + (ab)^-1
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].family == GenFamily::DifferenceInN);
  CHECK(gens[0].elem ==
        gr_sub(word_elem(q8, z, "a"), word_elem(q8, z, "a^-1")));
  CHECK(gens[1].family == GenFamily::SumOutsideN);
  CHECK(gens[1].elem ==
        gr_add(word_elem(q8, z, "b"), word_elem(q8, z, "b^-1")));
  CHECK(gens[2].family == GenFamily::SumOutsideN);
  CHECK(gens[2].elem == gr_add(word_elem(q8, z, "a*b"),
                               word_elem(q8, z, "b^-1*a^-1")));
}

TEST_CASE("Q8 generating set over Z/4 gains the torsion family") {
  FiniteGroup q8 = make(kQ8);
  Orientation o = orient(q8, "a");
  CoeffRing r4(4);
  auto gens = antisym_generators(o, r4);
  REQUIRE(gens.size() == 5);
  CHECK(gens[3].family == GenFamily::TorsionInN);
  CHECK(gens[3].elem == gr_scalar_mul(2, gr_basis(q8, r4, 0)));
  CHECK(gens[4].family == GenFamily::TorsionInN);
  CHECK(gens[4].elem == gr_scalar_mul(2, word_elem(q8, r4, "a^2")));
}

TEST_CASE("inverse-pair deduplication keeps one representative") {
  FiniteGroup q8 = make(kQ8);
  Orientation o = orient(q8, "a");
  CoeffRing z(0);
  auto gens = antisym_generators(o, z);
  std::set<std::vector<RingElem>> coeffs;
  for (const SkewGenerator& s : gens)
    CHECK(coeffs.insert(s.elem.coeffs).second);
}

TEST_CASE("Q8 skew elements commute, witness absent") {
  FiniteGroup q8 = make(kQ8);
  Orientation o = orient(q8, "a");
  for (const CoeffRing& r : {CoeffRing(0), CoeffRing(4), CoeffRing(8)}) {
    auto v = is_skew_commutative(o, r);
    CHECK(v.commutative);
    CHECK(!v.witness.has_value());
  }
}

TEST_CASE("reported witness really fails to commute") {
  FiniteGroup g = make(kG16_4);
  Orientation o = orient(g, "a^2,b");
  CoeffRing z(0);
  auto v = is_skew_commutative(o, z);
  REQUIRE_FALSE(v.commutative);
  REQUIRE(v.witness.has_value());
  CHECK(commutator(v.witness->left, v.witness->right) == v.witness->comm);
  CHECK_FALSE(v.witness->comm.is_zero());
  CHECK(phi_sigma(o, v.witness->left) == gr_neg(v.witness->left));
  CHECK(phi_sigma(o, v.witness->right) == gr_neg(v.witness->right));
  // the commutator has support {ab, a^-1 b, a b^-1, a^-1 b^-1}, coeffs +-2
  std::set<int> support;
  for (int x = 0; x < g.order(); ++x)
    if (v.witness->comm.coeffs[x] != 0) {
      support.insert(x);
      CHECK(std::abs(v.witness->comm.coeffs[x]) == 2);
    }
  auto at = [&](const char* w) {
    return g.eval_word(parse_word(w, g.generator_names()));
  };
  CHECK(support ==
        std::set<int>{at("a*b"), at("a^-1*b"), at("a*b^-1"), at("a^-1*b^-1")});
}

TEST_CASE("characteristic 2 is rejected, odd characteristic allowed") {
  FiniteGroup q8 = make(kQ8);
  Orientation o = orient(q8, "a");
  CHECK_THROWS_AS(CoeffRing(2), InputError);
  CHECK(is_skew_commutative(o, CoeffRing(3)).commutative);
  CHECK(is_skew_commutative(o, CoeffRing(9)).commutative);
}

TEST_CASE("formatting") {
  FiniteGroup q8 = make(kQ8);
  CoeffRing z(0);
  auto e = gr_sub(gr_scalar_mul(2, word_elem(q8, z, "a")),
                  word_elem(q8, z, "b"));
  CHECK(format_element(e) == "2*a - b");
  CHECK(format_element(gr_zero(q8, z)) == "0");
  CHECK(format_element(gr_scalar_mul(-1, gr_basis(q8, z, 0))) == "-1");
  CoeffRing r4(4);
  CHECK(format_element(gr_scalar_mul(3, word_elem(q8, r4, "a"))) == "-a");
}
