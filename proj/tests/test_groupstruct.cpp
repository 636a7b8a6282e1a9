#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "groupstruct.hpp"
#include "orient.hpp"

using namespace skewring;

namespace {

FiniteGroup make(const std::string& pres) {
  return FiniteGroup::realize(parse_presentation(pres));
}

const char* kQ8 = "<a,b | a^4=1, b^2=a^2, b^-1*a*b=a^-1>";
const char* kD4 = "<a,b | a^4=1, b^2=1, b*a*b=a^-1>";
const char* kG16_8 = "<a,b | a^8=1, b^2=a^4, a*b=b*a^3>";
const char* kG16_4 = "<a,b | a^4=1, b^4=1, a*b=b^-1*a>";

Subgroup kernel_of(const FiniteGroup& g, const std::string& spec) {
  std::vector<int> seeds;
  for (const Word& w : parse_word_list(spec, g.generator_names()))
    seeds.push_back(g.eval_word(w));
  return subgroup_closure(g, seeds);
}

}  // namespace

TEST_CASE("exponent") {
  CHECK(exponent(make(kQ8)) == 4);
  CHECK(exponent(make(kG16_8)) == 8);
  CHECK(exponent(FiniteGroup::elementary_abelian(3)) == 2);
  CHECK(exponent(make("<a,b | a^3=1, b^2=1, a*b*a*b=1>")) == 6);
}

TEST_CASE("2-group detection") {
  CHECK(is_2group(make(kQ8)));
  CHECK(is_2group(make(kG16_8)));
  CHECK_FALSE(is_2group(make("<a,b | a^3=1, b^2=1, a*b*a*b=1>")));
}

TEST_CASE("elementary abelian detection") {
  CHECK(is_elementary_abelian_2(FiniteGroup::elementary_abelian(2)));
  CHECK(is_elementary_abelian_2(FiniteGroup::elementary_abelian(0)));
  CHECK_FALSE(is_elementary_abelian_2(make(kQ8)));
  FiniteGroup d4 = make(kD4);
  CHECK_FALSE(is_elementary_abelian_2(d4));
  CHECK(is_elementary_abelian_2(kernel_of(d4, "a^2,b")));
  CHECK_FALSE(is_elementary_abelian_2(kernel_of(d4, "a")));
}

TEST_CASE("hamiltonian 2-groups are exactly Q8 x C2^r") {
  CHECK(is_hamiltonian_2group(make(kQ8)));
  FiniteGroup q8c2 = FiniteGroup::direct_product(
      make(kQ8), FiniteGroup::elementary_abelian(1));
  CHECK(is_hamiltonian_2group(q8c2));
  CHECK_FALSE(is_hamiltonian_2group(make(kD4)));
  CHECK_FALSE(is_hamiltonian_2group(make(kG16_4)));
  CHECK_FALSE(is_hamiltonian_2group(FiniteGroup::elementary_abelian(2)));
}

TEST_CASE("strip_c2_factors recovers the core") {
  FiniteGroup q8 = make(kQ8);
  FiniteGroup g = FiniteGroup::direct_product(
      q8, FiniteGroup::elementary_abelian(2));
  FactorDecomposition fd = strip_c2_factors(g);
  CHECK(fd.stripped_rank == 2);
  REQUIRE(fd.core.order() == 8);
  CHECK(find_isomorphism(fd.core, q8).has_value());
  // embedding is a genuine homomorphism into the parent
  for (int x = 0; x < fd.core.order(); ++x)
    for (int y = 0; y < fd.core.order(); ++y)
      CHECK(fd.core_embedding[fd.core.mul(x, y)] ==
            g.mul(fd.core_embedding[x], fd.core_embedding[y]));
}

TEST_CASE("strip_c2_factors leaves directly indecomposable groups alone") {
  FactorDecomposition fd = strip_c2_factors(make(kG16_8));
  CHECK(fd.stripped_rank == 0);
  CHECK(fd.core.order() == 16);
}

TEST_CASE("isomorphism found between presentations of the same group") {
  FiniteGroup d4a = make(kD4);
  FiniteGroup d4b = make("<x,y | x^2=1, y^2=1, x*y*x*y*x*y*x*y=1>");
  REQUIRE(d4b.order() == 8);
  auto iso = find_isomorphism(d4a, d4b);
  REQUIRE(iso.has_value());
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      CHECK((*iso)[d4a.mul(x, y)] == d4b.mul((*iso)[x], (*iso)[y]));
}

TEST_CASE("non-isomorphic groups of equal order rejected") {
  CHECK_FALSE(find_isomorphism(make(kQ8), make(kD4)).has_value());
  CHECK_FALSE(
      find_isomorphism(make(kQ8), FiniteGroup::elementary_abelian(3)));
}

TEST_CASE("oriented isomorphism distinguishes kernels") {
  FiniteGroup g = make(kG16_4);
  Subgroup k1 = kernel_of(g, "a,b^2");
  Subgroup k2 = kernel_of(g, "a*b,b^2");
  Subgroup k3 = kernel_of(g, "a^2,b");
  // the two good kernels are exchanged by an automorphism...
  CHECK(find_isomorphism(g, g, &k1, &k2).has_value());
  // ...but neither maps onto the bad one
  CHECK_FALSE(find_isomorphism(g, g, &k1, &k3).has_value());

  FiniteGroup h = make(kG16_8);
  Subgroup cyc = kernel_of(h, "a");
  Subgroup good = kernel_of(h, "a^2,a*b");
  CHECK(find_isomorphism(h, h, &cyc, &cyc).has_value());
  CHECK_FALSE(find_isomorphism(h, h, &cyc, &good).has_value());
}

TEST_CASE("oriented search agrees with exhaustive kernel orbit on Q8") {
  FiniteGroup q8 = make(kQ8);
  std::vector<Subgroup> ks = enumerate_kernels(q8);
  REQUIRE(ks.size() == 3);
  // all three C4 kernels lie in one automorphism orbit
  for (const Subgroup& x : ks)
    for (const Subgroup& y : ks)
      CHECK(find_isomorphism(q8, q8, &x, &y).has_value());
}

TEST_CASE("brute-force bijection agreement at small order") {
  // exhaustively check iso/non-iso on all pairs from a pool of order <= 16
  std::vector<FiniteGroup> pool;
  pool.push_back(make(kQ8));
  pool.push_back(make(kD4));
  pool.push_back(FiniteGroup::elementary_abelian(3));
  pool.push_back(make("<a | a^8>"));
  pool.push_back(make(kG16_8));
  pool.push_back(make(kG16_4));
  pool.push_back(make("<a,b | a^8=1, b^2=a^4, a*b=b*a^-1>"));
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j) {
      auto iso = find_isomorphism(pool[i], pool[j]);
      CHECK(iso.has_value() == (i == j));
      if (iso)
        for (int x = 0; x < pool[i].order(); ++x)
          for (int y = 0; y < pool[i].order(); ++y)
            CHECK((*iso)[pool[i].mul(x, y)] ==
                  pool[j].mul((*iso)[x], (*iso)[y]));
    }
}
