#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <sstream>

#include "doctest.h"
#include "groupcore.hpp"

using namespace skewring;

namespace {

FiniteGroup make(const std::string& pres) {
  return FiniteGroup::realize(parse_presentation(pres));
}

const char* kQ8 = "<a,b | a^4=1, b^2=a^2, b^-1*a*b=a^-1>";

std::string table_text(const FiniteGroup& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) out << g.mul(x, y) << ' ';
    out << '\n';
  }
  return out.str();
}

}  // namespace

TEST_CASE("realize reproduces the cataloged orders") {
  const std::map<std::string, int> expected = {
      {kQ8, 8},
      {"<a,b | a^4=1, b^4=1, a*b*a*b=1, a*b^-1*a*b^-1=1>", 16},
      {"<a,b | a^4=1, b^4=1, a*b=b^-1*a>", 16},
      {"<a,b | a^8=1, b^2=a^4, a*b=b*a^3>", 16},
      {"<a,b | a^8=1, b^2=a^4, a*b=b*a^-1>", 16},
      {"<a,b,c | a^2=1, b^2=1, c^2=1, a*b*c=b*c*a, b*c*a=c*a*b>", 16},
      {"<a,b,c | a^4=1, b^4=1, c^2=1, a*b=b*a, a*c=c*a, b*c=c*a^2*b>", 32},
      {"<a,b,c,d | a^4=1, b^2=1, c^2=1, d^2=1, a*b=b*a, a*c=c*a, a*d=d*a*b, "
       "b*c=c*b, b*d=d*b, c*d=d*a^2*c>",
       32},
      {"<a,b,c | a^4=1, b^4=1, c^2=1, a*b=b*a, a*c=c*a^-1, b*c=c*a^2*b^-1>",
       32},
      {"<a,b,c | a^4=1, b^4=1, c^2=a^2, a*b=b*a, a*c=c*a^-1, b*c=c*b^-1>", 32},
  };
  for (const auto& [pres, n] : expected) {
    CAPTURE(pres);
    CHECK(make(pres).order() == n);
  }
}

TEST_CASE("Q8 structure") {
  FiniteGroup q8 = make(kQ8);
  REQUIRE(q8.order() == 8);
  int order4 = 0, order2 = 0;
  for (int x = 0; x < 8; ++x) {
    if (q8.elem_order(x) == 4) ++order4;
    if (q8.elem_order(x) == 2) ++order2;
  }
  CHECK(order4 == 6);
  CHECK(order2 == 1);
  CHECK_FALSE(q8.is_abelian());
  int a = q8.generator_elems()[0], b = q8.generator_elems()[1];
  CHECK(q8.mul(b, b) == q8.mul(a, a));
  CHECK(q8.mul(q8.mul(q8.inv(b), a), b) == q8.inv(a));
}

TEST_CASE("identity is element 0 and names are shortest words") {
  FiniteGroup q8 = make(kQ8);
  CHECK(q8.name(0) == "1");
  int a = q8.generator_elems()[0];
  CHECK(q8.name(a) == "a");
  for (int x = 0; x < q8.order(); ++x) {
    Word w = parse_word(q8.name(x), q8.generator_names());
    CHECK(q8.eval_word(w) == x);
  }
}

TEST_CASE("eval_word and pow") {
  FiniteGroup q8 = make(kQ8);
  int a = q8.generator_elems()[0];
  CHECK(q8.pow(a, 4) == 0);
  CHECK(q8.pow(a, -1) == q8.inv(a));
  CHECK(q8.eval_word(parse_word("a^2*b^2", q8.generator_names())) == 0);
  CHECK(q8.eval_word(parse_word("1", q8.generator_names())) == 0);
}

TEST_CASE("unsatisfiable order limits raise RealizeError") {
  // free group on one generator: enumeration cannot terminate
  CHECK_THROWS_AS(
      FiniteGroup::realize(parse_presentation("<a,b | a^2=1>"), 64),
      RealizeError);
}

TEST_CASE("order cap enforced") {
  CHECK_THROWS_AS(make("<a | a^1024>"), RealizeError);
}

TEST_CASE("table round trip") {
  FiniteGroup q8 = make(kQ8);
  FiniteGroup copy = FiniteGroup::from_table_text(table_text(q8));
  REQUIRE(copy.order() == q8.order());
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) CHECK(copy.mul(x, y) == q8.mul(x, y));
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup::from_table_text("order 2\n0 1\n1 1\n"),
                  InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table_text("order 2\n1 0\n0 1\n"),
                  InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table_text("order 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table_text("bogus"), InputError);
  // smallest non-associative Latin square with identity
  CHECK_THROWS_AS(FiniteGroup::from_table_text("order 5\n"
                                               "0 1 2 3 4\n"
                                               "1 0 3 4 2\n"
                                               "2 4 0 1 3\n"
                                               "3 2 4 0 1\n"
                                               "4 3 1 2 0\n"),
                  InputError);
}

TEST_CASE("direct product") {
  FiniteGroup q8 = make(kQ8);
  FiniteGroup c2 = FiniteGroup::elementary_abelian(1);
  FiniteGroup g = FiniteGroup::direct_product(q8, c2);
  REQUIRE(g.order() == 16);
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y) {
      int z = g.mul(x, y);
      CHECK(z / 2 == q8.mul(x / 2, y / 2));
      CHECK(z % 2 == ((x % 2) ^ (y % 2)));
    }
  // generator names merged without collision
  REQUIRE(g.generator_names().size() == 3);
  CHECK(g.generator_names()[2] == "e1");
}

TEST_CASE("elementary abelian") {
  FiniteGroup e = FiniteGroup::elementary_abelian(3);
  CHECK(e.order() == 8);
  CHECK(e.is_abelian());
  for (int x = 1; x < 8; ++x) CHECK(e.elem_order(x) == 2);
}

TEST_CASE("subgroup closure, center, Frattini") {
  FiniteGroup q8 = make(kQ8);
  int a = q8.generator_elems()[0];
  Subgroup ca = subgroup_closure(q8, {a});
  CHECK(ca.size() == 4);
  CHECK(ca.contains(q8.mul(a, a)));
  CHECK(ca.is_normal());
  CHECK(ca.is_abelian());
  CHECK(ca.index() == 2);

  Subgroup z = center(q8);
  CHECK(z.size() == 2);
  Subgroup frat = derived_and_squares(q8);
  CHECK(frat.members == z.members);

  CHECK(subgroup_closure(q8, {}).size() == 1);
}

TEST_CASE("subgroup_as_group") {
  FiniteGroup q8 = make(kQ8);
  int a = q8.generator_elems()[0];
  Subgroup ca = subgroup_closure(q8, {a});
  FiniteGroup c4 = q8.subgroup_as_group(ca.members);
  CHECK(c4.order() == 4);
  CHECK(c4.is_abelian());
  int gens4 = 0;
  for (int x = 0; x < 4; ++x)
    if (c4.elem_order(x) == 4) ++gens4;
  CHECK(gens4 == 2);
}

TEST_CASE("subgroup labels are deterministic generator lists") {
  FiniteGroup q8 = make(kQ8);
  int a = q8.generator_elems()[0];
  CHECK(subgroup_label(subgroup_closure(q8, {a})) == "<a>");
  CHECK(subgroup_label(subgroup_closure(q8, {})) == "{1}");
}
