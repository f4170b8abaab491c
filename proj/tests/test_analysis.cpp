#include <doctest.h>

#include "omegacube/analysis.hpp"

using namespace omegacube;

TEST_CASE("analysis of the square nerve") {
  NerveCategory g(m_of(parse_shape("1x1")), 2);
  Report r = analysis_report(g);
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.find("degenerate-composites-thin")->instances == 1000);
}

TEST_CASE("degenerate elements are thin and the identity is not") {
  NerveCategory g(m_of(parse_shape("1x1")), 2);
  Elem id = g.at(identity_hom(2));
  CHECK_FALSE(is_thin(g, 2, id));
  CHECK_FALSE(is_commutative_shell(g, shell_boundary(g, 2, id)));
  CHECK_THROWS_WITH_AS(thin_decompose(g, 2, id), "not thin", std::invalid_argument);
  for (Elem y = 0; y < g.size(1); ++y) {
    for (int i = 1; i <= 2; ++i) {
      Elem e = g.degeneracy(1, i, y);
      CHECK(is_thin(g, 2, e));
      CHECK(is_commutative_shell(g, shell_boundary(g, 2, e)));
      ThinOptions search;
      search.constructive = false;
      auto w = thin_decompose(g, 2, e, search);
      REQUIRE(w);
      CHECK(w->evaluate(g) == e);
      CHECK(w->leaves() == 1);
    }
    for (Sign s : kSigns) CHECK(is_thin(g, 2, g.connection(1, 1, s, y)));
  }
}

TEST_CASE("two connections compose to a degeneracy") {
  NerveCategory g(m_of(parse_shape("1")), 2);
  for (Elem z = 0; z < g.size(1); ++z) {
    Elem x = g.comp(2, 2, g.connection(1, 1, Sign::plus, z), g.connection(1, 1, Sign::minus, z));
    CHECK(x == g.degeneracy(1, 1, z));
    auto w = thin_decompose(g, 2, x);
    REQUIRE(w);
    CHECK(w->evaluate(g) == x);
    CHECK_FALSE(w->str(g).empty());
    CHECK(w->to_json(g).contains("nodes"));
  }
}

TEST_CASE("census of the square nerve") {
  NerveCategory g(m_of(parse_shape("1x1")), 2);
  Census c = census(g, 2);
  CHECK(c.elements == 47);
  CHECK(c.thin == 38);
  CHECK(c.commutative == 38);
}
