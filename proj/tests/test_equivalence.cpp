#include <doctest.h>

#include "omegacube/equivalence.hpp"
#include "omegacube/folding.hpp"

using namespace omegacube;

TEST_CASE("round trips on small pasting categories") {
  for (const char* text : {"", "1", "2", "1x1"}) {
    Report r = roundtrip_report(m_of(parse_shape(text)));
    INFO(r.summary());
    CHECK(r.passed());
  }
}

TEST_CASE("shells of the square nerve") {
  NerveCategory g(m_of(parse_shape("1x1")), 2);
  Report r = shell_report(g, 2);
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.find("psi-theta")->instances > 0);
  // a realized shell count never exceeds the compatible ones
  CHECK(all_shells(g, 2).size() >= 1);
}

TEST_CASE("theta and reconstruct reject bad input") {
  NerveCategory g(m_of(parse_shape("1x1")), 2);
  Elem id = g.at(identity_hom(2));
  Shell z = shell_boundary(g, 2, id);
  CHECK_THROWS_WITH_AS(theta(g, z, id, 1), "boundary mismatch", std::invalid_argument);
  CHECK_THROWS_WITH_AS(reconstruct(g, z, id), "incompatible pair", std::invalid_argument);
  CHECK(reconstruct(g, z, Phi(g, 2, 2, id)) == id);
  // the degenerate case
  for (Elem y = 0; y < g.size(1); ++y) {
    Elem e = g.degeneracy(1, 1, y);
    CHECK(reconstruct(g, shell_boundary(g, 2, e), e) == e);
  }
}

TEST_CASE("evaluation and B on the square") {
  const MCategory& sq = m_of(parse_shape("1x1"));
  NerveCategory g(sq, 3);
  GammaCategory gg(g);
  Elem id = g.at(identity_hom(2));
  CHECK(evaluate(gg, gg.of(2, Phi(g, 2, 2, id))) == sq.whole());
  // A(e_1 x) = A(x)
  for (Elem e = 0; e < gg.size(); ++e) {
    const GammaRep& r = gg.rep(e);
    if (r.grade < 3) CHECK(top_value(g.hom(r.grade + 1, g.degeneracy(r.grade, 1, r.elem))) == evaluate(gg, e));
  }
  Hom b = b_map(gg, 2, id);
  CHECK(top_value(b) == gg.of(2, Phi(g, 2, 2, id)));
  CHECK(CubeOps(gg).is_hom(b));
}

TEST_CASE("naturality morphisms") {
  CHECK(naturality_morphism(parse_shape("1")) == base_doubling());
  CHECK(naturality_morphism(parse_shape("")).target == parse_shape("1"));
  CHECK(check_morphism(naturality_morphism(parse_shape("2"))).passed());
  CHECK(check_morphism(naturality_morphism(parse_shape("1x1"))).passed());
}
