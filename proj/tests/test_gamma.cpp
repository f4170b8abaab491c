#include <doctest.h>

#include "omegacube/gamma.hpp"
#include "omegacube/nerve.hpp"

using namespace omegacube;

TEST_CASE("gamma of small nerves has the expected sizes") {
  CHECK(GammaCategory(NerveCategory(m_of(parse_shape("")), 2)).size() == 1);
  NerveCategory line(m_of(parse_shape("1")), 2);
  GammaCategory gl(line);
  CHECK(gl.size() == 3);
  NerveCategory sq(m_of(parse_shape("1x1")), 3);
  GammaCategory gs(sq);
  CHECK(gs.size() == 11);
  // grade 0 is all of G_0
  std::size_t zero = 0;
  for (Elem x = 0; x < gs.size(); ++x) zero += gs.dim(x) == 0;
  CHECK(zero == sq.size(0));
}

TEST_CASE("gamma passes the omega axioms") {
  for (const char* text : {"", "1", "2", "1x1"}) {
    NerveCategory g(m_of(parse_shape(text)), 3);
    GammaCategory gg(g);
    Report r = check_omega_axioms(gg);
    INFO(r.summary());
    CHECK(r.passed());
  }
}

TEST_CASE("e_1 structure on folded parts") {
  for (const char* text : {"1", "2", "1x1"}) {
    NerveCategory g(m_of(parse_shape(text)), 3);
    Report r = check_gamma_structure(g);
    INFO(r.summary());
    CHECK(r.passed());
    CHECK(r.find("e1-composites")->instances > 0);
  }
}

TEST_CASE("gamma elements are found from any grade") {
  NerveCategory g(m_of(parse_shape("1x1")), 3);
  GammaCategory gg(g);
  for (Elem x = 0; x < gg.size(); ++x) {
    const GammaRep& r = gg.rep(x);
    if (r.grade < 3) CHECK(gg.of(r.grade + 1, g.degeneracy(r.grade, 1, r.elem)) == x);
    CHECK(gg.lift(x, 3) != Elem(-1));
  }
  Elem id = g.at(identity_hom(2));
  CHECK_THROWS_AS(gg.of(2, id), std::invalid_argument);
}
