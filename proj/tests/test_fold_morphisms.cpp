#include <doctest.h>

#include "omegacube/fold_morphisms.hpp"
#include "omegacube/folding.hpp"
#include "omegacube/nerve.hpp"

using namespace omegacube;

TEST_CASE("full folding matches its closed form") {
  for (int n = 0; n <= 3; ++n) {
    PhiCheck c = phi_check(n);
    CHECK(c.passed());
    CHECK(c.image.size() == static_cast<std::size_t>(2 * n + 1));
  }
}

TEST_CASE("values of the square folding") {
  const MCategory& sq = m_of(cube_shape(2));
  MMorphism f = full_fold_morphism(2);
  auto at = [&](const char* c) { return f.cell_map[sq.shape().index(parse_cell(c))]; };
  CHECK(at("(1,1)") == sq.whole());
  CHECK(at("(0,1)") == sq.face(Sign::minus, 1, sq.whole()));
  CHECK(at("(1,0)") == sq.face(Sign::minus, 0, sq.whole()));
  CHECK(at("(2,1)") == sq.face(Sign::plus, 1, sq.whole()));
  CHECK(check_morphism(f).passed());
  CHECK(check_morphism(fold_morphism(3, 2)).passed());
}

TEST_CASE("folding on the nerve is precomposition") {
  for (auto [text, n] : {std::pair{"1", 3}, std::pair{"1x1", 2}, std::pair{"2", 2}}) {
    NerveCategory g(m_of(parse_shape(text)), n);
    Precomposer phi(full_fold_morphism(n));
    Precomposer psi1(fold_morphism(n, 1));
    for (Elem x = 0; x < g.size(n); ++x) {
      CHECK(g.at(phi.apply(g.target(), g.hom(n, x))) == Phi(g, n, n, x));
      CHECK(g.at(psi1.apply(g.target(), g.hom(n, x))) == psi(g, n, 1, x));
    }
  }
}

TEST_CASE("closed form agrees with the identity of the cube") {
  for (int n = 1; n <= 3; ++n) {
    NerveCategory g(m_of(cube_shape(n)), n, 100000);
    Elem f = Phi(g, n, n, g.at(identity_hom(n)));
    CHECK(g.hom(n, f) == full_fold_closed_form(n).cell_map);
  }
}
