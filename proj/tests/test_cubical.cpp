#include <doctest.h>

#include "omegacube/nerve.hpp"

using namespace omegacube;

TEST_CASE("axioms hold on small nerves") {
  for (const char* text : {"", "1", "2", "1x1"}) {
    NerveCategory g(m_of(parse_shape(text)), 3);
    Report r = check_cubical_axioms(g);
    INFO(r.summary());
    CHECK(r.passed());
    for (const auto& a : r.results) CHECK(a.mode == "exhaustive");
    // operations leaving grade 3 are counted, not dropped
    CHECK(r.total_skipped() > 0);
  }
}

TEST_CASE("a corrupted connection is caught") {
  const MCategory& seg = m_of(parse_shape("1"));
  NerveCategory g(seg, 3);
  // G+_1 of the edge replaced by its degeneracy e_1
  Elem edge = g.at(identity_hom(1));
  REQUIRE(g.hom(1, edge)[1] == seg.whole());
  g.set_connection(1, 1, Sign::plus, edge, g.degeneracy(1, 1, edge));
  CHECK_FALSE(check_cubical_axioms(g).passed());
}

TEST_CASE("a corrupted face is caught") {
  NerveCategory g(m_of(parse_shape("1x1")), 2);
  Elem top = g.at(identity_hom(2));
  g.set_face(2, 1, Sign::minus, top, g.face(2, 1, Sign::plus, top));
  CHECK_FALSE(check_cubical_axioms(g).passed());
}

TEST_CASE("matrix composites agree in both orders") {
  NerveCategory g(m_of(parse_shape("1x1")), 2);
  Elem id = g.at(identity_hom(2));
  Elem a = g.degeneracy(1, 1, g.face(2, 1, Sign::minus, id));
  Elem b = id;
  // a single row needs no interchange
  Grid row{2, 1, 2, {{a, b}}};
  CHECK(compose_matrix(g, row) == g.comp(2, 1, a, b));
  Elem u = g.degeneracy(1, 2, g.face(2, 2, Sign::minus, a));
  Elem v = g.degeneracy(1, 2, g.face(2, 2, Sign::minus, b));
  Grid sq{2, 1, 2, {{u, v}, {a, b}}};
  CHECK(compose_matrix(g, sq) == g.comp(2, 2, g.comp(2, 1, u, v), g.comp(2, 1, a, b)));
}
