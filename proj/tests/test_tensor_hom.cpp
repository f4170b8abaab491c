#include <doctest.h>

#include <algorithm>

#include "omegacube/cubical.hpp"
#include "omegacube/tensor_hom.hpp"

using namespace omegacube;

TEST_CASE("tensor relations and generation for small cubes") {
  for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    Report r = tensor_cells_check(m, n);
    INFO(r.summary());
    CHECK(r.passed());
    for (const auto& x : r.results) CHECK(x.instances > 0);
  }
}

TEST_CASE("tensor of identities is the identity") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n + m <= 3; ++n) CHECK(tensor_hom(m, identity_hom(m), n, identity_hom(n)) == identity_hom(m + n));
}

TEST_CASE("path and reversed views satisfy the axioms") {
  NerveCategory h(m_of(parse_shape("1x1")), 3);
  PathCategory p1(h, 1);
  CHECK(p1.kmax() == 2);
  CHECK(check_cubical_axioms(p1).passed());
  ReversedCategory t(h);
  CHECK(check_cubical_axioms(t).passed());
  // swapping connection signs as well breaks the face-connection axioms
  ReversedCategory bad(h, true);
  Report r = check_cubical_axioms(bad);
  CHECK_FALSE(r.passed());
  CHECK(r.find("face-connection")->violations > 0);
  CHECK_THROWS_AS(PathCategory(h, 4), std::out_of_range);
}

TEST_CASE("internal hom out of the interval nerve") {
  // a morphism out of the interval nerve is fixed by its value on the top cell
  NerveCategory l(m_of(parse_shape("1")), 3);
  NerveCategory h(m_of(parse_shape("1x1")), 3);
  for (int m = 0; m <= 2; ++m) {
    auto homs = internal_hom(l, h, m, 100000);
    CHECK(homs.size() == h.size(m + 1));
    for (const auto& f : homs) CHECK(check_cubical_morphism(l, h, f).passed());
    if (m >= 1) {
      auto lower = internal_hom(l, h, m - 1, 100000, static_cast<int>(homs.front().maps.size()));
      for (const auto& f : homs)
        for (int i = 1; i <= m; ++i)
          for (Sign a : kSigns) {
            CubicalMorphism d = hom_face(h, f, i, a);
            CHECK(std::find(lower.begin(), lower.end(), d) != lower.end());
          }
    }
  }
  CHECK_THROWS_AS(internal_hom(l, h, 0, 2), EnumerationOverflow);
}

TEST_CASE("reversal is an involution and path shifts indices") {
  NerveCategory h(m_of(parse_shape("1x1")), 3);
  ReversedCategory t(h);
  ReversedCategory tt(static_cast<const CubicalCategory&>(t));  // not the copy constructor
  for (int n = 0; n <= 3; ++n)
    for (Elem x = 0; x < h.size(n); ++x) {
      for (int i = 1; i <= n; ++i)
        for (Sign a : kSigns) {
          CHECK(tt.face(n, i, a, x) == h.face(n, i, a, x));
          if (n < 3) CHECK(tt.connection(n, i, a, x) == h.connection(n, i, a, x));
        }
      if (n < 3)
        for (int i = 1; i <= n + 1; ++i) CHECK(tt.degeneracy(n, i, x) == h.degeneracy(n, i, x));
    }
  CHECK(t.face(2, 1, Sign::minus, 0) == h.face(2, 2, Sign::minus, 0));
  PathCategory p(h, 1);
  CHECK(p.size(0) == h.size(1));
  for (Elem x = 0; x < h.size(2); ++x) CHECK(p.face(1, 1, Sign::plus, x) == h.face(2, 2, Sign::plus, x));
}

TEST_CASE("internal hom of the point") {
  NerveCategory z(m_of(parse_shape("")), 2);
  CHECK(internal_hom(z, z, 0, 10).size() == 1);
}
