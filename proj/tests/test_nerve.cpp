#include <doctest.h>

#include "omegacube/nerve.hpp"

using namespace omegacube;

namespace {

std::vector<std::size_t> grade_sizes(const NerveCategory& g) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= g.kmax(); ++n) out.push_back(g.size(n));
  return out;
}

std::vector<std::uint32_t> as_cells(const MMorphism& f) {
  const MCategory& t = m_of(f.target);
  std::vector<std::uint32_t> out;
  for (Elem v : f.cell_map) {
    // the cell whose closure is the member
    std::optional<std::uint32_t> top;
    for (auto c : set_indices(t.member(v).cells)) {
      CellSet one;
      one.set(c);
      if (closure(t.shape(), one) == t.member(v).cells) top = c;
    }
    REQUIRE(top.has_value());
    out.push_back(*top);
  }
  return out;
}

}  // namespace

TEST_CASE("standard morphisms are morphisms") {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (Sign a : kSigns) {
        CHECK(check_morphism(std_face(n, i, a)).passed());
        CHECK(check_morphism(std_inclusion(n, i, a)).passed());
        if (i < n) CHECK(check_morphism(std_connection(n, i, a)).passed());
      }
      CHECK(check_morphism(std_degeneracy(n, i)).passed());
      CHECK(check_morphism(std_doubling(n, i)).passed());
    }
  }
}

TEST_CASE("cell maps agree with the tensor-built morphisms") {
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) {
      for (Sign a : kSigns) {
        CHECK(as_cells(std_face(n, i, a)) == face_cell_map(n, i, a));
        if (i < n) CHECK(as_cells(std_connection(n, i, a)) == connection_cell_map(n, i, a));
      }
      CHECK(as_cells(std_degeneracy(n, i)) == degeneracy_cell_map(n, i));
    }
}

TEST_CASE("grade sizes of small nerves") {
  CHECK(grade_sizes(NerveCategory(m_of(parse_shape("")), 3)) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(grade_sizes(NerveCategory(m_of(parse_shape("1")), 3)) == std::vector<std::size_t>{2, 3, 6, 20});
  CHECK(grade_sizes(NerveCategory(m_of(parse_shape("2")), 2)) == std::vector<std::size_t>{3, 6, 20});
  CHECK(grade_sizes(NerveCategory(m_of(parse_shape("1x1")), 3)) == std::vector<std::size_t>{4, 10, 47, 672});
}

TEST_CASE("enumerated elements are homomorphisms") {
  const MCategory& x = m_of(parse_shape("1x1"));
  CubeOps ops(x);
  for (int n = 0; n <= 2; ++n)
    for (const Hom& h : enumerate_homs(n, x, 100000)) CHECK(ops.is_hom(h));
  CHECK(ops.is_hom(identity_hom(2)));
  CHECK_THROWS_AS(enumerate_homs(3, x, 100), EnumerationOverflow);
}

TEST_CASE("identity of the square and its faces") {
  const MCategory& sq = m_of(parse_shape("1x1"));
  NerveCategory g(sq, 2);
  Elem id = g.at(identity_hom(2));
  CHECK(g.hom(2, id)[sq.shape().index(parse_cell("(1,1)"))] == sq.whole());
  // d-_1 of the identity picks the left edge (0,1)
  Elem left = g.face(2, 1, Sign::minus, id);
  CHECK(g.hom(1, left)[1] == sq.cell_member(parse_cell("(0,1)")));
  // a face of a degeneracy gives back the element
  for (Elem x = 0; x < g.size(1); ++x)
    for (int i = 1; i <= 2; ++i)
      for (Sign a : kSigns) CHECK(g.face(2, i, a, g.degeneracy(1, i, x)) == x);
}

TEST_CASE("composition in the nerve of an interval") {
  const MCategory& seg = m_of(parse_shape("2"));
  NerveCategory g(seg, 2);
  // the two unit edges compose to the long edge
  Elem e1 = g.at(Hom{seg.cell_member(parse_cell("(0)")), seg.cell_member(parse_cell("(1)")),
                     seg.cell_member(parse_cell("(2)"))});
  Elem e2 = g.at(Hom{seg.cell_member(parse_cell("(2)")), seg.cell_member(parse_cell("(3)")),
                     seg.cell_member(parse_cell("(4)"))});
  auto c = g.compose(1, 1, e1, e2);
  REQUIRE(c.has_value());
  CHECK(g.hom(1, *c)[1] == seg.whole());
  CHECK_FALSE(g.compose(1, 1, e2, e1).has_value());
}

TEST_CASE("rebuilding from stored grades keeps the tables") {
  const MCategory& x = m_of(parse_shape("1"));
  NerveCategory g(x, 3);
  std::vector<std::vector<Hom>> grades;
  for (int n = 0; n <= 3; ++n) {
    grades.emplace_back();
    for (Elem e = 0; e < g.size(n); ++e) grades.back().push_back(g.hom(n, e));
  }
  NerveCategory h(x, grades);
  for (int n = 1; n <= 3; ++n)
    for (Elem e = 0; e < g.size(n); ++e)
      for (int i = 1; i <= n; ++i)
        for (Sign a : kSigns) CHECK(g.face(n, i, a, e) == h.face(n, i, a, e));
  CHECK(g.to_json() == h.to_json());
}
