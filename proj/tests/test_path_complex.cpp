#include <doctest.h>

#include "omegacube/m_category.hpp"
#include "oracles.hpp"

using namespace omegacube;

namespace {

CellSet set_of(const Shape& s, std::initializer_list<const char*> cells) {
  CellSet out;
  for (const char* c : cells) out.set(s.index(parse_cell(c)));
  return closure(s, out);
}

}  // namespace

TEST_CASE("shape and cell literals") {
  CHECK(parse_shape("").arity() == 0);
  CHECK(parse_shape("").cell_count() == 1);
  CHECK(parse_shape("2").cell_count() == 5);
  CHECK(parse_shape("1x2x1").lengths() == std::vector<int>{1, 2, 1});
  CHECK(parse_shape("1x1x1").cell_count() == 27);
  CHECK(parse_cell("(1,0,2)") == Cell{1, 0, 2});
  CHECK(parse_cell("()").empty());
  CHECK(format_cell({1, 0, 2}) == "(1,0,2)");
  CHECK_THROWS_AS(parse_shape("1x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cell("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("1x1x1x1x1x1"), std::invalid_argument);  // 729 cells
}

TEST_CASE("cell indices follow lexicographic order") {
  Shape s = parse_shape("2x1");
  auto cells = s.cells();
  CHECK(cells.size() == 15);
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) CHECK(cells[i] < cells[i + 1]);
  for (std::size_t i = 0; i < cells.size(); ++i) CHECK(s.index(cells[i]) == i);
  CHECK_THROWS(s.index({5, 0}));
}

TEST_CASE("signed faces alternate along edge factors") {
  auto neg = signed_faces({1, 1}, Sign::minus);
  auto pos = signed_faces({1, 1}, Sign::plus);
  CHECK(neg == std::vector<Cell>{{0, 1}, {1, 2}});
  CHECK(pos == std::vector<Cell>{{2, 1}, {1, 0}});
  CHECK(signed_faces({1}, Sign::minus) == std::vector<Cell>{{0}});
  CHECK(signed_faces({0, 2}, Sign::plus).empty());
  // only edge factors count towards the alternation
  CHECK(signed_faces({2, 1, 0, 3}, Sign::minus) == std::vector<Cell>{{2, 0, 0, 3}, {2, 1, 0, 4}});
}

TEST_CASE("cell faces of the square") {
  Shape s = parse_shape("1x1");
  Cell sq{1, 1};
  CHECK(cell_face(s, sq, Sign::minus, 0) == set_of(s, {"(0,0)"}));
  CHECK(cell_face(s, sq, Sign::plus, 0) == set_of(s, {"(2,2)"}));
  CHECK(cell_face(s, sq, Sign::minus, 1) == set_of(s, {"(0,1)", "(1,2)"}));
  CHECK(cell_face(s, sq, Sign::plus, 1) == set_of(s, {"(1,0)", "(2,1)"}));
  CHECK(cell_face(s, sq, Sign::plus, 2) == set_of(s, {"(1,1)"}));
  CHECK(cell_face(s, {0, 1}, Sign::plus, 3) == set_of(s, {"(0,1)"}));
}

TEST_CASE("cell faces agree with the direct face formula") {
  for (const char* text : {"1", "2", "1x1", "2x1", "1x1x1", "1x1x1x1", "1x2x1"}) {
    Shape s = parse_shape(text);
    for (const Cell& c : s.cells()) {
      CellSet cl = cell_face(s, c, Sign::plus, cell_dim(c));
      for (Sign a : kSigns)
        for (int p = 0; p <= s.top_dim(); ++p)
          CHECK(cell_face(s, c, a, p) == oracle::direct_face(s, cl, a, p));
    }
  }
}

TEST_CASE("closure, products and canonical order") {
  Shape a = parse_shape("1");
  Shape b = parse_shape("2");
  CellSet e = set_of(a, {"(1)"});
  CellSet v = set_of(b, {"(4)"});
  Shape ab = a.product(b);
  CHECK(product_set(a, e, b, v) == set_of(ab, {"(1,4)"}));
  CHECK(set_dim(ab, set_of(ab, {"(1,3)"})) == 2);
  CHECK(set_dim(ab, CellSet{}) == -1);
  CellSet x, y;
  x.set(0);
  y.set(0);
  y.set(5);
  CHECK(canonical_less(x, y));  // prefix first
  CellSet z;
  z.set(1);
  CHECK(canonical_less(y, z));
  CHECK_FALSE(canonical_less(z, y));
  CHECK_FALSE(canonical_less(x, x));
}
