#pragma once

// Reference computations used only by tests. They avoid the library's
// face-propagation code so they can check it.

#include <algorithm>
#include <set>
#include <vector>

#include "omegacube/path_complex.hpp"

namespace oracle {

using namespace omegacube;

// Face of an arbitrary subcomplex read off its cells: the p-cells that are not
// opposite-signed faces of a (p+1)-cell in the set, together with the maximal
// cells of dimension below p, closed downwards.
inline CellSet direct_face(const Shape& shape, const CellSet& x, Sign s, int p) {
  std::vector<Cell> cells;
  for (std::size_t i : set_indices(x)) cells.push_back(shape.cell(i));
  auto is_face_of = [](const Cell& f, const Cell& c) {
    if (cell_dim(f) >= cell_dim(c)) return false;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (f[k] != c[k] && !(c[k] % 2 == 1 && (f[k] == c[k] - 1 || f[k] == c[k] + 1))) return false;
    return true;
  };
  CellSet keep;
  for (const Cell& c : cells) {
    int d = cell_dim(c);
    if (d < p) {
      bool maximal = std::none_of(cells.begin(), cells.end(), [&](const Cell& e) { return is_face_of(c, e); });
      if (maximal) keep.set(shape.index(c));
    } else if (d == p) {
      bool excluded = false;
      for (const Cell& e : cells) {
        if (cell_dim(e) != p + 1) continue;
        for (const Cell& f : signed_faces(e, -s))
          if (f == c) excluded = true;
      }
      if (!excluded) keep.set(shape.index(c));
    }
  }
  return closure(shape, keep);
}

inline bool set_less(const CellSet& a, const CellSet& b) { return canonical_less(a, b); }

// Every downward-closed set of cells.
inline std::vector<CellSet> all_subcomplexes(const Shape& shape) {
  std::vector<Cell> cells = shape.cells();
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cell_dim(cells[a]) < cell_dim(cells[b]); });
  std::vector<CellSet> out;
  CellSet cur;
  auto faces_present = [&](std::size_t i) {
    const Cell& c = cells[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] % 2 == 0) continue;
      for (int dlt : {-1, 1}) {
        Cell f = c;
        f[k] += dlt;
        if (!cur.test(shape.index(f))) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(cur);
      return;
    }
    self(self, k + 1);
    if (faces_present(order[k])) {
      cur.set(order[k]);
      self(self, k + 1);
      cur.reset(order[k]);
    }
  };
  rec(rec, 0);
  return out;
}

// Subcomplexes reachable from the cells by binary composition, where
// composability is decided by direct_face.
inline std::vector<CellSet> reachable_members(const Shape& shape) {
  struct Less {
    bool operator()(const CellSet& a, const CellSet& b) const { return canonical_less(a, b); }
  };
  std::set<CellSet, Less> found;
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    CellSet one;
    one.set(i);
    found.insert(closure(shape, one));
  }
  const int top = shape.top_dim();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CellSet> cur(found.begin(), found.end());
    for (const CellSet& x : cur)
      for (const CellSet& y : cur)
        for (int p = 0; p < top; ++p)
          if (direct_face(shape, x, Sign::plus, p) == direct_face(shape, y, Sign::minus, p))
            grew |= found.insert(x | y).second;
  }
  return {found.begin(), found.end()};
}

}  // namespace oracle
