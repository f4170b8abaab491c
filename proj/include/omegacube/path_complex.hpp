#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omegacube {

enum class Sign : int8_t { minus = -1, plus = 1 };

inline Sign operator-(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
inline int sign_index(Sign s) { return s == Sign::minus ? 0 : 1; }
inline char sign_char(Sign s) { return s == Sign::minus ? '-' : '+'; }
inline constexpr Sign kSigns[2] = {Sign::minus, Sign::plus};

// Sign flipped once per step: (-)^k applied to s.
inline Sign alternate(Sign s, int k) { return (k % 2 == 0) ? s : -s; }

// Subcomplexes are stored as bitsets over cell indices.
inline constexpr std::size_t kMaxCells = 256;
using CellSet = std::bitset<kMaxCells>;

// A cell of a product of directed intervals. Component v lies in [0, 2n]:
// even v is the vertex v/2, odd v the edge [(v-1)/2, (v+1)/2].
using Cell = std::vector<int>;

int cell_dim(const Cell& c);

// Product [0,n1] x ... x [0,nk] of directed intervals. Cells are indexed in
// mixed radix with the first factor most significant, so index order is the
// lexicographic order of the encodings.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> lengths);

  const std::vector<int>& lengths() const { return lengths_; }
  int arity() const { return static_cast<int>(lengths_.size()); }
  std::size_t cell_count() const { return cell_count_; }
  // Largest cell dimension; equals the number of factors.
  int top_dim() const { return arity(); }

  Cell cell(std::size_t index) const;
  std::size_t index(const Cell& c) const;
  bool contains(const Cell& c) const;
  std::vector<Cell> cells() const;

  Shape product(const Shape& other) const;
  std::string str() const;

  bool operator==(const Shape& o) const { return lengths_ == o.lengths_; }

 private:
  std::vector<int> lengths_;
  std::vector<std::size_t> stride_;
  std::size_t cell_count_ = 1;
};

Shape cube_shape(int n);

// The negative or positive faces of a cell of dimension q >= 1, each of
// dimension q-1. Edge factors are numbered j = 1, 2, ... from the left; the
// negative faces take the lower endpoint at odd j and the upper at even j.
std::vector<Cell> signed_faces(const Cell& c, Sign s);

// The face d^s_p of the member generated by a cell, as a closed set of cells.
CellSet cell_face(const Shape& shape, const Cell& c, Sign s, int p);

// Downward closure of a set of cells.
CellSet closure(const Shape& shape, const CellSet& cells);

// Dimension of the largest cell in the set, or -1 when empty.
int set_dim(const Shape& shape, const CellSet& s);

// Product of subcomplexes: every cell of a paired with every cell of b.
CellSet product_set(const Shape& a_shape, const CellSet& a, const Shape& b_shape, const CellSet& b);

// Lexicographic comparison of the ascending cell-index sequences.
bool canonical_less(const CellSet& a, const CellSet& b);

std::vector<std::size_t> set_indices(const CellSet& s);

// "n1xn2x...xnk"; the empty string is the point.
Shape parse_shape(std::string_view text);
// "(v1,...,vk)"; "()" is the cell of the point.
Cell parse_cell(std::string_view text);
std::string format_cell(const Cell& c);

}  // namespace omegacube
