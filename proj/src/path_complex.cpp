#include "omegacube/path_complex.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace omegacube {

int cell_dim(const Cell& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](int v) { return v % 2 != 0; }));
}

Shape::Shape(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  stride_.assign(lengths_.size(), 1);
  cell_count_ = 1;
  for (int i = arity() - 1; i >= 0; --i) {
    if (lengths_[i] < 1) throw std::invalid_argument("shape lengths must be positive");
    stride_[i] = cell_count_;
    cell_count_ *= static_cast<std::size_t>(2 * lengths_[i] + 1);
    if (cell_count_ > kMaxCells)
      throw std::invalid_argument("shape " + str() + " has more than " + std::to_string(kMaxCells) + " cells");
  }
}

Cell Shape::cell(std::size_t index) const {
  if (index >= cell_count_) throw std::out_of_range("cell index out of range");
  Cell c(lengths_.size());
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    c[i] = static_cast<int>(index / stride_[i]);
    index %= stride_[i];
  }
  return c;
}

std::size_t Shape::index(const Cell& c) const {
  if (!contains(c)) throw std::invalid_argument("cell " + format_cell(c) + " is not in shape " + str());
  std::size_t idx = 0;
  for (std::size_t i = 0; i < c.size(); ++i) idx += static_cast<std::size_t>(c[i]) * stride_[i];
  return idx;
}

bool Shape::contains(const Cell& c) const {
  if (c.size() != lengths_.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 0 || c[i] > 2 * lengths_[i]) return false;
  return true;
}

std::vector<Cell> Shape::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count_);
  for (std::size_t i = 0; i < cell_count_; ++i) out.push_back(cell(i));
  return out;
}

Shape Shape::product(const Shape& other) const {
  std::vector<int> l = lengths_;
  l.insert(l.end(), other.lengths_.begin(), other.lengths_.end());
  return Shape(std::move(l));
}

std::string Shape::str() const {
  std::string s;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(lengths_[i]);
  }
  return s;
}

Shape cube_shape(int n) { return Shape(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::vector<Cell> signed_faces(const Cell& c, Sign s) {
  std::vector<Cell> out;
  int j = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] % 2 == 0) continue;
    ++j;
    // negative faces: lower endpoint at odd j, upper at even j
    bool lower = (j % 2 == 1) == (s == Sign::minus);
    Cell f = c;
    f[k] = lower ? c[k] - 1 : c[k] + 1;
    out.push_back(std::move(f));
  }
  return out;
}

CellSet cell_face(const Shape& shape, const Cell& c, Sign s, int p) {
  if (p < 0) throw std::invalid_argument("face level must be non-negative");
  const int top = std::max(p, cell_dim(c));
  // faces[q] holds d^s_q of the prefix cell, for q = 0..top
  std::vector<std::set<Cell>> faces(static_cast<std::size_t>(top) + 1, std::set<Cell>{Cell{}});
  for (int v : c) {
    std::vector<std::set<Cell>> next(faces.size());
    auto extend = [](const std::set<Cell>& from, int coord, std::set<Cell>& into) {
      for (Cell x : from) {
        x.push_back(coord);
        into.insert(std::move(x));
      }
    };
    if (v % 2 == 0) {
      for (std::size_t q = 0; q < faces.size(); ++q) extend(faces[q], v, next[q]);
    } else {
      for (std::size_t q = 0; q < faces.size(); ++q) {
        Sign end_sign = alternate(s, static_cast<int>(q));
        extend(faces[q], end_sign == Sign::minus ? v - 1 : v + 1, next[q]);
        for (std::size_t i = 0; i < q; ++i)
          for (int w : {v - 1, v, v + 1}) extend(faces[i], w, next[q]);
      }
    }
    faces = std::move(next);
  }
  CellSet out;
  for (const Cell& x : faces[static_cast<std::size_t>(p)]) out.set(shape.index(x));
  return out;
}

CellSet closure(const Shape& shape, const CellSet& cells) {
  CellSet out;
  std::vector<std::size_t> stack = set_indices(cells);
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (out.test(i)) continue;
    out.set(i);
    Cell c = shape.cell(i);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] % 2 == 0) continue;
      for (int d : {-1, 1}) {
        Cell f = c;
        f[k] += d;
        stack.push_back(shape.index(f));
      }
    }
  }
  return out;
}

int set_dim(const Shape& shape, const CellSet& s) {
  int d = -1;
  for (std::size_t i : set_indices(s)) d = std::max(d, cell_dim(shape.cell(i)));
  return d;
}

CellSet product_set(const Shape& /*a_shape*/, const CellSet& a, const Shape& b_shape, const CellSet& b) {
  CellSet out;
  auto bi = set_indices(b);
  for (std::size_t i : set_indices(a))
    for (std::size_t j : bi) out.set(i * b_shape.cell_count() + j);
  return out;
}

bool canonical_less(const CellSet& a, const CellSet& b) {
  for (std::size_t i = 0; i < kMaxCells; ++i) {
    if (a.test(i) == b.test(i)) continue;
    // first difference; the set owning i is smaller unless the other stops here
    const CellSet& other = a.test(i) ? b : a;
    bool other_continues = false;
    for (std::size_t k = i + 1; k < kMaxCells && !other_continues; ++k) other_continues = other.test(k);
    return a.test(i) ? other_continues : !other_continues;
  }
  return false;
}

std::vector<std::size_t> set_indices(const CellSet& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = s._Find_first(); i < kMaxCells; i = s._Find_next(i)) out.push_back(i);
  return out;
}

namespace {

int parse_int(std::string_view t, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument("malformed literal '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Shape parse_shape(std::string_view text) {
  text = trim(text);
  std::vector<int> lengths;
  if (text.empty()) return Shape(lengths);
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find('x', start);
    std::string_view part = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    int n = parse_int(trim(part), text);
    if (n < 1) throw std::invalid_argument("shape lengths must be positive in '" + std::string(text) + "'");
    lengths.push_back(n);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return Shape(std::move(lengths));
}

Cell parse_cell(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw std::invalid_argument("malformed cell literal '" + std::string(text) + "'");
  t = trim(t.substr(1, t.size() - 2));
  Cell c;
  if (t.empty()) return c;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = t.find(',', start);
    c.push_back(parse_int(trim(t.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)), text));
    if (c.back() < 0) throw std::invalid_argument("negative cell component in '" + std::string(text) + "'");
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return c;
}

std::string format_cell(const Cell& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace omegacube
