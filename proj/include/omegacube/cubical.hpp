#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegacube/omega_category.hpp"
#include "omegacube/report.hpp"

namespace omegacube {

// A cubical omega-category with connections, truncated at grade kmax().
// Index conventions: for x in G_n, face(n, i, a, x) with 1 <= i <= n lands
// in G_{n-1}; degeneracy(n, i, x) with 1 <= i <= n+1 and connection(n, i, a, x)
// with 1 <= i <= n land in G_{n+1} and need n+1 <= kmax(); compose(n, i, x, y)
// is x o_i y for 1 <= i <= n.
class CubicalCategory {
 public:
  virtual ~CubicalCategory() = default;
  virtual int kmax() const = 0;
  virtual std::size_t size(int n) const = 0;
  virtual Elem face(int n, int i, Sign a, Elem x) const = 0;
  virtual Elem degeneracy(int n, int i, Elem x) const = 0;
  virtual Elem connection(int n, int i, Sign a, Elem x) const = 0;
  virtual std::optional<Elem> compose(int n, int i, Elem x, Elem y) const = 0;
  virtual std::string describe(int n, Elem x) const { return "g" + std::to_string(n) + "#" + std::to_string(x); }

  bool composable(int n, int i, Elem x, Elem y) const {
    return face(n, i, Sign::plus, x) == face(n, i, Sign::minus, y);
  }
  // Composes and throws if the composite is undefined.
  Elem comp(int n, int i, Elem x, Elem y) const;
};

// Lists, for each x in G_n and direction i, the y with x o_i y defined.
class CubicalIndex {
 public:
  explicit CubicalIndex(const CubicalCategory& g) : g_(&g) {}
  const std::vector<Elem>& right_partners(int n, int i, Elem x) const;

 private:
  const CubicalCategory* g_;
  mutable std::map<std::pair<int, int>, std::vector<std::vector<Elem>>> by_source_;
};

struct CubicalCheckOptions {
  // Interchange quadruples beyond this count are sampled with the seed.
  std::size_t instance_cap = 5'000'000;
  std::size_t sample_size = 200'000;
  std::uint64_t seed = 1;
  // Grades above this are not examined (defaults to kmax).
  int max_grade = -1;
};

// Checks the face/degeneracy/connection identities, the laws for faces,
// degeneracies and connections of composites, interchange, the category
// laws of each o_j, and the two inverse laws for connections. Instances that
// need a grade above kmax are counted as skipped.
Report check_cubical_axioms(const CubicalCategory& g, const CubicalCheckOptions& opts = {});

// [[a b] [c d]] with rows composed by o_i and the rows composed by o_j:
// (a o_i b) o_j (c o_i d).
struct Grid {
  int n;
  int row_dir;  // i
  int col_dir;  // j
  std::vector<std::vector<Elem>> cells;
};
// Evaluates a grid both row-first and column-first and throws if the two
// disagree or are undefined.
Elem compose_matrix(const CubicalCategory& g, const Grid& grid);

}  // namespace omegacube
