#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omegacube/equivalence.hpp"

namespace omegacube {

// Phi_n x lies in Im e_1.
bool is_thin(const CubicalCategory& g, int n, Elem x);
// On a nerve: the value on the top cell has dimension below n.
bool is_thin_by_value(const NerveCategory& g, int n, Elem x);

// An expression in degeneracies, connections and composites.
struct ThinTerm {
  enum class Kind { degeneracy, connection, compose };
  Kind kind;
  int grade;  // grade of the result
  int i;
  Sign sign = Sign::minus;
  Elem arg = 0;  // leaves: the element of grade - 1
  int left = -1, right = -1;
};

struct ThinWitness {
  std::vector<ThinTerm> nodes;
  int root = -1;

  Elem evaluate(const CubicalCategory& g) const;
  std::string str(const CubicalCategory& g) const;
  std::size_t leaves() const;
  nlohmann::json to_json(const CubicalCategory& g) const;
};

struct ThinOptions {
  bool constructive = true;  // theta chain; otherwise bounded search
  std::size_t budget = 10'000;  // search nodes
};

// Throws std::invalid_argument("not thin"). nullopt when the search budget
// runs out; the constructive path always returns.
std::optional<ThinWitness> thin_decompose(const CubicalCategory& g, int n, Elem x, const ThinOptions& opts = {});

// The two folded halves of the shell agree: the folded shell has equal
// first faces.
bool is_commutative_shell(const CubicalCategory& g, const Shell& z);

struct AnalysisOptions {
  int max_grade = 2;
  std::size_t random_composites = 1000;
  std::size_t search_budget = 10'000;
  std::uint64_t seed = 1;
};

// Thinness against the value definition, constructive and searched witnesses,
// random degenerate composites, and commutative shells against the values on
// the two halves of the cube.
Report analysis_report(const NerveCategory& g, const AnalysisOptions& opts = {});

struct Census {
  int grade;
  std::size_t elements = 0, thin = 0, commutative = 0;
};
Census census(const CubicalCategory& g, int n);

}  // namespace omegacube
