#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegacube/cubical.hpp"
#include "omegacube/nerve.hpp"

namespace omegacube {

struct OpSym {
  enum class Kind { face, degeneracy, connection };
  Kind kind = Kind::face;
  int i = 1;
  Sign sign = Sign::minus;  // ignored for degeneracies
  bool operator==(const OpSym& o) const {
    return kind == o.kind && i == o.i && (kind == Kind::degeneracy || sign == o.sign);
  }
  std::string str() const;
};

// A word in faces, degeneracies and connections; the rightmost symbol acts
// first.
struct OpWord {
  std::vector<OpSym> syms;

  // Net change of grade.
  int delta() const;
  // Grade after applying to grade n, or nullopt if some index is invalid.
  std::optional<int> target_grade(int n) const;
  // Highest grade passed through when applied to grade n.
  int peak_grade(int n) const;
  std::string str() const;  // "d-1 e2 G+1", "id" when empty
  static OpWord parse(const std::string& text);
  bool operator==(const OpWord&) const = default;
};

class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument when an index does not fit the grade.
Elem opword_apply(const CubicalCategory& g, const OpWord& w, int n, Elem x);
Hom opword_apply(const CubeOps& ops, const OpWord& w, const Hom& x);

struct NormalizeOptions {
  std::size_t step_budget = 10'000;
};

// Rewrites with the cubical relations: faces move right past degeneracies and
// connections (or cancel), faces sort into strictly increasing indices,
// degeneracies move left of connections and sort into decreasing indices,
// connections sort by their own relations. nullopt if the budget runs out.
std::optional<OpWord> normalize(const OpWord& w, int n, const NormalizeOptions& opts = {});

struct EqualOptions {
  NormalizeOptions normalize;
  // Largest source grade for the semantic comparison on the identity of M(I^n).
  int semantic_max_grade = 4;
};

// Same normal form decides equal. Otherwise both words are evaluated on the
// identity of M(I^n): a natural operation on nerves is precomposition with its
// value there, so equal values mean equal actions. Throws UndecidedError
// when neither route is available, and std::invalid_argument on ill-graded
// input.
bool opword_equal(const OpWord& v, const OpWord& w, int n, const EqualOptions& opts = {});

// The face-only word in increasing indices whose underlying map sends I^m
// onto the cell c of I^n.
OpWord face_word(const Cell& c);

// Random well-graded word from grade n with at most max_len symbols, staying
// within grades 0..max_grade.
OpWord random_word(std::mt19937_64& rng, int n, int max_len, int max_grade);

struct OpwordSuiteOptions {
  std::size_t words = 10'000;
  int max_len = 6;
  std::uint64_t seed = 1;
};

// Seeded random words: normalization is idempotent and preserves the action,
// opword_equal agrees with the action on every element of the nerve of the
// cube in the source grade, and each face-only word normalizes to the face
// word of the cell it reaches.
Report opword_suite(const OpwordSuiteOptions& opts = {});

}  // namespace omegacube
