#pragma once

#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "omegacube/cubical.hpp"
#include "omegacube/morphism.hpp"

namespace omegacube {

// A homomorphism M(I^n) -> X, stored as its values on the cells of I^n.
using Hom = std::vector<Elem>;

int hom_grade(const Hom& x);

struct HomHash {
  std::size_t operator()(const Hom& h) const noexcept;
};

class EnumerationOverflow : public std::runtime_error {
 public:
  EnumerationOverflow(std::size_t partial, std::size_t cap);
  std::size_t partial_count;
};

// Evaluates h o f for a fixed morphism f, given h on the cells of f's target.
class Precomposer {
 public:
  explicit Precomposer(const MMorphism& f);
  // Throws std::logic_error if h does not extend to the needed composites.
  Hom apply(const OmegaView& x, const Hom& h) const;

 private:
  struct Step {
    bool atom;
    std::uint32_t a, b;
    int level;
  };
  std::vector<Step> steps_;
  std::vector<std::uint32_t> out_slot_;
};

// Cubical operations on homomorphisms into X, computed directly without an
// enumerated table. Faces, degeneracies and connections precompose with the
// standard morphisms; o_i amalgamates along the doubled cube and precomposes
// with the doubling morphism.
class CubeOps {
 public:
  explicit CubeOps(const OmegaView& x) : x_(&x) {}
  const OmegaView& target() const { return *x_; }

  Hom face(const Hom& x, int i, Sign a) const;
  Hom degeneracy(const Hom& x, int i) const;
  Hom connection(const Hom& x, int i, Sign a) const;
  bool composable(const Hom& x, const Hom& y, int i) const;
  std::optional<Hom> compose(const Hom& x, const Hom& y, int i) const;
  // The map on the cells of I^{i-1} x [0,2] x I^{n-i} restricting to x and y.
  Hom amalgamate(const Hom& x, const Hom& y, int i) const;
  Hom precompose(const Hom& x, const MMorphism& f) const;
  // Value on any member of M(I^n), through the witnesses.
  Elem value(const Hom& x, Elem member) const;
  std::vector<Elem> values(const Hom& x) const;
  // Full homomorphism check: every witness (and alternative witness) is
  // defined and faces are preserved on every member.
  bool is_hom(const Hom& x) const;

 private:
  const OmegaView* x_;
};

// The identity of M(I^n), an element of grade n of its own nerve.
Hom identity_hom(int n);

// All homomorphisms M(I^n) -> X in lexicographic order of their cell values.
std::vector<Hom> enumerate_homs(int n, const OmegaView& x, std::size_t cap);

// The nerve of X truncated at kmax: grade n is Hom[M(I^n), X].
class NerveCategory : public CubicalCategory {
 public:
  NerveCategory(const OmegaView& x, int kmax, std::size_t cap = 2'000'000);
  // Rebuilds from stored grades; used when reading documents.
  NerveCategory(const OmegaView& x, std::vector<std::vector<Hom>> grades);

  int kmax() const override { return static_cast<int>(grades_.size()) - 1; }
  std::size_t size(int n) const override { return grades_.at(static_cast<std::size_t>(n)).size(); }
  Elem face(int n, int i, Sign a, Elem x) const override;
  Elem degeneracy(int n, int i, Elem x) const override;
  Elem connection(int n, int i, Sign a, Elem x) const override;
  std::optional<Elem> compose(int n, int i, Elem x, Elem y) const override;
  std::string describe(int n, Elem x) const override;

  const Hom& hom(int n, Elem x) const { return grades_.at(static_cast<std::size_t>(n)).at(x); }
  std::optional<Elem> find(const Hom& h) const;
  Elem at(const Hom& h) const;
  const CubeOps& ops() const { return ops_; }
  const OmegaView& target() const { return *x_; }

  // Overwrites a stored table entry; used for corrupted copies in tests.
  void set_face(int n, int i, Sign a, Elem x, Elem v);
  void set_connection(int n, int i, Sign a, Elem x, Elem v);

  nlohmann::json to_json() const;
  // Rebuilds the grades over x, then trusts the stored face, degeneracy and
  // connection tables, so a corrupted document fails the axiom checker.
  static NerveCategory from_json(const OmegaView& x, const nlohmann::json& j);

 private:
  void build_tables();

  const OmegaView* x_;
  CubeOps ops_;
  std::vector<std::vector<Hom>> grades_;
  std::vector<std::unordered_map<Hom, Elem, HomHash>> lookup_;
  // [n][i-1][sign][x]
  std::vector<std::vector<std::array<std::vector<Elem>, 2>>> faces_;
  std::vector<std::vector<std::vector<Elem>>> degeneracies_;
  std::vector<std::vector<std::array<std::vector<Elem>, 2>>> connections_;
  mutable std::unordered_map<std::uint64_t, std::optional<Elem>> compositions_;
};

}  // namespace omegacube
