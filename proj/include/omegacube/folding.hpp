#pragma once

#include <vector>

#include "omegacube/cubical.hpp"

namespace omegacube {

// psi_i x = G+_i d-_{i+1} x  o_{i+1}  x  o_{i+1}  G-_i d+_{i+1} x, for x in G_n and
// 1 <= i <= n-1.
Elem psi(const CubicalCategory& g, int n, int i, Elem x);
// Psi_r = psi_{r-1} ... psi_1 (psi_1 acts first); Psi_1 is the identity.
Elem Psi(const CubicalCategory& g, int n, int r, Elem x);
// Psi_{r,l} = psi_{r-1} ... psi_l; the identity when l = r.
Elem Psi_from(const CubicalCategory& g, int n, int r, int l, Elem x);
// Phi_m = Psi_1 Psi_2 ... Psi_m (Psi_m acts first); Phi_0, Phi_1 are identities.
Elem Phi(const CubicalCategory& g, int n, int m, Elem x);

// x in Im e_i, decided by the retraction e_i d-_i.
bool in_degeneracy_image(const CubicalCategory& g, int n, int i, Elem x);
// x in Im e_1^k.
bool in_eps1_power_image(const CubicalCategory& g, int n, int k, Elem x);
// Iterated operators used throughout: e_1^k and (d^a_1)^k.
Elem eps1_power(const CubicalCategory& g, int n, int k, Elem x);  // x in G_n -> G_{n+k}
Elem face1_power(const CubicalCategory& g, int n, int k, Sign a, Elem x);  // x in G_n -> G_{n-k}

// Every d^a_m x lies in Im e_1^{m-1}.
bool is_folded(const CubicalCategory& g, int n, Elem x);
std::vector<Elem> folded_part(const CubicalCategory& g, int n);

// One factor of a generalised folding: psi_i, e_i d^a_i, or e_i d^a_{i+1}.
struct FoldAtom {
  enum class Kind { psi, eps_face, eps_face_next };
  Kind kind = Kind::psi;
  int i = 1;
  Sign sign = Sign::minus;
  bool operator==(const FoldAtom&) const = default;
};

// Atoms applied right to left (the last atom acts first).
struct FoldingExpr {
  std::vector<FoldAtom> atoms;

  // The genuine Phi_m as atoms.
  static FoldingExpr phi(int m);
  // Every generalised Phi_m: each psi_i of Phi_m replaced independently by a
  // generalised psi_i.
  static std::vector<FoldingExpr> generalised_phis(int m);
  bool is_genuine() const;
  std::string str() const;
};

// Throws std::invalid_argument if an atom index does not fit grade n.
Elem eval_generalized(const CubicalCategory& g, int n, const FoldingExpr& e, Elem x);

struct FoldingOptions {
  std::size_t exhaustive_limit = 100'000;  // per relation and grade
  std::size_t sample_size = 10'000;
  std::uint64_t seed = 1;
  int max_grade = -1;
};

// The folding relations: faces and degeneracies against psi, Psi, Phi;
// idempotence and image characterisations; the folded-face identities and
// closure of the folded parts; commutation of distant psi's, the braid
// relation, absorption by Phi_m, psi_i G_i = e_i, Phi_m on degeneracies and
// connections; and psi of a composite in each direction.
Report relation_suite(const CubicalCategory& g, const FoldingOptions& opts = {});

struct OrderingCount {
  std::size_t composites = 0;  // m!
  std::size_t distinct = 0;    // pointwise-distinct operators on G_m
};
// The m! composites Psi_{1,l(1)} ... Psi_{m,l(m)} compared on every element of G_m.
OrderingCount ordering_count(const CubicalCategory& g, int m);

}  // namespace omegacube
