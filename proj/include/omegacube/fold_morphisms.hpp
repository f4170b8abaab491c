#pragma once

#include <vector>

#include "omegacube/morphism.hpp"

namespace omegacube {

// The folding operators on the nerve are precompositions: psi_i x = x o psi_i^
// for a morphism psi_i^ : M(I^n) -> M(I^n). These build the underlying
// morphisms. Composites reverse order: Psi_r^ = psi_1^ ... psi_{r-1}^ and
// Phi_n^ = Psi_n^ ... Psi_1^ (as maps, the rightmost acts first).

// psi_1 of the identity of the square, read as a morphism of M(I^2).
MMorphism fold_morphism();
MMorphism fold_morphism(int n, int i);  // id^{i-1} (x) fold (x) id^{n-i-1}
MMorphism partial_fold_morphism(int n, int r);
MMorphism full_fold_morphism(int n);

// Closed form: I^n goes to itself and a cell s x d^a_0 I x I^p (p trailing
// edges after the last vertex coordinate) goes to d^a_p I^n.
MMorphism full_fold_closed_form(int n);

// The n-globe inside M(I^n): I^n and the d^a_p I^n for p < n.
std::vector<Elem> globe_members(int n);

struct PhiCheck {
  MMorphism operational;
  MMorphism closed_form;
  std::vector<Elem> image;  // sorted image on all members
  bool agree = false;
  bool image_is_globe = false;
  bool passed() const { return agree && image_is_globe; }
};

// Throws std::logic_error on a mismatch.
PhiCheck phi_check(int n);

}  // namespace omegacube
