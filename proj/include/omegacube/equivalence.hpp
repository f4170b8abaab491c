#pragma once

#include <optional>
#include <vector>

#include "omegacube/gamma.hpp"
#include "omegacube/nerve.hpp"
#include "omegacube/opword.hpp"

namespace omegacube {

// 2n elements of G_{n-1}, entry (i, a) at position 2(i-1) + sign_index(a).
struct Shell {
  int n = 0;
  std::vector<Elem> z;

  Elem at(int i, Sign a) const { return z.at(static_cast<std::size_t>(2 * (i - 1) + sign_index(a))); }
  Elem& at(int i, Sign a) { return z.at(static_cast<std::size_t>(2 * (i - 1) + sign_index(a))); }
  bool operator==(const Shell&) const = default;
};

// d^a_i z^b_j = d^b_{j-1} z^a_i for i < j.
bool is_shell(const CubicalCategory& g, const Shell& z);
Shell shell_boundary(const CubicalCategory& g, int n, Elem x);
// Every compatible shell in grade n, in lexicographic order of entries.
std::vector<Shell> all_shells(const CubicalCategory& g, int n);

// The boundary of psi_j x computed from the boundary of x alone. Throws
// std::logic_error if a composite is undefined or the result is not a shell.
Shell shell_psi(const CubicalCategory& g, const Shell& z, int j);
// The shell folded by the Phi_n word.
Shell shell_fold(const CubicalCategory& g, const Shell& z);

// The inverse of psi_j on elements with boundary z. Throws
// std::invalid_argument("boundary mismatch") unless the boundary of y is
// shell_psi(z, j).
Elem theta(const CubicalCategory& g, const Shell& z, Elem y, int j);

// The unique x with boundary z and Phi_n x = y, by theta along the Phi_n word
// in reverse. Throws std::invalid_argument("incompatible pair") unless y is
// folded with boundary shell_fold(z).
Elem reconstruct(const CubicalCategory& g, const Shell& z, Elem y);

// The value of a nerve element on the top cell of its cube.
Elem top_value(const Hom& h);
// A : gamma(lambda X) -> X.
Elem evaluate(const GammaCategory& gl, Elem x);

// B(x) in lambda(gamma G): the cell s of dimension m goes to Phi_m of the
// face of x along s.
Hom b_map(const GammaCategory& gg, int n, Elem x);

// The morphism used for the naturality square of A: the doubling of the
// first factor when it has length 1, otherwise the inclusion K -> K x I as
// the minus end.
MMorphism naturality_morphism(const Shape& shape);

struct RoundtripOptions {
  int kmax = -1;                 // defaults to the top dimension of X plus one
  std::size_t cap = 2'000'000;   // enumeration cap for the nerves
  int shell_max_grade = 2;       // shells are enumerated up to this grade
  int b_bijective_max_grade = 3;
};

// A bijective, homomorphic and natural; A o gamma(B) = id; B a homomorphism
// and bijective grade by grade; the shell bijection with theta inverse to
// psi_j.
Report roundtrip_report(const MCategory& x, const RoundtripOptions& opts = {});

// The shell-side checks on any cubical category, grade by grade up to max_grade.
Report shell_report(const CubicalCategory& g, int max_grade);

}  // namespace omegacube
