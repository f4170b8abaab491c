#pragma once

#include <vector>

#include "omegacube/nerve.hpp"

namespace omegacube {

// Grade r is grade n + r of the base, with operation indices shifted by n.
class PathCategory : public CubicalCategory {
 public:
  PathCategory(const CubicalCategory& base, int shift);
  int kmax() const override { return base_->kmax() - shift_; }
  std::size_t size(int r) const override { return base_->size(r + shift_); }
  Elem face(int r, int i, Sign a, Elem x) const override { return base_->face(r + shift_, i + shift_, a, x); }
  Elem degeneracy(int r, int i, Elem x) const override { return base_->degeneracy(r + shift_, i + shift_, x); }
  Elem connection(int r, int i, Sign a, Elem x) const override {
    return base_->connection(r + shift_, i + shift_, a, x);
  }
  std::optional<Elem> compose(int r, int i, Elem x, Elem y) const override {
    return base_->compose(r + shift_, i + shift_, x, y);
  }
  std::string describe(int r, Elem x) const override { return base_->describe(r + shift_, x); }

 private:
  const CubicalCategory* base_;
  int shift_;
};

// Same elements with directions numbered backwards: in grade n direction i
// becomes n+1-i. A connection joins two adjacent directions, so Gamma_i on
// grade n reads Gamma_{n+1-i} of the base; swap_connection_signs also turns
// Gamma^a into Gamma^{-a}.
class ReversedCategory : public CubicalCategory {
 public:
  explicit ReversedCategory(const CubicalCategory& base, bool swap_connection_signs = false)
      : base_(&base), swap_(swap_connection_signs) {}
  int kmax() const override { return base_->kmax(); }
  std::size_t size(int n) const override { return base_->size(n); }
  Elem face(int n, int i, Sign a, Elem x) const override { return base_->face(n, n + 1 - i, a, x); }
  Elem degeneracy(int n, int i, Elem x) const override { return base_->degeneracy(n, n + 2 - i, x); }
  Elem connection(int n, int i, Sign a, Elem x) const override {
    return base_->connection(n, n + 1 - i, swap_ ? -a : a, x);
  }
  std::optional<Elem> compose(int n, int i, Elem x, Elem y) const override {
    return base_->compose(n, n + 1 - i, x, y);
  }
  std::string describe(int n, Elem x) const override { return base_->describe(n, x); }

 private:
  const CubicalCategory* base_;
  bool swap_;
};

// A family of maps G_n -> H_{n+shift}, n = 0..grades-1.
struct CubicalMorphism {
  int shift = 0;
  std::vector<std::vector<Elem>> maps;
  bool operator==(const CubicalMorphism&) const = default;
  bool operator<(const CubicalMorphism& o) const { return maps < o.maps; }
};

// Faces, degeneracies, connections and composites preserved wherever both
// sides lie within the grades of f.
Report check_cubical_morphism(const CubicalCategory& g, const CubicalCategory& h, const CubicalMorphism& f);

// Grade m of the internal hom: every morphism G -> P^m H on grades
// 0..grades-1 (defaults to as many as both truncations allow). Throws
// EnumerationOverflow past the cap.
std::vector<CubicalMorphism> internal_hom(const CubicalCategory& g, const CubicalCategory& h, int m,
                                          std::size_t cap, int grades = -1);

// A face of H applied to every value: grade m of the internal hom to grade
// m-1, for 1 <= i <= m.
CubicalMorphism hom_face(const CubicalCategory& h, const CubicalMorphism& f, int i, Sign a);

// x (x) y for x : M(I^p) -> M(I^m) and y : M(I^q) -> M(I^n), a hom
// M(I^{p+q}) -> M(I^{m+n}) taking s x t to x(s) x y(t).
Hom tensor_hom(int m, const Hom& x, int n, const Hom& y);

// The tensor relations on the nerves of M(I^m), M(I^n) and M(I^{m+n}), for
// elements up to grade max_grade, and generation of M(I^{m+n}) from the
// tensors of cells.
Report tensor_cells_check(int m, int n, int max_grade = 2);

}  // namespace omegacube
