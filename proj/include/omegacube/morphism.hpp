#pragma once

#include <memory>
#include <vector>

#include "omegacube/m_category.hpp"
#include "omegacube/report.hpp"

namespace omegacube {

// Built categories are shared process-wide; construction happens once per shape.
const MCategory& m_of(const Shape& shape);

// A homomorphism M(source) -> M(target), given on cells. Values on composite
// members follow from the witnesses.
struct MMorphism {
  Shape source;
  Shape target;
  std::vector<Elem> cell_map;  // source cell index -> target member

  // Value on every member of M(source). Throws if a composite is undefined.
  std::vector<Elem> extend() const;
  Elem apply(Elem member) const;
  bool operator==(const MMorphism& o) const = default;
};

MMorphism identity_morphism(const Shape& shape);
// f o g: apply g first.
MMorphism compose_morphisms(const MMorphism& f, const MMorphism& g);
// (f (x) g)(s x t) = f(s) x g(t)
MMorphism tensor_morphism(const MMorphism& f, const MMorphism& g);

// Faces preserved on every member and every defined composite preserved,
// including the alternative decompositions found during the build.
Report check_morphism(const MMorphism& f);

// Base cases.
MMorphism base_face(Sign a);        // M(I^0) -> M(I), the point to an endpoint
MMorphism base_degeneracy();        // M(I) -> M(I^0)
MMorphism base_inclusion(Sign a);   // M(I) -> M([0,2]), onto [0,1] or [1,2]
MMorphism base_doubling();          // M(I) -> M([0,2]), onto [0,2]
MMorphism base_connection(Sign a);  // M(I^2) -> M(I)

// Indexed families on cubes, built from the base cases with identities.
MMorphism std_face(int n, int i, Sign a);        // M(I^{n-1}) -> M(I^n), 1 <= i <= n
MMorphism std_degeneracy(int n, int i);          // M(I^n) -> M(I^{n-1}), 1 <= i <= n
MMorphism std_connection(int n, int i, Sign a);  // M(I^n) -> M(I^{n-1}), 1 <= i <= n-1
MMorphism std_inclusion(int n, int i, Sign a);   // M(I^n) -> M(I^{i-1} x [0,2] x I^{n-i})
MMorphism std_doubling(int n, int i);            // M(I^n) -> M(I^{i-1} x [0,2] x I^{n-i})

Shape doubled_shape(int n, int i);

// The same families as plain cell-to-cell maps on cube cells, from coordinate
// formulas. They need no member tables, so they work in any dimension.
std::vector<std::uint32_t> face_cell_map(int n, int i, Sign a);   // cells of I^{n-1} -> cells of I^n
std::vector<std::uint32_t> degeneracy_cell_map(int n, int i);      // cells of I^n -> cells of I^{n-1}
std::vector<std::uint32_t> connection_cell_map(int n, int i, Sign a);

std::size_t cube_cells(int n);

}  // namespace omegacube
