#include "omegacube/fold_morphisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "omegacube/folding.hpp"
#include "omegacube/nerve.hpp"

namespace omegacube {

MMorphism fold_morphism() {
  const MCategory& sq = m_of(cube_shape(2));
  NerveCategory g(sq, 2);
  Elem folded = psi(g, 2, 1, g.at(identity_hom(2)));
  return MMorphism{sq.shape(), sq.shape(), g.hom(2, folded)};
}

MMorphism fold_morphism(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("fold index out of range");
  static const MMorphism base = fold_morphism();
  return tensor_morphism(tensor_morphism(identity_morphism(cube_shape(i - 1)), base),
                         identity_morphism(cube_shape(n - i - 1)));
}

MMorphism partial_fold_morphism(int n, int r) {
  MMorphism out = identity_morphism(cube_shape(n));
  for (int i = r - 1; i >= 1; --i) out = compose_morphisms(fold_morphism(n, i), out);
  return out;
}

MMorphism full_fold_morphism(int n) {
  MMorphism out = identity_morphism(cube_shape(n));
  for (int r = 1; r <= n; ++r) out = compose_morphisms(partial_fold_morphism(n, r), out);
  return out;
}

MMorphism full_fold_closed_form(int n) {
  const MCategory& m = m_of(cube_shape(n));
  const Shape& s = m.shape();
  MMorphism f{s, s, {}};
  for (std::size_t c = 0; c < s.cell_count(); ++c) {
    Cell cell = s.cell(c);
    int last = -1;
    for (int k = 0; k < n; ++k)
      if (cell[static_cast<std::size_t>(k)] % 2 == 0) last = k;
    if (last < 0) {
      f.cell_map.push_back(m.whole());
      continue;
    }
    Sign a = cell[static_cast<std::size_t>(last)] == 0 ? Sign::minus : Sign::plus;
    f.cell_map.push_back(m.face(a, n - 1 - last, m.whole()));
  }
  return f;
}

std::vector<Elem> globe_members(int n) {
  const MCategory& m = m_of(cube_shape(n));
  std::vector<Elem> out{m.whole()};
  for (int p = 0; p < n; ++p)
    for (Sign a : kSigns) out.push_back(m.face(a, p, m.whole()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PhiCheck phi_check(int n) {
  if (n < 0) throw std::out_of_range("negative dimension");
  PhiCheck out;
  out.operational = full_fold_morphism(n);
  out.closed_form = full_fold_closed_form(n);
  out.agree = out.operational == out.closed_form;
  out.image = out.operational.extend();
  std::sort(out.image.begin(), out.image.end());
  out.image.erase(std::unique(out.image.begin(), out.image.end()), out.image.end());
  out.image_is_globe = out.image == globe_members(n);
  if (!out.agree) throw std::logic_error("folding morphism differs from its closed form in dimension " + std::to_string(n));
  if (!out.image_is_globe) throw std::logic_error("folding image is not the globe in dimension " + std::to_string(n));
  return out;
}

}  // namespace omegacube
