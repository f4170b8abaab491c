#include "omegacube/tensor_hom.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace omegacube {

PathCategory::PathCategory(const CubicalCategory& base, int shift) : base_(&base), shift_(shift) {
  if (shift < 0 || shift > base.kmax()) throw std::out_of_range("path shift out of range");
}

Report check_cubical_morphism(const CubicalCategory& g, const CubicalCategory& h, const CubicalMorphism& f) {
  Report rep;
  rep.subject = "cubical morphism";
  auto& faces = rep.add("faces");
  auto& degs = rep.add("degeneracies");
  auto& conns = rep.add("connections");
  auto& comps = rep.add("composites");
  const int top = static_cast<int>(f.maps.size()) - 1;
  const int s = f.shift;
  auto F = [&](int n, Elem x) { return f.maps[static_cast<std::size_t>(n)][x]; };
  CubicalIndex idx(g);
  for (int n = 0; n <= top; ++n)
    for (Elem x = 0; x < g.size(n); ++x) {
      for (int i = 1; i <= n; ++i)
        for (Sign a : kSigns)
          faces.record(F(n - 1, g.face(n, i, a, x)) == h.face(n + s, i + s, a, F(n, x)),
                       [&] { return g.describe(n, x); });
      if (n + 1 <= top) {
        for (int i = 1; i <= n + 1; ++i)
          degs.record(F(n + 1, g.degeneracy(n, i, x)) == h.degeneracy(n + s, i + s, F(n, x)),
                      [&] { return g.describe(n, x); });
        for (int i = 1; i <= n; ++i)
          for (Sign a : kSigns)
            conns.record(F(n + 1, g.connection(n, i, a, x)) == h.connection(n + s, i + s, a, F(n, x)),
                         [&] { return g.describe(n, x); });
      }
      for (int i = 1; i <= n; ++i)
        for (Elem y : idx.right_partners(n, i, x)) {
          auto c = h.compose(n + s, i + s, F(n, x), F(n, y));
          comps.record(c && *c == F(n, g.comp(n, i, x, y)), [&] { return g.describe(n, x) + " " + g.describe(n, y); });
        }
    }
  return rep;
}

std::vector<CubicalMorphism> internal_hom(const CubicalCategory& g, const CubicalCategory& h, int m,
                                          std::size_t cap, int grades) {
  const int top = grades >= 0 ? grades - 1 : std::min(g.kmax(), h.kmax() - m);
  if (top < 0) return {};
  std::vector<CubicalMorphism> out;
  CubicalMorphism cur;
  cur.shift = m;
  cur.maps.resize(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) cur.maps[static_cast<std::size_t>(n)].assign(g.size(n), 0);
  CubicalIndex idx(g);

  // grade-local consistency once grade n is filled: degeneracies and
  // connections from grade n-1, and composites in grade n
  auto grade_ok = [&](int n) {
    auto F = [&](int k, Elem x) { return cur.maps[static_cast<std::size_t>(k)][x]; };
    if (n >= 1)
      for (Elem x = 0; x < g.size(n - 1); ++x) {
        for (int i = 1; i <= n; ++i)
          if (F(n, g.degeneracy(n - 1, i, x)) != h.degeneracy(n - 1 + m, i + m, F(n - 1, x))) return false;
        for (int i = 1; i <= n - 1; ++i)
          for (Sign a : kSigns)
            if (F(n, g.connection(n - 1, i, a, x)) != h.connection(n - 1 + m, i + m, a, F(n - 1, x))) return false;
      }
    for (int i = 1; i <= n; ++i)
      for (Elem x = 0; x < g.size(n); ++x)
        for (Elem y : idx.right_partners(n, i, x)) {
          auto c = h.compose(n + m, i + m, F(n, x), F(n, y));
          if (!c || *c != F(n, g.comp(n, i, x, y))) return false;
        }
    return true;
  };

  std::function<void(int, Elem)> fill = [&](int n, Elem x) {
    if (n > top) {
      if (out.size() >= cap) throw EnumerationOverflow(out.size(), cap);
      out.push_back(cur);
      return;
    }
    if (x == g.size(n)) {
      if (grade_ok(n)) fill(n + 1, 0);
      return;
    }
    for (Elem v = 0; v < h.size(n + m); ++v) {
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i)
        for (Sign a : kSigns)
          if (h.face(n + m, i + m, a, v) != cur.maps[static_cast<std::size_t>(n - 1)][g.face(n, i, a, x)]) {
            ok = false;
            break;
          }
      if (!ok) continue;
      cur.maps[static_cast<std::size_t>(n)][x] = v;
      fill(n, x + 1);
    }
  };
  fill(0, 0);
  return out;
}

CubicalMorphism hom_face(const CubicalCategory& h, const CubicalMorphism& f, int i, Sign a) {
  if (i < 1 || i > f.shift) throw std::out_of_range("face index out of range");
  CubicalMorphism out;
  out.shift = f.shift - 1;
  for (std::size_t n = 0; n < f.maps.size(); ++n) {
    out.maps.emplace_back();
    for (Elem v : f.maps[n]) out.maps.back().push_back(h.face(static_cast<int>(n) + f.shift, i, a, v));
  }
  return out;
}

Hom tensor_hom(int m, const Hom& x, int n, const Hom& y) {
  const int p = hom_grade(x), q = hom_grade(y);
  MMorphism fx{cube_shape(p), cube_shape(m), x};
  MMorphism fy{cube_shape(q), cube_shape(n), y};
  return tensor_morphism(fx, fy).cell_map;
}

Report tensor_cells_check(int m, int n, int max_grade) {
  Report rep;
  rep.subject = "tensor of cubes " + std::to_string(m) + "," + std::to_string(n);
  auto& r1 = rep.add("faces");
  auto& r2 = rep.add("degeneracies");
  auto& r3 = rep.add("connections");
  auto& r4 = rep.add("left-composites");
  auto& r5 = rep.add("right-composites");
  auto& r6 = rep.add("middle-degeneracy");
  auto& gen = rep.add("generation");
  auto& top = rep.add("top-generator");

  const MCategory& mf = m_of(cube_shape(m));
  const MCategory& mg = m_of(cube_shape(n));
  const MCategory& ma = m_of(cube_shape(m + n));
  NerveCategory F(mf, max_grade), G(mg, max_grade);
  CubeOps of(mf), og(mg), oa(ma);
  auto T = [&](const Hom& x, const Hom& y) { return tensor_hom(m, x, n, y); };
  CubicalIndex fi(F), gi(G);

  for (int p = 0; p <= max_grade; ++p)
    for (int q = 0; q <= max_grade; ++q)
      for (Elem xe = 0; xe < F.size(p); ++xe)
        for (Elem ye = 0; ye < G.size(q); ++ye) {
          const Hom& x = F.hom(p, xe);
          const Hom& y = G.hom(q, ye);
          const Hom xy = T(x, y);
          auto at = [&] { return F.describe(p, xe) + " (x) " + G.describe(q, ye); };
          for (int i = 1; i <= p + q; ++i)
            for (Sign a : kSigns) {
              Hom rhs = i <= p ? T(of.face(x, i, a), y) : T(x, og.face(y, i - p, a));
              r1.record(oa.face(xy, i, a) == rhs, at);
            }
          for (int i = 1; i <= p + q + 1; ++i) {
            Hom lhs = oa.degeneracy(xy, i);
            if (i <= p + 1) r2.record(lhs == T(of.degeneracy(x, i), y), at);
            if (i >= p + 1) r2.record(lhs == T(x, og.degeneracy(y, i - p)), at);
          }
          r6.record(T(of.degeneracy(x, p + 1), y) == T(x, og.degeneracy(y, 1)), at);
          for (int i = 1; i <= p + q; ++i)
            for (Sign a : kSigns) {
              Hom lhs = oa.connection(xy, i, a);
              if (i <= p) r3.record(lhs == T(of.connection(x, i, a), y), at);
              if (i >= p + 1) r3.record(lhs == T(x, og.connection(y, i - p, a)), at);
            }
          for (int i = 1; i <= p; ++i)
            for (Elem x2 : fi.right_partners(p, i, xe)) {
              const Hom& xx = F.hom(p, x2);
              auto c = oa.compose(xy, T(xx, y), i);
              r4.record(c && *c == T(F.hom(p, F.comp(p, i, xe, x2)), y), at);
            }
          for (int j = 1; j <= q; ++j)
            for (Elem y2 : gi.right_partners(q, j, ye)) {
              const Hom& yy = G.hom(q, y2);
              auto c = oa.compose(xy, T(x, yy), p + j);
              r5.record(c && *c == T(x, G.hom(q, G.comp(q, j, ye, y2))), at);
            }
        }

  // the tensors of cells are the cells of I^{m+n}; closing them under
  // composition gives every member
  std::set<Elem> seed;
  for (std::size_t s = 0; s < mf.shape().cell_count(); ++s)
    for (std::size_t t = 0; t < mg.shape().cell_count(); ++t) {
      CellSet c = product_set(mf.shape(), mf.member(mf.cell_member(s)).cells, mg.shape(), mg.member(mg.cell_member(t)).cells);
      auto e = ma.find(c);
      gen.record(e.has_value() && *e == ma.cell_member(s * mg.shape().cell_count() + t),
                 [&] { return format_cell(mf.shape().cell(s)) + " x " + format_cell(mg.shape().cell(t)); });
      if (e) seed.insert(*e);
    }
  std::vector<Elem> all(seed.begin(), seed.end());
  std::set<Elem> have = seed;
  for (std::size_t k = 0; k < all.size(); ++k)
    for (std::size_t l = 0; l <= k; ++l)
      for (int p = 0; p < ma.top_level(); ++p)
        for (auto [u, v] : {std::pair{all[k], all[l]}, std::pair{all[l], all[k]}})
          if (auto c = ma.compose(u, v, p); c && have.insert(*c).second) all.push_back(*c);
  gen.record(have.size() == ma.size(), [&] {
    return std::to_string(have.size()) + " of " + std::to_string(ma.size()) + " members generated";
  });
  top.record(T(identity_hom(m), identity_hom(n)) == identity_hom(m + n), [] { return std::string("identity"); });
  return rep;
}

}  // namespace omegacube
