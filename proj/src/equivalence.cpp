#include "omegacube/equivalence.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "omegacube/folding.hpp"

namespace omegacube {

bool is_shell(const CubicalCategory& g, const Shell& z) {
  if (static_cast<int>(z.z.size()) != 2 * z.n) return false;
  const int m = z.n - 1;
  for (int i = 1; i <= z.n; ++i)
    for (int j = i + 1; j <= z.n; ++j)
      for (Sign a : kSigns)
        for (Sign b : kSigns)
          if (g.face(m, i, a, z.at(j, b)) != g.face(m, j - 1, b, z.at(i, a))) return false;
  return true;
}

Shell shell_boundary(const CubicalCategory& g, int n, Elem x) {
  if (n < 1) throw std::invalid_argument("grade 0 has no boundary");
  Shell s{n, std::vector<Elem>(static_cast<std::size_t>(2 * n))};
  for (int i = 1; i <= n; ++i)
    for (Sign a : kSigns) s.at(i, a) = g.face(n, i, a, x);
  return s;
}

std::vector<Shell> all_shells(const CubicalCategory& g, int n) {
  std::vector<Shell> out;
  const std::size_t count = g.size(n - 1);
  Shell cur{n, std::vector<Elem>(static_cast<std::size_t>(2 * n), 0)};
  // fill entries in order, pruning on the compatibility of filled pairs
  auto fits = [&](int k) {
    int i = k / 2 + 1;
    Sign a = k % 2 == 0 ? Sign::minus : Sign::plus;
    for (int h = 0; h < 2 * (i - 1); ++h) {
      int i2 = h / 2 + 1;
      Sign b = h % 2 == 0 ? Sign::minus : Sign::plus;
      // i2 < i: d^b_{i2} z^a_i = d^a_{i-1} z^b_{i2}
      if (g.face(n - 1, i2, b, cur.at(i, a)) != g.face(n - 1, i - 1, a, cur.at(i2, b))) return false;
    }
    return true;
  };
  std::function<void(int)> rec = [&](int k) {
    if (k == 2 * n) {
      out.push_back(cur);
      return;
    }
    for (Elem e = 0; e < count; ++e) {
      cur.z[static_cast<std::size_t>(k)] = e;
      if (fits(k)) rec(k + 1);
    }
  };
  rec(0);
  return out;
}

Shell shell_psi(const CubicalCategory& g, const Shell& z, int j) {
  const int n = z.n, m = n - 1;
  if (j < 1 || j > n - 1) throw std::out_of_range("fold index out of range");
  Shell w{n, std::vector<Elem>(z.z.size())};
  for (int i = 1; i <= n; ++i)
    for (Sign a : kSigns) {
      Elem v;
      if (i < j)
        v = psi(g, m, j - 1, z.at(i, a));
      else if (i == j && a == Sign::minus)
        v = g.comp(m, j, z.at(j, Sign::minus), z.at(j + 1, Sign::plus));
      else if (i == j)
        v = g.comp(m, j, z.at(j + 1, Sign::minus), z.at(j, Sign::plus));
      else if (i == j + 1)
        v = g.degeneracy(m - 1, j, g.face(m, j, a, z.at(j + 1, a)));
      else
        v = psi(g, m, j, z.at(i, a));
      w.at(i, a) = v;
    }
  if (!is_shell(g, w)) throw std::logic_error("folded boundary is not a shell");
  return w;
}

namespace {

// the psi indices of Phi_n in the order they act
std::vector<int> fold_sequence(int n) {
  std::vector<int> out;
  auto atoms = FoldingExpr::phi(n).atoms;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) out.push_back(it->i);
  return out;
}

}  // namespace

Shell shell_fold(const CubicalCategory& g, const Shell& z) {
  Shell w = z;
  for (int j : fold_sequence(z.n)) w = shell_psi(g, w, j);
  return w;
}

Elem theta(const CubicalCategory& g, const Shell& z, Elem y, int j) {
  const int n = z.n, m = n - 1;
  if (shell_boundary(g, n, y) != shell_psi(g, z, j)) throw std::invalid_argument("boundary mismatch");
  Elem left = g.comp(n, j + 1, g.degeneracy(m, j, z.at(j, Sign::minus)),
                     g.connection(m, j, Sign::plus, z.at(j + 1, Sign::plus)));
  Elem right = g.comp(n, j + 1, g.connection(m, j, Sign::minus, z.at(j + 1, Sign::minus)),
                      g.degeneracy(m, j, z.at(j, Sign::plus)));
  return g.comp(n, j, g.comp(n, j, left, y), right);
}

Elem reconstruct(const CubicalCategory& g, const Shell& z, Elem y) {
  const int n = z.n;
  if (!is_folded(g, n, y) || shell_boundary(g, n, y) != shell_fold(g, z))
    throw std::invalid_argument("incompatible pair");
  std::vector<int> seq = fold_sequence(n);
  std::vector<Shell> shells{z};
  for (int j : seq) shells.push_back(shell_psi(g, shells.back(), j));
  for (std::size_t k = seq.size(); k-- > 0;) y = theta(g, shells[k], y, seq[k]);
  return y;
}

Elem top_value(const Hom& h) {
  std::size_t top = 0;
  for (int q = 0; q < hom_grade(h); ++q) top = top * 3 + 1;
  return h.at(top);
}

Elem evaluate(const GammaCategory& gl, Elem x) {
  const auto* nerve = dynamic_cast<const NerveCategory*>(&gl.base());
  if (!nerve) throw std::invalid_argument("evaluation needs gamma of a nerve");
  const GammaRep& r = gl.rep(x);
  return top_value(nerve->hom(r.grade, r.elem));
}

Hom b_map(const GammaCategory& gg, int n, Elem x) {
  const CubicalCategory& g = gg.base();
  const Shape cube = cube_shape(n);
  Hom out;
  out.reserve(cube.cell_count());
  for (std::size_t c = 0; c < cube.cell_count(); ++c) {
    Cell cell = cube.cell(c);
    const int m = cell_dim(cell);
    Elem face = opword_apply(g, face_word(cell), n, x);
    out.push_back(gg.of(m, Phi(g, m, m, face)));
  }
  return out;
}

MMorphism naturality_morphism(const Shape& shape) {
  if (shape.arity() >= 1 && shape.lengths()[0] == 1) {
    std::vector<int> rest(shape.lengths().begin() + 1, shape.lengths().end());
    return tensor_morphism(base_doubling(), identity_morphism(Shape(rest)));
  }
  return tensor_morphism(identity_morphism(shape), base_face(Sign::minus));
}

namespace {

// Lowers a folded nerve element along the e_1 d-_1 retraction.
Hom lower(const CubeOps& ops, Hom h) {
  while (hom_grade(h) > 0) {
    Hom f = ops.face(h, 1, Sign::minus);
    if (ops.degeneracy(f, 1) != h) break;
    h = std::move(f);
  }
  return h;
}

Hom postcompose(const MMorphism& f, const Hom& h) {
  Hom out;
  out.reserve(h.size());
  for (Elem v : h) out.push_back(f.apply(v));
  return out;
}

}  // namespace

Report shell_report(const CubicalCategory& g, int max_grade) {
  Report rep;
  rep.subject = "shells";
  auto& compat = rep.add("boundary-is-shell");
  auto& fold = rep.add("shell-psi");
  auto& tp = rep.add("theta-psi");
  auto& pt = rep.add("psi-theta");
  auto& round = rep.add("reconstruct");
  auto& inj = rep.add("pair-injective");
  auto& surj = rep.add("pair-surjective");
  const int top = std::min(max_grade, g.kmax());
  for (int n = 1; n <= top; ++n) {
    std::set<std::pair<std::vector<Elem>, Elem>> pairs;
    for (Elem x = 0; x < g.size(n); ++x) {
      Shell z = shell_boundary(g, n, x);
      compat.record(is_shell(g, z), [&] { return g.describe(n, x); });
      for (int j = 1; j <= n - 1; ++j) {
        fold.record(shell_psi(g, z, j) == shell_boundary(g, n, psi(g, n, j, x)),
                    [&] { return "j=" + std::to_string(j) + " " + g.describe(n, x); });
        tp.record(theta(g, z, psi(g, n, j, x), j) == x, [&] { return "j=" + std::to_string(j) + " " + g.describe(n, x); });
      }
      Elem y = Phi(g, n, n, x);
      round.record(reconstruct(g, z, y) == x, [&] { return g.describe(n, x); });
      bool fresh = pairs.insert({z.z, y}).second;
      inj.record(fresh, [&] { return g.describe(n, x); });
    }
    // every compatible shell with every folded y over its folded boundary
    std::map<std::vector<Elem>, std::vector<Elem>> by_boundary;
    for (Elem y = 0; y < g.size(n); ++y) by_boundary[shell_boundary(g, n, y).z].push_back(y);
    std::vector<Elem> folded = folded_part(g, n);
    std::set<Elem> is_f(folded.begin(), folded.end());
    std::size_t pullback = 0;
    for (const Shell& z : all_shells(g, n)) {
      for (int j = 1; j <= n - 1; ++j) {
        auto it = by_boundary.find(shell_psi(g, z, j).z);
        if (it == by_boundary.end()) continue;
        for (Elem y : it->second)
          pt.record(psi(g, n, j, theta(g, z, y, j)) == y, [&] { return "j=" + std::to_string(j) + " " + g.describe(n, y); });
      }
      auto it = by_boundary.find(shell_fold(g, z).z);
      if (it == by_boundary.end()) continue;
      for (Elem y : it->second) {
        if (!is_f.count(y)) continue;
        ++pullback;
        Elem x = reconstruct(g, z, y);
        surj.record(shell_boundary(g, n, x) == z && Phi(g, n, n, x) == y, [&] { return g.describe(n, y); });
      }
    }
    surj.record(pullback == g.size(n), [&] {
      return "grade " + std::to_string(n) + ": " + std::to_string(pullback) + " pairs for " + std::to_string(g.size(n)) + " elements";
    });
  }
  return rep;
}

Report roundtrip_report(const MCategory& x, const RoundtripOptions& opts) {
  Report rep;
  rep.subject = "round trip " + x.shape().str();
  const int kmax = opts.kmax >= 0 ? opts.kmax : x.top_level() + 1;
  NerveCategory lx(x, kmax, opts.cap);
  GammaCategory glx(lx);

  // A : gamma lambda X -> X
  auto& a_bij = rep.add("A-bijective");
  auto& a_hom = rep.add("A-homomorphism");
  auto& a_nat = rep.add("A-natural");
  std::vector<Elem> a(glx.size());
  {
    std::vector<int> hit(x.size(), 0);
    for (Elem e = 0; e < glx.size(); ++e) {
      a[e] = evaluate(glx, e);
      ++hit[a[e]];
    }
    for (Elem m = 0; m < x.size(); ++m)
      a_bij.record(hit[m] == 1, [&] { return x.describe(m) + " hit " + std::to_string(hit[m]) + " times"; });
    const int levels = std::max(glx.top_level(), x.top_level());
    for (Elem e = 0; e < glx.size(); ++e)
      for (int p = 0; p < levels; ++p) {
        for (Sign s : kSigns)
          a_hom.record(a[glx.face(s, p, e)] == x.face(s, p, a[e]), [&] { return "face " + glx.describe(e); });
        for (Elem f = 0; f < glx.size(); ++f) {
          auto c = glx.compose(e, f, p);
          auto d = x.compose(a[e], a[f], p);
          a_hom.record(c.has_value() == d.has_value() && (!c || a[*c] == *d),
                       [&] { return "#" + std::to_string(p) + " " + glx.describe(e) + " " + glx.describe(f); });
        }
      }
    // naturality for one morphism f : X -> Y, through lambda f
    MMorphism f = naturality_morphism(x.shape());
    const MCategory& y = m_of(f.target);
    CubeOps on_y(y);
    for (Elem e = 0; e < glx.size(); ++e) {
      const GammaRep& r = glx.rep(e);
      Hom moved = postcompose(f, lx.hom(r.grade, r.elem));
      bool ok = on_y.is_hom(moved);
      Hom low = lower(on_y, moved);
      a_nat.record(ok && top_value(low) == f.apply(a[e]), [&] { return glx.describe(e); });
    }
  }

  // B : G -> lambda gamma G for G = lambda X
  auto& b_hom = rep.add("B-homomorphism");
  auto& b_bij = rep.add("B-bijective");
  auto& agb = rep.add("A-gammaB-identity");
  {
    CubeOps on_g(glx);
    std::vector<std::vector<Hom>> b(static_cast<std::size_t>(kmax) + 1);
    for (int n = 0; n <= kmax; ++n)
      for (Elem e = 0; e < lx.size(n); ++e) b[static_cast<std::size_t>(n)].push_back(b_map(glx, n, e));
    auto B = [&](int n, Elem e) -> const Hom& { return b[static_cast<std::size_t>(n)][e]; };
    CubicalIndex idx(lx);
    for (int n = 0; n <= kmax; ++n)
      for (Elem e = 0; e < lx.size(n); ++e) {
        b_hom.record(on_g.is_hom(B(n, e)), [&] { return "not a morphism at " + lx.describe(n, e); });
        for (int i = 1; i <= n; ++i)
          for (Sign s : kSigns)
            b_hom.record(B(n - 1, lx.face(n, i, s, e)) == on_g.face(B(n, e), i, s),
                         [&] { return "face " + std::to_string(i) + " " + lx.describe(n, e); });
        if (n + 1 <= kmax) {
          for (int i = 1; i <= n + 1; ++i)
            b_hom.record(B(n + 1, lx.degeneracy(n, i, e)) == on_g.degeneracy(B(n, e), i),
                         [&] { return "degeneracy " + std::to_string(i) + " " + lx.describe(n, e); });
          for (int i = 1; i <= n; ++i)
            for (Sign s : kSigns)
              b_hom.record(B(n + 1, lx.connection(n, i, s, e)) == on_g.connection(B(n, e), i, s),
                           [&] { return "connection " + std::to_string(i) + " " + lx.describe(n, e); });
        } else {
          b_hom.skip();
        }
        for (int i = 1; i <= n; ++i)
          for (Elem f : idx.right_partners(n, i, e)) {
            auto c = on_g.compose(B(n, e), B(n, f), i);
            b_hom.record(c && *c == B(n, lx.comp(n, i, e, f)),
                         [&] { return "o" + std::to_string(i) + " " + lx.describe(n, e) + " " + lx.describe(n, f); });
          }
      }
    for (int n = 0; n <= std::min(kmax, opts.b_bijective_max_grade); ++n) {
      std::vector<Hom> all;
      try {
        all = enumerate_homs(n, glx, opts.cap);
      } catch (const EnumerationOverflow&) {
        b_bij.skip();
        continue;
      }
      std::vector<Hom> image = b[static_cast<std::size_t>(n)];
      std::sort(image.begin(), image.end());
      bool distinct = std::adjacent_find(image.begin(), image.end()) == image.end();
      b_bij.record(distinct && image == all, [&] {
        return "grade " + std::to_string(n) + ": " + std::to_string(image.size()) + " images of " + std::to_string(all.size());
      });
    }
    // A o gamma(B) on gamma G: B of a folded representative, read on the top cell
    for (Elem e = 0; e < glx.size(); ++e) {
      const GammaRep& r = glx.rep(e);
      agb.record(top_value(B(r.grade, r.elem)) == e, [&] { return glx.describe(e); });
    }
  }

  rep.merge(shell_report(lx, std::min(opts.shell_max_grade, kmax)));
  return rep;
}

}  // namespace omegacube
