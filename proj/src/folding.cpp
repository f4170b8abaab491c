#include "omegacube/folding.hpp"

#include <array>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace omegacube {

Elem psi(const CubicalCategory& g, int n, int i, Elem x) {
  if (i < 1 || i > n - 1) throw std::out_of_range("psi index out of range");
  Elem lo = g.connection(n - 1, i, Sign::plus, g.face(n, i + 1, Sign::minus, x));
  Elem hi = g.connection(n - 1, i, Sign::minus, g.face(n, i + 1, Sign::plus, x));
  return g.comp(n, i + 1, g.comp(n, i + 1, lo, x), hi);
}

Elem Psi_from(const CubicalCategory& g, int n, int r, int l, Elem x) {
  if (r < 1 || r > std::max(n, 1) || l < 1 || l > r) throw std::out_of_range("Psi index out of range");
  for (int i = l; i <= r - 1; ++i) x = psi(g, n, i, x);
  return x;
}

Elem Psi(const CubicalCategory& g, int n, int r, Elem x) { return Psi_from(g, n, r, 1, x); }

Elem Phi(const CubicalCategory& g, int n, int m, Elem x) {
  if (m < 0 || m > std::max(n, 1)) throw std::out_of_range("Phi index out of range");
  for (int r = m; r >= 2; --r) x = Psi(g, n, r, x);
  return x;
}

bool in_degeneracy_image(const CubicalCategory& g, int n, int i, Elem x) {
  return g.degeneracy(n - 1, i, g.face(n, i, Sign::minus, x)) == x;
}

Elem eps1_power(const CubicalCategory& g, int n, int k, Elem x) {
  for (int s = 0; s < k; ++s) x = g.degeneracy(n + s, 1, x);
  return x;
}

Elem face1_power(const CubicalCategory& g, int n, int k, Sign a, Elem x) {
  for (int s = 0; s < k; ++s) x = g.face(n - s, 1, a, x);
  return x;
}

bool in_eps1_power_image(const CubicalCategory& g, int n, int k, Elem x) {
  return eps1_power(g, n - k, k, face1_power(g, n, k, Sign::minus, x)) == x;
}

bool is_folded(const CubicalCategory& g, int n, Elem x) {
  for (int m = 1; m <= n; ++m)
    for (Sign a : kSigns)
      if (!in_eps1_power_image(g, n - 1, m - 1, g.face(n, m, a, x))) return false;
  return true;
}

std::vector<Elem> folded_part(const CubicalCategory& g, int n) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.size(n); ++x)
    if (is_folded(g, n, x)) out.push_back(x);
  return out;
}

FoldingExpr FoldingExpr::phi(int m) {
  FoldingExpr e;
  for (int r = 1; r <= m; ++r)
    for (int i = r - 1; i >= 1; --i) e.atoms.push_back(FoldAtom{FoldAtom::Kind::psi, i, Sign::minus});
  return e;
}

std::vector<FoldingExpr> FoldingExpr::generalised_phis(int m) {
  FoldingExpr base = phi(m);
  std::vector<FoldingExpr> out{FoldingExpr{}};
  for (const FoldAtom& a : base.atoms) {
    std::vector<FoldingExpr> next;
    for (const FoldingExpr& e : out) {
      std::vector<FoldAtom> options{a};
      for (Sign s : kSigns) {
        options.push_back(FoldAtom{FoldAtom::Kind::eps_face, a.i, s});
        options.push_back(FoldAtom{FoldAtom::Kind::eps_face_next, a.i, s});
      }
      for (const FoldAtom& o : options) {
        FoldingExpr f = e;
        f.atoms.push_back(o);
        next.push_back(std::move(f));
      }
    }
    out = std::move(next);
  }
  return out;
}

bool FoldingExpr::is_genuine() const {
  for (const auto& a : atoms)
    if (a.kind != FoldAtom::Kind::psi) return false;
  return true;
}

std::string FoldingExpr::str() const {
  std::string s;
  for (const auto& a : atoms) {
    if (!s.empty()) s += ' ';
    switch (a.kind) {
      case FoldAtom::Kind::psi: s += "psi" + std::to_string(a.i); break;
      case FoldAtom::Kind::eps_face:
        s += "e" + std::to_string(a.i) + "d" + sign_char(a.sign) + std::to_string(a.i);
        break;
      case FoldAtom::Kind::eps_face_next:
        s += "e" + std::to_string(a.i) + "d" + sign_char(a.sign) + std::to_string(a.i + 1);
        break;
    }
  }
  return s.empty() ? "id" : s;
}

Elem eval_generalized(const CubicalCategory& g, int n, const FoldingExpr& e, Elem x) {
  for (auto it = e.atoms.rbegin(); it != e.atoms.rend(); ++it) {
    const FoldAtom& a = *it;
    if (a.i < 1 || a.i > n - 1) throw std::invalid_argument("folding atom does not fit the grade");
    switch (a.kind) {
      case FoldAtom::Kind::psi: x = psi(g, n, a.i, x); break;
      case FoldAtom::Kind::eps_face: x = g.degeneracy(n - 1, a.i, g.face(n, a.i, a.sign, x)); break;
      case FoldAtom::Kind::eps_face_next: x = g.degeneracy(n - 1, a.i, g.face(n, a.i + 1, a.sign, x)); break;
    }
  }
  return x;
}

namespace {

using Params = std::array<int, 3>;

class Runner {
 public:
  Runner(const FoldingOptions& o) : opts_(o), rng_(o.seed) {}

  // Runs body(x, params) over elements x < count and every params entry,
  // sampling uniformly when the product exceeds the exhaustive limit.
  template <class Body>
  void run(AxiomResult& r, std::size_t count, const std::vector<Params>& params, Body body) {
    const std::size_t total = count * params.size();
    if (total == 0) return;
    if (total <= opts_.exhaustive_limit) {
      for (std::size_t x = 0; x < count; ++x)
        for (const Params& p : params) body(static_cast<Elem>(x), p);
      return;
    }
    r.mode = "sampled";
    std::uniform_int_distribution<std::size_t> pick(0, total - 1);
    for (std::size_t s = 0; s < opts_.sample_size; ++s) {
      std::size_t k = pick(rng_);
      body(static_cast<Elem>(k / params.size()), params[k % params.size()]);
    }
  }

  // Same over an explicit list of instances.
  template <class T, class Body>
  void run_list(AxiomResult& r, const std::vector<T>& items, Body body) {
    if (items.size() <= opts_.exhaustive_limit) {
      for (const T& t : items) body(t);
      return;
    }
    r.mode = "sampled";
    std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
    for (std::size_t s = 0; s < opts_.sample_size; ++s) body(items[pick(rng_)]);
  }

 private:
  FoldingOptions opts_;
  std::mt19937_64 rng_;
};

}  // namespace

Report relation_suite(const CubicalCategory& g, const FoldingOptions& opts) {
  Report rep;
  rep.subject = "folding relations";
  const int K = g.kmax();
  const int top = opts.max_grade < 0 ? K : std::min(opts.max_grade, K);
  Runner run(opts);
  CubicalIndex idx(g);

  auto F = [&](int n, int i, Sign a, Elem x) { return g.face(n, i, a, x); };
  auto E = [&](int n, int i, Elem x) { return g.degeneracy(n, i, x); };
  auto C = [&](int n, int i, Sign a, Elem x) { return g.connection(n, i, a, x); };
  auto sg = [](int s) { return s == 0 ? Sign::minus : Sign::plus; };
  auto at = [&](int n, Elem x) { return " at " + g.describe(n, x); };

  auto& psi_eps = rep.add("psi-degeneracy");
  auto& psi_face = rep.add("face-psi");
  auto& Psi_eps = rep.add("Psi-degeneracy");
  auto& Psi_face = rep.add("face-Psi");
  auto& Phi_eps = rep.add("Phi-degeneracy");
  auto& Phi_face = rep.add("face-Phi");
  auto& psi_idem = rep.add("psi-idempotent");
  auto& psi_img = rep.add("psi-image");
  auto& Phi_idem = rep.add("Phi-idempotent");
  auto& Phi_img = rep.add("Phi-image");
  auto& folded_faces = rep.add("folded-faces");
  auto& closure = rep.add("folded-closure");
  auto& commute = rep.add("psi-commute");
  auto& braid = rep.add("braid");
  auto& absorb = rep.add("Phi-absorbs-psi");
  auto& Psi_psi = rep.add("Psi-psi");
  auto& psi_conn = rep.add("psi-connection");
  auto& Phi_conn = rep.add("Phi-connection");
  auto& psi_comp = rep.add("psi-composite");

  for (int n = 1; n <= top; ++n) {
    const std::size_t N = g.size(n);
    const std::size_t Nb = g.size(n - 1);

    // psi against degeneracies; x in G_{n-1}, psi_j on G_n
    {
      std::vector<Params> ps;
      for (int j = 1; j <= n - 1; ++j)
        for (int i = 1; i <= n; ++i) ps.push_back({j, i, 0});
      run.run(psi_eps, Nb, ps, [&](Elem x, const Params& p) {
        int j = p[0], i = p[1];
        Elem lhs = psi(g, n, j, E(n - 1, i, x));
        Elem rhs;
        if (i < j)
          rhs = E(n - 1, i, psi(g, n - 1, j - 1, x));
        else if (i == j || i == j + 1)
          rhs = E(n - 1, j, x);
        else
          rhs = E(n - 1, i, psi(g, n - 1, j, x));
        psi_eps.record(lhs == rhs, [&] { return "psi" + std::to_string(j) + " e" + std::to_string(i) + at(n - 1, x); });
      });
    }

    // faces of psi; x in G_n
    {
      std::vector<Params> ps;
      for (int j = 1; j <= n - 1; ++j)
        for (int i = 1; i <= n; ++i)
          for (int s = 0; s < 2; ++s) ps.push_back({j, i, s});
      run.run(psi_face, N, ps, [&](Elem x, const Params& p) {
        int j = p[0], i = p[1];
        Sign a = sg(p[2]);
        Elem lhs = F(n, i, a, psi(g, n, j, x));
        std::optional<Elem> rhs;
        if (i < j)
          rhs = psi(g, n - 1, j - 1, F(n, i, a, x));
        else if (i == j && a == Sign::minus)
          rhs = g.compose(n - 1, j, F(n, j, Sign::minus, x), F(n, j + 1, Sign::plus, x));
        else if (i == j)
          rhs = g.compose(n - 1, j, F(n, j + 1, Sign::minus, x), F(n, j, Sign::plus, x));
        else if (i == j + 1)
          rhs = E(n - 2, j, F(n - 1, j, a, F(n, j + 1, a, x)));
        else
          rhs = psi(g, n - 1, j, F(n, i, a, x));
        psi_face.record(rhs && *rhs == lhs, [&] {
          return std::string("d") + sign_char(a) + std::to_string(i) + " psi" + std::to_string(j) + at(n, x);
        });
      });
    }

    // Psi against degeneracies; x in G_{n-1}
    {
      std::vector<Params> ps;
      for (int r = 1; r <= n; ++r)
        for (int i = 1; i <= std::max(r, 1); ++i) ps.push_back({r, i, 0});
      run.run(Psi_eps, Nb, ps, [&](Elem x, const Params& p) {
        int r = p[0], i = p[1];
        Elem lhs = Psi(g, n, r, E(n - 1, i, x));
        Elem rhs;
        if (r == 1)
          rhs = E(n - 1, 1, x);
        else if (i == 1)
          rhs = E(n - 1, 1, Psi(g, n - 1, r - 1, x));
        else
          rhs = E(n - 1, i - 1, Psi(g, n - 1, r - 1, x));
        Psi_eps.record(lhs == rhs, [&] { return "Psi" + std::to_string(r) + " e" + std::to_string(i) + at(n - 1, x); });
      });
    }

    // faces of Psi and Phi; x in G_n
    {
      std::vector<Params> ps;
      for (int r = 1; r <= n; ++r)
        for (int i = r; i <= n; ++i)
          for (int s = 0; s < 2; ++s) ps.push_back({r, i, s});
      run.run(Psi_face, N, ps, [&](Elem x, const Params& p) {
        int r = p[0], i = p[1];
        Sign a = sg(p[2]);
        Elem lhs = F(n, i, a, Psi(g, n, r, x));
        Elem rhs = i > r ? Psi(g, n - 1, r, F(n, i, a, x)) : eps1_power(g, n - r, r - 1, face1_power(g, n, r, a, x));
        Psi_face.record(lhs == rhs, [&] {
          return std::string("d") + sign_char(a) + std::to_string(i) + " Psi" + std::to_string(r) + at(n, x);
        });
      });
      run.run(Phi_face, N, ps, [&](Elem x, const Params& p) {
        int m = p[0], i = p[1];
        Sign a = sg(p[2]);
        Elem lhs = F(n, i, a, Phi(g, n, m, x));
        Elem rhs = i > m ? Phi(g, n - 1, m, F(n, i, a, x)) : eps1_power(g, n - m, m - 1, face1_power(g, n, m, a, x));
        Phi_face.record(lhs == rhs, [&] {
          return std::string("d") + sign_char(a) + std::to_string(i) + " Phi" + std::to_string(m) + at(n, x);
        });
      });
    }

    // Phi against degeneracies and connections; x in G_{n-1}
    {
      std::vector<Params> ps;
      for (int m = 1; m <= n; ++m)
        for (int i = 1; i <= m; ++i) ps.push_back({m, i, 0});
      run.run(Phi_eps, Nb, ps, [&](Elem x, const Params& p) {
        int m = p[0], i = p[1];
        Elem lhs = Phi(g, n, m, E(n - 1, i, x));
        Elem rhs = E(n - 1, 1, Phi(g, n - 1, std::max(m - 1, 0), x));
        Phi_eps.record(lhs == rhs, [&] { return "Phi" + std::to_string(m) + " e" + std::to_string(i) + at(n - 1, x); });
      });
      std::vector<Params> pc;
      for (int m = 2; m <= n; ++m)
        for (int i = 1; i <= m - 1; ++i)
          for (int s = 0; s < 2; ++s) pc.push_back({m, i, s});
      run.run(Phi_conn, Nb, pc, [&](Elem x, const Params& p) {
        int m = p[0], i = p[1];
        Sign a = sg(p[2]);
        Elem lhs = Phi(g, n, m, C(n - 1, i, a, x));
        Elem rhs = E(n - 1, 1, Phi(g, n - 1, m - 1, x));
        Phi_conn.record(lhs == rhs, [&] {
          return "Phi" + std::to_string(m) + " G" + sign_char(a) + std::to_string(i) + at(n - 1, x);
        });
      });
      std::vector<Params> pp;
      for (int i = 1; i <= n - 1; ++i)
        for (int s = 0; s < 2; ++s) pp.push_back({i, s, 0});
      run.run(psi_conn, Nb, pp, [&](Elem x, const Params& p) {
        int i = p[0];
        Sign a = sg(p[1]);
        psi_conn.record(psi(g, n, i, C(n - 1, i, a, x)) == E(n - 1, i, x), [&] {
          return "psi" + std::to_string(i) + " G" + sign_char(a) + std::to_string(i) + at(n - 1, x);
        });
      });
    }

    // idempotence and images
    for (int i = 1; i <= n - 1; ++i) {
      std::vector<bool> image(N, false);
      for (Elem x = 0; x < N; ++x) {
        Elem y = psi(g, n, i, x);
        image[y] = true;
        psi_idem.record(psi(g, n, i, y) == y, [&] { return "psi" + std::to_string(i) + at(n, x); });
      }
      for (Elem x = 0; x < N; ++x) {
        bool expect = in_degeneracy_image(g, n - 1, i, F(n, i + 1, Sign::minus, x)) &&
                      in_degeneracy_image(g, n - 1, i, F(n, i + 1, Sign::plus, x));
        psi_img.record(image[x] == expect, [&] { return "psi" + std::to_string(i) + " image" + at(n, x); });
      }
    }
    {
      std::vector<bool> image(N, false);
      for (Elem x = 0; x < N; ++x) {
        Elem y = Phi(g, n, n, x);
        image[y] = true;
        Phi_idem.record(Phi(g, n, n, y) == y, [&] { return "Phi" + std::to_string(n) + at(n, x); });
      }
      std::vector<Elem> folded;
      for (Elem x = 0; x < N; ++x) {
        bool f = is_folded(g, n, x);
        Phi_img.record(image[x] == f, [&] { return "Phi" + std::to_string(n) + " image" + at(n, x); });
        if (image[x]) folded.push_back(x);
      }

      // faces of folded elements, and closure of the folded parts
      for (Elem x : folded) {
        for (int m = 1; m <= n; ++m)
          for (Sign a : kSigns) {
            Elem f = F(n, m, a, x);
            Elem core = face1_power(g, n, m, a, x);
            folded_faces.record(f == eps1_power(g, n - m, m - 1, core), [&] {
              return std::string("d") + sign_char(a) + std::to_string(m) + at(n, x);
            });
            folded_faces.record(E(n - 1, m, f) == eps1_power(g, n - m, m, core), [&] {
              return "e" + std::to_string(m) + std::string(" d") + sign_char(a) + std::to_string(m) + at(n, x);
            });
            closure.record(is_folded(g, n - 1, f), [&] {
              return std::string("d") + sign_char(a) + std::to_string(m) + " leaves the folded part" + at(n, x);
            });
            closure.record(is_folded(g, n, E(n - 1, m, F(n, m, a, x))), [&] {
              return "e" + std::to_string(m) + "d" + sign_char(a) + std::to_string(m) + " leaves" + at(n, x);
            });
          }
        if (n + 1 <= K)
          closure.record(is_folded(g, n + 1, E(n, 1, x)), [&] { return "e1 leaves the folded part" + at(n, x); });
        else
          closure.skip();
      }
      std::vector<bool> is_f(N, false);
      for (Elem x : folded) is_f[x] = true;
      for (int i = 1; i <= n; ++i)
        for (Elem x : folded)
          for (Elem y : idx.right_partners(n, i, x)) {
            if (!is_f[y]) continue;
            auto z = g.compose(n, i, x, y);
            closure.record(z && is_f[*z], [&] { return "o" + std::to_string(i) + " leaves" + at(n, x); });
          }
    }

    // commuting psi's, braid, absorption
    {
      std::vector<Params> ps;
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j) ps.push_back({i, j, 0});
      run.run(commute, N, ps, [&](Elem x, const Params& p) {
        int i = p[0], j = p[1];
        commute.record(psi(g, n, i, psi(g, n, j, x)) == psi(g, n, j, psi(g, n, i, x)),
                       [&] { return "psi" + std::to_string(i) + " psi" + std::to_string(j) + at(n, x); });
      });
      std::vector<Params> pb;
      for (int i = 2; i <= n - 1; ++i) pb.push_back({i, 0, 0});
      run.run(braid, N, pb, [&](Elem x, const Params& p) {
        int i = p[0];
        Elem lhs = psi(g, n, i, psi(g, n, i - 1, psi(g, n, i, x)));
        Elem rhs = psi(g, n, i - 1, psi(g, n, i, psi(g, n, i - 1, x)));
        braid.record(lhs == rhs, [&] { return "i=" + std::to_string(i) + at(n, x); });
      });
      std::vector<Params> pa;
      for (int m = 2; m <= n; ++m)
        for (int i = 1; i <= m - 1; ++i) pa.push_back({m, i, 0});
      run.run(absorb, N, pa, [&](Elem x, const Params& p) {
        int m = p[0], i = p[1];
        absorb.record(Phi(g, n, m, psi(g, n, i, x)) == Phi(g, n, m, x),
                      [&] { return "Phi" + std::to_string(m) + " psi" + std::to_string(i) + at(n, x); });
      });
      std::vector<Params> pr;
      for (int r = 2; r <= n; ++r)
        for (int i = 1; i <= r - 1; ++i) pr.push_back({r, i, 0});
      run.run(Psi_psi, N, pr, [&](Elem x, const Params& p) {
        int r = p[0], i = p[1];
        Elem lhs = Psi(g, n, r, psi(g, n, i, x));
        Elem rhs = i == 1 ? Psi(g, n, r, x) : psi(g, n, i - 1, Psi(g, n, r, x));
        Psi_psi.record(lhs == rhs, [&] { return "Psi" + std::to_string(r) + " psi" + std::to_string(i) + at(n, x); });
      });
    }

    // psi of composites
    {
      struct Pair {
        Elem x, y;
        int j;
      };
      std::vector<Pair> pairs;
      for (int j = 1; j <= n; ++j)
        for (Elem x = 0; x < N; ++x)
          for (Elem y : idx.right_partners(n, j, x)) pairs.push_back({x, y, j});
      run.run_list(psi_comp, pairs, [&](const Pair& pr) {
        const Elem x = pr.x, y = pr.y;
        const int j = pr.j;
        Elem z = g.comp(n, j, x, y);
        for (int i = 1; i <= n - 1; ++i) {
          Elem lhs = psi(g, n, i, z);
          std::optional<Elem> rhs;
          auto c = [&](int d, std::optional<Elem> a, std::optional<Elem> b) -> std::optional<Elem> {
            if (!a || !b) return std::nullopt;
            return g.compose(n, d, *a, *b);
          };
          if (j == i) {
            rhs = c(i, c(i + 1, psi(g, n, i, x), E(n - 1, i, F(n, i + 1, Sign::plus, y))),
                    c(i + 1, E(n - 1, i, F(n, i + 1, Sign::minus, x)), psi(g, n, i, y)));
          } else if (j == i + 1) {
            rhs = c(i, c(i + 1, E(n - 1, i, F(n, i, Sign::minus, x)), psi(g, n, i, y)),
                    c(i + 1, psi(g, n, i, x), E(n - 1, i, F(n, i, Sign::plus, y))));
          } else {
            rhs = g.compose(n, j, psi(g, n, i, x), psi(g, n, i, y));
          }
          psi_comp.record(rhs && *rhs == lhs, [&] {
            return "psi" + std::to_string(i) + " of o" + std::to_string(j) + " on " + g.describe(n, x) + " " +
                   g.describe(n, y);
          });
        }
      });
    }
  }
  return rep;
}

OrderingCount ordering_count(const CubicalCategory& g, int m) {
  OrderingCount out;
  // choices l(r) in 1..r for r = 1..m
  std::vector<int> l(static_cast<std::size_t>(m), 1);
  std::set<std::vector<Elem>> seen;
  while (true) {
    ++out.composites;
    std::vector<Elem> values;
    for (Elem x = 0; x < g.size(m); ++x) {
      Elem v = x;
      for (int r = m; r >= 1; --r) v = Psi_from(g, m, r, l[static_cast<std::size_t>(r - 1)], v);
      values.push_back(v);
    }
    seen.insert(std::move(values));
    int r = m;
    while (r >= 1 && l[static_cast<std::size_t>(r - 1)] == r) l[static_cast<std::size_t>(--r)] = 1;
    if (r < 1) break;
    ++l[static_cast<std::size_t>(r - 1)];
  }
  out.distinct = seen.size();
  return out;
}

}  // namespace omegacube
