#include "omegacube/cubical.hpp"

#include <random>
#include <stdexcept>

namespace omegacube {

namespace {

std::string op(const char* name, int i, Sign a) { return std::string(name) + sign_char(a) + std::to_string(i); }
std::string op(const char* name, int i) { return std::string(name) + std::to_string(i); }

}  // namespace

Elem compose_matrix(const CubicalCategory& g, const Grid& grid) {
  const auto& m = grid.cells;
  if (m.empty() || m[0].empty()) throw std::invalid_argument("empty grid");
  // rows first
  std::optional<Elem> by_rows;
  for (const auto& row : m) {
    std::optional<Elem> r = row[0];
    for (std::size_t k = 1; r && k < row.size(); ++k) r = g.compose(grid.n, grid.row_dir, *r, row[k]);
    if (!r) throw std::invalid_argument("grid row is not composable");
    by_rows = by_rows ? g.compose(grid.n, grid.col_dir, *by_rows, *r) : r;
    if (!by_rows) throw std::invalid_argument("grid rows are not composable");
  }
  // columns first
  std::optional<Elem> by_cols;
  for (std::size_t k = 0; k < m[0].size(); ++k) {
    std::optional<Elem> c = m[0][k];
    for (std::size_t r = 1; c && r < m.size(); ++r) c = g.compose(grid.n, grid.col_dir, *c, m[r].at(k));
    if (!c) throw std::invalid_argument("grid column is not composable");
    by_cols = by_cols ? g.compose(grid.n, grid.row_dir, *by_cols, *c) : c;
    if (!by_cols) throw std::invalid_argument("grid columns are not composable");
  }
  if (*by_rows != *by_cols) throw std::logic_error("grid composites disagree");
  return *by_rows;
}

Report check_cubical_axioms(const CubicalCategory& g, const CubicalCheckOptions& opts) {
  Report rep;
  rep.subject = "cubical omega-category axioms";
  const int K = g.kmax();
  const int top = opts.max_grade < 0 ? K : std::min(opts.max_grade, K);
  CubicalIndex idx(g);
  std::mt19937_64 rng(opts.seed);

  auto F = [&](int n, int i, Sign a, Elem x) { return g.face(n, i, a, x); };
  auto E = [&](int n, int i, Elem x) { return g.degeneracy(n, i, x); };
  auto C = [&](int n, int i, Sign a, Elem x) { return g.connection(n, i, a, x); };
  auto eq = [](std::optional<Elem> a, std::optional<Elem> b) { return a && b && *a == *b; };
  auto who = [&](int n, Elem x) { return g.describe(n, x); };

  auto& ff = rep.add("face-face");
  auto& dd = rep.add("degeneracy-degeneracy");
  auto& fd = rep.add("face-degeneracy");
  auto& cc = rep.add("connection-connection");
  auto& cd = rep.add("connection-degeneracy");
  auto& fc = rep.add("face-connection");
  auto& fcomp = rep.add("face-composite");
  auto& inter = rep.add("interchange");
  auto& assoc = rep.add("associativity");
  auto& unit = rep.add("units");
  auto& dcomp = rep.add("degeneracy-composite");
  auto& ccomp = rep.add("connection-composite");
  auto& trans = rep.add("connection-transport");
  auto& cinv = rep.add("connection-inverse");

  for (int n = 0; n <= top; ++n) {
    const std::size_t N = g.size(n);
    const bool up1 = n + 1 <= K;
    const bool up2 = n + 2 <= K;
    for (Elem x = 0; x < N; ++x) {
      // faces of faces
      for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
          for (Sign a : kSigns)
            for (Sign b : kSigns)
              ff.record(F(n - 1, i, a, F(n, j, b, x)) == F(n - 1, j - 1, b, F(n, i, a, x)),
                        [&] { return op("d", i, a) + op("d", j, b) + " on " + who(n, x); });

      // degeneracies of degeneracies
      for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i <= j; ++i) {
          if (!up2) {
            dd.skip();
            continue;
          }
          dd.record(E(n + 1, i, E(n, j, x)) == E(n + 1, j + 1, E(n, i, x)),
                    [&] { return op("e", i) + op("e", j) + " on " + who(n, x); });
        }

      // faces of degeneracies
      for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i <= n + 1; ++i)
          for (Sign a : kSigns) {
            if (!up1) {
              fd.skip();
              continue;
            }
            Elem lhs = F(n + 1, i, a, E(n, j, x));
            Elem rhs = i < j ? E(n - 1, j - 1, F(n, i, a, x)) : i > j ? E(n - 1, j, F(n, i - 1, a, x)) : x;
            fd.record(lhs == rhs, [&] { return op("d", i, a) + op("e", j) + " on " + who(n, x); });
          }

      // connections of connections, including the i = j case with equal signs
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i)
          for (Sign a : kSigns)
            for (Sign b : kSigns) {
              if (i == j && a != b) continue;
              if (!up2) {
                cc.skip();
                continue;
              }
              Elem lhs = C(n + 1, i, a, C(n, j, b, x));
              Elem rhs = C(n + 1, j + 1, b, C(n, i, a, x));
              cc.record(lhs == rhs, [&] { return op("G", i, a) + op("G", j, b) + " on " + who(n, x); });
            }

      // connections of degeneracies
      for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i <= n + 1; ++i)
          for (Sign a : kSigns) {
            if (!up2) {
              cd.skip();
              continue;
            }
            Elem lhs = C(n + 1, i, a, E(n, j, x));
            Elem rhs = i < j   ? E(n + 1, j + 1, C(n, i, a, x))
                       : i > j ? E(n + 1, j, C(n, i - 1, a, x))
                               : E(n + 1, j + 1, E(n, j, x));
            cd.record(lhs == rhs, [&] { return op("G", i, a) + op("e", j) + " on " + who(n, x); });
          }

      // faces of connections
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n + 1; ++i)
          for (Sign a : kSigns)
            for (Sign b : kSigns) {
              if (!up1) {
                fc.skip();
                continue;
              }
              Elem lhs = F(n + 1, i, a, C(n, j, b, x));
              Elem rhs;
              if (i < j)
                rhs = C(n - 1, j - 1, b, F(n, i, a, x));
              else if (i > j + 1)
                rhs = C(n - 1, j, b, F(n, i - 1, a, x));
              else if (a == b)
                rhs = x;
              else
                rhs = E(n - 1, j, F(n, j, a, x));
              fc.record(lhs == rhs, [&] { return op("d", i, a) + op("G", j, b) + " on " + who(n, x); });
            }

      // connections are inverse to each other under composition
      for (int i = 1; i <= n; ++i) {
        if (!up1) {
          cinv.skip(2);
          continue;
        }
        Elem p = C(n, i, Sign::plus, x), m = C(n, i, Sign::minus, x);
        cinv.record(eq(g.compose(n + 1, i, p, m), E(n, i + 1, x)),
                    [&] { return op("G+", i) + " o" + std::to_string(i) + " " + op("G-", i) + " on " + who(n, x); });
        cinv.record(eq(g.compose(n + 1, i + 1, p, m), E(n, i, x)), [&] {
          return op("G+", i) + " o" + std::to_string(i + 1) + " " + op("G-", i) + " on " + who(n, x);
        });
      }

      // units of each o_j
      for (int j = 1; j <= n; ++j) {
        Elem l = E(n - 1, j, F(n, j, Sign::minus, x));
        Elem r = E(n - 1, j, F(n, j, Sign::plus, x));
        unit.record(eq(g.compose(n, j, l, x), x), [&] { return "left unit o" + std::to_string(j) + " " + who(n, x); });
        unit.record(eq(g.compose(n, j, x, r), x), [&] { return "right unit o" + std::to_string(j) + " " + who(n, x); });
      }
    }

    // laws involving composites
    for (int j = 1; j <= n; ++j)
      for (Elem a = 0; a < N; ++a)
        for (Elem b : idx.right_partners(n, j, a)) {
          auto z = g.compose(n, j, a, b);
          auto pair = [&] { return who(n, a) + " o" + std::to_string(j) + " " + who(n, b); };
          fcomp.record(z.has_value(), [&] { return "undefined " + pair(); });
          if (!z) continue;
          fcomp.record(F(n, j, Sign::minus, *z) == F(n, j, Sign::minus, a), [&] { return "source of " + pair(); });
          fcomp.record(F(n, j, Sign::plus, *z) == F(n, j, Sign::plus, b), [&] { return "target of " + pair(); });
          for (int i = 1; i <= n; ++i) {
            if (i == j) continue;
            for (Sign s : kSigns) {
              int dir = i < j ? j - 1 : j;
              auto rhs = g.compose(n - 1, dir, F(n, i, s, a), F(n, i, s, b));
              fcomp.record(eq(F(n, i, s, *z), rhs), [&] { return op("d", i, s) + " of " + pair(); });
            }
          }

          // associativity
          for (Elem c : idx.right_partners(n, j, b)) {
            auto bc = g.compose(n, j, b, c);
            std::optional<Elem> l = g.compose(n, j, *z, c);
            std::optional<Elem> r;
            if (bc) r = g.compose(n, j, a, *bc);
            assoc.record(eq(l, r), [&] { return pair() + " o" + std::to_string(j) + " " + who(n, c); });
          }

          // degeneracies of composites
          for (int i = 1; i <= n + 1; ++i) {
            if (!up1) {
              dcomp.skip();
              continue;
            }
            int dir = i <= j ? j + 1 : j;
            dcomp.record(eq(E(n, i, *z), g.compose(n + 1, dir, E(n, i, a), E(n, i, b))),
                         [&] { return op("e", i) + " of " + pair(); });
          }

          // connections of composites
          for (int i = 1; i <= n; ++i)
            for (Sign s : kSigns) {
              if (!up1) {
                (i == j ? trans : ccomp).skip();
                continue;
              }
              if (i != j) {
                int dir = i < j ? j + 1 : j;
                ccomp.record(eq(C(n, i, s, *z), g.compose(n + 1, dir, C(n, i, s, a), C(n, i, s, b))),
                             [&] { return op("G", i, s) + " of " + pair(); });
                continue;
              }
              Grid grid{n + 1, j, j + 1, {}};
              if (s == Sign::plus)
                grid.cells = {{C(n, j, Sign::plus, a), E(n, j, a)}, {E(n, j + 1, a), C(n, j, Sign::plus, b)}};
              else
                grid.cells = {{C(n, j, Sign::minus, a), E(n, j + 1, b)}, {E(n, j, b), C(n, j, Sign::minus, b)}};
              bool ok;
              try {
                ok = compose_matrix(g, grid) == C(n, j, s, *z);
              } catch (const std::exception&) {
                ok = false;
              }
              trans.record(ok, [&] { return op("G", j, s) + " of " + pair(); });
            }
        }

    // interchange, i < j (the other order is the same law transposed)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        auto each = [&](auto&& fn) {
          for (Elem a = 0; a < N; ++a)
            for (Elem b : idx.right_partners(n, i, a)) {
              Elem bt = F(n, j, Sign::plus, b);
              for (Elem c : idx.right_partners(n, j, a))
                for (Elem d : idx.right_partners(n, i, c))
                  if (F(n, j, Sign::minus, d) == bt) fn(a, b, c, d);
            }
        };
        auto law = [&](Elem a, Elem b, Elem c, Elem d) {
          std::optional<Elem> lhs, rhs;
          auto ab = g.compose(n, i, a, b), cd2 = g.compose(n, i, c, d);
          auto ac = g.compose(n, j, a, c), bd = g.compose(n, j, b, d);
          if (ab && cd2) lhs = g.compose(n, j, *ab, *cd2);
          if (ac && bd) rhs = g.compose(n, i, *ac, *bd);
          inter.record(eq(lhs, rhs), [&] {
            return "o" + std::to_string(i) + "/o" + std::to_string(j) + " on " + who(n, a) + " " + who(n, b) + " " +
                   who(n, c) + " " + who(n, d);
          });
        };
        std::size_t total = 0;
        each([&](Elem, Elem, Elem, Elem) { ++total; });
        if (total <= opts.instance_cap) {
          each(law);
        } else {
          inter.mode = "sampled";
          std::bernoulli_distribution keep(static_cast<double>(opts.sample_size) / static_cast<double>(total));
          each([&](Elem a, Elem b, Elem c, Elem d) {
            if (keep(rng)) law(a, b, c, d);
          });
        }
      }
  }
  return rep;
}

}  // namespace omegacube
