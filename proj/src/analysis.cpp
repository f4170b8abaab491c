#include "omegacube/analysis.hpp"

#include <functional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "omegacube/folding.hpp"

namespace omegacube {

bool is_thin(const CubicalCategory& g, int n, Elem x) {
  if (n < 1) throw std::invalid_argument("thinness needs grade at least 1");
  return in_eps1_power_image(g, n, 1, Phi(g, n, n, x));
}

bool is_thin_by_value(const NerveCategory& g, int n, Elem x) {
  return g.target().dim(top_value(g.hom(n, x))) < n;
}

Elem ThinWitness::evaluate(const CubicalCategory& g) const {
  std::vector<Elem> v(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const ThinTerm& t = nodes[k];
    switch (t.kind) {
      case ThinTerm::Kind::degeneracy: v[k] = g.degeneracy(t.grade - 1, t.i, t.arg); break;
      case ThinTerm::Kind::connection: v[k] = g.connection(t.grade - 1, t.i, t.sign, t.arg); break;
      case ThinTerm::Kind::compose:
        v[k] = g.comp(t.grade, t.i, v[static_cast<std::size_t>(t.left)], v[static_cast<std::size_t>(t.right)]);
        break;
    }
  }
  return v.at(static_cast<std::size_t>(root));
}

std::size_t ThinWitness::leaves() const {
  std::size_t n = 0;
  for (const auto& t : nodes) n += t.kind != ThinTerm::Kind::compose;
  return n;
}

std::string ThinWitness::str(const CubicalCategory& g) const {
  std::function<std::string(int)> go = [&](int k) -> std::string {
    const ThinTerm& t = nodes.at(static_cast<std::size_t>(k));
    switch (t.kind) {
      case ThinTerm::Kind::degeneracy: return "e" + std::to_string(t.i) + " " + g.describe(t.grade - 1, t.arg);
      case ThinTerm::Kind::connection:
        return std::string("G") + sign_char(t.sign) + std::to_string(t.i) + " " + g.describe(t.grade - 1, t.arg);
      case ThinTerm::Kind::compose:
        return "(" + go(t.left) + " o" + std::to_string(t.i) + " " + go(t.right) + ")";
    }
    return "";
  };
  return go(root);
}

nlohmann::json ThinWitness::to_json(const CubicalCategory& g) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : nodes) {
    switch (t.kind) {
      case ThinTerm::Kind::degeneracy: out.push_back({{"e", t.i}, {"arg", g.describe(t.grade - 1, t.arg)}}); break;
      case ThinTerm::Kind::connection:
        out.push_back({{"G", t.i}, {"sign", std::string(1, sign_char(t.sign))}, {"arg", g.describe(t.grade - 1, t.arg)}});
        break;
      case ThinTerm::Kind::compose: out.push_back({{"o", t.i}, {"left", t.left}, {"right", t.right}}); break;
    }
  }
  return {{"nodes", out}, {"root", root}};
}

namespace {

struct Builder {
  ThinWitness w;
  int eps(int n, int i, Elem a) {
    w.nodes.push_back({ThinTerm::Kind::degeneracy, n, i, Sign::minus, a});
    return static_cast<int>(w.nodes.size()) - 1;
  }
  int conn(int n, int i, Sign s, Elem a) {
    w.nodes.push_back({ThinTerm::Kind::connection, n, i, s, a});
    return static_cast<int>(w.nodes.size()) - 1;
  }
  int comp(int n, int i, int l, int r) {
    w.nodes.push_back({ThinTerm::Kind::compose, n, i, Sign::minus, 0, l, r});
    return static_cast<int>(w.nodes.size()) - 1;
  }
};

std::optional<ThinWitness> search(const CubicalCategory& g, int n, Elem x, std::size_t budget) {
  std::unordered_map<Elem, ThinWitness> found;
  std::vector<Elem> frontier;
  auto leaf = [&](ThinTerm t, Elem v) {
    if (found.count(v)) return;
    ThinWitness w;
    w.nodes.push_back(t);
    w.root = 0;
    found.emplace(v, std::move(w));
    frontier.push_back(v);
  };
  for (Elem a = 0; a < g.size(n - 1); ++a) {
    for (int i = 1; i <= n; ++i) leaf({ThinTerm::Kind::degeneracy, n, i, Sign::minus, a}, g.degeneracy(n - 1, i, a));
    for (int i = 1; i <= n - 1; ++i)
      for (Sign s : kSigns) leaf({ThinTerm::Kind::connection, n, i, s, a}, g.connection(n - 1, i, s, a));
  }
  CubicalIndex idx(g);
  std::vector<Elem> known = frontier;
  while (!frontier.empty()) {
    if (auto it = found.find(x); it != found.end()) return it->second;
    if (found.size() > budget) return std::nullopt;
    std::vector<Elem> next;
    std::vector<bool> in_frontier(g.size(n), false);
    for (Elem f : frontier) in_frontier[f] = true;
    for (int i = 1; i <= n; ++i)
      for (Elem a : known)
        for (Elem b : idx.right_partners(n, i, a)) {
          if (!found.count(b) || (!in_frontier[a] && !in_frontier[b])) continue;
          Elem c = g.comp(n, i, a, b);
          if (found.count(c)) continue;
          ThinWitness w;
          const ThinWitness& l = found.at(a);
          const ThinWitness& r = found.at(b);
          w.nodes = l.nodes;
          const int off = static_cast<int>(w.nodes.size());
          for (ThinTerm t : r.nodes) {
            if (t.kind == ThinTerm::Kind::compose) {
              t.left += off;
              t.right += off;
            }
            w.nodes.push_back(t);
          }
          w.nodes.push_back({ThinTerm::Kind::compose, n, i, Sign::minus, 0, l.root, r.root + off});
          w.root = static_cast<int>(w.nodes.size()) - 1;
          found.emplace(c, std::move(w));
          next.push_back(c);
          if (c == x) return found.at(c);
          if (found.size() > budget) return std::nullopt;
        }
    known.insert(known.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  if (auto it = found.find(x); it != found.end()) return it->second;
  return std::nullopt;
}

}  // namespace

std::optional<ThinWitness> thin_decompose(const CubicalCategory& g, int n, Elem x, const ThinOptions& opts) {
  if (!is_thin(g, n, x)) throw std::invalid_argument("not thin");
  if (!opts.constructive) return search(g, n, x, opts.budget);
  // x is rebuilt from its boundary and Phi_n x = e_1 w by the theta chain;
  // every factor of theta other than y is a degeneracy or a connection
  Builder b;
  const Elem y = Phi(g, n, n, x);
  int term = b.eps(n, 1, g.face(n, 1, Sign::minus, y));
  std::vector<int> seq;
  {
    auto atoms = FoldingExpr::phi(n).atoms;
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) seq.push_back(it->i);
  }
  std::vector<Shell> shells{shell_boundary(g, n, x)};
  for (int j : seq) shells.push_back(shell_psi(g, shells.back(), j));
  for (std::size_t k = seq.size(); k-- > 0;) {
    const Shell& z = shells[k];
    const int j = seq[k];
    int left = b.comp(n, j + 1, b.eps(n, j, z.at(j, Sign::minus)), b.conn(n, j, Sign::plus, z.at(j + 1, Sign::plus)));
    int right = b.comp(n, j + 1, b.conn(n, j, Sign::minus, z.at(j + 1, Sign::minus)), b.eps(n, j, z.at(j, Sign::plus)));
    term = b.comp(n, j, b.comp(n, j, left, term), right);
  }
  b.w.root = term;
  if (b.w.evaluate(g) != x) throw std::logic_error("constructive witness does not evaluate to the element");
  return b.w;
}

bool is_commutative_shell(const CubicalCategory& g, const Shell& z) {
  if (z.n < 1) throw std::invalid_argument("shells start in grade 1");
  Shell f = shell_fold(g, z);
  return f.at(1, Sign::minus) == f.at(1, Sign::plus);
}

Census census(const CubicalCategory& g, int n) {
  Census c{n};
  for (Elem x = 0; x < g.size(n); ++x) {
    ++c.elements;
    c.thin += is_thin(g, n, x);
    c.commutative += is_commutative_shell(g, shell_boundary(g, n, x));
  }
  return c;
}

Report analysis_report(const NerveCategory& g, const AnalysisOptions& opts) {
  Report rep;
  rep.subject = "thin elements and shells";
  auto& agree = rep.add("thin-agrees-with-value");
  auto& cons = rep.add("thin-constructive-witness");
  auto& found = rep.add("thin-search-witness");
  auto& comp = rep.add("degenerate-composites-thin");
  auto& shells = rep.add("commutative-shell");
  const int top = std::min(opts.max_grade, g.kmax());
  CubeOps ops(g.target());
  for (int n = 1; n <= top; ++n) {
    const MCategory* cube = &m_of(cube_shape(n));
    const Elem lower = cube->face(Sign::minus, n - 1, cube->whole());
    const Elem upper = cube->face(Sign::plus, n - 1, cube->whole());
    for (Elem x = 0; x < g.size(n); ++x) {
      bool thin = is_thin(g, n, x);
      agree.record(thin == is_thin_by_value(g, n, x), [&] { return g.describe(n, x); });
      if (thin) {
        auto w = thin_decompose(g, n, x);
        cons.record(w && w->evaluate(g) == x, [&] { return g.describe(n, x); });
        ThinOptions so;
        so.constructive = false;
        so.budget = opts.search_budget;
        auto s = thin_decompose(g, n, x, so);
        found.record(s && s->evaluate(g) == x, [&] { return g.describe(n, x) + " not reached"; });
      }
      const Hom& h = g.hom(n, x);
      bool halves = ops.value(h, lower) == ops.value(h, upper);
      shells.record(is_commutative_shell(g, shell_boundary(g, n, x)) == halves, [&] { return g.describe(n, x); });
    }
  }

  // random composites of degenerate generators in the top examined grade
  if (top >= 1) {
    const int n = top;
    std::vector<Elem> pool;
    for (Elem a = 0; a < g.size(n - 1); ++a) {
      for (int i = 1; i <= n; ++i) pool.push_back(g.degeneracy(n - 1, i, a));
      for (int i = 1; i <= n - 1; ++i)
        for (Sign s : kSigns) pool.push_back(g.connection(n - 1, i, s, a));
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> dir(1, n);
    std::size_t made = 0, attempts = 0;
    while (made < opts.random_composites && attempts < 100 * opts.random_composites) {
      ++attempts;
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      Elem a = pool[pick(rng)];
      int i = dir(rng);
      std::vector<Elem> partners;
      for (Elem b : pool)
        if (g.composable(n, i, a, b)) partners.push_back(b);
      if (partners.empty()) continue;
      std::uniform_int_distribution<std::size_t> pp(0, partners.size() - 1);
      Elem c = g.comp(n, i, a, partners[pp(rng)]);
      comp.record(is_thin(g, n, c), [&] { return g.describe(n, c); });
      pool.push_back(c);
      ++made;
    }
  }
  return rep;
}

}  // namespace omegacube
