#include "omegacube/gamma.hpp"

#include <stdexcept>

#include "omegacube/folding.hpp"

namespace omegacube {

GammaCategory::GammaCategory(const CubicalCategory& g) : g_(&g) {
  const int K = g.kmax();
  index_.resize(static_cast<std::size_t>(K) + 1);
  for (int n = 0; n <= K; ++n)
    for (Elem x : folded_part(g, n)) {
      if (n > 0 && in_eps1_power_image(g, n, 1, x)) continue;
      index_[static_cast<std::size_t>(n)][x] = static_cast<Elem>(reps_.size());
      reps_.push_back({n, x});
    }
  faces_.resize(static_cast<std::size_t>(K));
  for (int p = 0; p < K; ++p)
    for (Sign a : kSigns) {
      auto& col = faces_[static_cast<std::size_t>(p)][sign_index(a)];
      col.reserve(reps_.size());
      for (const GammaRep& r : reps_) {
        if (p >= r.grade) {
          col.push_back(of(r.grade, r.elem));
          continue;
        }
        col.push_back(of(p, face1_power(g, r.grade, r.grade - p, a, r.elem)));
      }
    }
}

GammaRep GammaCategory::canonical(int n, Elem x) const {
  while (n > 0 && in_eps1_power_image(*g_, n, 1, x)) {
    x = g_->face(n, 1, Sign::minus, x);
    --n;
  }
  return {n, x};
}

Elem GammaCategory::of(int n, Elem x) const {
  GammaRep r = canonical(n, x);
  const auto& m = index_.at(static_cast<std::size_t>(r.grade));
  auto it = m.find(r.elem);
  if (it == m.end()) throw std::invalid_argument("element is not folded: " + g_->describe(n, x));
  return it->second;
}

Elem GammaCategory::lift(Elem x, int n) const {
  const GammaRep& r = reps_.at(x);
  if (n < r.grade) throw std::invalid_argument("cannot lower a representative");
  return eps1_power(*g_, r.grade, n - r.grade, r.elem);
}

Elem GammaCategory::face(Sign s, int p, Elem x) const {
  if (p >= top_level()) return x;
  return faces_[static_cast<std::size_t>(p)][sign_index(s)].at(x);
}

std::optional<Elem> GammaCategory::compose(Elem x, Elem y, int p) const {
  if (p >= top_level()) return x == y ? std::optional<Elem>(x) : std::nullopt;
  if (face(Sign::plus, p, x) != face(Sign::minus, p, y)) return std::nullopt;
  const std::uint64_t key = (std::uint64_t{x} << 36) | (std::uint64_t{y} << 8) | static_cast<std::uint64_t>(p);
  if (auto it = compositions_.find(key); it != compositions_.end()) return it->second;
  const int level = std::max({dim(x), dim(y), p + 1});
  std::optional<Elem> out;
  if (auto z = g_->compose(level, level - p, lift(x, level), lift(y, level))) out = of(level, *z);
  compositions_.emplace(key, out);
  return out;
}

std::string GammaCategory::describe(Elem x) const {
  const GammaRep& r = reps_.at(x);
  return g_->describe(r.grade, r.elem);
}

nlohmann::json GammaCategory::to_json() const {
  nlohmann::json members = nlohmann::json::array();
  for (Elem x = 0; x < size(); ++x) {
    nlohmann::json minus = nlohmann::json::array(), plus = nlohmann::json::array();
    for (int p = 0; p < dim(x); ++p) {
      minus.push_back(face(Sign::minus, p, x));
      plus.push_back(face(Sign::plus, p, x));
    }
    members.push_back({{"grade", reps_[x].grade}, {"element", reps_[x].elem}, {"dim", dim(x)},
                       {"faces", {{"-", minus}, {"+", plus}}}});
  }
  nlohmann::json comps = nlohmann::json::array();
  for (Elem x = 0; x < size(); ++x)
    for (Elem y = 0; y < size(); ++y)
      for (int p = 0; p < std::max(dim(x), dim(y)); ++p)
        if (auto z = compose(x, y, p)) comps.push_back({x, y, p, *z});
  return {{"shape", "gamma"}, {"members", members}, {"compositions", comps}};
}

Report check_gamma_structure(const CubicalCategory& g) {
  Report rep;
  rep.subject = "gamma structure";
  auto& inj = rep.add("e1-injective");
  auto& faces = rep.add("e1-faces");
  auto& comps = rep.add("e1-composites");
  auto& ident = rep.add("identification");
  auto& image = rep.add("folded-part-is-Phi-image");
  const int K = g.kmax();
  CubicalIndex idx(g);
  for (int n = 0; n <= K; ++n) {
    std::vector<Elem> folded = folded_part(g, n);
    {
      std::vector<bool> in_image(g.size(n), false), is_f(g.size(n), false);
      for (Elem x = 0; x < g.size(n); ++x) in_image[Phi(g, n, n, x)] = true;
      for (Elem x : folded) is_f[x] = true;
      for (Elem x = 0; x < g.size(n); ++x)
        image.record(in_image[x] == is_f[x], [&] { return g.describe(n, x); });
    }
    if (n + 1 > K) {
      inj.skip(folded.size());
      faces.skip(folded.size());
    } else {
      std::unordered_map<Elem, Elem> seen;
      for (Elem x : folded) {
        Elem e = g.degeneracy(n, 1, x);
        auto [it, fresh] = seen.emplace(e, x);
        inj.record(fresh, [&] { return g.describe(n, x) + " and " + g.describe(n, it->second); });
        for (int p = 0; p < n; ++p)
          for (Sign a : kSigns) {
            Elem lhs = g.degeneracy(n, 1, eps1_power(g, p, n - p, face1_power(g, n, n - p, a, x)));
            Elem rhs = eps1_power(g, p, n + 1 - p, face1_power(g, n + 1, n + 1 - p, a, e));
            faces.record(lhs == rhs, [&] { return "p=" + std::to_string(p) + " " + g.describe(n, x); });
          }
      }
      std::vector<bool> is_f(g.size(n), false);
      for (Elem x : folded) is_f[x] = true;
      for (int j = 1; j <= n; ++j)
        for (Elem x : folded)
          for (Elem y : idx.right_partners(n, j, x)) {
            if (!is_f[y]) continue;
            Elem z = g.comp(n, j, x, y);
            auto w = g.compose(n + 1, j + 1, g.degeneracy(n, 1, x), g.degeneracy(n, 1, y));
            comps.record(w && *w == g.degeneracy(n, 1, z), [&] {
              return "o" + std::to_string(j) + " " + g.describe(n, x) + " " + g.describe(n, y);
            });
          }
    }
    // the least k with d-_k x = d+_k x = x is the grade of the lowest
    // representative, reached by the e_1 d-_1 retraction
    for (Elem x : folded) {
      int k = 0;
      while (k < n && (eps1_power(g, k, n - k, face1_power(g, n, n - k, Sign::minus, x)) != x ||
                       eps1_power(g, k, n - k, face1_power(g, n, n - k, Sign::plus, x)) != x))
        ++k;
      int low = n;
      Elem y = x;
      while (low > 0 && in_eps1_power_image(g, low, 1, y)) y = g.face(low--, 1, Sign::minus, y);
      ident.record(k == low && eps1_power(g, low, n - low, y) == x, [&] { return g.describe(n, x); });
    }
  }
  return rep;
}

}  // namespace omegacube
