#include "omegacube/omega_category.hpp"

#include <random>

namespace omegacube {

ComposableIndex::ComposableIndex(const OmegaView& c) : c_(&c), levels_(c.top_level() + 1) {
  by_source_.assign(static_cast<std::size_t>(levels_), std::vector<std::vector<Elem>>(c.size()));
  for (int p = 0; p < levels_; ++p)
    for (Elem y = 0; y < c.size(); ++y) by_source_[p][c.face(Sign::minus, p, y)].push_back(y);
}

const std::vector<Elem>& ComposableIndex::right_partners(Elem x, int p) const {
  if (p >= levels_) p = levels_ - 1;
  return by_source_[p][c_->face(Sign::plus, p, x)];
}

namespace {

std::string lvl(int p) { return std::to_string(p); }

}  // namespace

Report check_omega_axioms(const OmegaView& c, const OmegaCheckOptions& opts) {
  Report rep;
  rep.subject = "omega-category axioms";
  const std::size_t n = c.size();
  const int top = c.top_level();
  const int levels = top + 1;
  auto d = [&](Sign s, int p, Elem x) { return p > top ? x : c.face(s, p, x); };
  auto name = [&](Elem x) { return c.describe(x); };
  ComposableIndex idx(c);
  std::mt19937_64 rng(opts.seed);

  // (i) domain of composition
  {
    auto& r = rep.add("composition-domain");
    for (int p = 0; p < levels; ++p)
      for (Elem x = 0; x < n; ++x)
        for (Elem y : idx.right_partners(x, p)) {
          bool ok = c.compose(x, y, p).has_value();
          r.record(ok, [&] { return name(x) + " #" + lvl(p) + " " + name(y) + " undefined though faces match"; });
        }
    const std::size_t all_pairs = n * n * static_cast<std::size_t>(levels);
    auto converse = [&](Elem x, Elem y, int p) {
      bool defined = c.compose(x, y, p).has_value();
      bool matches = d(Sign::plus, p, x) == d(Sign::minus, p, y);
      r.record(!defined || matches,
               [&] { return name(x) + " #" + lvl(p) + " " + name(y) + " defined though faces differ"; });
    };
    if (all_pairs <= opts.pair_scan_limit) {
      for (int p = 0; p < levels; ++p)
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y) converse(x, y, p);
    } else {
      r.mode = "sampled";
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
      std::uniform_int_distribution<int> pl(0, top);
      for (std::size_t k = 0; k < opts.sample_size; ++k) converse(pick(rng), pick(rng), pl(rng));
    }
  }

  // (ii) faces of faces
  {
    auto& r = rep.add("face-of-face");
    for (Elem x = 0; x < n; ++x)
      for (int p = 0; p < levels; ++p)
        for (Sign a : kSigns)
          for (int q = 0; q < levels; ++q)
            for (Sign b : kSigns) {
              Elem lhs = d(b, q, d(a, p, x));
              Elem rhs = q < p ? d(b, q, x) : d(a, p, x);
              r.record(lhs == rhs, [&] {
                return "d" + std::string(1, sign_char(b)) + lvl(q) + " d" + std::string(1, sign_char(a)) + lvl(p) +
                       " " + name(x);
              });
            }
  }

  // (iii) faces of composites
  {
    auto& r = rep.add("face-of-composite");
    for (int p = 0; p < levels; ++p)
      for (Elem x = 0; x < n; ++x)
        for (Elem y : idx.right_partners(x, p)) {
          auto z = c.compose(x, y, p);
          if (!z) continue;
          auto tag = [&](const std::string& what) {
            return [&, what] { return what + " on " + name(x) + " #" + lvl(p) + " " + name(y); };
          };
          r.record(d(Sign::minus, p, *z) == d(Sign::minus, p, x), tag("source"));
          r.record(d(Sign::plus, p, *z) == d(Sign::plus, p, y), tag("target"));
          for (int q = 0; q < levels; ++q) {
            if (q == p) continue;
            for (Sign b : kSigns) {
              auto fz = c.compose(d(b, q, x), d(b, q, y), p);
              r.record(fz && *fz == d(b, q, *z), tag("d" + std::string(1, sign_char(b)) + lvl(q)));
            }
          }
        }
  }

  // (iv) units
  {
    auto& r = rep.add("units");
    for (Elem x = 0; x < n; ++x)
      for (int p = 0; p < levels; ++p) {
        auto l = c.compose(d(Sign::minus, p, x), x, p);
        auto rr = c.compose(x, d(Sign::plus, p, x), p);
        r.record(l && *l == x, [&] { return "left unit at " + lvl(p) + " on " + name(x); });
        r.record(rr && *rr == x, [&] { return "right unit at " + lvl(p) + " on " + name(x); });
      }
  }

  // (v) associativity
  {
    auto& r = rep.add("associativity");
    std::size_t total = 0;
    for (int p = 0; p < levels; ++p)
      for (Elem x = 0; x < n; ++x)
        for (Elem y : idx.right_partners(x, p)) total += idx.right_partners(y, p).size();
    auto check = [&](Elem x, Elem y, Elem z, int p) {
      auto xy = c.compose(x, y, p);
      auto yz = c.compose(y, z, p);
      std::optional<Elem> l, rr;
      if (xy) l = c.compose(*xy, z, p);
      if (yz) rr = c.compose(x, *yz, p);
      r.record(l && rr && *l == *rr,
               [&] { return "(" + name(x) + " " + name(y) + ") " + name(z) + " at " + lvl(p); });
    };
    if (total <= opts.instance_cap) {
      for (int p = 0; p < levels; ++p)
        for (Elem x = 0; x < n; ++x)
          for (Elem y : idx.right_partners(x, p))
            for (Elem z : idx.right_partners(y, p)) check(x, y, z, p);
    } else {
      r.mode = "sampled";
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
      std::uniform_int_distribution<int> pl(0, top);
      for (std::size_t k = 0; k < opts.sample_size; ++k) {
        int p = pl(rng);
        Elem x = pick(rng);
        const auto& ys = idx.right_partners(x, p);
        Elem y = ys[std::uniform_int_distribution<std::size_t>(0, ys.size() - 1)(rng)];
        const auto& zs = idx.right_partners(y, p);
        Elem z = zs[std::uniform_int_distribution<std::size_t>(0, zs.size() - 1)(rng)];
        check(x, y, z, p);
      }
    }
  }

  // (vi) interchange, for p < q (the case p > q is the same law transposed)
  {
    auto& r = rep.add("interchange");
    auto quad = [&](Elem x, Elem y, Elem x2, Elem y2, int p, int q) {
      auto xy = c.compose(x, y, p), x2y2 = c.compose(x2, y2, p);
      auto xx2 = c.compose(x, x2, q), yy2 = c.compose(y, y2, q);
      std::optional<Elem> lhs, rhs;
      if (xy && x2y2) lhs = c.compose(*xy, *x2y2, q);
      if (xx2 && yy2) rhs = c.compose(*xx2, *yy2, p);
      r.record(lhs && rhs && *lhs == *rhs, [&] {
        return "p=" + lvl(p) + " q=" + lvl(q) + " on " + name(x) + "," + name(y) + "," + name(x2) + "," + name(y2);
      });
    };
    auto for_each_quad = [&](auto&& fn) {
      for (int p = 0; p < levels; ++p)
        for (int q = p + 1; q < levels; ++q)
          for (Elem x = 0; x < n; ++x)
            for (Elem y : idx.right_partners(x, p)) {
              Elem yq = d(Sign::plus, q, y);
              for (Elem x2 : idx.right_partners(x, q))
                for (Elem y2 : idx.right_partners(x2, p))
                  if (d(Sign::minus, q, y2) == yq) fn(x, y, x2, y2, p, q);
            }
    };
    std::size_t total = 0;
    for_each_quad([&](Elem, Elem, Elem, Elem, int, int) { ++total; });
    if (total <= opts.instance_cap) {
      for_each_quad(quad);
    } else {
      r.mode = "sampled";
      std::bernoulli_distribution keep(static_cast<double>(opts.sample_size) / static_cast<double>(total));
      for_each_quad([&](Elem x, Elem y, Elem x2, Elem y2, int p, int q) {
        if (keep(rng)) quad(x, y, x2, y2, p, q);
      });
    }
  }

  // (vii) dimension
  {
    auto& r = rep.add("dimension");
    for (Elem x = 0; x < n; ++x)
      for (int p = 0; p <= levels; ++p)
        for (Sign a : kSigns) {
          bool fixed = d(a, p, x) == x;
          r.record(fixed == (p >= c.dim(x)), [&] { return "level " + lvl(p) + " on " + name(x); });
        }
  }
  return rep;
}

}  // namespace omegacube
