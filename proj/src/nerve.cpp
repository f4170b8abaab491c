#include "omegacube/nerve.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace omegacube {

namespace {

// Standard data depend only on (n, i, sign); build each once.
template <class Key, class Value, class Make>
const Value& memo(Key key, Make make) {
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<Value>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<Value>(make());
  return *slot;
}

using CellMap = std::vector<std::uint32_t>;

const CellMap& face_map(int n, int i, Sign a) {
  return memo<std::tuple<int, int, int>, CellMap>({n, i, sign_index(a)}, [&] { return face_cell_map(n, i, a); });
}
const CellMap& degeneracy_map(int n, int i) {
  return memo<std::tuple<int, int>, CellMap>({n, i}, [&] { return degeneracy_cell_map(n, i); });
}
const CellMap& connection_map(int n, int i, Sign a) {
  return memo<std::tuple<int, int, int>, CellMap>({n, i, sign_index(a)},
                                                  [&] { return connection_cell_map(n, i, a); });
}
const Precomposer& doubling(int n, int i) {
  return memo<std::tuple<int, int>, Precomposer>({n, i}, [&] { return Precomposer(std_doubling(n, i)); });
}

Hom pull(const Hom& x, const CellMap& m) {
  Hom out(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) out[c] = x[m[c]];
  return out;
}

Elem face_at(const OmegaView& v, Sign s, int p, Elem x) { return p >= v.top_level() ? x : v.face(s, p, x); }

}  // namespace

int hom_grade(const Hom& x) {
  int n = 0;
  std::size_t c = 1;
  while (c < x.size()) {
    c *= 3;
    ++n;
  }
  if (c != x.size()) throw std::invalid_argument("hom does not have 3^n values");
  return n;
}

std::size_t HomHash::operator()(const Hom& h) const noexcept {
  std::size_t s = h.size();
  for (Elem e : h) s ^= e + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
  return s;
}

EnumerationOverflow::EnumerationOverflow(std::size_t partial, std::size_t cap)
    : std::runtime_error("enumeration overflow: more than " + std::to_string(cap) + " homomorphisms (" +
                         std::to_string(partial) + " found before stopping)"),
      partial_count(partial) {}

Precomposer::Precomposer(const MMorphism& f) {
  const MCategory& m = m_of(f.target);
  std::unordered_map<Elem, std::uint32_t> slot;
  auto visit = [&](auto&& self, Elem w) -> std::uint32_t {
    if (auto it = slot.find(w); it != slot.end()) return it->second;
    const Witness& wt = m.member(w).witness;
    Step s{};
    if (wt.atom) {
      s = Step{true, wt.left, 0, 0};
    } else {
      std::uint32_t l = self(self, wt.left);
      std::uint32_t r = self(self, wt.right);
      s = Step{false, l, r, wt.level};
    }
    auto id = static_cast<std::uint32_t>(steps_.size());
    steps_.push_back(s);
    slot.emplace(w, id);
    return id;
  };
  for (Elem w : f.cell_map) out_slot_.push_back(visit(visit, w));
}

Hom Precomposer::apply(const OmegaView& x, const Hom& h) const {
  std::vector<Elem> val(steps_.size());
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const Step& s = steps_[k];
    if (s.atom) {
      val[k] = h.at(s.a);
    } else {
      auto c = x.compose(val[s.a], val[s.b], s.level);
      if (!c) throw std::logic_error("composite undefined while precomposing");
      val[k] = *c;
    }
  }
  Hom out(out_slot_.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = val[out_slot_[c]];
  return out;
}

Hom CubeOps::face(const Hom& x, int i, Sign a) const { return pull(x, face_map(hom_grade(x), i, a)); }

Hom CubeOps::degeneracy(const Hom& x, int i) const { return pull(x, degeneracy_map(hom_grade(x) + 1, i)); }

Hom CubeOps::connection(const Hom& x, int i, Sign a) const {
  return pull(x, connection_map(hom_grade(x) + 1, i, a));
}

bool CubeOps::composable(const Hom& x, const Hom& y, int i) const {
  return x.size() == y.size() && face(x, i, Sign::plus) == face(y, i, Sign::minus);
}

Hom CubeOps::amalgamate(const Hom& x, const Hom& y, int i) const {
  const int n = hom_grade(x);
  Shape d = doubled_shape(n, i);
  Hom h(d.cell_count());
  for (std::size_t c = 0; c < h.size(); ++c) {
    Cell cell = d.cell(c);
    auto k = static_cast<std::size_t>(i - 1);
    const Hom* src = &x;
    if (cell[k] > 2) {
      cell[k] -= 2;
      src = &y;
    }
    std::uint32_t idx = 0;
    for (int v : cell) idx = idx * 3 + static_cast<std::uint32_t>(v);
    h[c] = (*src)[idx];
  }
  return h;
}

std::optional<Hom> CubeOps::compose(const Hom& x, const Hom& y, int i) const {
  if (!composable(x, y, i)) return std::nullopt;
  return doubling(hom_grade(x), i).apply(*x_, amalgamate(x, y, i));
}

Hom CubeOps::precompose(const Hom& x, const MMorphism& f) const { return Precomposer(f).apply(*x_, x); }

std::vector<Elem> CubeOps::values(const Hom& x) const {
  const MCategory& m = m_of(cube_shape(hom_grade(x)));
  constexpr Elem kUnset = ~0u;
  std::vector<Elem> val(m.size(), kUnset);
  auto eval = [&](auto&& self, Elem w) -> Elem {
    if (val[w] != kUnset) return val[w];
    const Witness& wt = m.member(w).witness;
    if (wt.atom) return val[w] = x.at(wt.left);
    auto c = x_->compose(self(self, wt.left), self(self, wt.right), wt.level);
    if (!c) throw std::logic_error("composite undefined while evaluating a hom");
    return val[w] = *c;
  };
  for (Elem w = 0; w < m.size(); ++w) eval(eval, w);
  return val;
}

Elem CubeOps::value(const Hom& x, Elem member) const { return values(x).at(member); }

bool CubeOps::is_hom(const Hom& x) const {
  const int n = hom_grade(x);
  const MCategory& m = m_of(cube_shape(n));
  std::vector<Elem> val;
  try {
    val = values(x);
  } catch (const std::logic_error&) {
    return false;
  }
  const int levels = std::max(n, x_->top_level()) + 1;
  for (Elem w = 0; w < m.size(); ++w) {
    if (const auto& alt = m.member(w).alt_witness) {
      auto c = x_->compose(val[alt->left], val[alt->right], alt->level);
      if (!c || *c != val[w]) return false;
    }
    for (int p = 0; p < levels; ++p)
      for (Sign a : kSigns)
        if (val[face_at(m, a, p, w)] != face_at(*x_, a, p, val[w])) return false;
  }
  return true;
}

Hom identity_hom(int n) {
  const MCategory& m = m_of(cube_shape(n));
  Hom h(m.shape().cell_count());
  for (std::size_t c = 0; c < h.size(); ++c) h[c] = m.cell_member(c);
  return h;
}

std::vector<Hom> enumerate_homs(int n, const OmegaView& x, std::size_t cap) {
  const MCategory& m = m_of(cube_shape(n));
  const std::size_t ncells = m.shape().cell_count();

  // Each cell right after its faces: order digits as 0 < 2 < 1.
  std::vector<std::uint32_t> order(ncells);
  for (std::uint32_t c = 0; c < ncells; ++c) order[c] = c;
  auto key = [&](std::uint32_t c) {
    Cell cell = m.shape().cell(c);
    for (int& v : cell) v = v == 1 ? 2 : v / 2;
    return cell;
  };
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });

  // candidates by (q, image of d^-_{q-1}, image of d^+_{q-1})
  std::map<std::tuple<int, Elem, Elem>, std::vector<Elem>> cand;
  std::vector<Elem> points;
  for (Elem y = 0; y < x.size(); ++y) {
    int d = x.dim(y);
    if (d == 0) points.push_back(y);
    for (int q = std::max(d, 1); q <= n; ++q)
      cand[{q, face_at(x, Sign::minus, q - 1, y), face_at(x, Sign::plus, q - 1, y)}].push_back(y);
  }

  constexpr Elem kUnset = ~0u;
  Hom cur(ncells, kUnset);
  auto eval = [&](auto&& self, Elem w) -> std::optional<Elem> {
    const Witness& wt = m.member(w).witness;
    if (wt.atom) return cur[wt.left];
    auto l = self(self, wt.left);
    if (!l) return std::nullopt;
    auto r = self(self, wt.right);
    if (!r) return std::nullopt;
    return x.compose(*l, *r, wt.level);
  };

  std::vector<Hom> out;
  static const std::vector<Elem> kEmpty;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == ncells) {
      out.push_back(cur);
      if (out.size() > cap) throw EnumerationOverflow(out.size(), cap);
      return;
    }
    std::uint32_t c = order[k];
    Elem cm = m.cell_member(c);
    int q = m.dim(cm);
    const std::vector<Elem>* list = &points;
    if (q > 0) {
      auto lo = eval(eval, m.face(Sign::minus, q - 1, cm));
      auto hi = eval(eval, m.face(Sign::plus, q - 1, cm));
      if (!lo || !hi) return;
      auto it = cand.find({q, *lo, *hi});
      list = it == cand.end() ? &kEmpty : &it->second;
    }
    for (Elem y : *list) {
      cur[c] = y;
      self(self, k + 1);
    }
    cur[c] = kUnset;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

NerveCategory::NerveCategory(const OmegaView& x, int kmax, std::size_t cap) : x_(&x), ops_(x) {
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  for (int n = 0; n <= kmax; ++n) grades_.push_back(enumerate_homs(n, x, cap));
  build_tables();
}

NerveCategory::NerveCategory(const OmegaView& x, std::vector<std::vector<Hom>> grades)
    : x_(&x), ops_(x), grades_(std::move(grades)) {
  if (grades_.empty()) throw std::invalid_argument("a nerve needs grade 0");
  build_tables();
}

void NerveCategory::build_tables() {
  const int k = kmax();
  lookup_.assign(grades_.size(), {});
  for (std::size_t n = 0; n < grades_.size(); ++n) {
    if (grades_[n].size() >= (1u << 28)) throw std::length_error("grade too large");
    for (Elem e = 0; e < grades_[n].size(); ++e)
      if (!lookup_[n].emplace(grades_[n][e], e).second) throw std::invalid_argument("duplicate element in grade");
  }
  faces_.assign(grades_.size(), {});
  degeneracies_.assign(grades_.size(), {});
  connections_.assign(grades_.size(), {});
  for (int n = 0; n <= k; ++n) {
    const auto& g = grades_[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n; ++i) {
      std::array<std::vector<Elem>, 2> t;
      for (Sign a : kSigns)
        for (const Hom& h : g) t[sign_index(a)].push_back(at(ops_.face(h, i, a)));
      faces_[n].push_back(std::move(t));
    }
    if (n + 1 > k) continue;
    for (int i = 1; i <= n + 1; ++i) {
      std::vector<Elem> t;
      for (const Hom& h : g) t.push_back(at(ops_.degeneracy(h, i)));
      degeneracies_[n].push_back(std::move(t));
    }
    for (int i = 1; i <= n; ++i) {
      std::array<std::vector<Elem>, 2> t;
      for (Sign a : kSigns)
        for (const Hom& h : g) t[sign_index(a)].push_back(at(ops_.connection(h, i, a)));
      connections_[n].push_back(std::move(t));
    }
  }
}

std::optional<Elem> NerveCategory::find(const Hom& h) const {
  int n = hom_grade(h);
  if (n > kmax()) return std::nullopt;
  const auto& l = lookup_[static_cast<std::size_t>(n)];
  auto it = l.find(h);
  if (it == l.end()) return std::nullopt;
  return it->second;
}

Elem NerveCategory::at(const Hom& h) const {
  auto e = find(h);
  if (!e) throw std::logic_error("value is not an element of the enumerated nerve");
  return *e;
}

Elem NerveCategory::face(int n, int i, Sign a, Elem x) const {
  return faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i - 1))[sign_index(a)].at(x);
}

Elem NerveCategory::degeneracy(int n, int i, Elem x) const {
  if (n + 1 > kmax()) throw std::out_of_range("degeneracy leaves the truncation");
  return degeneracies_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i - 1)).at(x);
}

Elem NerveCategory::connection(int n, int i, Sign a, Elem x) const {
  if (n + 1 > kmax()) throw std::out_of_range("connection leaves the truncation");
  return connections_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i - 1))[sign_index(a)].at(x);
}

std::optional<Elem> NerveCategory::compose(int n, int i, Elem x, Elem y) const {
  if (i < 1 || i > n) throw std::out_of_range("composition direction out of range");
  if (!composable(n, i, x, y)) return std::nullopt;
  std::uint64_t key = (static_cast<std::uint64_t>(n) << 61) | (static_cast<std::uint64_t>(i) << 58) |
                      (static_cast<std::uint64_t>(x) << 29) | y;
  if (auto it = compositions_.find(key); it != compositions_.end()) return it->second;
  std::optional<Elem> r;
  if (auto h = ops_.compose(hom(n, x), hom(n, y), i)) r = at(*h);
  compositions_.emplace(key, r);
  return r;
}

std::string NerveCategory::describe(int n, Elem x) const {
  std::string s = "[";
  const Hom& h = hom(n, x);
  for (std::size_t c = 0; c < h.size(); ++c) {
    if (c) s += ' ';
    s += x_->describe(h[c]);
  }
  return s + "]";
}

void NerveCategory::set_face(int n, int i, Sign a, Elem x, Elem v) {
  faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i - 1))[sign_index(a)].at(x) = v;
}

void NerveCategory::set_connection(int n, int i, Sign a, Elem x, Elem v) {
  connections_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i - 1))[sign_index(a)].at(x) = v;
}

nlohmann::json NerveCategory::to_json() const {
  nlohmann::json j;
  j["kmax"] = kmax();
  j["grades"] = grades_;
  auto faces = nlohmann::json::array();
  auto degs = nlohmann::json::array();
  auto conns = nlohmann::json::array();
  for (int n = 0; n <= kmax(); ++n) {
    auto f = nlohmann::json::array();
    for (const auto& t : faces_[n]) f.push_back({{"-", t[0]}, {"+", t[1]}});
    faces.push_back(std::move(f));
    degs.push_back(degeneracies_[n]);
    auto c = nlohmann::json::array();
    for (const auto& t : connections_[n]) c.push_back({{"-", t[0]}, {"+", t[1]}});
    conns.push_back(std::move(c));
  }
  j["faces"] = std::move(faces);
  j["degeneracies"] = std::move(degs);
  j["connections"] = std::move(conns);
  return j;
}

NerveCategory NerveCategory::from_json(const OmegaView& x, const nlohmann::json& j) {
  NerveCategory g(x, j.at("grades").get<std::vector<std::vector<Hom>>>());
  const auto& faces = j.at("faces");
  const auto& degs = j.at("degeneracies");
  const auto& conns = j.at("connections");
  for (int n = 0; n <= g.kmax(); ++n) {
    const auto k = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < g.faces_[k].size(); ++i)
      for (Sign a : kSigns)
        g.faces_[k][i][sign_index(a)] = faces.at(k).at(i).at(std::string(1, sign_char(a))).get<std::vector<Elem>>();
    g.degeneracies_[k] = degs.at(k).get<std::vector<std::vector<Elem>>>();
    for (std::size_t i = 0; i < g.connections_[k].size(); ++i)
      for (Sign a : kSigns)
        g.connections_[k][i][sign_index(a)] = conns.at(k).at(i).at(std::string(1, sign_char(a))).get<std::vector<Elem>>();
  }
  return g;
}

// CubicalCategory helpers live here because the nerve is their main client.

Elem CubicalCategory::comp(int n, int i, Elem x, Elem y) const {
  auto r = compose(n, i, x, y);
  if (!r)
    throw std::logic_error("undefined composite " + describe(n, x) + " o" + std::to_string(i) + " " + describe(n, y));
  return *r;
}

const std::vector<Elem>& CubicalIndex::right_partners(int n, int i, Elem x) const {
  auto& table = by_source_[{n, i}];
  if (table.empty()) {
    table.assign(g_->size(n - 1), {});
    for (Elem y = 0; y < g_->size(n); ++y) table[g_->face(n, i, Sign::minus, y)].push_back(y);
  }
  return table[g_->face(n, i, Sign::plus, x)];
}

}  // namespace omegacube
