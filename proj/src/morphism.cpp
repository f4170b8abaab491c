#include "omegacube/morphism.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace omegacube {

const MCategory& m_of(const Shape& shape) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::unique_ptr<MCategory>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[shape.lengths()];
  if (!slot) slot = std::make_unique<MCategory>(MCategory::build(shape));
  return *slot;
}

std::vector<Elem> MMorphism::extend() const {
  const MCategory& src = m_of(source);
  const MCategory& tgt = m_of(target);
  constexpr Elem kUnset = ~0u;
  std::vector<Elem> val(src.size(), kUnset);
  auto eval = [&](auto&& self, Elem w) -> Elem {
    if (val[w] != kUnset) return val[w];
    const Witness& wt = src.member(w).witness;
    Elem v;
    if (wt.atom) {
      v = cell_map.at(wt.left);
    } else {
      Elem l = self(self, wt.left), r = self(self, wt.right);
      auto c = tgt.compose(l, r, wt.level);
      if (!c)
        throw std::logic_error("morphism M(" + source.str() + ") -> M(" + target.str() +
                               ") sends a composite to an undefined composite");
      v = *c;
    }
    return val[w] = v;
  };
  for (Elem w = 0; w < src.size(); ++w) eval(eval, w);
  return val;
}

Elem MMorphism::apply(Elem member) const { return extend().at(member); }

MMorphism identity_morphism(const Shape& shape) {
  const MCategory& m = m_of(shape);
  MMorphism f{shape, shape, {}};
  for (std::size_t i = 0; i < shape.cell_count(); ++i) f.cell_map.push_back(m.cell_member(i));
  return f;
}

MMorphism compose_morphisms(const MMorphism& f, const MMorphism& g) {
  if (!(g.target == f.source)) throw std::invalid_argument("morphisms are not composable");
  auto fv = f.extend();
  MMorphism h{g.source, f.target, {}};
  for (Elem c : g.cell_map) h.cell_map.push_back(fv.at(c));
  return h;
}

MMorphism tensor_morphism(const MMorphism& f, const MMorphism& g) {
  const MCategory& ft = m_of(f.target);
  const MCategory& gt = m_of(g.target);
  MMorphism h{f.source.product(g.source), f.target.product(g.target), {}};
  const MCategory& ht = m_of(h.target);
  for (Elem a : f.cell_map)
    for (Elem b : g.cell_map)
      h.cell_map.push_back(ht.at(product_set(f.target, ft.member(a).cells, g.target, gt.member(b).cells)));
  return h;
}

Report check_morphism(const MMorphism& f) {
  Report rep;
  rep.subject = "morphism M(" + f.source.str() + ") -> M(" + f.target.str() + ")";
  const MCategory& src = m_of(f.source);
  const MCategory& tgt = m_of(f.target);
  std::vector<Elem> v;
  auto& def = rep.add("composites-defined");
  try {
    v = f.extend();
    def.record(true, [] { return std::string(); });
  } catch (const std::logic_error& e) {
    def.record(false, [&] { return std::string(e.what()); });
    return rep;
  }
  const int levels = std::max(src.top_level(), tgt.top_level()) + 1;
  auto& faces = rep.add("faces-preserved");
  for (Elem w = 0; w < src.size(); ++w)
    for (int p = 0; p < levels; ++p)
      for (Sign a : kSigns)
        faces.record(v[src.face(a, p, w)] == tgt.face(a, p, v[w]), [&] {
          return "d" + std::string(1, sign_char(a)) + std::to_string(p) + " of " + src.describe(w);
        });
  auto& comp = rep.add("composites-preserved");
  for (const auto& t : src.composition_triples()) {
    auto c = tgt.compose(v[t[0]], v[t[1]], static_cast<int>(t[2]));
    comp.record(c && *c == v[t[3]], [&] { return src.describe(t[3]); });
  }
  return rep;
}

namespace {

Shape interval(int n) { return Shape({n}); }

MMorphism cell_table(const Shape& source, const Shape& target, const std::vector<CellSet>& images) {
  const MCategory& t = m_of(target);
  MMorphism f{source, target, {}};
  for (const CellSet& s : images) f.cell_map.push_back(t.at(closure(target, s)));
  return f;
}

CellSet cells_of(const Shape& s, std::initializer_list<Cell> cells) {
  CellSet out;
  for (const Cell& c : cells) out.set(s.index(c));
  return out;
}

MMorphism tensor3(int before, const MMorphism& mid, int after) {
  return tensor_morphism(tensor_morphism(identity_morphism(cube_shape(before)), mid),
                         identity_morphism(cube_shape(after)));
}

void check_index(int i, int lo, int hi) {
  if (i < lo || i > hi) throw std::out_of_range("operator index out of range");
}

}  // namespace

MMorphism base_face(Sign a) {
  Shape t = interval(1);
  return cell_table(cube_shape(0), t, {cells_of(t, {{a == Sign::minus ? 0 : 2}})});
}

MMorphism base_degeneracy() {
  Shape t = cube_shape(0);
  CellSet pt = cells_of(t, {Cell{}});
  return cell_table(interval(1), t, {pt, pt, pt});
}

MMorphism base_inclusion(Sign a) {
  Shape t = interval(2);
  int off = a == Sign::minus ? 0 : 2;
  return cell_table(interval(1), t, {cells_of(t, {{off}}), cells_of(t, {{off + 1}}), cells_of(t, {{off + 2}})});
}

MMorphism base_doubling() {
  Shape t = interval(2);
  return cell_table(interval(1), t, {cells_of(t, {{0}}), cells_of(t, {{1}, {3}}), cells_of(t, {{4}})});
}

MMorphism base_connection(Sign a) {
  Shape s = cube_shape(2);
  Shape t = interval(1);
  const Cell lo{a == Sign::minus ? 2 : 0};  // d^{-a}_0 I
  const Cell hi{a == Sign::minus ? 0 : 2};  // d^{a}_0 I
  const Cell mid{1};
  const int l = lo[0], h = hi[0];
  std::vector<CellSet> images(s.cell_count());
  for (const Cell& c : s.cells()) {
    const Cell* img;
    if (c[0] == l || c[1] == l)
      img = &lo;  // touches the d^{-a} side
    else if (c[0] == h && c[1] == h)
      img = &hi;
    else
      img = &mid;
    images[s.index(c)] = cells_of(t, {*img});
  }
  return cell_table(s, t, images);
}

MMorphism std_face(int n, int i, Sign a) {
  check_index(i, 1, n);
  return tensor3(i - 1, base_face(a), n - i);
}

MMorphism std_degeneracy(int n, int i) {
  check_index(i, 1, n);
  return tensor3(i - 1, base_degeneracy(), n - i);
}

MMorphism std_connection(int n, int i, Sign a) {
  check_index(i, 1, n - 1);
  return tensor3(i - 1, base_connection(a), n - i - 1);
}

MMorphism std_inclusion(int n, int i, Sign a) {
  check_index(i, 1, n);
  return tensor3(i - 1, base_inclusion(a), n - i);
}

MMorphism std_doubling(int n, int i) {
  check_index(i, 1, n);
  return tensor3(i - 1, base_doubling(), n - i);
}

Shape doubled_shape(int n, int i) {
  std::vector<int> l(static_cast<std::size_t>(n), 1);
  l.at(static_cast<std::size_t>(i - 1)) = 2;
  return Shape(l);
}

std::size_t cube_cells(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c *= 3;
  return c;
}

namespace {

std::vector<int> digits(std::size_t idx, int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    d[static_cast<std::size_t>(k)] = static_cast<int>(idx % 3);
    idx /= 3;
  }
  return d;
}

std::uint32_t undigits(const std::vector<int>& d) {
  std::uint32_t idx = 0;
  for (int v : d) idx = idx * 3 + static_cast<std::uint32_t>(v);
  return idx;
}

}  // namespace

std::vector<std::uint32_t> face_cell_map(int n, int i, Sign a) {
  check_index(i, 1, n);
  std::vector<std::uint32_t> out(cube_cells(n - 1));
  for (std::size_t c = 0; c < out.size(); ++c) {
    auto d = digits(c, n - 1);
    d.insert(d.begin() + (i - 1), a == Sign::minus ? 0 : 2);
    out[c] = undigits(d);
  }
  return out;
}

std::vector<std::uint32_t> degeneracy_cell_map(int n, int i) {
  check_index(i, 1, n);
  std::vector<std::uint32_t> out(cube_cells(n));
  for (std::size_t c = 0; c < out.size(); ++c) {
    auto d = digits(c, n);
    d.erase(d.begin() + (i - 1));
    out[c] = undigits(d);
  }
  return out;
}

std::vector<std::uint32_t> connection_cell_map(int n, int i, Sign a) {
  check_index(i, 1, n - 1);
  std::vector<std::uint32_t> out(cube_cells(n));
  for (std::size_t c = 0; c < out.size(); ++c) {
    auto d = digits(c, n);
    auto k = static_cast<std::size_t>(i - 1);
    // encodings order as 0 < edge < 1, so the two connections are max and min
    d[k] = a == Sign::minus ? std::max(d[k], d[k + 1]) : std::min(d[k], d[k + 1]);
    d.erase(d.begin() + i);
    out[c] = undigits(d);
  }
  return out;
}

}  // namespace omegacube
