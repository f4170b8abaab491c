#include "omegacube/m_category.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace omegacube {

namespace {

using SetId = std::uint32_t;

struct Draft {
  SetId set;
  int dim;
  std::array<std::vector<SetId>, 2> faces;
  Witness witness;  // in draft member numbering
  std::optional<Witness> alt;
};

class Builder {
 public:
  Builder(const Shape& shape, std::size_t cap) : shape_(shape), top_(shape.top_dim()), cap_(cap) {
    src_.resize(static_cast<std::size_t>(top_));
    tgt_.resize(static_cast<std::size_t>(top_));
  }

  SetId intern(const CellSet& s) {
    auto [it, fresh] = ids_.try_emplace(s, static_cast<SetId>(sets_.size()));
    if (fresh) {
      sets_.push_back(s);
      member_of_.push_back(kNone);
    }
    return it->second;
  }

  void run() {
    for (std::size_t i = 0; i < shape_.cell_count(); ++i) {
      Cell c = shape_.cell(i);
      Draft d;
      CellSet one;
      one.set(i);
      d.set = intern(closure(shape_, one));
      d.dim = cell_dim(c);
      for (Sign s : kSigns)
        for (int p = 0; p < top_; ++p) d.faces[sign_index(s)].push_back(intern(cell_face(shape_, c, s, p)));
      d.witness = Witness{true, static_cast<std::uint32_t>(i), 0, 0};
      add(std::move(d));
    }
    while (!queue_.empty()) {
      std::uint32_t x = queue_.front();
      queue_.pop_front();
      for (int p = 0; p < drafts_[x].dim && p < top_; ++p) {
        // copy: add() may grow the index lists while we walk them
        auto rights = lookup(src_, p, drafts_[x].faces[1][p]);
        for (std::uint32_t y : rights) combine(x, y, p);
        auto lefts = lookup(tgt_, p, drafts_[x].faces[0][p]);
        for (std::uint32_t w : lefts) combine(w, x, p);
      }
    }
    for (const Draft& d : drafts_)
      for (const auto& fs : d.faces)
        for (SetId f : fs)
          if (member_of_[f] == kNone)
            throw std::logic_error("face of a member is not a member in " + shape_.str());
  }

  const Shape& shape_;
  int top_;
  std::size_t cap_;
  std::vector<CellSet> sets_;
  std::unordered_map<CellSet, SetId> ids_;
  std::vector<std::uint32_t> member_of_;
  std::vector<Draft> drafts_;

 private:
  static constexpr std::uint32_t kNone = ~0u;
  using Index = std::vector<std::unordered_map<SetId, std::vector<std::uint32_t>>>;

  static std::vector<std::uint32_t> lookup(const Index& idx, int p, SetId s) {
    auto it = idx[p].find(s);
    return it == idx[p].end() ? std::vector<std::uint32_t>{} : it->second;
  }

  void add(Draft d) {
    auto id = static_cast<std::uint32_t>(drafts_.size());
    member_of_[d.set] = id;
    for (int p = 0; p < d.dim && p < top_; ++p) {
      src_[p][d.faces[0][p]].push_back(id);
      tgt_[p][d.faces[1][p]].push_back(id);
    }
    drafts_.push_back(std::move(d));
    queue_.push_back(id);
    if (cap_ && drafts_.size() > cap_)
      throw std::length_error("M(" + shape_.str() + ") exceeds the member cap of " + std::to_string(cap_));
  }

  void combine(std::uint32_t x, std::uint32_t y, int p) {
    const Draft& a = drafts_[x];
    const Draft& b = drafts_[y];
    Draft d;
    d.set = intern(sets_[a.set] | sets_[b.set]);
    d.dim = std::max(a.dim, b.dim);
    for (Sign s : kSigns) {
      int si = sign_index(s);
      for (int q = 0; q < top_; ++q) {
        SetId f;
        if (q < p) {
          f = a.faces[si][q];
          if (f != b.faces[si][q]) throw std::logic_error("lower faces disagree in composite");
        } else if (q == p) {
          f = s == Sign::minus ? a.faces[0][p] : b.faces[1][p];
        } else {
          f = intern(sets_[a.faces[si][q]] | sets_[b.faces[si][q]]);
        }
        d.faces[si].push_back(f);
      }
    }
    d.witness = Witness{false, x, y, p};
    std::uint32_t existing = member_of_[d.set];
    if (existing == kNone) {
      add(std::move(d));
      return;
    }
    Draft& e = drafts_[existing];
    if (e.faces != d.faces || e.dim != d.dim)
      throw std::logic_error("two decompositions of one member give different faces in " + shape_.str());
    if (!e.alt && !e.witness.atom && !(e.witness == d.witness)) e.alt = d.witness;
  }

  std::deque<std::uint32_t> queue_;
  Index src_, tgt_;
};

std::uint64_t table_key(Elem x, Elem y, int p) {
  return (static_cast<std::uint64_t>(x) << 36) | (static_cast<std::uint64_t>(y) << 8) | static_cast<std::uint64_t>(p);
}

}  // namespace

MCategory MCategory::build(const Shape& shape, std::size_t member_cap) {
  Builder b(shape, member_cap);
  b.run();

  std::vector<std::uint32_t> order(b.drafts_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
    const Draft& x = b.drafts_[i];
    const Draft& y = b.drafts_[j];
    if (x.dim != y.dim) return x.dim < y.dim;
    return canonical_less(b.sets_[x.set], b.sets_[y.set]);
  });
  std::vector<Elem> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<Elem>(k);

  auto remap = [&](const Witness& w) {
    if (w.atom) return w;
    return Witness{false, rank[w.left], rank[w.right], w.level};
  };

  MCategory m;
  m.shape_ = shape;
  m.members_.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Draft& d = b.drafts_[order[k]];
    Member& mem = m.members_[k];
    mem.cells = b.sets_[d.set];
    mem.dim = d.dim;
    for (int si = 0; si < 2; ++si)
      for (SetId f : d.faces[si]) mem.faces[si].push_back(rank[b.member_of_[f]]);
    mem.witness = remap(d.witness);
    if (d.alt) mem.alt_witness = remap(*d.alt);
    m.index_.emplace(mem.cells, static_cast<Elem>(k));
  }
  m.cell_member_.resize(shape.cell_count());
  for (std::size_t i = 0; i < shape.cell_count(); ++i) {
    CellSet one;
    one.set(i);
    m.cell_member_[i] = m.at(closure(shape, one));
  }
  return m;
}

Elem MCategory::face(Sign s, int p, Elem x) const {
  const Member& m = members_.at(x);
  if (p >= top_level()) return x;
  return m.faces[sign_index(s)][static_cast<std::size_t>(p)];
}

std::optional<Elem> MCategory::compose(Elem x, Elem y, int p) const {
  if (p >= top_level()) return x == y ? std::optional<Elem>(x) : std::nullopt;
  if (table_) {
    auto it = table_->find(table_key(x, y, p));
    if (it == table_->end()) return std::nullopt;
    return it->second;
  }
  if (face(Sign::plus, p, x) != face(Sign::minus, p, y)) return std::nullopt;
  return find(members_[x].cells | members_[y].cells);
}

std::optional<Elem> MCategory::find(const CellSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem MCategory::at(const CellSet& s) const {
  auto e = find(s);
  if (!e) throw std::out_of_range("set " + member_string(shape_, s) + " is not a member of M(" + shape_.str() + ")");
  return *e;
}

Elem MCategory::whole() const {
  CellSet all;
  for (std::size_t i = 0; i < shape_.cell_count(); ++i) all.set(i);
  return at(all);
}

std::string MCategory::describe(Elem x) const { return member_string(shape_, members_.at(x).cells); }

std::vector<std::array<Elem, 4>> MCategory::composition_triples() const {
  std::vector<std::array<Elem, 4>> out;
  if (table_) {
    for (const auto& [k, z] : *table_)
      out.push_back({static_cast<Elem>(k >> 36), static_cast<Elem>((k >> 8) & 0xFFFFFFF), z, static_cast<Elem>(k & 0xFF)});
    for (auto& t : out) std::swap(t[2], t[3]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return std::tie(a[2], a[0], a[1]) < std::tie(b[2], b[0], b[1]);
    });
    return out;
  }
  ComposableIndex idx(*this);
  for (int p = 0; p < top_level(); ++p)
    for (Elem x = 0; x < size(); ++x)
      for (Elem y : idx.right_partners(x, p))
        if (auto z = compose(x, y, p)) out.push_back({x, y, static_cast<Elem>(p), *z});
  return out;
}

void MCategory::set_face(Sign s, int p, Elem x, Elem target) {
  members_.at(x).faces[sign_index(s)].at(static_cast<std::size_t>(p)) = target;
}

std::string member_string(const Shape& shape, const CellSet& s) {
  std::string out = "{";
  bool first = true;
  // list only the maximal cells; the rest is implied by closure
  for (std::size_t i : set_indices(s)) {
    Cell c = shape.cell(i);
    bool maximal = true;
    for (std::size_t j : set_indices(s)) {
      if (j == i) continue;
      Cell e = shape.cell(j);
      bool above = cell_dim(e) > cell_dim(c);
      for (std::size_t k = 0; above && k < c.size(); ++k)
        above = e[k] == c[k] || (e[k] % 2 == 1 && (c[k] == e[k] - 1 || c[k] == e[k] + 1));
      if (above) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    if (!first) out += ' ';
    out += format_cell(c);
    first = false;
  }
  return out + "}";
}

nlohmann::json MCategory::to_json() const {
  nlohmann::json j;
  j["shape"] = shape_.str();
  auto mems = nlohmann::json::array();
  for (const Member& m : members_) {
    nlohmann::json e;
    auto key = nlohmann::json::array();
    for (std::size_t i : set_indices(m.cells)) key.push_back(format_cell(shape_.cell(i)));
    e["key"] = std::move(key);
    e["dim"] = m.dim;
    e["faces"] = {{"-", m.faces[0]}, {"+", m.faces[1]}};
    if (m.witness.atom)
      e["witness"] = {{"cell", format_cell(shape_.cell(m.witness.left))}};
    else
      e["witness"] = {{"compose", {m.witness.left, m.witness.right, m.witness.level}}};
    mems.push_back(std::move(e));
  }
  j["members"] = std::move(mems);
  auto comp = nlohmann::json::array();
  for (const auto& t : composition_triples()) comp.push_back({t[0], t[1], t[2], t[3]});
  j["compositions"] = std::move(comp);
  return j;
}

MCategory MCategory::from_json(const nlohmann::json& j) {
  MCategory m;
  m.shape_ = parse_shape(j.at("shape").get<std::string>());
  const int top = m.shape_.top_dim();
  const auto& mems = j.at("members");
  for (const auto& e : mems) {
    Member mem;
    for (const auto& c : e.at("key")) mem.cells.set(m.shape_.index(parse_cell(c.get<std::string>())));
    mem.dim = e.at("dim").get<int>();
    mem.faces[0] = e.at("faces").at("-").get<std::vector<Elem>>();
    mem.faces[1] = e.at("faces").at("+").get<std::vector<Elem>>();
    for (const auto& f : mem.faces)
      if (f.size() != static_cast<std::size_t>(top)) throw std::invalid_argument("face list has wrong length");
    const auto& w = e.at("witness");
    if (w.contains("cell")) {
      mem.witness = Witness{true, static_cast<std::uint32_t>(m.shape_.index(parse_cell(w.at("cell").get<std::string>()))), 0, 0};
    } else {
      const auto& c = w.at("compose");
      mem.witness = Witness{false, c.at(0).get<std::uint32_t>(), c.at(1).get<std::uint32_t>(), c.at(2).get<int>()};
    }
    if (!m.index_.emplace(mem.cells, static_cast<Elem>(m.members_.size())).second)
      throw std::invalid_argument("duplicate member key");
    m.members_.push_back(std::move(mem));
  }
  const std::size_t n = m.members_.size();
  for (const Member& mem : m.members_)
    for (const auto& f : mem.faces)
      for (Elem e : f)
        if (e >= n) throw std::invalid_argument("face index out of range");
  m.cell_member_.assign(m.shape_.cell_count(), 0);
  for (std::size_t i = 0; i < m.shape_.cell_count(); ++i) {
    CellSet one;
    one.set(i);
    m.cell_member_[i] = m.at(closure(m.shape_, one));
  }
  m.table_.emplace();
  for (const auto& t : j.at("compositions")) {
    auto x = t.at(0).get<Elem>(), y = t.at(1).get<Elem>(), z = t.at(3).get<Elem>();
    int p = t.at(2).get<int>();
    if (x >= n || y >= n || z >= n || p < 0 || p >= top) throw std::invalid_argument("composition entry out of range");
    m.table_->emplace(table_key(x, y, p), z);
  }
  return m;
}

Elem product_member(const MCategory& k, Elem x, const MCategory& l, Elem y, const MCategory& kl) {
  auto e = kl.find(product_set(k.shape(), k.member(x).cells, l.shape(), l.member(y).cells));
  if (!e) throw std::logic_error("product of " + k.describe(x) + " and " + l.describe(y) + " is not a member");
  return *e;
}

Report product_face_check(const MCategory& k, const MCategory& l) {
  const MCategory kl = MCategory::build(k.shape().product(l.shape()));
  Report rep;
  rep.subject = "product faces " + k.shape().str() + " by " + l.shape().str();
  auto& member = rep.add("product-is-member");
  auto& faces = rep.add("product-face-formula");
  for (Elem x = 0; x < k.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y) {
      auto xy = kl.find(product_set(k.shape(), k.member(x).cells, l.shape(), l.member(y).cells));
      member.record(xy.has_value(), [&] { return k.describe(x) + " x " + l.describe(y); });
      if (!xy) continue;
      for (int p = 0; p < kl.top_level(); ++p)
        for (Sign a : kSigns) {
          CellSet u;
          for (int i = 0; i <= p; ++i)
            u |= product_set(k.shape(), k.member(k.face(a, i, x)).cells, l.shape(),
                             l.member(l.face(alternate(a, i), p - i, y)).cells);
          faces.record(kl.member(kl.face(a, p, *xy)).cells == u, [&] {
            return std::string("d") + sign_char(a) + std::to_string(p) + " of " + k.describe(x) + " x " +
                   l.describe(y);
          });
        }
    }
  return rep;
}

}  // namespace omegacube
