#include "omegacube/opword.hpp"

#include <algorithm>
#include <sstream>

namespace omegacube {

namespace {

using K = OpSym::Kind;

OpSym F(int i, Sign a) { return {K::face, i, a}; }
OpSym E(int i) { return {K::degeneracy, i, Sign::minus}; }
OpSym G(int i, Sign a) { return {K::connection, i, a}; }

bool valid_at(const OpSym& s, int n) {
  switch (s.kind) {
    case K::face: return s.i >= 1 && s.i <= n;
    case K::degeneracy: return s.i >= 1 && s.i <= n + 1;
    case K::connection: return s.i >= 1 && s.i <= n;
  }
  return false;
}

int step(const OpSym& s) { return s.kind == K::face ? -1 : 1; }

// Rewrites the adjacent pair (l r), r acting first. Empty optional: no rule.
std::optional<std::vector<OpSym>> rewrite(const OpSym& l, const OpSym& r) {
  using V = std::vector<OpSym>;
  if (l.kind == K::face && r.kind == K::degeneracy) {
    int i = l.i, j = r.i;
    if (i < j) return V{E(j - 1), F(i, l.sign)};
    if (i > j) return V{E(j), F(i - 1, l.sign)};
    return V{};
  }
  if (l.kind == K::face && r.kind == K::connection) {
    int i = l.i, j = r.i;
    if (i < j) return V{G(j - 1, r.sign), F(i, l.sign)};
    if (i > j + 1) return V{G(j, r.sign), F(i - 1, l.sign)};
    if (l.sign == r.sign) return V{};
    return V{E(j), F(j, l.sign)};
  }
  if (l.kind == K::face && r.kind == K::face && l.i >= r.i) return V{r, F(l.i + 1, l.sign)};
  if (l.kind == K::degeneracy && r.kind == K::degeneracy && l.i <= r.i) return V{E(r.i + 1), l};
  if (l.kind == K::connection && r.kind == K::degeneracy) {
    int i = l.i, j = r.i;
    if (i < j) return V{E(j + 1), l};
    if (i > j) return V{E(j), G(i - 1, l.sign)};
    return V{E(j + 1), E(j)};
  }
  if (l.kind == K::connection && r.kind == K::connection) {
    if (l.i < r.i) return V{G(r.i + 1, r.sign), l};
    if (l.i == r.i && l.sign == r.sign) return V{G(l.i + 1, l.sign), l};
  }
  return std::nullopt;
}

}  // namespace

std::string OpSym::str() const {
  switch (kind) {
    case K::face: return std::string("d") + sign_char(sign) + std::to_string(i);
    case K::degeneracy: return "e" + std::to_string(i);
    case K::connection: return std::string("G") + sign_char(sign) + std::to_string(i);
  }
  return "?";
}

int OpWord::delta() const {
  int d = 0;
  for (const auto& s : syms) d += step(s);
  return d;
}

std::optional<int> OpWord::target_grade(int n) const {
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
    if (!valid_at(*it, n)) return std::nullopt;
    n += step(*it);
  }
  return n;
}

int OpWord::peak_grade(int n) const {
  int peak = n;
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) peak = std::max(peak, n += step(*it));
  return peak;
}

std::string OpWord::str() const {
  if (syms.empty()) return "id";
  std::string out;
  for (const auto& s : syms) {
    if (!out.empty()) out += ' ';
    out += s.str();
  }
  return out;
}

OpWord OpWord::parse(const std::string& text) {
  OpWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "id") continue;
    auto bad = [&] { return std::invalid_argument("bad operator symbol: " + tok); };
    if (tok.size() < 2) throw bad();
    std::size_t pos = 1;
    Sign a = Sign::minus;
    if (tok[0] == 'd' || tok[0] == 'G') {
      if (tok[1] != '-' && tok[1] != '+') throw bad();
      a = tok[1] == '-' ? Sign::minus : Sign::plus;
      pos = 2;
    } else if (tok[0] != 'e') {
      throw bad();
    }
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(tok.substr(pos), &used);
      if (used != tok.size() - pos) throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (tok[0] == 'd') w.syms.push_back(F(i, a));
    else if (tok[0] == 'e') w.syms.push_back(E(i));
    else w.syms.push_back(G(i, a));
  }
  return w;
}

Elem opword_apply(const CubicalCategory& g, const OpWord& w, int n, Elem x) {
  if (!w.target_grade(n)) throw std::invalid_argument("word " + w.str() + " is ill-graded at grade " + std::to_string(n));
  for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
    switch (it->kind) {
      case K::face: x = g.face(n--, it->i, it->sign, x); break;
      case K::degeneracy: x = g.degeneracy(n++, it->i, x); break;
      case K::connection: x = g.connection(n++, it->i, it->sign, x); break;
    }
  }
  return x;
}

Hom opword_apply(const CubeOps& ops, const OpWord& w, const Hom& x) {
  if (!w.target_grade(hom_grade(x))) throw std::invalid_argument("word " + w.str() + " is ill-graded");
  Hom h = x;
  for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
    switch (it->kind) {
      case K::face: h = ops.face(h, it->i, it->sign); break;
      case K::degeneracy: h = ops.degeneracy(h, it->i); break;
      case K::connection: h = ops.connection(h, it->i, it->sign); break;
    }
  }
  return h;
}

std::optional<OpWord> normalize(const OpWord& w, int n, const NormalizeOptions& opts) {
  if (!w.target_grade(n)) throw std::invalid_argument("word " + w.str() + " is ill-graded at grade " + std::to_string(n));
  std::vector<OpSym> s = w.syms;
  std::size_t steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    // rightmost redex first: faces travel toward the input
    for (std::size_t k = s.size(); k-- > 1;) {
      auto r = rewrite(s[k - 1], s[k]);
      if (!r) continue;
      if (++steps > opts.step_budget) return std::nullopt;
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(k - 1), s.begin() + static_cast<std::ptrdiff_t>(k + 1));
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(k - 1), r->begin(), r->end());
      changed = true;
      break;
    }
  }
  return OpWord{s};
}

bool opword_equal(const OpWord& v, const OpWord& w, int n, const EqualOptions& opts) {
  auto tv = v.target_grade(n), tw = w.target_grade(n);
  if (!tv || !tw) throw std::invalid_argument("ill-graded word");
  if (*tv != *tw) return false;
  auto nv = normalize(v, n, opts.normalize), nw = normalize(w, n, opts.normalize);
  if (nv && nw && *nv == *nw) return true;
  if (n > opts.semantic_max_grade)
    throw UndecidedError("cannot decide " + v.str() + " against " + w.str() + " at grade " + std::to_string(n));
  CubeOps ops(m_of(cube_shape(n)));
  Hom id = identity_hom(n);
  return opword_apply(ops, v, id) == opword_apply(ops, w, id);
}

OpWord face_word(const Cell& c) {
  OpWord w;
  // drop vertex coordinates from the last one down, so the lower indices
  // stay put; read left to right this is increasing
  for (int k = static_cast<int>(c.size()); k >= 1; --k) {
    int v = c[static_cast<std::size_t>(k - 1)];
    if (v % 2 == 0) w.syms.insert(w.syms.begin(), F(k, v == 0 ? Sign::minus : Sign::plus));
  }
  return w;
}

OpWord random_word(std::mt19937_64& rng, int n, int max_len, int max_grade) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  int len = len_d(rng);
  OpWord w;
  int cur = n;
  for (int k = 0; k < len; ++k) {
    std::vector<OpSym> options;
    for (int i = 1; i <= cur; ++i)
      for (Sign a : kSigns) options.push_back(F(i, a));
    if (cur + 1 <= max_grade) {
      for (int i = 1; i <= cur + 1; ++i) options.push_back(E(i));
      for (int i = 1; i <= cur; ++i)
        for (Sign a : kSigns) options.push_back(G(i, a));
    }
    if (options.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    OpSym s = options[pick(rng)];
    w.syms.insert(w.syms.begin(), s);
    cur += step(s);
  }
  return w;
}

namespace {

// every well-graded face-only word from grade n of length k
void face_words(int n, int k, OpWord& cur, std::vector<OpWord>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = 1; i <= n; ++i)
    for (Sign a : kSigns) {
      cur.syms.insert(cur.syms.begin(), F(i, a));
      face_words(n - 1, k - 1, cur, out);
      cur.syms.erase(cur.syms.begin());
    }
}

}  // namespace

Report opword_suite(const OpwordSuiteOptions& opts) {
  Report rep;
  rep.subject = "operator words";
  auto& idem = rep.add("normalize-idempotent");
  auto& sound = rep.add("normalize-preserves-action");
  auto& agree = rep.add("equal-agrees-with-action");
  auto& unique = rep.add("face-word-unique");

  constexpr int kSource = 2, kPeak = 4;
  const MCategory& cube = m_of(cube_shape(3));
  CubeOps on_cube(cube);
  NerveCategory nerve(cube, kSource);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> grade(0, kSource);
  std::bernoulli_distribution coin(0.5);

  auto action = [&](const OpWord& w, int n) {
    std::vector<Hom> out;
    for (Elem x = 0; x < nerve.size(n); ++x) out.push_back(opword_apply(on_cube, w, nerve.hom(n, x)));
    return out;
  };

  for (std::size_t t = 0; t < opts.words; ++t) {
    const int n = grade(rng);
    OpWord v = random_word(rng, n, opts.max_len, kPeak);
    OpWord w;
    if (coin(rng)) {
      // v with a cancelling pair d e_j or d G_j slipped in somewhere
      w = v;
      std::uniform_int_distribution<std::size_t> at(0, v.syms.size());
      std::size_t pos = at(rng);
      int g = *OpWord{std::vector<OpSym>(v.syms.begin() + static_cast<std::ptrdiff_t>(pos), v.syms.end())}.target_grade(n);
      if (g + 1 <= kPeak && g >= 1 && coin(rng)) {
        std::uniform_int_distribution<int> j(1, g);
        int jj = j(rng);
        Sign a = coin(rng) ? Sign::minus : Sign::plus;
        w.syms.insert(w.syms.begin() + static_cast<std::ptrdiff_t>(pos), {F(coin(rng) ? jj : jj + 1, a), G(jj, a)});
      } else if (g + 1 <= kPeak) {
        std::uniform_int_distribution<int> j(1, g + 1);
        int jj = j(rng);
        w.syms.insert(w.syms.begin() + static_cast<std::ptrdiff_t>(pos), {F(jj, coin(rng) ? Sign::minus : Sign::plus), E(jj)});
      }
    } else {
      // an independent word, kept only when it lands in the same grade
      for (int tries = 0; tries < 20; ++tries) {
        w = random_word(rng, n, opts.max_len, kPeak);
        if (w.target_grade(n) == v.target_grade(n)) break;
      }
    }
    auto nv = normalize(v, n);
    if (!nv) {
      idem.skip();
      continue;
    }
    auto nnv = normalize(*nv, n);
    idem.record(nnv && *nnv == *nv, [&] { return v.str(); });
    auto av = action(v, n);
    sound.record(action(*nv, n) == av, [&] { return v.str() + " -> " + nv->str(); });
    if (w.target_grade(n) != v.target_grade(n)) {
      agree.skip();
      continue;
    }
    bool eq = opword_equal(v, w, n);
    agree.record(eq == (action(w, n) == av), [&] { return v.str() + " vs " + w.str() + " at grade " + std::to_string(n); });
  }

  for (int n = 0; n <= 3; ++n) {
    const MCategory& m = m_of(cube_shape(n));
    CubeOps ops(m);
    Hom id = identity_hom(n);
    for (int k = 0; k <= n; ++k) {
      std::vector<OpWord> words;
      OpWord cur;
      face_words(n, k, cur, words);
      for (const OpWord& w : words) {
        Hom h = opword_apply(ops, w, id);
        // the value on the top cell of I^{n-k}
        std::size_t top_cell = 0;
        for (int q = 0; q < n - k; ++q) top_cell = top_cell * 3 + 1;
        Elem image = h[top_cell];
        std::optional<Cell> sigma;
        for (std::size_t c = 0; c < m.shape().cell_count(); ++c)
          if (m.cell_member(c) == image) sigma = m.shape().cell(c);
        auto nw = normalize(w, n);
        unique.record(sigma && nw && *nw == face_word(*sigma) &&
                          opword_apply(ops, face_word(*sigma), id) == h,
                      [&] { return w.str() + " at grade " + std::to_string(n); });
      }
    }
  }
  return rep;
}

}  // namespace omegacube
