#include <doctest.h>

#include "omegacube/m_category.hpp"
#include "omegacube/morphism.hpp"
#include "oracles.hpp"

using namespace omegacube;

namespace {

Elem member_of(const MCategory& m, std::initializer_list<const char*> cells) {
  CellSet out;
  for (const char* c : cells) out.set(m.shape().index(parse_cell(c)));
  return m.at(closure(m.shape(), out));
}

}  // namespace

TEST_CASE("member counts of small categories") {
  CHECK(MCategory::build(parse_shape("")).size() == 1);
  CHECK(MCategory::build(parse_shape("1")).size() == 3);
  CHECK(MCategory::build(parse_shape("2")).size() == 6);
  CHECK(MCategory::build(parse_shape("1x1")).size() == 11);
}

TEST_CASE("the cube against the reachability oracle") {
  Shape s = parse_shape("1x1x1");
  MCategory m = MCategory::build(s);
  auto subcomplexes = oracle::all_subcomplexes(s);
  auto reach = oracle::reachable_members(s);
  // every reachable set is a subcomplex
  for (const CellSet& r : reach)
    CHECK(std::find(subcomplexes.begin(), subcomplexes.end(), r) != subcomplexes.end());
  REQUIRE(reach.size() == 57);
  CHECK(m.size() == 57);
  for (const CellSet& r : reach) CHECK(m.find(r).has_value());
}

TEST_CASE("face tables match the direct face formula") {
  for (const char* text : {"1", "2", "1x1", "2x1", "1x2", "1x1x1", "2x2"}) {
    MCategory m = MCategory::build(parse_shape(text));
    for (Elem x = 0; x < m.size(); ++x)
      for (Sign a : kSigns)
        for (int p = 0; p < m.top_level(); ++p)
          CHECK(m.member(m.face(a, p, x)).cells == oracle::direct_face(m.shape(), m.member(x).cells, a, p));
  }
}

TEST_CASE("composition is union") {
  MCategory m = MCategory::build(parse_shape("2"));
  Elem left = member_of(m, {"(1)"});
  Elem right = member_of(m, {"(3)"});
  auto whole = m.compose(left, right, 0);
  REQUIRE(whole);
  CHECK(*whole == m.whole());
  CHECK_FALSE(m.compose(right, left, 0));

  MCategory sq = MCategory::build(parse_shape("1x1"));
  auto lower = sq.compose(member_of(sq, {"(0,1)"}), member_of(sq, {"(1,2)"}), 0);
  REQUIRE(lower);
  CHECK(*lower == sq.face(Sign::minus, 1, sq.whole()));
  for (Elem x = 0; x < sq.size(); ++x)
    for (int p = 0; p < 2; ++p) CHECK(sq.compose(x, sq.face(Sign::plus, p, x), p) == x);

  MCategory cube = MCategory::build(parse_shape("1x1x1"));
  for (const auto& t : cube.composition_triples())
    CHECK(cube.member(t[3]).cells == (cube.member(t[0]).cells | cube.member(t[1]).cells));
}

TEST_CASE("members are sorted by dimension then key") {
  MCategory m = MCategory::build(parse_shape("1x1"));
  for (Elem x = 0; x + 1 < m.size(); ++x) {
    const Member& a = m.member(x);
    const Member& b = m.member(x + 1);
    CHECK((a.dim < b.dim || (a.dim == b.dim && canonical_less(a.cells, b.cells))));
  }
  CHECK(m.dim(m.whole()) == 2);
  CHECK(m.describe(m.whole()) == "{(1,1)}");
}

TEST_CASE("witnesses rebuild every member") {
  MCategory m = MCategory::build(parse_shape("1x1x1"));
  std::size_t with_alt = 0;
  for (Elem x = 0; x < m.size(); ++x) {
    const Member& mem = m.member(x);
    if (mem.witness.atom) {
      CHECK(m.cell_member(mem.witness.left) == x);
    } else {
      CHECK(m.compose(mem.witness.left, mem.witness.right, mem.witness.level) == x);
    }
    if (mem.alt_witness) {
      ++with_alt;
      CHECK(m.compose(mem.alt_witness->left, mem.alt_witness->right, mem.alt_witness->level) == x);
    }
  }
  CHECK(with_alt > 0);
}

TEST_CASE("removing a composite member breaks closure") {
  MCategory m = MCategory::build(parse_shape("1x1"));
  std::size_t composites = 0;
  for (Elem x = 0; x < m.size(); ++x) {
    if (m.member(x).witness.atom) continue;
    ++composites;
    const Witness& w = m.member(x).witness;
    // x is still produced from the remaining members, so it cannot be dropped
    CHECK(w.left != x);
    CHECK(w.right != x);
  }
  CHECK(composites == 2);
}

TEST_CASE("axioms hold and a corrupted face is caught") {
  for (const char* text : {"", "1", "2", "1x1", "2x1", "1x1x1", "3x2", "1x1x1x1"}) {
    MCategory m = MCategory::build(parse_shape(text));
    Report r = check_omega_axioms(m);
    CHECK_MESSAGE(r.passed(), r.summary());
  }
  MCategory m = MCategory::build(parse_shape("1x1"));
  Elem top = m.whole();
  Elem src = m.face(Sign::minus, 0, top), tgt = m.face(Sign::plus, 0, top);
  m.set_face(Sign::minus, 0, top, tgt);
  m.set_face(Sign::plus, 0, top, src);
  Report r = check_omega_axioms(m);
  CHECK_FALSE(r.passed());
  CHECK(r.find("face-of-face")->violations > 0);
}

TEST_CASE("serialization round trip") {
  for (const char* text : {"", "1", "1x1", "2x1", "1x1x1"}) {
    MCategory m = MCategory::build(parse_shape(text));
    std::string once = m.to_json().dump();
    MCategory back = MCategory::from_json(nlohmann::json::parse(once));
    CHECK(back.to_json().dump() == once);
    CHECK(check_omega_axioms(back).passed());
  }
  auto j = MCategory::build(parse_shape("1x1")).to_json();
  j["members"][10]["faces"]["-"][0] = 3;
  CHECK_FALSE(check_omega_axioms(MCategory::from_json(j)).passed());
  j["members"][10]["faces"]["-"][0] = 99;
  CHECK_THROWS(MCategory::from_json(j));
}

TEST_CASE("member cap is explicit") {
  CHECK_THROWS_AS(MCategory::build(parse_shape("1x1x1"), 20), std::length_error);
}

TEST_CASE("faces of products follow the alternating union") {
  for (auto [a, b] : {std::pair{"1", "1"}, std::pair{"2", "1"}, std::pair{"1", "2"}, std::pair{"1x1", "1"}}) {
    Report r = product_face_check(m_of(parse_shape(a)), m_of(parse_shape(b)));
    INFO(r.summary());
    CHECK(r.passed());
    CHECK(r.find("product-face-formula")->instances > 0);
  }
  const MCategory& i = m_of(parse_shape("1"));
  const MCategory& sq = m_of(parse_shape("1x1"));
  CHECK(product_member(i, 2, i, 2, sq) == sq.whole());
  CHECK(product_member(i, 0, i, 2, sq) == sq.cell_member(parse_cell("(0,1)")));
  // a member of the wrong category has no product there
  CHECK_THROWS_AS(product_member(i, 2, i, 2, m_of(parse_shape(""))), std::logic_error);
}
