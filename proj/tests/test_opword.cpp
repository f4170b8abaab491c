#include <doctest.h>

#include "omegacube/opword.hpp"

using namespace omegacube;

TEST_CASE("parsing and printing words") {
  OpWord w = OpWord::parse("d-1 e2 G+1");
  CHECK(w.str() == "d-1 e2 G+1");
  CHECK(w.delta() == 1);
  CHECK(w.target_grade(1) == 2);
  CHECK_FALSE(OpWord::parse("d-3").target_grade(2).has_value());
  CHECK(OpWord::parse("id").syms.empty());
  CHECK_THROWS_AS(OpWord::parse("x1"), std::invalid_argument);
  CHECK_THROWS_AS(OpWord::parse("d1"), std::invalid_argument);
}

TEST_CASE("applying words to a nerve") {
  NerveCategory g(m_of(parse_shape("1")), 2);
  for (Elem x = 0; x < g.size(1); ++x) {
    CHECK(opword_apply(g, OpWord{}, 1, x) == x);
    CHECK(opword_apply(g, OpWord::parse("d-1 e1"), 1, x) == x);
    CHECK(opword_apply(g, OpWord::parse("d+1 G-1"), 1, x) == opword_apply(g, OpWord::parse("e1 d+1"), 1, x));
  }
  CHECK_THROWS_AS(opword_apply(g, OpWord::parse("d-2"), 1, 0), std::invalid_argument);
}

TEST_CASE("equality of words") {
  CHECK(opword_equal(OpWord::parse("d-1 d+2"), OpWord::parse("d+1 d-1"), 2));
  CHECK(opword_equal(OpWord::parse("e1 e1"), OpWord::parse("e2 e1"), 0));
  CHECK_FALSE(opword_equal(OpWord::parse("d-1"), OpWord::parse("d+1"), 1));
  CHECK(opword_equal(OpWord::parse("G+1 e1"), OpWord::parse("e2 e1"), 0));
  CHECK_FALSE(opword_equal(OpWord::parse("G+1 G-1"), OpWord::parse("G-1 G+1"), 1));
  // different grades are never equal
  CHECK_FALSE(opword_equal(OpWord::parse("e1"), OpWord::parse("id"), 1));
  // semantic fallback disabled: distinct normal forms cannot be decided
  EqualOptions strict;
  strict.semantic_max_grade = -1;
  CHECK_THROWS_AS(opword_equal(OpWord::parse("G+1 G-1"), OpWord::parse("G-1 G+1"), 1, strict), UndecidedError);
}

TEST_CASE("normal forms") {
  CHECK(normalize(OpWord::parse("d+1 d-1"), 2)->str() == "d-1 d+2");
  CHECK(normalize(OpWord::parse("d-1 e1"), 1)->str() == "id");
  CHECK(normalize(OpWord::parse("e1 e1"), 0)->str() == "e2 e1");
  NormalizeOptions tiny;
  tiny.step_budget = 0;
  CHECK_FALSE(normalize(OpWord::parse("e1 e1"), 0, tiny).has_value());
}

TEST_CASE("face words") {
  CHECK(face_word(parse_cell("(1,1)")).str() == "id");
  CHECK(face_word(parse_cell("(0,1)")).str() == "d-1");
  CHECK(face_word(parse_cell("(2,1,0)")).str() == "d+1 d-3");
}

TEST_CASE("random word suite") {
  OpwordSuiteOptions o;
  o.words = 2000;
  Report r = opword_suite(o);
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.find("equal-agrees-with-action")->instances > 500);
}
