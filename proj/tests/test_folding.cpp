#include <doctest.h>

#include "omegacube/folding.hpp"
#include "omegacube/nerve.hpp"

using namespace omegacube;

TEST_CASE("relations hold on the nerves of the interval and the square") {
  NerveCategory line(m_of(parse_shape("1")), 4);
  Report r = relation_suite(line);
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.find("psi-commute")->instances > 0);

  for (const char* text : {"", "2", "1x1"}) {
    NerveCategory g(m_of(parse_shape(text)), 3);
    Report s = relation_suite(g);
    INFO(s.summary());
    CHECK(s.passed());
  }
}

TEST_CASE("braid relation is exhaustive on grade 3 of the square nerve") {
  NerveCategory g(m_of(parse_shape("1x1")), 3);
  Report r = relation_suite(g);
  const AxiomResult* b = r.find("braid");
  REQUIRE(b);
  CHECK(b->mode == "exhaustive");
  CHECK(b->instances == g.size(3));
  CHECK(b->violations == 0);
}

TEST_CASE("large relation sets are sampled with the seed") {
  NerveCategory g(m_of(parse_shape("1x1")), 3);
  FoldingOptions o;
  o.exhaustive_limit = 100;
  o.sample_size = 50;
  Report a = relation_suite(g, o);
  Report b = relation_suite(g, o);
  CHECK(a.find("psi-composite")->mode == "sampled");
  CHECK(a.to_json() == b.to_json());
  CHECK(a.passed());
}

TEST_CASE("Psi on degeneracies drops one fold") {
  // Psi_r e_i = e_{i-1} Psi_{r-1} for 1 < i <= r; reading the right side as
  // e_{i-1} Psi_r fails wherever it is defined.
  NerveCategory g(m_of(parse_shape("1")), 4);
  std::size_t literal_bad = 0;
  for (int n = 2; n <= 4; ++n)
    for (int r = 2; r <= n; ++r)
      for (int i = 2; i <= r; ++i)
        for (Elem x = 0; x < g.size(n - 1); ++x) {
          Elem lhs = Psi(g, n, r, g.degeneracy(n - 1, i, x));
          CHECK(lhs == g.degeneracy(n - 1, i - 1, Psi(g, n - 1, r - 1, x)));
          if (r < n && lhs != g.degeneracy(n - 1, i - 1, Psi(g, n - 1, r, x))) ++literal_bad;
        }
  CHECK(literal_bad > 0);
}

TEST_CASE("folded elements of the square nerve") {
  const MCategory& sq = m_of(parse_shape("1x1"));
  NerveCategory g(sq, 2);
  Elem id = g.at(identity_hom(2));
  CHECK_FALSE(is_folded(g, 2, id));
  Elem f = Phi(g, 2, 2, id);
  CHECK(is_folded(g, 2, f));
  CHECK(psi(g, 2, 1, f) == f);
  // every grade-1 and grade-0 element is folded
  CHECK(folded_part(g, 1).size() == g.size(1));
  CHECK(folded_part(g, 0).size() == g.size(0));
}

TEST_CASE("generalised foldings other than Phi_2 land in Im e_1") {
  auto all = FoldingExpr::generalised_phis(2);
  REQUIRE(all.size() == 5);
  CHECK(std::count_if(all.begin(), all.end(), [](const FoldingExpr& e) { return e.is_genuine(); }) == 1);
  CHECK(FoldingExpr::phi(2).str() == "psi1");
  CHECK(FoldingExpr::generalised_phis(3).size() == 125);
  for (const char* text : {"1", "1x1"}) {
    NerveCategory g(m_of(parse_shape(text)), 2);
    for (const FoldingExpr& e : all)
      for (Elem x = 0; x < g.size(2); ++x) {
        Elem v = eval_generalized(g, 2, e, x);
        if (e.is_genuine())
          CHECK(v == Phi(g, 2, 2, x));
        else
          CHECK(in_degeneracy_image(g, 2, 1, v));
      }
  }
  NerveCategory g(m_of(parse_shape("1")), 2);
  CHECK_THROWS_AS(eval_generalized(g, 1, FoldingExpr::phi(2), 0), std::invalid_argument);
}

TEST_CASE("orderings of partial foldings") {
  NerveCategory g(m_of(parse_shape("1x1")), 3);
  OrderingCount c = ordering_count(g, 3);
  CHECK(c.composites == 6);
  CHECK(c.distinct >= 1);
  CHECK(c.distinct <= 6);
}
