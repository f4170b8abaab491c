#pragma once

#include <unordered_map>
#include <vector>

#include "omegacube/cubical.hpp"

namespace omegacube {

// A folded element at its lowest grade: x in G_grade is folded and, unless
// grade is 0, not of the form e_1 y.
struct GammaRep {
  int grade;
  Elem elem;
  bool operator==(const GammaRep&) const = default;
};

// The globular omega-category of folded elements of G, glued along e_1. Faces
// and composites are computed at a common grade and brought back down.
class GammaCategory : public OmegaView {
 public:
  explicit GammaCategory(const CubicalCategory& g);

  std::size_t size() const override { return reps_.size(); }
  int top_level() const override { return g_->kmax(); }
  int dim(Elem x) const override { return reps_.at(x).grade; }
  Elem face(Sign s, int p, Elem x) const override;
  std::optional<Elem> compose(Elem x, Elem y, int p) const override;
  std::string describe(Elem x) const override;

  const CubicalCategory& base() const { return *g_; }
  const GammaRep& rep(Elem x) const { return reps_.at(x); }
  // The element represented by a folded x in G_n.
  Elem of(int n, Elem x) const;
  // Lowest representative of a folded element.
  GammaRep canonical(int n, Elem x) const;
  // The representative lifted to grade n >= its own grade by e_1.
  Elem lift(Elem x, int n) const;

  nlohmann::json to_json() const;

 private:
  const CubicalCategory* g_;
  std::vector<GammaRep> reps_;
  std::vector<std::unordered_map<Elem, Elem>> index_;  // per grade
  std::vector<std::array<std::vector<Elem>, 2>> faces_;  // [p][sign][x]
  mutable std::unordered_map<std::uint64_t, std::optional<Elem>> compositions_;
};

// e_1 is injective on folded parts and commutes with the globular faces and
// composites; a folded x in G_m with d-_n x = d+_n x = x equals
// e_1^{m-n} (d-_1)^{m-n} x. All checked exhaustively on g.
Report check_gamma_structure(const CubicalCategory& g);

}  // namespace omegacube
