#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "omegacube/omega_category.hpp"
#include "omegacube/path_complex.hpp"

namespace omegacube {

// How a member was first produced: a single cell, or a composite x #_p y.
struct Witness {
  bool atom = true;
  std::uint32_t left = 0;  // cell index when atom, else left member
  std::uint32_t right = 0;
  int level = 0;
  bool operator==(const Witness&) const = default;
};

struct Member {
  CellSet cells;
  int dim = 0;
  // faces[sign][p] for p = 0..top-1; levels p >= dim hold the member itself
  std::array<std::vector<Elem>, 2> faces;
  Witness witness;
  std::optional<Witness> alt_witness;
};

// The omega-category generated by the cells of a product of directed
// intervals. Members are downward-closed sets of cells; composition is union.
class MCategory : public OmegaView {
 public:
  // Saturates the cells under all defined compositions. Throws if more than
  // member_cap members appear (0 means no cap).
  static MCategory build(const Shape& shape, std::size_t member_cap = 0);

  const Shape& shape() const { return shape_; }
  std::size_t size() const override { return members_.size(); }
  int top_level() const override { return shape_.top_dim(); }
  int dim(Elem x) const override { return members_.at(x).dim; }
  Elem face(Sign s, int p, Elem x) const override;
  std::optional<Elem> compose(Elem x, Elem y, int p) const override;
  std::string describe(Elem x) const override;

  const Member& member(Elem x) const { return members_.at(x); }
  const std::vector<Member>& members() const { return members_; }
  std::optional<Elem> find(const CellSet& s) const;
  Elem at(const CellSet& s) const;
  Elem cell_member(std::size_t cell_index) const { return cell_member_.at(cell_index); }
  Elem cell_member(const Cell& c) const { return cell_member_.at(shape_.index(c)); }
  // The member consisting of every cell.
  Elem whole() const;

  // Every defined x #_p y with p below the top level, as (x, y, p, result).
  std::vector<std::array<Elem, 4>> composition_triples() const;

  // Overwrites one face entry; used to build corrupted copies for tests.
  void set_face(Sign s, int p, Elem x, Elem target);

  nlohmann::json to_json() const;
  // Trusts the stored faces and composition table, so a corrupted document
  // yields an object on which the axiom checker reports violations.
  static MCategory from_json(const nlohmann::json& j);

 private:
  Shape shape_;
  std::vector<Member> members_;
  std::unordered_map<CellSet, Elem> index_;
  std::vector<Elem> cell_member_;
  // present only for categories read from a document
  std::optional<std::unordered_map<std::uint64_t, Elem>> table_;
};

std::string member_string(const Shape& shape, const CellSet& s);

// x x y as a member of M(K x L). Throws std::logic_error if the product set
// is missing from the table of kl.
Elem product_member(const MCategory& k, Elem x, const MCategory& l, Elem y, const MCategory& kl);

// For every member pair and level p, d^a_p(x x y) against the union over
// i = 0..p of d^a_i x x d^b_{p-i} y, with b = a for even i and -a for odd i.
Report product_face_check(const MCategory& k, const MCategory& l);

}  // namespace omegacube
