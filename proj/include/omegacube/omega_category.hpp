#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omegacube/path_complex.hpp"
#include "omegacube/report.hpp"

namespace omegacube {

using Elem = std::uint32_t;

// Read-only access to a finite omega-category whose elements are numbered
// 0..size()-1. Faces at levels above top_level() are identities.
class OmegaView {
 public:
  virtual ~OmegaView() = default;
  virtual std::size_t size() const = 0;
  virtual int top_level() const = 0;
  virtual int dim(Elem x) const = 0;
  virtual Elem face(Sign s, int p, Elem x) const = 0;
  // x #_p y, or nullopt when undefined.
  virtual std::optional<Elem> compose(Elem x, Elem y, int p) const = 0;
  virtual std::string describe(Elem x) const { return "#" + std::to_string(x); }
};

struct OmegaCheckOptions {
  // Above this many (x, y, p) candidates the "defined only if" scan is sampled.
  std::size_t pair_scan_limit = 4'000'000;
  // Above this many instances associativity and interchange are sampled.
  std::size_t instance_cap = 20'000'000;
  std::size_t sample_size = 200'000;
  std::uint64_t seed = 1;
};

// Checks the seven omega-category axioms: domain of composition, face
// identities, faces of composites, units, associativity, interchange, and
// the characterisation of dimension.
Report check_omega_axioms(const OmegaView& c, const OmegaCheckOptions& opts = {});

// Elements grouped by source face, for listing composable partners quickly.
class ComposableIndex {
 public:
  explicit ComposableIndex(const OmegaView& c);
  // All y with d^-_p y = d^+_p x.
  const std::vector<Elem>& right_partners(Elem x, int p) const;
  int levels() const { return levels_; }

 private:
  const OmegaView* c_;
  int levels_;
  std::vector<std::vector<std::vector<Elem>>> by_source_;  // [p][source] -> ys
};

}  // namespace omegacube
