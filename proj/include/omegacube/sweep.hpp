#pragma once

#include <string>
#include <vector>

#include "omegacube/m_category.hpp"

namespace omegacube {

// Every shape whose cube has at most max_cells cells, by cell count and then
// lexicographically; the empty shape (a point) included.
std::vector<Shape> shapes_up_to(std::size_t max_cells);

struct SweepOptions {
  std::size_t max_cells = 200;
  // Shapes generating more members are not built to completion.
  std::size_t member_cap = 6000;
  // Wall-clock seconds for the whole sweep; 0 means unlimited.
  double budget_seconds = 0;
};

struct SweepEntry {
  std::string shape;
  std::string outcome;  // "pass", "fail", "over-cap", "out-of-time"
  std::size_t members = 0;
  double seconds = 0;
};

struct SweepResult {
  std::vector<SweepEntry> entries;
  std::size_t verified = 0;
  std::size_t violated = 0;
  bool negative_control_caught = false;
  bool complete() const { return verified == entries.size() && negative_control_caught; }
  nlohmann::json to_json() const;
};

// Exhaustive omega-axiom check over every shape of shapes_up_to, plus a
// corrupted square as negative control.
SweepResult omega_sweep(const SweepOptions& opts = {});

}  // namespace omegacube
