#include "omegacube/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

namespace omegacube {

namespace {

void extend(std::vector<int>& lens, std::size_t cells, std::size_t max_cells, std::vector<std::vector<int>>& out) {
  out.push_back(lens);
  for (int l = 1; cells * static_cast<std::size_t>(2 * l + 1) <= max_cells; ++l) {
    lens.push_back(l);
    extend(lens, cells * static_cast<std::size_t>(2 * l + 1), max_cells, out);
    lens.pop_back();
  }
}

std::string shape_text(const std::vector<int>& lens) {
  std::string s;
  for (std::size_t k = 0; k < lens.size(); ++k) s += (k ? "x" : "") + std::to_string(lens[k]);
  return s;
}

OmegaCheckOptions exhaustive() {
  OmegaCheckOptions o;
  o.pair_scan_limit = std::numeric_limits<std::size_t>::max();
  o.instance_cap = std::numeric_limits<std::size_t>::max();
  return o;
}

}  // namespace

std::vector<Shape> shapes_up_to(std::size_t max_cells) {
  std::vector<std::vector<int>> all;
  std::vector<int> lens;
  extend(lens, 1, max_cells, all);
  auto cells = [](const std::vector<int>& v) {
    std::size_t c = 1;
    for (int l : v) c *= static_cast<std::size_t>(2 * l + 1);
    return c;
  };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return cells(a) < cells(b); });
  std::vector<Shape> out;
  for (const auto& v : all) out.push_back(parse_shape(shape_text(v)));
  return out;
}

nlohmann::json SweepResult::to_json() const {
  nlohmann::json j;
  j["shapes"] = entries.size();
  j["verified"] = verified;
  j["violated"] = violated;
  j["negative_control_caught"] = negative_control_caught;
  auto e = nlohmann::json::array();
  for (const auto& x : entries)
    e.push_back({{"shape", x.shape}, {"outcome", x.outcome}, {"members", x.members}});
  j["entries"] = std::move(e);
  return j;
}

SweepResult omega_sweep(const SweepOptions& opts) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };
  SweepResult res;

  MCategory bad = MCategory::build(parse_shape("1x1"));
  Elem w = bad.whole();
  const Elem src = bad.face(Sign::minus, 0, w), tgt = bad.face(Sign::plus, 0, w);
  bad.set_face(Sign::minus, 0, w, tgt);
  bad.set_face(Sign::plus, 0, w, src);
  res.negative_control_caught = !check_omega_axioms(bad, exhaustive()).passed();

  for (const Shape& s : shapes_up_to(opts.max_cells)) {
    SweepEntry e;
    e.shape = s.str();
    if (opts.budget_seconds > 0 && elapsed() > opts.budget_seconds) {
      e.outcome = "out-of-time";
      res.entries.push_back(e);
      continue;
    }
    const double t0 = elapsed();
    try {
      MCategory m = MCategory::build(s, opts.member_cap);
      e.members = m.size();
      bool ok = check_omega_axioms(m, exhaustive()).passed();
      e.outcome = ok ? "pass" : "fail";
      (ok ? res.verified : res.violated)++;
    } catch (const std::length_error&) {
      e.outcome = "over-cap";
    }
    e.seconds = elapsed() - t0;
    res.entries.push_back(e);
  }
  return res;
}

}  // namespace omegacube
