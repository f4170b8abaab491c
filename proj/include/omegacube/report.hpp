#pragma once

#include <cstddef>
#include <string>
#include <deque>
#include <vector>

#include <json.hpp>

namespace omegacube {

enum class Status { pass, fail, skipped };

std::string status_name(Status s);

// Outcome of one axiom or relation over all of its instances.
struct AxiomResult {
  std::string id;
  std::size_t instances = 0;   // instances actually evaluated
  std::size_t skipped = 0;     // instances that needed data outside the truncation
  std::size_t violations = 0;
  std::vector<std::string> witnesses;  // first few violating instances
  std::string mode = "exhaustive";

  static constexpr std::size_t kMaxWitnesses = 8;

  Status status() const;

  template <class Describe>
  void record(bool ok, Describe&& describe) {
    ++instances;
    if (ok) return;
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(describe());
  }
  void skip(std::size_t n = 1) { skipped += n; }
};

struct Report {
  std::string subject;
  std::deque<AxiomResult> results;  // deque: references from add() stay valid

  AxiomResult& add(std::string id);
  AxiomResult* find(const std::string& id);
  const AxiomResult* find(const std::string& id) const;
  void merge(const Report& other, const std::string& prefix = "");
  bool passed() const;
  std::size_t total_instances() const;
  std::size_t total_skipped() const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

}  // namespace omegacube
