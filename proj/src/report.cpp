#include "omegacube/report.hpp"

#include <sstream>

namespace omegacube {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Status AxiomResult::status() const {
  if (violations > 0) return Status::fail;
  if (instances == 0) return Status::skipped;
  return Status::pass;
}

AxiomResult& Report::add(std::string id) {
  results.push_back(AxiomResult{});
  results.back().id = std::move(id);
  return results.back();
}

AxiomResult* Report::find(const std::string& id) {
  for (auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

const AxiomResult* Report::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (AxiomResult r : other.results) {
    r.id = prefix + r.id;
    results.push_back(std::move(r));
  }
}

bool Report::passed() const {
  for (const auto& r : results)
    if (r.status() == Status::fail) return false;
  return true;
}

std::size_t Report::total_instances() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.instances;
  return n;
}

std::size_t Report::total_skipped() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.skipped;
  return n;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["passed"] = passed();
  auto arr = nlohmann::json::array();
  for (const auto& r : results) {
    arr.push_back({{"id", r.id},
                   {"status", status_name(r.status())},
                   {"mode", r.mode},
                   {"instances", r.instances},
                   {"skipped", r.skipped},
                   {"violations", r.violations},
                   {"witnesses", r.witnesses}});
  }
  j["results"] = std::move(arr);
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << subject << ": " << (passed() ? "pass" : "FAIL") << '\n';
  for (const auto& r : results) {
    os << "  " << status_name(r.status()) << "  " << r.id << "  instances=" << r.instances;
    if (r.skipped) os << " skipped=" << r.skipped;
    if (r.mode != "exhaustive") os << " (" << r.mode << ")";
    os << '\n';
    for (const auto& w : r.witnesses) os << "      " << w << '\n';
  }
  return os.str();
}

}  // namespace omegacube
