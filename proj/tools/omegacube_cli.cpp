#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "omegacube/analysis.hpp"
#include "omegacube/cubical.hpp"
#include "omegacube/equivalence.hpp"
#include "omegacube/folding.hpp"
#include "omegacube/sweep.hpp"
#include "omegacube/tensor_hom.hpp"

using namespace omegacube;

namespace {

// exit codes
constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string shape;
  bool shape_given = false;
  std::string in;
  std::string out;
  std::string format = "json";
  std::string kind;
  int kmax = -1;
  std::size_t cap = 2'000'000;
  std::uint64_t seed = 1;
  double budget = 0;
  int tensor_m = 1, tensor_n = 1;
};

double default_budget() {
  const char* env = std::getenv("OMEGACUBE_BUDGET");
  if (!env || !*env) return 0;
  try {
    return std::stod(env);
  } catch (const std::exception&) {
    throw UsageError("OMEGACUBE_BUDGET is not a number: " + std::string(env));
  }
}

Shape shape_of(const RunConfig& c) {
  if (!c.shape_given) throw UsageError("--shape is required");
  try {
    return parse_shape(c.shape);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json read_doc(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) return;
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

int finish(const RunConfig& c, const Report& r) {
  std::cout << r.summary();
  emit(c, r.to_json().dump(2) + "\n");
  return r.passed() ? kPass : kViolation;
}

MCategory load_m(const RunConfig& c) {
  if (!c.in.empty()) return MCategory::from_json(read_doc(c.in));
  return MCategory::build(shape_of(c), c.cap);
}

std::string face_poset_dot(const MCategory& m) {
  std::ostringstream o;
  o << "digraph \"M(" << m.shape().str() << ")\" {\n  rankdir=BT;\n";
  for (Elem x = 0; x < m.size(); ++x)
    o << "  m" << x << " [label=\"" << m.describe(x) << "\\ndim " << m.dim(x) << "\"];\n";
  for (Elem x = 0; x < m.size(); ++x)
    for (int p = 0; p < m.top_level(); ++p)
      for (Sign s : kSigns) {
        Elem f = m.face(s, p, x);
        if (f != x) o << "  m" << x << " -> m" << f << " [label=\"d" << sign_char(s) << p << "\"];\n";
      }
  o << "}\n";
  return o.str();
}

int cmd_build(const RunConfig& c) {
  MCategory m = MCategory::build(shape_of(c), c.cap);
  std::cout << "M(" << m.shape().str() << "): " << m.size() << " members, " << m.shape().cell_count() << " cells\n";
  if (c.format == "dot")
    emit(c, face_poset_dot(m));
  else
    emit(c, m.to_json().dump(2) + "\n");
  return kPass;
}

int cmd_nerve(const RunConfig& c) {
  const MCategory& m = m_of(shape_of(c));
  NerveCategory g(m, c.kmax < 0 ? 2 : c.kmax, c.cap);
  std::cout << "nerve of M(" << m.shape().str() << ") to grade " << g.kmax() << ":";
  for (int n = 0; n <= g.kmax(); ++n) std::cout << " " << g.size(n);
  std::cout << "\n";
  nlohmann::json j = g.to_json();
  j["shape"] = m.shape().str();
  emit(c, j.dump() + "\n");
  return kPass;
}

int cmd_check(const RunConfig& c) {
  if (c.kind == "omega") {
    OmegaCheckOptions o;
    o.seed = c.seed;
    return finish(c, check_omega_axioms(load_m(c), o));
  }
  if (c.kind == "cubical") {
    CubicalCheckOptions o;
    o.seed = c.seed;
    if (!c.in.empty()) {
      nlohmann::json j = read_doc(c.in);
      const MCategory& m = m_of(parse_shape(j.at("shape").get<std::string>()));
      return finish(c, check_cubical_axioms(NerveCategory::from_json(m, j), o));
    }
    NerveCategory g(m_of(shape_of(c)), c.kmax < 0 ? 3 : c.kmax, c.cap);
    return finish(c, check_cubical_axioms(g, o));
  }
  if (c.kind == "folding") {
    NerveCategory g(m_of(shape_of(c)), c.kmax < 0 ? 3 : c.kmax, c.cap);
    FoldingOptions o;
    o.seed = c.seed;
    return finish(c, relation_suite(g, o));
  }
  if (c.kind == "tensor") return finish(c, tensor_cells_check(c.tensor_m, c.tensor_n));
  if (c.kind == "sweep") {
    SweepOptions o;
    o.budget_seconds = c.budget;
    SweepResult r = omega_sweep(o);
    std::size_t over = 0, late = 0;
    for (const auto& e : r.entries) {
      if (e.outcome == "over-cap") ++over;
      if (e.outcome == "out-of-time") ++late;
      if (e.outcome == "fail") std::cout << "violation in M(" << e.shape << ")\n";
    }
    std::cout << "verified " << r.verified << "/" << r.entries.size() << " shapes, " << over << " over the member cap, "
              << late << " out of time; negative control " << (r.negative_control_caught ? "caught" : "missed") << "\n";
    emit(c, r.to_json().dump(2) + "\n");
    return r.violated == 0 && r.negative_control_caught && r.complete() ? kPass : kViolation;
  }
  throw UsageError("unknown check kind: " + c.kind);
}

int cmd_roundtrip(const RunConfig& c) {
  RoundtripOptions o;
  o.kmax = c.kmax;
  o.cap = c.cap;
  return finish(c, roundtrip_report(m_of(shape_of(c)), o));
}

int cmd_analyze(const RunConfig& c) {
  NerveCategory g(m_of(shape_of(c)), c.kmax < 0 ? 2 : c.kmax, c.cap);
  // thinness starts at grade 1
  for (int n = 1; n <= g.kmax(); ++n) {
    Census k = census(g, n);
    std::cout << "grade " << n << ": " << k.elements << " elements, " << k.thin << " thin, " << k.commutative
              << " commutative shells\n";
  }
  AnalysisOptions o;
  o.seed = c.seed;
  o.max_grade = g.kmax();
  return finish(c, analysis_report(g, o));
}

int cmd_export_dot(const RunConfig& c) {
  std::string dot = face_poset_dot(load_m(c));
  if (c.out.empty())
    std::cout << dot;
  else
    emit(c, dot);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omegacube: cube omega-categories, their nerves and the folding equivalence"};
  app.require_subcommand(1);
  RunConfig c;
  try {
    c.budget = default_budget();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  std::vector<CLI::Option*> shape_opts;
  auto shape_opt = [&](CLI::App* s) {
    // a bare --shape is the point
    shape_opts.push_back(
        s->add_option("--shape", c.shape, "lengths of the intervals, e.g. 1x1 or 2; empty for a point")->expected(0, 1));
  };
  auto common = [&](CLI::App* s) {
    s->add_option("--cap", c.cap, "enumeration cap");
    s->add_option("--out", c.out, "write the document or report here");
  };

  auto* build = app.add_subcommand("build", "build M(K) and write it as a document");
  shape_opt(build);
  common(build);
  build->add_option("--format", c.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* nerve = app.add_subcommand("nerve", "build the nerve of M(K) and write it as a document");
  shape_opt(nerve);
  common(nerve);
  nerve->add_option("--kmax", c.kmax, "top grade (default 2)");

  auto* check = app.add_subcommand("check", "run an axiom or relation suite");
  check->add_option("kind", c.kind, "omega, cubical, folding, tensor or sweep")
      ->required()
      ->check(CLI::IsMember({"omega", "cubical", "folding", "tensor", "sweep"}));
  shape_opt(check);
  common(check);
  check->add_option("--in", c.in, "document written by build (omega) or nerve (cubical)");
  check->add_option("--kmax", c.kmax, "top grade of the nerve (default 3)");
  check->add_option("--seed", c.seed, "sampling seed");
  check->add_option("--budget", c.budget, "seconds for the sweep; 0 is unlimited (default $OMEGACUBE_BUDGET)");
  check->add_option("--m", c.tensor_m, "first cube dimension for the tensor check");
  check->add_option("--n", c.tensor_n, "second cube dimension for the tensor check");

  auto* rt = app.add_subcommand("roundtrip", "check the equivalence between M(K) and its nerve");
  shape_opt(rt);
  common(rt);
  rt->add_option("--kmax", c.kmax, "top grade of the nerve (default dimension + 1)");

  auto* an = app.add_subcommand("analyze", "thin and commutative-shell census of the nerve");
  shape_opt(an);
  common(an);
  an->add_option("--kmax", c.kmax, "top grade (default 2)");
  an->add_option("--seed", c.seed, "sampling seed");

  auto* dot = app.add_subcommand("export-dot", "face poset of M(K) as a DOT graph");
  shape_opt(dot);
  common(dot);
  dot->add_option("--in", c.in, "document written by build");

  try {
    app.parse(argc, argv);
    for (auto* o : shape_opts) c.shape_given = c.shape_given || o->count() > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*build) return cmd_build(c);
    if (*nerve) return cmd_nerve(c);
    if (*check) return cmd_check(c);
    if (*rt) return cmd_roundtrip(c);
    if (*an) return cmd_analyze(c);
    if (*dot) return cmd_export_dot(c);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad document: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
