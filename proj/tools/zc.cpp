// zc: degree-based topological indices, bound evaluation and certification
// campaigns from the command line.
//
// Exit codes: 0 certified / success, 1 violations found, 2 usage or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zc/bounds.hpp"
#include "zc/error.hpp"
#include "zc/graph6.hpp"
#include "zc/harness.hpp"
#include "zc/structure.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

// A literal graph6 string, a path to a graph6 file, or "-" for stdin.
std::unique_ptr<zc::GraphSource> open_input(const std::string& arg) {
  if (arg == "-" || std::filesystem::exists(arg)) return zc::scan_graph6(arg);
  return std::make_unique<zc::VectorSource>(std::vector<zc::Graph>{zc::parse_graph6(arg)}, arg);
}

std::string optional_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "null"; }

int cmd_invariants(const std::string& input, bool as_json) {
  auto source = open_input(input);
  while (auto item = source->next()) {
    const zc::Graph& g = item->graph;
    zc::InvariantProfile p = zc::profile(g);
    if (g.order() > 0) zc::fill_structure(p, g);
    if (as_json) {
      nlohmann::ordered_json j;
      j["graph6"] = zc::to_graph6(g);
      j["n"] = p.n;
      j["e"] = p.e;
      j["delta"] = p.delta;
      j["Delta"] = p.Delta;
      j["z1"] = p.z1;
      j["f"] = p.f;
      j["inv"] = p.inv ? nlohmann::ordered_json(p.inv->to_string()) : nlohmann::ordered_json(nullptr);
      j["beta"] = p.beta ? nlohmann::ordered_json(*p.beta) : nlohmann::ordered_json(nullptr);
      j["kappa"] = p.kappa ? nlohmann::ordered_json(*p.kappa) : nlohmann::ordered_json(nullptr);
      std::cout << j.dump() << '\n';
    } else {
      std::cout << zc::to_graph6(g) << " n=" << p.n << " e=" << p.e << " delta=" << p.delta << " Delta=" << p.Delta
                << " Z1=" << p.z1 << " F=" << p.f << " Inv=" << (p.inv ? p.inv->to_string() : "undefined")
                << " beta=" << optional_str(p.beta) << " kappa=" << optional_str(p.kappa) << '\n';
    }
  }
  return kOk;
}

int check_theorem1(const zc::Graph& g, std::optional<int> only_part) {
  const std::string g6 = zc::to_graph6(g);
  zc::InvariantProfile p = zc::profile(g);
  if (!p.inv) {
    std::cout << g6 << " skipped: minimum degree 0\n";
    return kOk;
  }
  p.beta = zc::independence_number(g).beta;
  const zc::BoundReport r = zc::theorem1_report(p);
  const bool rbb = zc::is_regular_balanced_bipartite(g);
  int status = kOk;
  for (int part = 1; part <= 5; ++part) {
    if (only_part && *only_part != part) continue;
    const char* index = part == 1 ? "Z1" : part <= 3 ? "F" : "Inv";
    const zc::Rational actual = part == 1 ? zc::Rational(r.actual_z1) : part <= 3 ? zc::Rational(r.actual_f)
                                                                                   : r.actual_inv;
    std::cout << g6 << " theorem1 part" << part << ' ' << index << '=' << actual << (part == 1 ? " <= " : " >= ")
              << r.bounds.part(part) << ' ' << zc::to_string(r.verdict(part)) << '\n';
    if (r.verdict(part) == zc::Verdict::Violated) status = kViolations;
  }
  if (!only_part) {
    std::cout << g6 << " beta=" << r.inputs.b << " all_equality=" << std::boolalpha << r.all_equality()
              << " regular_balanced_bipartite=" << rbb << '\n';
    if (r.all_equality() != rbb) status = kViolations;
  }
  return status;
}

int check_conditions(const zc::Graph& g, int theorem, std::optional<int> only_part, std::optional<std::size_t> only_k) {
  const std::string g6 = zc::to_graph6(g);
  zc::InvariantProfile p = zc::profile(g);
  p.kappa = zc::vertex_connectivity(g);
  const std::size_t min_k = theorem == 2 ? 2 : 1;
  const std::size_t offset = theorem == 2 ? 1 : 2;
  std::vector<std::size_t> ks;
  if (only_k) {
    ks.push_back(*only_k);
  } else {
    for (std::size_t k = min_k; k <= *p.kappa && k + offset < p.n; ++k) ks.push_back(k);
  }
  if (ks.empty()) {
    std::cout << g6 << " skipped: no admissible k (kappa=" << *p.kappa << ", n=" << p.n << ")\n";
    return kOk;
  }
  int status = kOk;
  std::optional<bool> oracle;
  for (std::size_t k : ks) {
    std::array<zc::ConditionVerdict, 5> verdicts;
    try {
      verdicts = zc::evaluate_conditions(p, theorem, k);
    } catch (const zc::HypothesisError& e) {
      std::cout << g6 << " k=" << k << " skipped: " << e.what() << '\n';
      continue;
    }
    for (const auto& v : verdicts) {
      if (only_part && *only_part != v.part) continue;
      const char* index = v.part == 1 ? "Z1" : v.part <= 3 ? "F" : "Inv";
      std::cout << g6 << " theorem" << theorem << " part" << v.part << " k=" << k << ' ' << index << '='
                << v.index_value << (v.part == 1 ? " >= " : " <= ") << v.bound << ' '
                << (v.holds ? "holds" : "fails");
      if (v.holds) {
        if (!oracle) oracle = theorem == 2 ? zc::has_hamiltonian_cycle(g) : zc::has_hamiltonian_path(g);
        std::cout << ' ' << (theorem == 2 ? "hamiltonian=" : "traceable=") << std::boolalpha << *oracle;
        if (!*oracle) status = kViolations;
      }
      std::cout << '\n';
    }
  }
  return status;
}

int cmd_check(const std::string& input, int theorem, std::optional<int> part, std::optional<std::size_t> k) {
  auto source = open_input(input);
  int status = kOk;
  while (auto item = source->next()) {
    const int s = theorem == 1 ? check_theorem1(item->graph, part) : check_conditions(item->graph, theorem, part, k);
    status = std::max(status, s);
  }
  return status;
}

int cmd_validate(int theorem, std::optional<std::size_t> enumerate, const std::string& corpus, std::size_t jobs,
                 const std::string& format, const std::string& out_path, bool no_elapsed, bool skip_bad_lines) {
  std::unique_ptr<zc::GraphSource> source;
  if (enumerate) {
    source = zc::enumerate_labeled_graphs_up_to(*enumerate);
  } else {
    source = zc::scan_graph6(corpus, !skip_bad_lines);
  }
  const zc::CampaignOptions options{.jobs = jobs};
  const zc::CampaignResult result = theorem == 1 ? zc::run_theorem1_campaign(*source, options)
                                                 : zc::run_theorem23_campaign(*source, theorem, options);
  const auto fmt = format == "csv" ? zc::ReportFormat::Csv : zc::ReportFormat::JsonLines;
  const std::string report = zc::emit_report(result, fmt, {.include_elapsed = !no_elapsed});
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path);
    if (!out) throw zc::Error("cannot write report to '" + out_path + "'");
    out << report;
  }
  std::cerr << "theorem " << theorem << ": " << result.graphs_scanned << " graphs, " << result.violations.size()
            << " violations, " << result.equality_witnesses.size() << " equality witnesses ("
            << result.elapsed.count() << " s)\n";
  return result.certified() ? kOk : kViolations;
}

int cmd_oracle(const std::string& input, bool traceable) {
  auto source = open_input(input);
  while (auto item = source->next()) {
    const bool answer = traceable ? zc::has_hamiltonian_path(item->graph) : zc::has_hamiltonian_cycle(item->graph);
    std::cout << zc::to_graph6(item->graph) << ' ' << std::boolalpha << answer << '\n';
  }
  return kOk;
}

int cmd_sample(std::size_t order, std::size_t count, std::uint64_t seed, double p_min, double p_max,
               bool connected, const std::string& out_path) {
  if (order > zc::kGraph6MaxOrder) throw zc::Error("sample order must be <= 62");
  if (!(0.0 <= p_min && p_min <= p_max && p_max <= 1.0)) throw zc::Error("need 0 <= p-min <= p-max <= 1");
  if (connected && p_max == 0.0 && order > 1) throw zc::Error("cannot sample connected graphs with p = 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(p_min, p_max);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw zc::Error("cannot write '" + out_path + "'");
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  for (std::size_t i = 0; i < count; ++i) {
    const double p = connected ? std::max(density(rng), 1e-3) : density(rng);
    out << zc::to_graph6(zc::random_graph(order, p, rng, connected)) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zc: Zagreb / forgotten / inverse-degree bounds and Hamiltonicity conditions"};
  app.require_subcommand(1);

  std::string input;
  bool as_json = false;
  auto* invariants = app.add_subcommand("invariants", "Print the invariant profile of each graph");
  invariants->add_option("input", input, "graph6 string, graph6 file, or - for stdin")->required();
  invariants->add_flag("--json", as_json, "One JSON object per graph");

  int theorem = 1;
  std::optional<int> part;
  std::optional<std::size_t> k;
  auto* check = app.add_subcommand("check", "Per-graph bound verdicts (1) or sufficient conditions (2, 3)");
  check->add_option("--theorem", theorem, "1: bounds, 2: Hamiltonian conditions, 3: traceable conditions")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  check->add_option("--part", part, "Only this part")->check(CLI::Range(1, 5));
  check->add_option("--k", k, "Connectivity parameter (theorems 2 and 3); default: every admissible k");
  check->add_option("input", input, "graph6 string, graph6 file, or - for stdin")->required();

  std::optional<std::size_t> enumerate;
  std::string corpus;
  std::size_t jobs = 1;
  std::string format = "json-lines";
  std::string out_path;
  bool no_elapsed = false;
  bool skip_bad_lines = false;
  auto* validate = app.add_subcommand("validate", "Run a certification campaign and emit a report");
  validate->add_option("--theorem", theorem, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  auto* enum_opt = validate->add_option("--enumerate", enumerate, "All labeled graphs with 1..N vertices (N <= 7)")
                       ->check(CLI::Range(1, 7));
  auto* corpus_opt = validate->add_option("--corpus", corpus, "graph6 file (or - for stdin)");
  enum_opt->excludes(corpus_opt);
  validate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  validate->add_option("--format", format, "json-lines or csv")->check(CLI::IsMember({"json-lines", "csv"}));
  validate->add_option("--out", out_path, "Write the report here instead of stdout");
  validate->add_flag("--no-elapsed", no_elapsed, "Omit timing so reports compare byte for byte");
  validate->add_flag("--skip-bad-lines", skip_bad_lines, "Log and skip malformed corpus lines instead of aborting");

  bool hamiltonian = false;
  bool traceable = false;
  auto* oracle = app.add_subcommand("oracle", "Exact Hamiltonian cycle / path decision");
  auto* ham_flag = oracle->add_flag("--hamiltonian", hamiltonian, "Decide Hamiltonian cycle");
  auto* trace_flag = oracle->add_flag("--traceable", traceable, "Decide Hamiltonian path");
  ham_flag->excludes(trace_flag);
  oracle->add_option("input", input, "graph6 string, graph6 file, or - for stdin")->required();

  std::size_t order = 0;
  std::size_t count = 0;
  std::uint64_t seed = 1;
  double p_min = 0.5;
  double p_max = 0.5;
  bool connected = false;
  auto* sample = app.add_subcommand("sample", "Write random G(n, p) graphs as graph6 lines");
  sample->add_option("--order", order, "Vertex count")->required();
  sample->add_option("--count", count, "Number of graphs")->required();
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--p-min", p_min, "Lower end of the edge-density range");
  sample->add_option("--p-max", p_max, "Upper end of the edge-density range");
  sample->add_flag("--connected", connected, "Redraw until connected");
  sample->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*invariants) return cmd_invariants(input, as_json);
    if (*check) return cmd_check(input, theorem, part, k);
    if (*validate) {
      if (!enumerate && corpus.empty()) {
        std::cerr << "validate: one of --enumerate or --corpus is required\n";
        return kUsage;
      }
      if (theorem != 1 && enumerate && theorem == 3) {
        std::cerr << "note: --theorem 3 needs n >= 9; labeled enumeration stops at 7, so every graph is skipped\n";
      }
      return cmd_validate(theorem, enumerate, corpus, jobs, format, out_path, no_elapsed, skip_bad_lines);
    }
    if (*oracle) {
      if (!hamiltonian && !traceable) {
        std::cerr << "oracle: pass --hamiltonian or --traceable\n";
        return kUsage;
      }
      return cmd_oracle(input, traceable);
    }
    if (*sample) {
      if (!(p_min <= p_max)) p_max = p_min;
      return cmd_sample(order, count, seed, p_min, p_max, connected, out_path);
    }
  } catch (const zc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
