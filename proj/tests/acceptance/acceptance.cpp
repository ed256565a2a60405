// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All comparisons are exact (integers or rationals).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "zc/bounds.hpp"
#include "zc/error.hpp"
#include "zc/graph6.hpp"
#include "zc/harness.hpp"
#include "zc/structure.hpp"

namespace {

using namespace zc;
using Clock = std::chrono::steady_clock;

struct Settings {
  std::size_t jobs = 1;
  std::filesystem::path workdir = std::filesystem::temp_directory_path();
};

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    if (!ok) pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational q(const char* s) { return Rational::parse(s); }

std::string summarize(const CampaignResult& r) {
  std::ostringstream os;
  os << r.corpus_description << ": " << r.graphs_scanned << " graphs, " << r.violations.size() << " violations";
  for (const auto& [name, count] : r.counters) os << ", " << name << "=" << count;
  if (!r.violations.empty()) {
    os << " [e.g. " << r.violations.front().graph6 << " " << r.violations.front().check << " "
       << r.violations.front().detail << "]";
  }
  return os.str();
}

// Remove a degree-3 vertex whose neighbours are pairwise nonadjacent and join
// those neighbours into a triangle.
std::optional<Graph> y_delta(const Graph& g, Vertex v) {
  if (g.degree(v) != 3) return std::nullopt;
  const auto nb = g.neighbors(v).to_vector();
  if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) || g.has_edge(nb[1], nb[2])) return std::nullopt;
  auto edges = g.edges();
  std::erase_if(edges, [v](auto e) { return e.first == v || e.second == v; });
  edges.emplace_back(nb[0], nb[1]);
  edges.emplace_back(nb[0], nb[2]);
  edges.emplace_back(nb[1], nb[2]);
  return Graph::from_edge_list(g.order(), edges).induced(g.vertices() - VertexSet::single(v));
}

// Every labeled graph reachable from the Petersen graph by Y-Delta moves.
std::vector<Graph> petersen_family() {
  std::vector<Graph> out{named::petersen()};
  std::set<std::string> seen{to_graph6(out.front())};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Graph g = out[i];
    for (Vertex v = 0; v < g.order(); ++v) {
      if (auto h = y_delta(g, v); h && seen.insert(to_graph6(*h)).second) out.push_back(*h);
    }
  }
  return out;
}

// Writes `count` random connected graphs with density in [0.2, 0.95] as graph6.
std::filesystem::path write_corpus(const Settings& s, const std::string& name, std::size_t order, std::size_t count,
                                   std::uint64_t seed) {
  const auto path = s.workdir / name;
  std::ofstream out(path);
  out << ">>graph6<<\n";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.2, 0.95);
  for (std::size_t i = 0; i < count; ++i) out << to_graph6(random_graph(order, density(rng), rng, true)) << '\n';
  return path;
}

// Every line of the corpus must survive parse -> encode unchanged.
bool corpus_round_trips(const std::filesystem::path& path, std::size_t& lines) {
  std::ifstream in(path);
  std::string line;
  lines = 0;
  while (std::getline(in, line)) {
    if (line.starts_with(">>graph6<<")) continue;
    ++lines;
    if (to_graph6(parse_graph6(line)) != line) return false;
  }
  return true;
}

Outcome named_graph_regression() {
  Outcome o;
  const auto start = Clock::now();
  struct Expected {
    const char* name;
    Graph g;
    std::int64_t z1, f;
    Rational inv;
    std::size_t beta, kappa;
  };
  const std::vector<Expected> table{
      {"C4", named::cycle(4), 16, 32, Rational(2), 2, 2},
      {"C6", named::cycle(6), 24, 48, Rational(3), 3, 2},
      {"Q3", named::hypercube(3), 72, 216, q("8/3"), 4, 3},
      {"K4", named::complete(4), 36, 108, q("4/3"), 1, 3},
      {"K2,3", named::complete_bipartite(2, 3), 30, 78, q("13/6"), 3, 2},
      {"Petersen", named::petersen(), 90, 270, q("10/3"), 4, 3},
  };
  for (const auto& row : table) {
    InvariantProfile p = profile(row.g);
    fill_structure(p, row.g);
    const std::string n = row.name;
    o.require(p.z1 == row.z1, n + " Z1");
    o.require(p.f == row.f, n + " F");
    o.require(p.inv && *p.inv == row.inv, n + " Inv");
    o.require(p.beta == row.beta, n + " beta=" + std::to_string(*p.beta));
    o.require(p.kappa == row.kappa, n + " kappa=" + std::to_string(*p.kappa));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  o.note << "6 graphs in " << elapsed << " s";
  return o;
}

struct Theorem1Outcomes {
  Outcome universality;
  Outcome biconditional;
};

Theorem1Outcomes theorem1_exhaustive(const Settings& s) {
  Theorem1Outcomes out;
  auto source = enumerate_labeled_graphs_up_to(7);
  const CampaignResult r = run_theorem1_campaign(*source, {.jobs = s.jobs});
  std::size_t bound_violations = 0, iff_violations = 0;
  for (const auto& v : r.violations) {
    if (v.check == "theorem1.equality_iff") {
      ++iff_violations;
    } else {
      ++bound_violations;
    }
  }
  out.universality.require(r.graphs_scanned == 2131019, "graph count");
  out.universality.require(bound_violations == 0, std::to_string(bound_violations) + " violated verdicts");
  out.universality.note << summarize(r);

  // Independent recount of the regular balanced bipartite side.
  std::set<std::string> rbb;
  auto again = enumerate_labeled_graphs_up_to(7);
  while (auto item = again->next()) {
    const Graph& g = item->graph;
    if (min_max_degree(g).min >= 1 && is_regular_balanced_bipartite(g)) rbb.insert(to_graph6(g));
  }
  const std::set<std::string> all_equal(r.equality_witnesses.begin(), r.equality_witnesses.end());
  out.biconditional.require(iff_violations == 0, std::to_string(iff_violations) + " asymmetric witnesses");
  out.biconditional.require(all_equal == rbb, "witness set differs from regular balanced bipartite set");
  std::size_t part_mismatch = 0;
  for (const auto& [name, count] : r.counters)
    if (name.ends_with("_equality_mismatch")) part_mismatch += count;
  out.biconditional.note << all_equal.size() << " all-equality graphs = " << rbb.size()
                         << " regular balanced bipartite graphs; per-part equality mismatches=" << part_mismatch;
  return out;
}

Outcome theorem2_soundness(const Settings& s) {
  Outcome o;
  auto labeled = enumerate_labeled_graphs_up_to(7);
  const CampaignResult small = run_theorem23_campaign(*labeled, 2, {.jobs = s.jobs});
  o.require(small.certified(), "labeled n<=7: " + std::to_string(small.violations.size()) + " violations");
  o.require(small.counters.count("conditions_held") == 1, "no condition ever held on n<=7");

  const auto path = write_corpus(s, "connected_n8.g6", 8, 100000, 8);
  auto corpus = scan_graph6(path.string());
  const CampaignResult eight = run_theorem23_campaign(*corpus, 2, {.jobs = s.jobs});
  o.require(eight.certified(), "n=8 corpus: " + std::to_string(eight.violations.size()) + " violations");
  o.note << summarize(small) << " | " << summarize(eight);
  return o;
}

Outcome theorem3_soundness(const Settings& s, std::vector<std::filesystem::path>& corpora) {
  Outcome o;
  for (std::size_t order : {9, 10}) {
    const auto path = write_corpus(s, "connected_n" + std::to_string(order) + ".g6", order, 100000, order);
    corpora.push_back(path);
    auto corpus = scan_graph6(path.string());
    const CampaignResult r = run_theorem23_campaign(*corpus, 3, {.jobs = s.jobs});
    o.require(r.graphs_scanned == 100000, "corpus size");
    o.require(r.certified(), "n=" + std::to_string(order) + ": " + std::to_string(r.violations.size()) + " violations");
    o.note << summarize(r) << " | ";
  }
  const auto family = petersen_family();
  VectorSource fam3(family, "Petersen Y-Delta family");
  const CampaignResult r3 = run_theorem23_campaign(fam3, 3);
  VectorSource fam2(family, "Petersen Y-Delta family");
  const CampaignResult r2 = run_theorem23_campaign(fam2, 2);
  o.require(r3.certified() && r2.certified(), "Petersen family violations");
  o.note << family.size() << " Petersen-family graphs: theorem3 " << summarize(r3) << "; theorem2 " << summarize(r2);
  return o;
}

Outcome petersen_equalities() {
  Outcome o;
  const Graph pet = named::petersen();
  const auto p1 = theorem3_condition(pet, 3, 1);
  const auto p2 = theorem3_condition(pet, 3, 2);
  const auto p4 = theorem3_condition(pet, 3, 4);
  o.require(p1.holds && p1.index_value == Rational(90) && p1.bound == Rational(90), "part 1 90 = 90");
  o.require(p2.holds && p2.index_value == Rational(270) && p2.bound == Rational(270), "part 2 270 = 270");
  o.require(p4.holds && p4.index_value == q("10/3") && p4.bound == q("10/3"), "part 4 10/3 = 10/3");
  o.require(p1.oracle_traceable == true, "Petersen traceable");
  const auto p3 = theorem3_condition(pet, 3, 3);
  const auto p5 = theorem3_condition(pet, 3, 5);
  o.note << "traceable k=3: part1 " << p1.index_value << ">=" << p1.bound << ", part2 " << p2.index_value
         << "<=" << p2.bound << ", part3 " << p3.index_value << "<=" << p3.bound << (p3.holds ? " holds" : " fails")
         << ", part4 " << p4.index_value << "<=" << p4.bound << ", part5 " << p5.index_value << "<=" << p5.bound
         << (p5.holds ? " holds" : " fails") << "; Hamiltonian k=3:";
  for (int part = 1; part <= 5; ++part) {
    const auto v = theorem2_condition(pet, 3, part, OracleMode::Always);
    o.require(!v.holds, "Hamiltonian condition part " + std::to_string(part) + " holds");
    o.require(v.oracle_hamiltonian == false, "Petersen Hamiltonian");
    o.note << " part" << part << (v.holds ? " holds" : " fails");
  }
  return o;
}

Outcome radon_chain_check() {
  Outcome o;
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> length(1, 8), den(1, 24);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto draw = [&] {
    const int d = den(rng);
    const int num = std::uniform_int_distribution<int>(1, 100 * d)(rng);  // in (0, 100]
    return Rational(BigInt(num), BigInt(d));
  };
  std::size_t random_cases = 0, scaled_cases = 0, proportional_random = 0;
  for (int i = 0; i < 10000; ++i) {
    const int s = length(rng);
    std::vector<Rational> a, b, scaled;
    const Rational c = draw();
    for (int k = 0; k < s; ++k) {
      a.push_back(draw());
      b.push_back(draw());
      scaled.push_back(c * a.back());
    }
    bool proportional = true;
    for (int k = 1; k < s; ++k) proportional = proportional && a[k] * b[0] == b[k] * a[0];
    proportional_random += proportional ? 1 : 0;

    const RadonChain r = radon_chain(a, b);
    o.require(r.lhs >= r.mid && r.mid >= r.rhs && r.rhs == Rational(0), "chain order");
    o.require((r.lhs == Rational(0) && r.mid == Rational(0)) == proportional, "equality iff proportional");
    ++random_cases;

    const RadonChain e = radon_chain(a, scaled);
    o.require(e.lhs == Rational(0) && e.mid == Rational(0) && e.rhs == Rational(0), "scaled pair equality");
    ++scaled_cases;
  }
  o.note << random_cases << " random pairs (" << proportional_random << " proportional), " << scaled_cases
         << " scaled pairs";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 16;
    const Graph g = oracle::random_graph(n, density(rng), rng);
    const auto cert = independence_number(g);
    o.require(cert.beta == oracle::independence_number(g), "beta mismatch on " + to_graph6(g));
    o.require(cert.witness.size() == cert.beta && is_independent(g, cert.witness), "beta witness");
  }
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = oracle::random_graph(n, density(rng), rng);
    o.require(vertex_connectivity(g) == oracle::vertex_connectivity(g), "kappa mismatch on " + to_graph6(g));
  }
  std::size_t hamiltonian = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = oracle::random_graph(n, density(rng), rng);
    const bool cycle = has_hamiltonian_cycle(g);
    o.require(cycle == oracle::hamiltonian_cycle(g), "cycle mismatch on " + to_graph6(g));
    o.require(has_hamiltonian_path(g) == oracle::hamiltonian_path(g), "path mismatch on " + to_graph6(g));
    hamiltonian += cycle ? 1 : 0;
  }
  o.note << "500 beta, 500 kappa, 200 Hamiltonian (" << hamiltonian << " Hamiltonian) comparisons";
  return o;
}

Outcome proof_chain() {
  Outcome o;
  std::size_t sets = 0, degree_checks = 0;
  auto source = enumerate_labeled_graphs_up_to(6);
  while (auto item = source->next()) {
    const Graph& g = item->graph;
    const bool min_degree_ok = min_max_degree(g).min >= 1;
    for_each_maximum_independent_set(g, [&](VertexSet s) {
      ++sets;
      o.require(proof_edge_inequality(g, s), "edge chain on " + to_graph6(g));
      // Reciprocal degrees need every member of I to have degree >= 1.
      if (min_degree_ok) {
        ++degree_checks;
        o.require(proof_degree_inequality(g, s), "degree inequality on " + to_graph6(g));
      }
    });
  }
  o.note << sets << " maximum independent sets (edge chain), " << degree_checks << " with delta >= 1 (degree inequality)";
  return o;
}

Outcome graph6_codec(const std::vector<std::filesystem::path>& corpora) {
  Outcome o;
  o.require(parse_graph6("@") == named::complete(1) && to_graph6(named::complete(1)) == "@", "@ <-> K1");
  o.require(parse_graph6("A_") == named::complete(2) && to_graph6(named::complete(2)) == "A_", "A_ <-> K2");
  o.require(parse_graph6("A?") == named::empty(2) && to_graph6(named::empty(2)) == "A?", "A? <-> 2K1");

  // Strings produced by an independent reference encoder.
  std::ifstream ref(ZC_TEST_DATA_DIR "/graph6_reference.tsv");
  std::size_t reference_rows = 0;
  for (std::string line; std::getline(ref, line); ++reference_rows) {
    std::istringstream row(line);
    std::string text;
    std::size_t n = 0;
    std::getline(row, text, '\t');
    row >> n;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::string tok; row >> tok;) {
      const auto dash = tok.find('-');
      edges.emplace_back(std::stoul(tok.substr(0, dash)), std::stoul(tok.substr(dash + 1)));
    }
    const Graph g = Graph::from_edge_list(n, edges);
    o.require(to_graph6(g) == text && parse_graph6(text) == g, "reference row " + text);
  }
  o.require(reference_rows > 0, "reference fixture missing");

  std::mt19937_64 rng(303);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = oracle::random_graph(rng() % 21, std::uniform_real_distribution<>(0, 1)(rng), rng);
    o.require(parse_graph6(to_graph6(g)) == g, "random round trip");
  }
  std::size_t corpus_lines = 0;
  for (const auto& path : corpora) {
    std::size_t lines = 0;
    o.require(corpus_round_trips(path, lines), "corpus line round trip in " + path.string());
    corpus_lines += lines;
  }
  o.note << reference_rows << " reference rows, 1000 random graphs, " << corpus_lines << " corpus lines";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  Settings settings;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--jobs") settings.jobs = std::stoul(argv[i + 1]);
    if (flag == "--workdir") settings.workdir = argv[i + 1];
  }

  int failures = 0;
  const auto report = [&](const char* id, const char* title, const std::function<Outcome()>& run) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ' ' << title << " (" << seconds_since(start) << " s) -- "
              << o.note.str() << std::endl;
  };

  report("C1", "named-graph regression", named_graph_regression);
  std::optional<Theorem1Outcomes> t1;
  report("C2", "index bounds never violated, labeled n<=7", [&] {
    t1.emplace(theorem1_exhaustive(settings));
    return std::move(t1->universality);
  });
  report("C3", "all-equality iff regular balanced bipartite, labeled n<=7", [&] {
    if (!t1) {
      Outcome o;
      o.require(false, "C2 did not run");
      return o;
    }
    return std::move(t1->biconditional);
  });
  report("C4", "Hamiltonian conditions sound", [&] { return theorem2_soundness(settings); });
  std::vector<std::filesystem::path> corpora;
  report("C5", "traceable conditions sound", [&] { return theorem3_soundness(settings, corpora); });
  report("C6", "Petersen equalities", petersen_equalities);
  report("C7", "Radon-type chain", radon_chain_check);
  report("C8", "oracle equivalence", oracle_equivalence);
  report("C9", "proof-chain invariants, labeled n<=6", proof_chain);
  report("C10", "graph6 codec", [&] { return graph6_codec(corpora); });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
