#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "zc/bounds.hpp"
#include "zc/error.hpp"
#include "zc/graph6.hpp"
#include "zc/harness.hpp"
#include "zc/structure.hpp"

namespace zc {
namespace {

using GraphCheck = std::function<void(const Graph&, CampaignResult&)>;

void merge_into(CampaignResult& total, CampaignResult&& part) {
  total.graphs_scanned += part.graphs_scanned;
  std::move(part.violations.begin(), part.violations.end(), std::back_inserter(total.violations));
  std::move(part.equality_witnesses.begin(), part.equality_witnesses.end(),
            std::back_inserter(total.equality_witnesses));
  for (const auto& [name, count] : part.counters) total.counters[name] += count;
}

// Workers pull batches from the shared source and fill private results that
// are merged and sorted at the end, so output does not depend on scheduling.
CampaignResult run_campaign(GraphSource& source, const CampaignOptions& options, const GraphCheck& check) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);

  std::mutex source_mutex;
  std::exception_ptr failure;
  std::vector<CampaignResult> partial(jobs);

  auto worker = [&](CampaignResult& local) {
    std::vector<Graph> batch;
    batch.reserve(batch_size);
    for (;;) {
      batch.clear();
      {
        std::lock_guard lock(source_mutex);
        if (failure) return;
        try {
          while (batch.size() < batch_size) {
            auto item = source.next();
            if (!item) break;
            batch.push_back(std::move(item->graph));
          }
        } catch (...) {
          failure = std::current_exception();
          return;
        }
      }
      if (batch.empty()) return;
      for (const Graph& g : batch) {
        ++local.graphs_scanned;
        check(g, local);
      }
    }
  };

  if (jobs == 1) {
    worker(partial[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker, std::ref(partial[j]));
  }
  if (failure) std::rethrow_exception(failure);

  CampaignResult result;
  result.corpus_description = source.description();
  for (auto& p : partial) merge_into(result, std::move(p));
  std::sort(result.violations.begin(), result.violations.end());
  std::sort(result.equality_witnesses.begin(), result.equality_witnesses.end());
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::string describe_report(const BoundReport& r, int part) {
  std::ostringstream os;
  const char* index = part == 1 ? "Z1" : part <= 3 ? "F" : "Inv";
  os << index << "=";
  if (part == 1) {
    os << r.actual_z1;
  } else if (part <= 3) {
    os << r.actual_f;
  } else {
    os << r.actual_inv;
  }
  os << " bound=" << r.bounds.part(part) << " beta=" << r.inputs.b;
  return os.str();
}

void check_theorem1(const Graph& g, CampaignResult& out) {
  InvariantProfile p = profile(g);
  if (!p.inv) {
    ++out.counters["skipped_isolated_vertex"];
    return;
  }
  p.beta = independence_number(g).beta;
  const BoundReport report = theorem1_report(p);
  ++out.counters["checked"];
  for (int part = 1; part <= 5; ++part) {
    if (report.verdict(part) == Verdict::Violated) {
      out.violations.push_back({to_graph6(g), "theorem1.part" + std::to_string(part) + ".bound",
                                describe_report(report, part)});
    }
  }
  const bool rbb = is_regular_balanced_bipartite(g);
  const bool all_equal = report.all_equality();
  if (all_equal != rbb) {
    out.violations.push_back({to_graph6(g), "theorem1.equality_iff",
                              std::string("all_equality=") + (all_equal ? "true" : "false") +
                                  " regular_balanced_bipartite=" + (rbb ? "true" : "false")});
  }
  // Per-part view of the same biconditional, tallied for the report.
  for (int part = 1; part <= 5; ++part) {
    if ((report.verdict(part) == Verdict::Equality) != rbb) {
      ++out.counters["part" + std::to_string(part) + "_equality_mismatch"];
    }
  }
  if (all_equal) out.equality_witnesses.push_back(to_graph6(g));
}

void check_conditions(const Graph& g, int theorem, CampaignResult& out) {
  const std::size_t min_n = theorem == 2 ? 3 : 9;
  const std::size_t min_k = theorem == 2 ? 2 : 1;
  const std::size_t offset = theorem == 2 ? 1 : 2;
  if (g.order() < min_n) {
    ++out.counters["skipped_order"];
    return;
  }
  InvariantProfile p = profile(g);
  if (!p.inv) {
    ++out.counters["skipped_connectivity"];
    return;
  }
  p.kappa = vertex_connectivity(g);
  if (*p.kappa < min_k) {
    ++out.counters["skipped_connectivity"];
    return;
  }
  ++out.counters["checked"];
  std::optional<bool> oracle;
  bool any = false;
  for (std::size_t k = min_k; k <= *p.kappa && k + offset < p.n; ++k) {
    for (const ConditionVerdict& v : evaluate_conditions(p, theorem, k)) {
      if (!v.holds) continue;
      any = true;
      ++out.counters["conditions_held"];
      if (!oracle) oracle = theorem == 2 ? has_hamiltonian_cycle(g) : has_hamiltonian_path(g);
      if (!*oracle) {
        std::ostringstream detail;
        detail << "k=" << k << " value=" << v.index_value << " bound=" << v.bound << " oracle="
               << (theorem == 2 ? "not_hamiltonian" : "not_traceable");
        out.violations.push_back({to_graph6(g),
                                  "theorem" + std::to_string(theorem) + ".part" + std::to_string(v.part) + ".soundness",
                                  detail.str()});
      }
    }
  }
  if (any) ++out.counters["graphs_with_condition"];
}

}  // namespace

CampaignResult run_theorem1_campaign(GraphSource& source, const CampaignOptions& options) {
  return run_campaign(source, options, check_theorem1);
}

CampaignResult run_theorem23_campaign(GraphSource& source, int theorem, const CampaignOptions& options) {
  if (theorem != 2 && theorem != 3) throw HypothesisError("theorem must be 2 or 3");
  return run_campaign(source, options, [theorem](const Graph& g, CampaignResult& out) {
    check_conditions(g, theorem, out);
  });
}

}  // namespace zc
