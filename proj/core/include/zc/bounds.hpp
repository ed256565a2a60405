#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "zc/graph.hpp"
#include "zc/invariants.hpp"
#include "zc/rational.hpp"

namespace zc {

// Inputs shared by the five degree-index bounds. `b` is the independence
// surrogate: beta for the plain bounds, k+1 for the Hamiltonian conditions
// and k+2 for the traceability conditions.
struct BoundInputs {
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t delta = 0;
  std::size_t Delta = 0;
  std::size_t b = 0;
};

// Bound values for parts 1..5:
//   1: upper bound on Z1
//   2, 3: lower bounds on F
//   4, 5: lower bounds on Inv
struct BoundValues {
  std::array<Rational, 5> parts;
  const Rational& part(int p) const { return parts.at(static_cast<std::size_t>(p - 1)); }
  bool operator==(const BoundValues&) const = default;
};

// Throws HypothesisError unless 1 <= b < n, delta >= 1 and delta <= Delta.
BoundValues eval_bounds(const BoundInputs& in);

enum class Verdict { StrictlySatisfied, Equality, Violated };
std::string_view to_string(Verdict v);

struct BoundReport {
  BoundInputs inputs;
  BoundValues bounds;
  std::int64_t actual_z1 = 0;
  std::int64_t actual_f = 0;
  Rational actual_inv;
  std::array<Verdict, 5> verdicts{};

  Verdict verdict(int p) const { return verdicts.at(static_cast<std::size_t>(p - 1)); }
  bool all_equality() const;
  bool any_violated() const;
};

// Evaluates the bounds at b = beta(g) and compares them exactly with Z1, F
// and Inv. Throws IsolatedVertexError when delta(g) = 0.
BoundReport theorem1_report(const Graph& g);
// Same, from a profile whose `inv` and `beta` are present.
BoundReport theorem1_report(const InvariantProfile& p);

// Whether g is regular balanced bipartite, i.e. the graphs for which every
// bound is attained. Throws IsolatedVertexError when delta(g) = 0.
bool equality_classifier(const Graph& g);

enum class OracleMode { Never, WhenHolds, Always };

struct ConditionVerdict {
  int theorem = 2;  // 2: Hamiltonian, 3: traceable
  int part = 1;
  std::size_t k = 0;
  bool holds = false;
  Rational index_value;  // Z1, F or Inv
  Rational bound;
  std::optional<bool> oracle_hamiltonian;
  std::optional<bool> oracle_traceable;
};

// Sufficient conditions with b = k+1 (Hamiltonian, id 2) or b = k+2 (traceable, id 3):
// part 1 holds when Z1 >= B1, parts 2-3 when F <= B2/B3, parts 4-5 when
// Inv <= B4/B5. The hypotheses are checked and violations throw
// HypothesisError:
//   id 2: k >= 2, kappa >= k, n >= 3, delta >= 1, k+1 < n
//   id 3: k >= 1, kappa >= k, n >= 9, delta >= 1, k+2 < n
ConditionVerdict theorem2_condition(const Graph& g, std::size_t k, int part, OracleMode oracle = OracleMode::WhenHolds);
ConditionVerdict theorem3_condition(const Graph& g, std::size_t k, int part, OracleMode oracle = OracleMode::WhenHolds);

// All five parts at once from a profile with `inv` and `kappa` present; no
// oracle is run.
std::array<ConditionVerdict, 5> evaluate_conditions(const InvariantProfile& p, int theorem, std::size_t k);

// The degree inequality behind every bound, for an independent set I with
// no isolated members:
//   2|I| * sum_I d^2 <= sum_I d^3 * sum_I 1/d + e^2.
// Throws HypothesisError when I is not independent, IsolatedVertexError when
// some member has degree 0.
bool proof_degree_inequality(const Graph& g, VertexSet independent);

}  // namespace zc
