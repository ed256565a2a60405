#include "zc/bounds.hpp"

#include <string>

#include "zc/error.hpp"
#include "zc/structure.hpp"

namespace zc {
namespace {

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

Verdict compare_upper(const Rational& actual, const Rational& bound) {
  const auto c = actual <=> bound;
  if (c == 0) return Verdict::Equality;
  return c < 0 ? Verdict::StrictlySatisfied : Verdict::Violated;
}

Verdict compare_lower(const Rational& actual, const Rational& bound) {
  const auto c = actual <=> bound;
  if (c == 0) return Verdict::Equality;
  return c > 0 ? Verdict::StrictlySatisfied : Verdict::Violated;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw HypothesisError(what);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictlySatisfied: return "strict";
    case Verdict::Equality: return "equality";
    case Verdict::Violated: return "violated";
  }
  return "?";
}

BoundValues eval_bounds(const BoundInputs& in) {
  require(in.b >= 1, "independence surrogate b must be >= 1");
  require(in.b < in.n, "independence surrogate b=" + std::to_string(in.b) + " must be < n=" + std::to_string(in.n));
  require(in.delta >= 1, "minimum degree must be >= 1");
  require(in.delta <= in.Delta, "minimum degree exceeds maximum degree");

  const BigInt n(in.n), e(in.e), d(in.delta), D(in.Delta), b(in.b);
  const BigInt rest = n - b;
  const BigInt e2 = e * e;
  const BigInt d2 = d * d, d3 = d2 * d;
  const BigInt D2 = D * D, D3 = D2 * D;
  const BigInt core = 2 * b * b * d2 - e2;  // 2 b^2 delta^2 - e^2
  // 2b(b delta^2 + e^2/(n-b)) - e^2 - 2b(n-b)Delta^2, shared by parts 3 and 5.
  const Rational shared = Rational(2 * b * b * d2) + ratio(2 * b * e2, rest) - Rational(e2) - Rational(2 * b * rest * D2);

  BoundValues out;
  out.parts[0] = Rational(rest * D2) + ratio(e2, 2 * b) + ratio(b * D3, 2 * d);
  out.parts[1] = Rational(rest * d3) + ratio(d * core, b);
  out.parts[2] = Rational(rest * d3) + ratio(d, b) * shared;
  out.parts[3] = ratio(rest, D) + ratio(core, b * D3);
  out.parts[4] = ratio(rest, D) + shared / Rational(b * D3);
  return out;
}

bool BoundReport::all_equality() const {
  for (Verdict v : verdicts) {
    if (v != Verdict::Equality) return false;
  }
  return true;
}

bool BoundReport::any_violated() const {
  for (Verdict v : verdicts) {
    if (v == Verdict::Violated) return true;
  }
  return false;
}

BoundReport theorem1_report(const InvariantProfile& p) {
  if (!p.inv) throw IsolatedVertexError();
  if (!p.beta) throw HypothesisError("profile is missing the independence number");
  BoundReport r;
  r.inputs = {.n = p.n, .e = p.e, .delta = p.delta, .Delta = p.Delta, .b = *p.beta};
  r.bounds = eval_bounds(r.inputs);
  r.actual_z1 = p.z1;
  r.actual_f = p.f;
  r.actual_inv = *p.inv;
  const Rational z1(p.z1), f(p.f);
  r.verdicts[0] = compare_upper(z1, r.bounds.parts[0]);
  r.verdicts[1] = compare_lower(f, r.bounds.parts[1]);
  r.verdicts[2] = compare_lower(f, r.bounds.parts[2]);
  r.verdicts[3] = compare_lower(r.actual_inv, r.bounds.parts[3]);
  r.verdicts[4] = compare_lower(r.actual_inv, r.bounds.parts[4]);
  return r;
}

BoundReport theorem1_report(const Graph& g) {
  InvariantProfile p = profile(g);
  if (!p.inv) throw IsolatedVertexError();
  p.beta = independence_number(g).beta;
  return theorem1_report(p);
}

bool equality_classifier(const Graph& g) {
  if (g.order() == 0 || min_max_degree(g).min == 0) throw IsolatedVertexError();
  return is_regular_balanced_bipartite(g);
}

std::array<ConditionVerdict, 5> evaluate_conditions(const InvariantProfile& p, int theorem, std::size_t k) {
  require(theorem == 2 || theorem == 3, "theorem must be 2 or 3");
  if (!p.kappa) throw HypothesisError("profile is missing the vertex connectivity");
  const std::size_t min_k = theorem == 2 ? 2 : 1;
  const std::size_t min_n = theorem == 2 ? 3 : 9;
  const std::size_t b = k + (theorem == 2 ? 1 : 2);
  const std::string tag = "theorem " + std::to_string(theorem) + ": ";
  require(k >= min_k, tag + "k=" + std::to_string(k) + " below " + std::to_string(min_k));
  require(*p.kappa >= k, tag + "graph is not " + std::to_string(k) + "-connected (kappa=" +
                             std::to_string(*p.kappa) + ")");
  require(p.n >= min_n, tag + "needs n >= " + std::to_string(min_n));
  require(p.delta >= 1 && p.inv.has_value(), tag + "needs minimum degree >= 1");
  require(b < p.n, tag + "b=" + std::to_string(b) + " must be < n=" + std::to_string(p.n));

  const BoundValues bounds = eval_bounds({.n = p.n, .e = p.e, .delta = p.delta, .Delta = p.Delta, .b = b});
  std::array<ConditionVerdict, 5> out;
  for (int part = 1; part <= 5; ++part) {
    ConditionVerdict& v = out[static_cast<std::size_t>(part - 1)];
    v.theorem = theorem;
    v.part = part;
    v.k = k;
    v.bound = bounds.part(part);
    if (part == 1) {
      v.index_value = Rational(p.z1);
      v.holds = v.index_value >= v.bound;
    } else {
      v.index_value = part <= 3 ? Rational(p.f) : *p.inv;
      v.holds = v.index_value <= v.bound;
    }
  }
  return out;
}

namespace {

ConditionVerdict condition(const Graph& g, int theorem, std::size_t k, int part, OracleMode oracle) {
  require(part >= 1 && part <= 5, "part must be in 1..5");
  InvariantProfile p = profile(g);
  p.kappa = vertex_connectivity(g);
  ConditionVerdict v = evaluate_conditions(p, theorem, k)[static_cast<std::size_t>(part - 1)];
  if (oracle == OracleMode::Always || (oracle == OracleMode::WhenHolds && v.holds)) {
    if (theorem == 2) {
      v.oracle_hamiltonian = has_hamiltonian_cycle(g);
    } else {
      v.oracle_traceable = has_hamiltonian_path(g);
    }
  }
  return v;
}

}  // namespace

ConditionVerdict theorem2_condition(const Graph& g, std::size_t k, int part, OracleMode oracle) {
  return condition(g, 2, k, part, oracle);
}

ConditionVerdict theorem3_condition(const Graph& g, std::size_t k, int part, OracleMode oracle) {
  return condition(g, 3, k, part, oracle);
}

bool proof_degree_inequality(const Graph& g, VertexSet independent) {
  if (!is_independent(g, independent)) throw HypothesisError("vertex set is not independent");
  BigInt sq = 0, cube = 0;
  Rational recip;
  for (Vertex u : independent) {
    const BigInt d(g.degree(u));
    if (d == 0) throw IsolatedVertexError("vertex " + std::to_string(u) + " is isolated");
    sq += d * d;
    cube += d * d * d;
    recip += Rational(BigInt(1), d);
  }
  const BigInt e(g.edge_count());
  const Rational lhs(2 * BigInt(independent.size()) * sq);
  return lhs <= Rational(cube) * recip + Rational(e * e);
}

}  // namespace zc
