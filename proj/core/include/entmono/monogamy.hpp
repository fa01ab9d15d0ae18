#pragma once

#include "entmono/measures.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entmono {

// Residual slack absorbing eigensolver noise through the full pipeline
// (partial trace -> Wootters -> B/G -> powers -> sums).
inline constexpr double kResidualTol = 1e-9;
// Slack for the scalar inequality checks, which involve no linear algebra.
inline constexpr double kScalarTol = 1e-12;

struct MonogamyParams {
  double eta = 1.0;     // power, >= 1
  double k = 1.0;       // >= 1
  double k_prime = 1.0; // >= 1
  int m = 0;            // split index of the conditional relation, 1..N-3
};

enum class Inequality { ckw16, power19, t3_24, t4_27, t4_30 };
std::string_view to_string(Inequality ineq);

struct MonogamyReport {
  std::string state_id;
  MeasureKind kind = MeasureKind::concurrence;
  Inequality inequality = Inequality::ckw16;
  MonogamyParams params;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // lhs - rhs; >= -kResidualTol whenever conditions_met
  bool conditions_met = true;
  std::vector<std::pair<int, double>> per_pair;  // (partner qubit, measure value)
  std::uint64_t seed = 0;
  // The plain power-sum rhs, reported for the sorted relation so its
  // tightening over the unweighted bound is visible per sample.
  std::optional<double> rhs_baseline;

  bool tighter_than_baseline() const {
    return rhs_baseline.has_value() && rhs >= *rhs_baseline - kScalarTol;
  }
};

// Value-level checks, shared by the state-level wrappers and by batch drivers
// that already hold the pairwise measures.
struct CheckResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool conditions_met = true;
  std::optional<double> rhs_baseline;
};

// lhs = e_whole^eta, rhs = sum_i e_pairs[i]^eta.
CheckResult eval_power(double e_whole, std::span<const double> e_pairs, double eta);

// Partners sorted descending internally; rhs = sum_i (i^eta - (i-1)^eta) *
// e_(i)^eta over the sorted values. rhs_baseline carries the unweighted
// power sum.
CheckResult eval_sorted_power(double e_whole, std::span<const double> e_pairs, double eta);

// Condition-gated tightening. With partners e_1..e_{N-1} in their given order
// and params (eta, k, k', m), the gate is
//   e_i >= k * sum_{l>i} e_l            for i = 1..m, and
//   k' * e_j <= sum_{l>j} e_l           for j = m+1..N-2.
// conditions_met reflects the gate; the rhs is always computed:
//   sum_{i<=m} [(k+1)^eta - k^eta]^{i-1} e_i^eta
//   + [(k+1)^eta - k^eta]^m [(k'+1)^eta - k'^eta] * sum_{m<j<=N-3} e_j^eta
//   + [(k+1)^eta - k^eta]^m { [(k'+1)^eta - (1 + eta/(k'+1)) k'^eta] e_{N-2}^eta
//       + (k' eta/(k'+1)) e_{N-2} e_{N-1}^{eta-1} + e_{N-1}^eta }.
// For k = k' = 1 the specialized (2^eta - 1) coefficient form is evaluated as
// well and must agree with the general formula to 1e-12.
CheckResult eval_conditional_power(double e_whole, std::span<const double> e_pairs,
                                   const MonogamyParams& params);

// [E(rho_{A B_1}), ..., E(rho_{A B_{N-1}})] for qubit 0 = A, via partial trace
// and the two-qubit closed forms. Requires N >= 3.
std::vector<double> pairwise_measures(const StateVector& psi, MeasureKind kind);

// CKW16: C^2(A|rest) >= sum_i C^2(A B_i). kind is concurrence, eta = 2.
MonogamyReport check_ckw(const StateVector& psi);

// POWER19: E^eta(A|rest) >= sum_i E^eta(A B_i) for E in {bures, geometric},
// eta >= 1.
MonogamyReport check_power_monogamy(const StateVector& psi, MeasureKind kind, double eta);

// T3_24: partners relabeled so E(A|B_i) >= E(A|B_{i+1}), then
// E^eta(A|rest) >= sum_i (i^eta - (i-1)^eta) E^eta(A B_(i)).
MonogamyReport check_sorted_power_monogamy(const StateVector& psi, MeasureKind kind,
                                           double eta);

// T4_27 / T4_30 (the latter when k = k' = 1): the condition-gated tightened
// relation. Requires N >= 4 and 1 <= m <= N-3. When the gate fails the report
// carries conditions_met = false and the residual is informational only.
MonogamyReport check_conditional_power_monogamy(const StateVector& psi, MeasureKind kind,
                                                const MonogamyParams& params);

// ---- scalar inequality checks -------------------------------------------------

// Selector tokens follow the report schema.
enum class ScalarLemma {
  b17,   // B^eta(sqrt(x^2+y^2)) >= B^eta(x) + B^eta(y); args (x, y, eta)
  g18,   // G^eta(sqrt(x^2+y^2)) >= G^eta(x) + G^eta(y); args (x, y, eta)
  a1,    // sqrt(1-x^2) + sqrt(1-y^2) >= 1 + sqrt(1-x^2-y^2); args (x, y)
  a2,    // sqrt((1-x^2)(1-y^2)) >= sqrt(1-x^2-y^2); args (x, y)
  a5,    // (1-sqrt(1-x^2-y^2))/2 >= (1-sqrt(1-x^2))/2 + (1-sqrt(1-y^2))/2
  a8,    // (1+sqrt(1-x^2))(1+sqrt(1-y^2)) >= 2 + 2 sqrt(1-x^2-y^2)
  a10,   // sqrt((1+sqrt(1-x^2))/2) + sqrt((1+sqrt(1-y^2))/2)
         //   >= 1 + sqrt((1+sqrt(1-x^2-y^2))/2)
  h22,   // (sum a_i)^mu >= sum (i^mu - (i-1)^mu) a_i^mu, a descending >= 0;
         // args (mu, a_1, ..., a_n)
  h23,   // (1+x)^t >= 1 + kt/(k+1) x + [(k+1)^t - (1 + t/(k+1)) k^t] x^t,
         // t >= 1, k >= 1, 0 <= x <= 1/k; args (t, k, x)
};
std::string_view to_string(ScalarLemma which);

// Residual lhs - rhs of the named inequality; the caller asserts
// >= -kScalarTol. Arguments outside the stated domain throw
// std::domain_error (the disk constraint x^2 + y^2 <= 1 carries a 1e-12
// acceptance band for grid round-off; the radicand is floored at 0 inside
// that band only).
double check_scalar_lemma(ScalarLemma which, std::span<const double> args);

struct LemmaSweepRow {
  ScalarLemma inequality;
  std::optional<double> exponent;  // eta for b17/g18, mu for h22
  bool random_sampling = false;    // grid sweep vs random spot checks
  long n_points = 0;
  double min_residual = 0.0;
  std::vector<double> argmin;      // argument tuple attaining the minimum
};

// Quarter-disk grid sweep of the x,y inequalities (b17/g18 per eta; a1, a2,
// a5, a8, a10 once) plus seeded random spot checks (a5/a8/a10 at interior
// points; h22 over descending 5-tuples with mu in {1, 2, 3.5}; h23 over
// admissible (t, k, x)). grid_per_axis >= 11.
std::vector<LemmaSweepRow> lemma_sweep(int grid_per_axis, std::span<const double> etas,
                                       int n_random, std::uint64_t seed);

}  // namespace entmono
