#include "entmono/monogamy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace entmono {

namespace {

constexpr double kDiskBand = 1e-12;

// Subsystem A is fixed as qubit 0; callers re-root by relabeling qubits first.
constexpr int kRootCut[] = {0};

void require_eta(double eta, const char* fn) {
  if (!(eta >= 1.0)) {
    throw std::invalid_argument(std::string(fn) + ": eta " + std::to_string(eta) +
                                " must be >= 1");
  }
}

void require_distance_kind(MeasureKind kind, const char* fn) {
  if (kind != MeasureKind::bures && kind != MeasureKind::geometric) {
    throw std::invalid_argument(std::string(fn) +
                                ": kind must be bures or geometric (concurrence "
                                "monogamy is the squared CKW form)");
  }
}

// Validates 0 <= x, y and x^2 + y^2 <= 1 (with a round-off band) and returns
// sqrt(1 - x^2 - y^2) with the radicand floored at 0 inside the band.
double joint_root(double x, double y, const char* fn) {
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw std::domain_error(std::string(fn) + ": x, y must be non-negative");
  }
  const double s = x * x + y * y;
  if (s > 1.0 + kDiskBand) {
    throw std::domain_error(std::string(fn) + ": x^2 + y^2 = " + std::to_string(s) +
                            " exceeds 1");
  }
  return std::sqrt(std::max(0.0, 1.0 - s));
}

double power_sum(std::span<const double> values, double eta) {
  double acc = 0.0;
  for (double v : values) acc += std::pow(v, eta);
  return acc;
}

}  // namespace

std::string_view to_string(Inequality ineq) {
  switch (ineq) {
    case Inequality::ckw16: return "CKW16";
    case Inequality::power19: return "POWER19";
    case Inequality::t3_24: return "T3_24";
    case Inequality::t4_27: return "T4_27";
    case Inequality::t4_30: return "T4_30";
  }
  return "?";
}

CheckResult eval_power(double e_whole, std::span<const double> e_pairs, double eta) {
  require_eta(eta, "eval_power");
  CheckResult out;
  out.lhs = std::pow(e_whole, eta);
  out.rhs = power_sum(e_pairs, eta);
  return out;
}

CheckResult eval_sorted_power(double e_whole, std::span<const double> e_pairs, double eta) {
  require_eta(eta, "eval_sorted_power");
  std::vector<double> sorted(e_pairs.begin(), e_pairs.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  CheckResult out;
  out.lhs = std::pow(e_whole, eta);
  double rhs = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double idx = static_cast<double>(i + 1);
    const double coeff = std::pow(idx, eta) - std::pow(idx - 1.0, eta);
    rhs += coeff * std::pow(sorted[i], eta);
  }
  out.rhs = rhs;
  out.rhs_baseline = power_sum(e_pairs, eta);
  return out;
}

CheckResult eval_conditional_power(double e_whole, std::span<const double> e_pairs,
                                   const MonogamyParams& params) {
  const char* fn = "eval_conditional_power";
  require_eta(params.eta, fn);
  if (!(params.k >= 1.0) || !(params.k_prime >= 1.0)) {
    throw std::invalid_argument(std::string(fn) + ": k and k' must be >= 1");
  }
  const int np = static_cast<int>(e_pairs.size());  // N - 1 partners
  if (np < 3) {
    throw std::domain_error(std::string(fn) + ": at least 3 partners (N >= 4) required");
  }
  if (params.m < 1 || params.m > np - 2) {
    throw std::invalid_argument(std::string(fn) + ": m " + std::to_string(params.m) +
                                " outside [1, N-3]");
  }
  const double eta = params.eta;
  const double k = params.k;
  const double kp = params.k_prime;
  const int m = params.m;

  // suffix[i] = sum of e_pairs[i..np-1]
  std::vector<double> suffix(np + 1, 0.0);
  for (int i = np - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + e_pairs[i];

  bool ok = true;
  for (int i = 1; i <= m && ok; ++i) {
    ok = e_pairs[i - 1] >= k * suffix[i];
  }
  for (int j = m + 1; j <= np - 1 && ok; ++j) {
    ok = kp * e_pairs[j - 1] <= suffix[j];
  }

  const double ck = std::pow(k + 1.0, eta) - std::pow(k, eta);
  const double ckp = std::pow(kp + 1.0, eta) - std::pow(kp, eta);
  const double tail_coeff = std::pow(kp + 1.0, eta) - (1.0 + eta / (kp + 1.0)) * std::pow(kp, eta);
  const double cross_coeff = kp * eta / (kp + 1.0);

  double rhs = 0.0;
  for (int i = 1; i <= m; ++i) {
    rhs += std::pow(ck, static_cast<double>(i - 1)) * std::pow(e_pairs[i - 1], eta);
  }
  double middle = 0.0;
  for (int j = m + 1; j <= np - 2; ++j) {  // partners m+1 .. N-3; empty for N = 4
    middle += std::pow(e_pairs[j - 1], eta);
  }
  const double ck_m = std::pow(ck, static_cast<double>(m));
  rhs += ck_m * ckp * middle;
  rhs += ck_m * (tail_coeff * std::pow(e_pairs[np - 2], eta) +
                 cross_coeff * e_pairs[np - 2] * std::pow(e_pairs[np - 1], eta - 1.0) +
                 std::pow(e_pairs[np - 1], eta));

  if (k == 1.0 && kp == 1.0) {
    // Specialized coefficient form; must agree with the general expression.
    const double c2 = std::pow(2.0, eta) - 1.0;
    double rhs_special = 0.0;
    for (int i = 1; i <= m; ++i) {
      rhs_special += std::pow(c2, static_cast<double>(i - 1)) * std::pow(e_pairs[i - 1], eta);
    }
    rhs_special += std::pow(c2, static_cast<double>(m + 1)) * middle;
    rhs_special += std::pow(c2, static_cast<double>(m)) *
                   ((std::pow(2.0, eta) - 0.5 * eta - 1.0) * std::pow(e_pairs[np - 2], eta) +
                    0.5 * eta * e_pairs[np - 2] * std::pow(e_pairs[np - 1], eta - 1.0) +
                    std::pow(e_pairs[np - 1], eta));
    if (std::abs(rhs - rhs_special) > 1e-12) {
      throw std::logic_error(std::string(fn) +
                             ": k = k' = 1 specialization disagrees with the general "
                             "formula by " + std::to_string(rhs - rhs_special));
    }
    rhs = rhs_special;
  }

  CheckResult out;
  out.lhs = std::pow(e_whole, eta);
  out.rhs = rhs;
  out.conditions_met = ok;
  return out;
}

std::vector<double> pairwise_measures(const StateVector& psi, MeasureKind kind) {
  const int n = psi.n_qubits();
  if (n < 3) {
    throw std::domain_error("pairwise_measures: at least 3 qubits required");
  }
  const CMatrix dm = psi.amplitudes() * psi.amplitudes().adjoint();
  std::vector<double> out;
  out.reserve(n - 1);
  for (int b = 1; b < n; ++b) {
    const int keep[] = {0, b};
    DensityMatrix pair(2, partial_trace(dm, n, keep));
    out.push_back(measure_two_qubit(pair, kind).value);
  }
  return out;
}

namespace {

MonogamyReport make_report(Inequality ineq, MeasureKind kind, const MonogamyParams& params,
                           const CheckResult& res, std::span<const double> per_pair) {
  MonogamyReport r;
  r.kind = kind;
  r.inequality = ineq;
  r.params = params;
  r.lhs = res.lhs;
  r.rhs = res.rhs;
  r.residual = res.lhs - res.rhs;
  r.conditions_met = res.conditions_met;
  r.rhs_baseline = res.rhs_baseline;
  r.per_pair.reserve(per_pair.size());
  for (std::size_t i = 0; i < per_pair.size(); ++i) {
    r.per_pair.emplace_back(static_cast<int>(i + 1), per_pair[i]);
  }
  return r;
}

}  // namespace

MonogamyReport check_ckw(const StateVector& psi) {
  const double c_whole = concurrence_pure(psi, kRootCut);
  const std::vector<double> c_pairs = pairwise_measures(psi, MeasureKind::concurrence);
  CheckResult res = eval_power(c_whole, c_pairs, 2.0);
  MonogamyParams params;
  params.eta = 2.0;
  return make_report(Inequality::ckw16, MeasureKind::concurrence, params, res, c_pairs);
}

MonogamyReport check_power_monogamy(const StateVector& psi, MeasureKind kind, double eta) {
  require_distance_kind(kind, "check_power_monogamy");
  require_eta(eta, "check_power_monogamy");
  const double e_whole = measure_pure_bipartition(psi, kRootCut, kind).value;
  const std::vector<double> e_pairs = pairwise_measures(psi, kind);
  CheckResult res = eval_power(e_whole, e_pairs, eta);
  MonogamyParams params;
  params.eta = eta;
  return make_report(Inequality::power19, kind, params, res, e_pairs);
}

MonogamyReport check_sorted_power_monogamy(const StateVector& psi, MeasureKind kind,
                                           double eta) {
  require_distance_kind(kind, "check_sorted_power_monogamy");
  require_eta(eta, "check_sorted_power_monogamy");
  const double e_whole = measure_pure_bipartition(psi, kRootCut, kind).value;
  const std::vector<double> e_pairs = pairwise_measures(psi, kind);
  CheckResult res = eval_sorted_power(e_whole, e_pairs, eta);
  MonogamyParams params;
  params.eta = eta;
  return make_report(Inequality::t3_24, kind, params, res, e_pairs);
}

MonogamyReport check_conditional_power_monogamy(const StateVector& psi, MeasureKind kind,
                                                const MonogamyParams& params) {
  require_distance_kind(kind, "check_conditional_power_monogamy");
  if (psi.n_qubits() < 4) {
    throw std::domain_error("check_conditional_power_monogamy: at least 4 qubits required");
  }
  const double e_whole = measure_pure_bipartition(psi, kRootCut, kind).value;
  const std::vector<double> e_pairs = pairwise_measures(psi, kind);
  CheckResult res = eval_conditional_power(e_whole, e_pairs, params);
  const Inequality label = (params.k == 1.0 && params.k_prime == 1.0) ? Inequality::t4_30
                                                                      : Inequality::t4_27;
  return make_report(label, kind, params, res, e_pairs);
}

// ---- scalar inequality checks -------------------------------------------------

std::string_view to_string(ScalarLemma which) {
  switch (which) {
    case ScalarLemma::b17: return "B17";
    case ScalarLemma::g18: return "G18";
    case ScalarLemma::a1: return "A1";
    case ScalarLemma::a2: return "A2";
    case ScalarLemma::a5: return "A5";
    case ScalarLemma::a8: return "A8";
    case ScalarLemma::a10: return "A10";
    case ScalarLemma::h22: return "H22";
    case ScalarLemma::h23: return "H23";
  }
  return "?";
}

namespace {

void require_args(std::span<const double> args, std::size_t n, const char* fn) {
  if (args.size() != n) {
    throw std::invalid_argument(std::string(fn) + ": expected " + std::to_string(n) +
                                " arguments, got " + std::to_string(args.size()));
  }
}

double superadditive_residual(double x, double y, double eta, bool bures_form,
                              const char* fn) {
  if (!(eta >= 1.0)) {
    throw std::domain_error(std::string(fn) + ": eta must be >= 1");
  }
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw std::domain_error(std::string(fn) + ": x, y must be non-negative");
  }
  const double s = x * x + y * y;
  if (s > 1.0 + kDiskBand) {
    throw std::domain_error(std::string(fn) + ": x^2 + y^2 = " + std::to_string(s) +
                            " exceeds 1");
  }
  const double joint = std::sqrt(std::min(1.0, s));
  double (*f)(double) = bures_form ? bures_of : geometric_of;
  return std::pow(f(joint), eta) - std::pow(f(x), eta) - std::pow(f(y), eta);
}

}  // namespace

double check_scalar_lemma(ScalarLemma which, std::span<const double> args) {
  switch (which) {
    case ScalarLemma::b17: {
      require_args(args, 3, "B17");
      return superadditive_residual(args[0], args[1], args[2], true, "B17");
    }
    case ScalarLemma::g18: {
      require_args(args, 3, "G18");
      return superadditive_residual(args[0], args[1], args[2], false, "G18");
    }
    case ScalarLemma::a1: {
      require_args(args, 2, "A1");
      const double x = args[0], y = args[1];
      const double r = joint_root(x, y, "A1");
      return std::sqrt(1.0 - x * x) + std::sqrt(1.0 - y * y) - 1.0 - r;
    }
    case ScalarLemma::a2: {
      require_args(args, 2, "A2");
      const double x = args[0], y = args[1];
      const double r = joint_root(x, y, "A2");
      return std::sqrt((1.0 - x * x) * (1.0 - y * y)) - r;
    }
    case ScalarLemma::a5: {
      require_args(args, 2, "A5");
      const double x = args[0], y = args[1];
      const double r = joint_root(x, y, "A5");
      return (1.0 - r) / 2.0 - (1.0 - std::sqrt(1.0 - x * x)) / 2.0 -
             (1.0 - std::sqrt(1.0 - y * y)) / 2.0;
    }
    case ScalarLemma::a8: {
      require_args(args, 2, "A8");
      const double x = args[0], y = args[1];
      const double r = joint_root(x, y, "A8");
      return (1.0 + std::sqrt(1.0 - x * x)) * (1.0 + std::sqrt(1.0 - y * y)) - 2.0 - 2.0 * r;
    }
    case ScalarLemma::a10: {
      require_args(args, 2, "A10");
      const double x = args[0], y = args[1];
      const double r = joint_root(x, y, "A10");
      return std::sqrt((1.0 + std::sqrt(1.0 - x * x)) / 2.0) +
             std::sqrt((1.0 + std::sqrt(1.0 - y * y)) / 2.0) - 1.0 -
             std::sqrt((1.0 + r) / 2.0);
    }
    case ScalarLemma::h22: {
      if (args.size() < 2) {
        throw std::invalid_argument("H22: expected (mu, a_1, ..., a_n)");
      }
      const double mu = args[0];
      if (!(mu >= 1.0)) throw std::domain_error("H22: mu must be >= 1");
      double sum = 0.0;
      for (std::size_t i = 1; i < args.size(); ++i) {
        if (!(args[i] >= 0.0)) throw std::domain_error("H22: entries must be >= 0");
        if (i > 1 && args[i] > args[i - 1]) {
          throw std::domain_error("H22: entries must be non-increasing");
        }
        sum += args[i];
      }
      double rhs = 0.0;
      for (std::size_t i = 1; i < args.size(); ++i) {
        const double idx = static_cast<double>(i);
        rhs += (std::pow(idx, mu) - std::pow(idx - 1.0, mu)) * std::pow(args[i], mu);
      }
      return std::pow(sum, mu) - rhs;
    }
    case ScalarLemma::h23: {
      require_args(args, 3, "H23");
      const double t = args[0], k = args[1], x = args[2];
      if (!(t >= 1.0)) throw std::domain_error("H23: t must be >= 1");
      if (!(k >= 1.0)) throw std::domain_error("H23: k must be >= 1");
      if (!(x >= 0.0) || x > 1.0 / k) {
        throw std::domain_error("H23: x must lie in [0, 1/k]");
      }
      const double rhs = 1.0 + k * t / (k + 1.0) * x +
                         (std::pow(k + 1.0, t) - (1.0 + t / (k + 1.0)) * std::pow(k, t)) *
                             std::pow(x, t);
      return std::pow(1.0 + x, t) - rhs;
    }
  }
  throw std::logic_error("check_scalar_lemma: unreachable");
}

std::vector<LemmaSweepRow> lemma_sweep(int grid_per_axis, std::span<const double> etas,
                                       int n_random, std::uint64_t seed) {
  if (grid_per_axis < 11) {
    throw std::invalid_argument("lemma_sweep: grid resolution must be >= 11 per axis");
  }
  if (n_random < 1) {
    throw std::invalid_argument("lemma_sweep: n_random must be >= 1");
  }
  std::vector<LemmaSweepRow> rows;

  const auto sweep_grid = [&](ScalarLemma which, std::optional<double> eta) {
    LemmaSweepRow row;
    row.inequality = which;
    row.exponent = eta;
    row.min_residual = std::numeric_limits<double>::infinity();
    const int g = grid_per_axis;
    for (int i = 0; i < g; ++i) {
      const double x = static_cast<double>(i) / (g - 1);
      for (int j = 0; j < g; ++j) {
        const double y = static_cast<double>(j) / (g - 1);
        if (x * x + y * y > 1.0 + kDiskBand) continue;
        double res;
        if (eta.has_value()) {
          const double args[] = {x, y, *eta};
          res = check_scalar_lemma(which, args);
        } else {
          const double args[] = {x, y};
          res = check_scalar_lemma(which, args);
        }
        ++row.n_points;
        if (res < row.min_residual) {
          row.min_residual = res;
          row.argmin = {x, y};
        }
      }
    }
    rows.push_back(std::move(row));
  };

  for (double eta : etas) {
    sweep_grid(ScalarLemma::b17, eta);
    sweep_grid(ScalarLemma::g18, eta);
  }
  for (ScalarLemma which : {ScalarLemma::a1, ScalarLemma::a2, ScalarLemma::a5,
                            ScalarLemma::a8, ScalarLemma::a10}) {
    sweep_grid(which, std::nullopt);
  }

  // random interior spot checks of the appendix chain
  for (ScalarLemma which : {ScalarLemma::a5, ScalarLemma::a8, ScalarLemma::a10}) {
    LemmaSweepRow row;
    row.inequality = which;
    row.random_sampling = true;
    row.min_residual = std::numeric_limits<double>::infinity();
    Rng rng(seed);
    while (row.n_points < n_random) {
      const double x = rng.uniform01();
      const double y = rng.uniform01();
      if (x * x + y * y >= 1.0) continue;
      const double args[] = {x, y};
      const double res = check_scalar_lemma(which, args);
      ++row.n_points;
      if (res < row.min_residual) {
        row.min_residual = res;
        row.argmin = {x, y};
      }
    }
    rows.push_back(std::move(row));
  }

  // ordered power sums over random descending 5-tuples
  for (double mu : {1.0, 2.0, 3.5}) {
    LemmaSweepRow row;
    row.inequality = ScalarLemma::h22;
    row.exponent = mu;
    row.random_sampling = true;
    row.min_residual = std::numeric_limits<double>::infinity();
    Rng rng(seed + 1);
    for (int s = 0; s < n_random; ++s) {
      std::array<double, 6> args{};
      args[0] = mu;
      for (int i = 1; i <= 5; ++i) args[i] = rng.uniform01();
      std::sort(args.begin() + 1, args.end(), std::greater<>());
      const double res = check_scalar_lemma(ScalarLemma::h22, args);
      ++row.n_points;
      if (res < row.min_residual) {
        row.min_residual = res;
        row.argmin.assign(args.begin(), args.end());
      }
    }
    rows.push_back(std::move(row));
  }

  {
    LemmaSweepRow row;
    row.inequality = ScalarLemma::h23;
    row.random_sampling = true;
    row.min_residual = std::numeric_limits<double>::infinity();
    Rng rng(seed + 2);
    for (int s = 0; s < n_random; ++s) {
      const double t = rng.uniform(1.0, 4.0);
      const double k = rng.uniform(1.0, 3.0);
      const double x = rng.uniform(0.0, 1.0 / k);
      const double args[] = {t, k, x};
      const double res = check_scalar_lemma(ScalarLemma::h23, args);
      ++row.n_points;
      if (res < row.min_residual) {
        row.min_residual = res;
        row.argmin = {t, k, x};
      }
    }
    rows.push_back(std::move(row));
  }

  return rows;
}

}  // namespace entmono
