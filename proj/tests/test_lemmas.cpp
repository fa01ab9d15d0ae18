#include "entmono/monogamy.hpp"

#include "entmono/measures.hpp"
#include "entmono/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

using namespace entmono;

namespace {

double lemma(ScalarLemma which, std::initializer_list<double> args) {
  return check_scalar_lemma(which, std::span<const double>(args.begin(), args.size()));
}

}  // namespace

TEST_CASE("scalar lemmas: boundary equalities") {
  CHECK(lemma(ScalarLemma::b17, {1.0, 0.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(lemma(ScalarLemma::g18, {0.0, 1.0, 2.0}) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(lemma(ScalarLemma::a1, {0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(lemma(ScalarLemma::a2, {1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("scalar lemmas: direct-evaluation fixtures") {
  // B(1) - B(0.6) - B(0.8), all three evaluated independently here
  const auto b = [](double x) {
    return 2.0 - 2.0 * std::sqrt((1.0 + std::sqrt(1.0 - x * x)) / 2.0);
  };
  const double expected = b(1.0) - b(0.6) - b(0.8);
  CHECK(expected == doctest::Approx(0.2720074157277642).epsilon(1e-12));
  CHECK(lemma(ScalarLemma::b17, {0.6, 0.8, 1.0}) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(lemma(ScalarLemma::b17, {0.6, 0.8, 1.0}) > 0.0);

  // G(1) - G(0.6) - G(0.8) = 0.5 - 0.1 - 0.2
  CHECK(lemma(ScalarLemma::g18, {0.6, 0.8, 1.0}) == doctest::Approx(0.2).epsilon(1e-12));

  // (1 + x)^t at (t, k, x) = (2, 1, 1): both sides equal 4
  CHECK(lemma(ScalarLemma::h23, {2.0, 1.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("scalar lemmas: domain gates reject out-of-domain points") {
  CHECK_THROWS_AS(lemma(ScalarLemma::b17, {0.9, 0.9, 1.0}), std::domain_error);
  CHECK_THROWS_AS(lemma(ScalarLemma::g18, {0.5, 0.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(lemma(ScalarLemma::a1, {-0.1, 0.5}), std::domain_error);
  CHECK_THROWS_AS(lemma(ScalarLemma::h22, {0.5, 1.0, 0.5}), std::domain_error);   // mu < 1
  CHECK_THROWS_AS(lemma(ScalarLemma::h22, {2.0, 0.3, 0.5}), std::domain_error);   // ascending
  CHECK_THROWS_AS(lemma(ScalarLemma::h23, {2.0, 2.0, 0.6}), std::domain_error);   // x > 1/k
  CHECK_THROWS_AS(lemma(ScalarLemma::h23, {0.5, 1.0, 0.5}), std::domain_error);   // t < 1
  CHECK_THROWS_AS(lemma(ScalarLemma::b17, {0.5}), std::invalid_argument);
}

TEST_CASE("scalar lemmas: grid boundary points with rounding drift still evaluate") {
  // 0.6^2 + 0.8^2 lands just above 1 in floating point
  CHECK_NOTHROW(lemma(ScalarLemma::a1, {0.6, 0.8}));
  CHECK(lemma(ScalarLemma::a1, {0.6, 0.8}) >= -kScalarTol);
}

TEST_CASE("scalar lemmas: appendix chain samples stay non-negative") {
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = rng.uniform01();
    const double y = rng.uniform01();
    if (x * x + y * y >= 1.0) continue;
    for (ScalarLemma which : {ScalarLemma::a1, ScalarLemma::a2, ScalarLemma::a5,
                              ScalarLemma::a8, ScalarLemma::a10}) {
      CHECK(lemma(which, {x, y}) >= -kScalarTol);
    }
    for (double eta : {1.0, 1.5, 2.0, 4.0}) {
      CHECK(lemma(ScalarLemma::b17, {x, y, eta}) >= -kScalarTol);
      CHECK(lemma(ScalarLemma::g18, {x, y, eta}) >= -kScalarTol);
    }
  }
}

TEST_CASE("scalar lemmas: ordered power sums over random tuples") {
  Rng rng(10);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<double, 6> args{};
    for (double mu : {1.0, 2.0, 3.5}) {
      args[0] = mu;
      for (int i = 1; i <= 5; ++i) args[i] = rng.uniform01();
      std::sort(args.begin() + 1, args.end(), std::greater<>());
      CHECK(check_scalar_lemma(ScalarLemma::h22, args) >= -kScalarTol);
    }
  }
}

TEST_CASE("scalar lemmas: binomial-style bound over random admissible inputs") {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const double t = rng.uniform(1.0, 4.0);
    const double k = rng.uniform(1.0, 3.0);
    const double x = rng.uniform(0.0, 1.0 / k);
    CHECK(lemma(ScalarLemma::h23, {t, k, x}) >= -kScalarTol);
  }
}

TEST_CASE("lemma_sweep: default-style sweep is clean and well-formed") {
  const std::array<double, 2> etas{1.0, 2.0};
  const auto rows = lemma_sweep(51, etas, 200, 3);
  // grid rows: b17/g18 per eta + five appendix inequalities; random rows:
  // a5/a8/a10 + three h22 exponents + h23
  CHECK(rows.size() == 2 * etas.size() + 5 + 3 + 3 + 1);
  for (const auto& row : rows) {
    CHECK(row.n_points > 0);
    CHECK(row.min_residual >= -kScalarTol);
    CHECK_FALSE(row.argmin.empty());
  }
  CHECK_THROWS_AS(lemma_sweep(5, etas, 100, 0), std::invalid_argument);
}

TEST_CASE("lemma_sweep: detects the equality points on the axes") {
  const std::array<double, 1> etas{1.0};
  const auto rows = lemma_sweep(201, etas, 50, 0);
  for (const auto& row : rows) {
    if (row.random_sampling) continue;
    if (row.inequality == ScalarLemma::b17 || row.inequality == ScalarLemma::g18) {
      // equality holds along the axes, so the sweep minimum is (numerically) 0
      CHECK(row.min_residual <= 1e-15);
      CHECK(row.min_residual >= -kScalarTol);
    }
  }
}
