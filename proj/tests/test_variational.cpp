#include "entmono/variational.hpp"

#include "entmono/measures.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace entmono;

namespace {

// Brute-force product-state search on a dense angle grid; every grid value is
// an upper bound on the true minimum, and the optimizer must do at least as
// well as the best grid point.
double grid_min_infidelity(const StateVector& psi, int g) {
  const CVector& amps = psi.amplitudes();
  double best = 1.0;
  for (int ia = 0; ia <= g; ++ia) {
    const double ta = ia * std::numbers::pi / g;
    for (int ja = 0; ja < g; ++ja) {
      const double pa = ja * 2.0 * std::numbers::pi / g;
      const std::complex<double> a0{std::cos(0.5 * ta), 0.0};
      const std::complex<double> a1 = std::polar(std::sin(0.5 * ta), pa);
      for (int ib = 0; ib <= g; ++ib) {
        const double tb = ib * std::numbers::pi / g;
        for (int jb = 0; jb < g; ++jb) {
          const double pb = jb * 2.0 * std::numbers::pi / g;
          const std::complex<double> b0{std::cos(0.5 * tb), 0.0};
          const std::complex<double> b1 = std::polar(std::sin(0.5 * tb), pb);
          const std::complex<double> s =
              std::conj(a0 * b0) * amps(0) + std::conj(a0 * b1) * amps(1) +
              std::conj(a1 * b0) * amps(2) + std::conj(a1 * b1) * amps(3);
          best = std::min(best, 1.0 - std::norm(s));
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("variational: product input reaches zero") {
  const StateVector product = make_named_state(StateFamily::product, 2);
  CHECK(min_geometric_pure(product) <= 1e-9);
  CHECK(min_bures_pure(product) <= 1e-9);
}

TEST_CASE("variational: Bell state hits the closed-form maxima") {
  const StateVector bell = make_named_state(StateFamily::bell, 2);
  CHECK(min_geometric_pure(bell) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(min_bures_pure(bell) == doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-6));
}

TEST_CASE("variational: matches the closed forms on Haar states") {
  const int cut0[] = {0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const StateVector psi = sample_haar_state(2, 500 + seed);
    const double c = concurrence_pure(psi, cut0);
    CHECK(std::abs(min_geometric_pure(psi) - geometric_of(c)) <= 1e-6);
    CHECK(std::abs(min_bures_pure(psi) - bures_of(c)) <= 1e-6);
  }
}

TEST_CASE("variational: never beats the true minimum by more than tolerance") {
  const int cut0[] = {0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const StateVector psi = sample_haar_state(2, 600 + seed);
    CHECK(min_geometric_pure(psi) >= geometric_of(concurrence_pure(psi, cut0)) - 1e-6);
    CHECK(min_bures_pure(psi) >= bures_of(concurrence_pure(psi, cut0)) - 1e-6);
  }
}

TEST_CASE("variational: refinement beats a dense brute-force grid") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const StateVector psi = sample_haar_state(2, 700 + seed);
    const double grid_bound = grid_min_infidelity(psi, 24);
    CHECK(min_geometric_pure(psi) <= grid_bound + 1e-12);
  }
}

TEST_CASE("variational: result is stable across optimizer seeds") {
  const StateVector psi = sample_haar_state(2, 321);
  VariationalOptions opts;
  opts.seed = 1;
  const double first = min_geometric_pure(psi, opts);
  for (std::uint64_t seed = 2; seed <= 5; ++seed) {
    opts.seed = seed;
    CHECK(std::abs(min_geometric_pure(psi, opts) - first) < 1e-8);
  }
}

TEST_CASE("variational: rejects non-2-qubit input") {
  const StateVector psi3 = sample_haar_state(3, 1);
  CHECK_THROWS_AS(min_geometric_pure(psi3), std::invalid_argument);
  CHECK_THROWS_AS(min_bures_pure(psi3), std::invalid_argument);
}
