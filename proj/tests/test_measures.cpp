#include "entmono/measures.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace entmono;
using entmono::testing::wootters_oracle;

namespace {

DensityMatrix werner(double p) {
  const StateVector bell = make_named_state(StateFamily::bell, 2);
  CMatrix m = p * bell.amplitudes() * bell.amplitudes().adjoint() +
              (1.0 - p) * CMatrix::Identity(4, 4) / 4.0;
  return DensityMatrix(2, std::move(m));
}

}  // namespace

TEST_CASE("closed forms: endpoint fixtures") {
  CHECK(bures_of(0.0) == 0.0);
  CHECK(bures_of(1.0) == doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-14));
  CHECK(geometric_of(0.0) == 0.0);
  CHECK(geometric_of(1.0) == 0.5);
  // direct evaluation fixtures
  CHECK(bures_of(0.6) == doctest::Approx(0.10263340389897236).epsilon(1e-12));
  CHECK(geometric_of(2.0 / 3.0) == doctest::Approx(0.12732200375003505).epsilon(1e-12));
}

TEST_CASE("closed forms: strictly increasing on a dense grid") {
  const int n = 10000;
  double prev_b = bures_of(0.0);
  double prev_g = geometric_of(0.0);
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) / n;
    const double b = bures_of(x);
    const double g = geometric_of(x);
    CHECK(b > prev_b);
    CHECK(g > prev_g);
    prev_b = b;
    prev_g = g;
  }
}

TEST_CASE("closed forms: clamp band and domain errors") {
  CHECK(bures_of(1.0 + 5e-10) == bures_of(1.0));
  CHECK(geometric_of(-5e-10) == 0.0);
  CHECK_THROWS_AS(bures_of(1.1), std::domain_error);
  CHECK_THROWS_AS(geometric_of(-0.1), std::domain_error);
}

TEST_CASE("fidelity: self, pure overlap, mixed fixture") {
  const DensityMatrix rho = sample_induced_two_qubit(3, 5);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));

  const StateVector a = sample_haar_state(2, 1);
  const StateVector b = sample_haar_state(2, 2);
  const double overlap = std::norm(a.amplitudes().dot(b.amplitudes()));
  CHECK(fidelity(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b)) ==
        doctest::Approx(overlap).epsilon(1e-9));

  // F(|0><0|, I/2) = 1/2
  CVector zero = CVector::Zero(2);
  zero(0) = 1.0;
  const DensityMatrix pure0(1, zero * zero.adjoint());
  const DensityMatrix mixed(1, CMatrix::Identity(2, 2) / 2.0);
  CHECK(fidelity(pure0, mixed) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fidelity: symmetric and shape-checked") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const DensityMatrix a = sample_induced_two_qubit(3, seed);
    const DensityMatrix b = sample_induced_two_qubit(4, seed + 1000);
    CHECK(std::abs(fidelity(a, b) - fidelity(b, a)) <= 1e-9);
  }
  const DensityMatrix small(1, CMatrix::Identity(2, 2) / 2.0);
  const DensityMatrix big(2, CMatrix::Identity(4, 4) / 4.0);
  CHECK_THROWS_AS(fidelity(small, big), std::invalid_argument);
}

TEST_CASE("concurrence_pure: product, GHZ, W") {
  const int cut0[] = {0};
  const StateVector product = make_named_state(StateFamily::product, 3);
  for (const auto& cut : {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{0, 1}}) {
    CHECK(concurrence_pure(product, cut) == 0.0);
  }

  const StateVector ghz = make_named_state(StateFamily::ghz, 3);
  CHECK(concurrence_pure(ghz, cut0) == doctest::Approx(1.0).epsilon(1e-12));

  const StateVector w = make_named_state(StateFamily::w, 3);
  CHECK(concurrence_pure(w, cut0) ==
        doctest::Approx(2.0 * std::numbers::sqrt2 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(concurrence_pure(w, std::vector<int>{}), std::domain_error);
  CHECK_THROWS_AS(concurrence_pure(w, std::vector<int>{0, 1, 2}), std::domain_error);
}

TEST_CASE("concurrence_two_qubit: Bell, W marginal, Werner boundary") {
  const DensityMatrix bell = DensityMatrix::from_pure(make_named_state(StateFamily::bell, 2));
  CHECK(concurrence_two_qubit(bell) == doctest::Approx(1.0).epsilon(1e-12));

  const StateVector w = make_named_state(StateFamily::w, 3);
  const CMatrix dm = w.amplitudes() * w.amplitudes().adjoint();
  const int keep[] = {0, 1};
  const DensityMatrix marginal(2, partial_trace(dm, 3, keep));
  CHECK(wootters_oracle(marginal.matrix()) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(concurrence_two_qubit(marginal) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

  CHECK(concurrence_two_qubit(werner(1.0 / 3.0)) <= 1e-8);
  CHECK(concurrence_two_qubit(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-9));

  const DensityMatrix one_qubit(1, CMatrix::Identity(2, 2) / 2.0);
  CHECK_THROWS_AS(concurrence_two_qubit(one_qubit), std::invalid_argument);
}

TEST_CASE("concurrence_two_qubit: matches the rho*rho_tilde eigenvalue oracle") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const DensityMatrix rho = sample_induced_two_qubit(static_cast<int>(3 + seed % 2), seed);
    CHECK(std::abs(concurrence_two_qubit(rho) - wootters_oracle(rho.matrix())) <= 1e-8);
  }
}

TEST_CASE("measure_pure_bipartition: GHZ fixtures and cut validation") {
  const StateVector ghz = make_named_state(StateFamily::ghz, 3);
  const int cut0[] = {0};
  CHECK(measure_pure_bipartition(ghz, cut0, MeasureKind::geometric).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(measure_pure_bipartition(ghz, cut0, MeasureKind::bures).value ==
        doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-12));

  const StateVector product = make_named_state(StateFamily::product, 3);
  for (MeasureKind kind : {MeasureKind::concurrence, MeasureKind::bures, MeasureKind::geometric}) {
    CHECK(measure_pure_bipartition(product, cut0, kind).value == 0.0);
  }

  // complement of one qubit mirrors the single-qubit cut
  const int cut12[] = {1, 2};
  CHECK(measure_pure_bipartition(ghz, cut12, MeasureKind::geometric).value ==
        doctest::Approx(0.5).epsilon(1e-12));

  const StateVector psi4 = sample_haar_state(4, 3);
  const int cut01[] = {0, 1};
  CHECK_THROWS_AS(measure_pure_bipartition(psi4, cut01, MeasureKind::bures),
                  std::domain_error);
}

TEST_CASE("measure_two_qubit: Bell and W marginal fixtures") {
  const DensityMatrix bell = DensityMatrix::from_pure(make_named_state(StateFamily::bell, 2));
  CHECK(measure_two_qubit(bell, MeasureKind::bures).value ==
        doctest::Approx(2.0 - std::numbers::sqrt2).epsilon(1e-10));

  const StateVector w = make_named_state(StateFamily::w, 3);
  const CMatrix dm = w.amplitudes() * w.amplitudes().adjoint();
  const int keep[] = {0, 1};
  const DensityMatrix marginal(2, partial_trace(dm, 3, keep));
  CHECK(measure_two_qubit(marginal, MeasureKind::geometric).value ==
        doctest::Approx(0.12732200375003505).epsilon(1e-9));

  CHECK(measure_two_qubit(werner(0.2), MeasureKind::bures).value == 0.0);
  CHECK(measure_two_qubit(werner(0.2), MeasureKind::geometric).value == 0.0);
}

TEST_CASE("pure-state consistency: both production routes agree on Haar states") {
  const int cut0[] = {0};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const StateVector psi = sample_haar_state(2, 4000 + seed);
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    for (MeasureKind kind : {MeasureKind::concurrence, MeasureKind::bures, MeasureKind::geometric}) {
      const double via_pure = measure_pure_bipartition(psi, cut0, kind).value;
      const double via_mixed = measure_two_qubit(rho, kind).value;
      CHECK(std::abs(via_pure - via_mixed) <= 1e-8);
    }
  }
}

TEST_CASE("one-sided channels never increase the measures") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const StateVector psi = sample_haar_state(2, 7000 + seed);
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    const KrausChannel ch = sample_channel(900 + seed, 1 + static_cast<int>(seed % 4));
    const DensityMatrix out = apply_channel_one_side(rho, ch, 1);
    for (MeasureKind kind : {MeasureKind::bures, MeasureKind::geometric}) {
      const double before = measure_two_qubit(rho, kind).value;
      const double after = measure_two_qubit(out, kind).value;
      CHECK(after <= before + 1e-8);
    }
  }
}

TEST_CASE("channel outputs never exceed the pure-state maximum") {
  const DensityMatrix bell = DensityMatrix::from_pure(make_named_state(StateFamily::bell, 2));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const KrausChannel ch = sample_channel(1300 + seed, 1 + static_cast<int>(seed % 4));
    const DensityMatrix out = apply_channel_one_side(bell, ch, 1);
    for (MeasureKind kind : {MeasureKind::bures, MeasureKind::geometric}) {
      CHECK(measure_two_qubit(out, kind).value <= measure_max(kind) + 1e-10);
    }
  }
}

TEST_CASE("measure kind parsing round-trips") {
  for (MeasureKind kind : {MeasureKind::concurrence, MeasureKind::bures, MeasureKind::geometric}) {
    CHECK(parse_measure_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_measure_kind("negativity"), std::invalid_argument);
}
