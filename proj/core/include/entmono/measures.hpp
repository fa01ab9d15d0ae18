#pragma once

#include "entmono/states.hpp"

#include <span>
#include <string_view>

namespace entmono {

enum class MeasureKind { concurrence, bures, geometric };

std::string_view to_string(MeasureKind kind);
MeasureKind parse_measure_kind(std::string_view name);

struct MeasureValue {
  MeasureKind kind;
  double value;
};

// Largest value each measure attains on a two-qubit (or one-vs-rest) cut:
// 1 for concurrence, 2 - sqrt(2) for Bures, 1/2 for geometric.
double measure_max(MeasureKind kind);

// Bures measure of a two-qubit state as a function of its concurrence:
// B(x) = 2 - 2*sqrt((1 + sqrt(1 - x^2)) / 2), increasing on [0, 1].
// x may drift outside [0, 1] by at most 1e-9 and is clamped; larger
// excursions throw std::domain_error.
double bures_of(double concurrence);

// Geometric measure of a two-qubit state as a function of its concurrence:
// G(x) = (1 - sqrt(1 - x^2)) / 2, increasing on [0, 1]. Same clamp contract.
double geometric_of(double concurrence);

// Uhlmann fidelity F(rho, sigma) = (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2,
// clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Pure-state concurrence across the cut: sqrt(2 (1 - tr rho_cut^2)).
// cut must be a non-empty proper subset of the qubits.
double concurrence_pure(const StateVector& psi, std::span<const int> cut);

// Wootters concurrence of a two-qubit mixed state,
// C = max(0, l1 - l2 - l3 - l4), where l_i are the descending square roots of
// the eigenvalues of rho * rho_tilde and rho_tilde = (Y(x)Y) rho^* (Y(x)Y).
// Computed through the similar Hermitian form sqrt(rho) rho_tilde sqrt(rho)
// for stability.
double concurrence_two_qubit(const DensityMatrix& rho);

// Measure across a one-qubit-vs-rest cut of a pure state (the complement of a
// single qubit is also accepted; both sides have Schmidt rank <= 2, so the
// two-qubit closed forms apply). kind = concurrence returns the concurrence
// itself.
MeasureValue measure_pure_bipartition(const StateVector& psi, std::span<const int> cut,
                                      MeasureKind kind);

// Measure of a two-qubit mixed state via the closed forms on the Wootters
// concurrence.
MeasureValue measure_two_qubit(const DensityMatrix& rho, MeasureKind kind);

}  // namespace entmono
