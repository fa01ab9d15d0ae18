#include "entmono/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entmono {

namespace {

constexpr double kClampBand = 1e-9;

double clamp_unit(double x, const char* fn) {
  if (x < -kClampBand || x > 1.0 + kClampBand) {
    throw std::domain_error(std::string(fn) + ": argument " + std::to_string(x) +
                            " outside [0, 1] beyond the 1e-9 clamp band");
  }
  return std::clamp(x, 0.0, 1.0);
}

// Y (x) Y is real and symmetric; it maps |00>,|11> to -|11>,-|00> and swaps
// |01>,|10|.
Eigen::Matrix4d spin_flip() {
  Eigen::Matrix4d yy;
  yy << 0, 0, 0, -1,
        0, 0, 1, 0,
        0, 1, 0, 0,
       -1, 0, 0, 0;
  return yy;
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::concurrence: return "concurrence";
    case MeasureKind::bures: return "bures";
    case MeasureKind::geometric: return "geometric";
  }
  return "?";
}

MeasureKind parse_measure_kind(std::string_view name) {
  if (name == "concurrence") return MeasureKind::concurrence;
  if (name == "bures") return MeasureKind::bures;
  if (name == "geometric") return MeasureKind::geometric;
  throw std::invalid_argument("unknown measure kind: " + std::string(name));
}

double measure_max(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::concurrence: return 1.0;
    case MeasureKind::bures: return 2.0 - std::numbers::sqrt2;
    case MeasureKind::geometric: return 0.5;
  }
  return 0.0;
}

double bures_of(double concurrence) {
  const double x = clamp_unit(concurrence, "bures_of");
  return 2.0 - 2.0 * std::sqrt((1.0 + std::sqrt(1.0 - x * x)) / 2.0);
}

double geometric_of(double concurrence) {
  const double x = clamp_unit(concurrence, "geometric_of");
  return (1.0 - std::sqrt(1.0 - x * x)) / 2.0;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const CMatrix root = matrix_sqrt_psd(rho.matrix());
  const CMatrix inner = root * sigma.matrix() * root;
  const HermitianEig eig = hermitian_eig(inner);
  double tr_sqrt = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    tr_sqrt += std::sqrt(std::max(0.0, eig.eigenvalues(i)));
  }
  return std::clamp(tr_sqrt * tr_sqrt, 0.0, 1.0);
}

double concurrence_pure(const StateVector& psi, std::span<const int> cut) {
  const int n = psi.n_qubits();
  if (cut.empty() || static_cast<int>(cut.size()) >= n) {
    throw std::domain_error("concurrence_pure: cut must be a non-empty proper subset");
  }
  const CMatrix dm = psi.amplitudes() * psi.amplitudes().adjoint();
  const CMatrix reduced = partial_trace(dm, n, cut);
  const double p = reduced.squaredNorm();  // tr(rho_cut^2)
  double c = std::sqrt(std::max(0.0, 2.0 * (1.0 - p)));
  const double d_cut = static_cast<double>(Eigen::Index{1} << cut.size());
  return std::min(c, std::sqrt(2.0 * (1.0 - 1.0 / d_cut)));
}

double concurrence_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("concurrence_two_qubit: 2-qubit density matrix required");
  }
  static const Eigen::Matrix4d yy = spin_flip();
  const Eigen::Matrix4cd r = rho.matrix();
  const Eigen::Matrix4cd r_tilde = yy * r.conjugate() * yy;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r);
  const Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
  const Eigen::Matrix4cd root =
      es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();

  const Eigen::Matrix4cd inner = root * r_tilde * root;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es2(0.5 * (inner + inner.adjoint()));
  const Eigen::Vector4d lam = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt();  // ascending
  return std::max(0.0, lam(3) - lam(2) - lam(1) - lam(0));
}

MeasureValue measure_pure_bipartition(const StateVector& psi, std::span<const int> cut,
                                      MeasureKind kind) {
  const int n = psi.n_qubits();
  const int sz = static_cast<int>(cut.size());
  if (sz != 1 && sz != n - 1) {
    throw std::domain_error(
        "measure_pure_bipartition: cut must be a single qubit or its complement");
  }
  const double c = concurrence_pure(psi, cut);
  switch (kind) {
    case MeasureKind::concurrence: return {kind, c};
    case MeasureKind::bures: return {kind, bures_of(c)};
    case MeasureKind::geometric: return {kind, geometric_of(c)};
  }
  throw std::logic_error("measure_pure_bipartition: unreachable");
}

MeasureValue measure_two_qubit(const DensityMatrix& rho, MeasureKind kind) {
  const double c = concurrence_two_qubit(rho);
  switch (kind) {
    case MeasureKind::concurrence: return {kind, c};
    case MeasureKind::bures: return {kind, bures_of(c)};
    case MeasureKind::geometric: return {kind, geometric_of(c)};
  }
  throw std::logic_error("measure_two_qubit: unreachable");
}

}  // namespace entmono
