#include "entmono/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entmono {

namespace {

void require_qubit_count(int n, int lo, const char* fn) {
  if (n < lo || n > kMaxQubits) {
    throw std::domain_error(std::string(fn) + ": n_qubits " + std::to_string(n) +
                            " outside [" + std::to_string(lo) + ", " +
                            std::to_string(kMaxQubits) + "]");
  }
}

bool all_finite(const CMatrix& m) { return m.allFinite(); }

}  // namespace

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_ < 1 || n_ > kMaxQubits) {
    throw std::domain_error("StateVector: n_qubits outside [1, 8]");
  }
  if (amps_.size() != (Eigen::Index{1} << n_)) {
    throw std::invalid_argument("StateVector: amplitude count != 2^n_qubits");
  }
  if (!amps_.allFinite()) {
    throw std::invalid_argument("StateVector: non-finite amplitude");
  }
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::domain_error("StateVector: squared norm " + std::to_string(norm2) +
                            " deviates from 1 by more than 1e-10");
  }
}

DensityMatrix::DensityMatrix(int n_qubits, CMatrix matrix)
    : n_(n_qubits), mat_(std::move(matrix)) {
  if (n_ < 1 || n_ > kMaxQubits) {
    throw std::domain_error("DensityMatrix: n_qubits outside [1, 8]");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_;
  if (mat_.rows() != dim || mat_.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: dimension != 2^n_qubits");
  }
  if (!all_finite(mat_)) {
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  }
  const double herm_dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-10) {
    throw std::domain_error("DensityMatrix: Hermiticity deviation " +
                            std::to_string(herm_dev));
  }
  const double tr_dev = std::abs(mat_.trace().real() - 1.0) + std::abs(mat_.trace().imag());
  if (tr_dev > 1e-10) {
    throw std::domain_error("DensityMatrix: trace deviates from 1 by " +
                            std::to_string(tr_dev));
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  return DensityMatrix(psi.n_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return mat_.squaredNorm();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (mat_ + mat_.adjoint()));
  return solver.eigenvalues().minCoeff();
}

KrausChannel::KrausChannel(std::vector<Eigen::Matrix2cd> operators)
    : ops_(std::move(operators)) {
  if (ops_.empty()) {
    throw std::invalid_argument("KrausChannel: no operators");
  }
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& k : ops_) {
    if (!k.allFinite()) throw std::invalid_argument("KrausChannel: non-finite operator");
    sum += k.adjoint() * k;
  }
  const double dev = (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw std::domain_error("KrausChannel: completeness deviation " + std::to_string(dev));
  }
}

StateVector make_named_state(StateFamily family, int n_qubits) {
  require_qubit_count(n_qubits, 2, "make_named_state");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  CVector amps = CVector::Zero(dim);
  switch (family) {
    case StateFamily::ghz:
      amps(0) = 1.0 / std::numbers::sqrt2;
      amps(dim - 1) = 1.0 / std::numbers::sqrt2;
      break;
    case StateFamily::w: {
      const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
      for (int q = 0; q < n_qubits; ++q) {
        amps(Eigen::Index{1} << (n_qubits - 1 - q)) = a;
      }
      break;
    }
    case StateFamily::product:
      amps(0) = 1.0;
      break;
    case StateFamily::bell:
      if (n_qubits != 2) {
        throw std::domain_error("make_named_state: bell requires exactly 2 qubits");
      }
      amps(0) = 1.0 / std::numbers::sqrt2;
      amps(3) = 1.0 / std::numbers::sqrt2;
      break;
  }
  return StateVector(n_qubits, std::move(amps));
}

StateVector sample_haar_state(int n_qubits, std::uint64_t seed) {
  require_qubit_count(n_qubits, 2, "sample_haar_state");
  Rng rng(seed);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  CVector amps(dim);
  double norm2 = 0.0;
  do {
    for (Eigen::Index i = 0; i < dim; ++i) amps(i) = rng.complex_normal();
    norm2 = amps.squaredNorm();
  } while (norm2 <= 0.0);
  amps /= std::sqrt(norm2);
  return StateVector(n_qubits, std::move(amps));
}

CMatrix haar_unitary(Eigen::Index dim, Rng& rng) {
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("haar_unitary: dimension outside [1, 256]");
  }
  CMatrix gauss(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) gauss(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<CMatrix> qr(gauss);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the R-diagonal phases so Q is Haar rather than QR-convention biased.
  for (Eigen::Index j = 0; j < dim; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    const std::complex<double> phase = (a > 0.0) ? d / a : std::complex<double>(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

CMatrix sample_local_unitary(std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(2, rng);
}

KrausChannel sample_channel(std::uint64_t seed, int n_kraus) {
  if (n_kraus < 1 || n_kraus > 4) {
    throw std::invalid_argument("sample_channel: n_kraus outside [1, 4]");
  }
  Rng rng(seed);
  const Eigen::Index anc = n_kraus;
  const CMatrix u = haar_unitary(2 * anc, rng);
  // Composite index (qubit a, ancilla j) = a*anc + j; ancilla starts in |0>.
  std::vector<Eigen::Matrix2cd> ops(n_kraus);
  for (Eigen::Index j = 0; j < anc; ++j) {
    Eigen::Matrix2cd k;
    for (Eigen::Index a = 0; a < 2; ++a) {
      for (Eigen::Index b = 0; b < 2; ++b) {
        k(a, b) = u(a * anc + j, b * anc);
      }
    }
    ops[static_cast<std::size_t>(j)] = k;
  }
  return KrausChannel(std::move(ops));
}

DensityMatrix apply_channel_one_side(const DensityMatrix& rho, const KrausChannel& ch,
                                     int target) {
  const int n = rho.n_qubits();
  if (target < 0 || target >= n) {
    throw std::out_of_range("apply_channel_one_side: target qubit " +
                            std::to_string(target) + " out of range");
  }
  const Eigen::Index d_left = Eigen::Index{1} << target;
  const Eigen::Index d_right = Eigen::Index{1} << (n - 1 - target);
  const CMatrix id_left = CMatrix::Identity(d_left, d_left);
  const CMatrix id_right = CMatrix::Identity(d_right, d_right);
  CMatrix out = CMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& k : ch.operators()) {
    const CMatrix embedded = kron(kron(id_left, k), id_right);
    out += embedded * rho.matrix() * embedded.adjoint();
  }
  return DensityMatrix(n, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  if (keep.empty()) {
    throw std::out_of_range("partial_trace: keep set must be non-empty");
  }
  CMatrix reduced = partial_trace(rho.matrix(), rho.n_qubits(), keep);
  return DensityMatrix(static_cast<int>(keep.size()), std::move(reduced));
}

DensityMatrix sample_induced_two_qubit(int n_total, std::uint64_t seed) {
  if (n_total != 3 && n_total != 4) {
    throw std::domain_error("sample_induced_two_qubit: n_total must be 3 or 4");
  }
  const StateVector psi = sample_haar_state(n_total, seed);
  const CMatrix dm = psi.amplitudes() * psi.amplitudes().adjoint();
  constexpr int keep[] = {0, 1};
  return DensityMatrix(2, partial_trace(dm, n_total, keep));
}

StateVector relabel_qubits(const StateVector& psi, std::span<const int> perm) {
  const int n = psi.n_qubits();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("relabel_qubits: permutation size != n_qubits");
  }
  std::vector<bool> seen(n, false);
  for (int q : perm) {
    if (q < 0 || q >= n || seen[q]) {
      throw std::invalid_argument("relabel_qubits: not a permutation of 0.." +
                                  std::to_string(n - 1));
    }
    seen[q] = true;
  }
  const Eigen::Index dim = psi.dim();
  CVector out(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::Index j = 0;
    for (int p = 0; p < n; ++p) {
      j |= ((i >> (n - 1 - perm[p])) & 1) << (n - 1 - p);
    }
    out(j) = psi.amplitudes()(i);
  }
  return StateVector(n, std::move(out));
}

}  // namespace entmono
