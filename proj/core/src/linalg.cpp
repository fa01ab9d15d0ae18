#include "entmono/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <stdexcept>
#include <string>
#include <vector>

namespace entmono {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw std::invalid_argument("kron: empty operand");
  }
  if (a.rows() * b.rows() > kMaxDim || a.cols() * b.cols() > kMaxDim) {
    throw std::length_error("kron: result exceeds the 256-dim (8-qubit) cap");
  }
  return Eigen::kroneckerProduct(a, b);
}

HermitianEig hermitian_eig(const CMatrix& m) {
  if (m.size() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eig: matrix must be square and non-empty");
  }
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-9) {
    throw std::domain_error("hermitian_eig: matrix deviates from Hermitian by " +
                            std::to_string(dev));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (m + m.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  }
  HermitianEig out;
  // the solver sorts ascending; flip to descending
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

CMatrix matrix_sqrt_psd(const CMatrix& m) {
  HermitianEig eig = hermitian_eig(m);
  const double min_ev = eig.eigenvalues.minCoeff();
  if (min_ev < -1e-8) {
    throw std::domain_error("matrix_sqrt_psd: matrix is not PSD, min eigenvalue " +
                            std::to_string(min_ev));
  }
  const Eigen::VectorXd lam = eig.eigenvalues.cwiseMax(0.0);
  return eig.eigenvectors * lam.cwiseSqrt().asDiagonal() * eig.eigenvectors.adjoint();
}

CMatrix partial_trace(const CMatrix& rho, int n_qubits, std::span<const int> keep) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (n_qubits < 1 || dim > kMaxDim) {
    throw std::invalid_argument("partial_trace: n_qubits must be in [1, 8]");
  }
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("partial_trace: matrix dimension != 2^n_qubits");
  }
  std::vector<bool> kept(n_qubits, false);
  for (int q : keep) {
    if (q < 0 || q >= n_qubits) {
      throw std::out_of_range("partial_trace: qubit index " + std::to_string(q) +
                              " out of range");
    }
    if (kept[q]) {
      throw std::out_of_range("partial_trace: repeated qubit index " + std::to_string(q));
    }
    kept[q] = true;
  }
  std::vector<int> traced;
  traced.reserve(n_qubits - keep.size());
  for (int q = 0; q < n_qubits; ++q) {
    if (!kept[q]) traced.push_back(q);
  }

  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(traced.size());
  const Eigen::Index dk = Eigen::Index{1} << nk;
  const Eigen::Index dt = Eigen::Index{1} << nt;

  // Scatter each reduced index into its bit positions of the full index once.
  std::vector<Eigen::Index> keep_bits(dk, 0);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (int p = 0; p < nk; ++p) {
      keep_bits[i] |= ((i >> (nk - 1 - p)) & 1) << (n_qubits - 1 - keep[p]);
    }
  }
  std::vector<Eigen::Index> traced_bits(dt, 0);
  for (Eigen::Index r = 0; r < dt; ++r) {
    for (int p = 0; p < nt; ++p) {
      traced_bits[r] |= ((r >> (nt - 1 - p)) & 1) << (n_qubits - 1 - traced[p]);
    }
  }

  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (Eigen::Index r = 0; r < dt; ++r) {
        acc += rho(keep_bits[i] | traced_bits[r], keep_bits[j] | traced_bits[r]);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace entmono
