#pragma once

#include <Eigen/Dense>

#include <span>

namespace entmono {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Dense kernels are sized for at most 8 qubits.
inline constexpr Eigen::Index kMaxDim = 256;

// Spectral decomposition of a Hermitian matrix. Eigenvalues are sorted
// descending; eigenvectors are the matching unitary columns.
struct HermitianEig {
  Eigen::VectorXd eigenvalues;
  CMatrix eigenvectors;
};

// Tensor product. (a (x) b)[i*rb+k, j*cb+l] = a[i,j] * b[k,l].
// Throws std::length_error if either result side exceeds kMaxDim.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// m must be square and Hermitian to within 1e-9 in the entrywise max norm;
// it is symmetrized internally before solving. Throws std::invalid_argument
// (shape) or std::domain_error (too far from Hermitian).
HermitianEig hermitian_eig(const CMatrix& m);

// Principal square root of a Hermitian PSD matrix. Eigenvalues in [-1e-8, 0)
// are treated as numerical zeros; anything below -1e-8 throws
// std::domain_error.
CMatrix matrix_sqrt_psd(const CMatrix& m);

// Reduced matrix over the kept qubits, in the order listed by `keep`.
// rho must be 2^n x 2^n. Qubit 0 is the most significant bit of the basis
// index, i.e. |q0 q1 ... q_{n-1}> lives at index q0*2^{n-1} + ... + q_{n-1}.
// Throws std::out_of_range for invalid or repeated qubit indices.
CMatrix partial_trace(const CMatrix& rho, int n_qubits, std::span<const int> keep);

}  // namespace entmono
