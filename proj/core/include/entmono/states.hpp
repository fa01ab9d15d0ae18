#pragma once

#include "entmono/linalg.hpp"
#include "entmono/rng.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace entmono {

inline constexpr int kMaxQubits = 8;

// Normalized pure state over n qubits. Qubit 0 is the most significant bit of
// the basis index: |q0 q1 ... q_{n-1}> sits at index q0*2^{n-1} + ... + q_{n-1}.
class StateVector {
 public:
  // Validates the size, finiteness and normalization (|norm - 1| <= 1e-10).
  StateVector(int n_qubits, CVector amplitudes);

  int n_qubits() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const CVector& amplitudes() const { return amps_; }

 private:
  int n_;
  CVector amps_;
};

// Hermitian, unit-trace density matrix over n qubits. The constructor checks
// Hermiticity and trace to 1e-10 and finiteness; positivity is checked on
// demand (min_eigenvalue) since every construction path here is PSD by
// construction up to rounding.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, CMatrix matrix);
  static DensityMatrix from_pure(const StateVector& psi);

  int n_qubits() const { return n_; }
  Eigen::Index dim() const { return mat_.rows(); }
  const CMatrix& matrix() const { return mat_; }

  double purity() const;          // tr(rho^2)
  double min_eigenvalue() const;  // smallest eigenvalue of the symmetrized matrix

 private:
  int n_;
  CMatrix mat_;
};

// Single-qubit channel in Kraus form; sum_i K_i^dag K_i = I within 1e-10.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Eigen::Matrix2cd> operators);
  std::span<const Eigen::Matrix2cd> operators() const { return ops_; }

 private:
  std::vector<Eigen::Matrix2cd> ops_;
};

enum class StateFamily { ghz, w, product, bell };

// Canonical fixture states. n_qubits must be in [2, 8]; bell requires n = 2.
StateVector make_named_state(StateFamily family, int n_qubits);

// Haar-random pure state: i.i.d. standard complex Gaussian amplitudes,
// normalized. n_qubits must be in [2, 8]; fixed seed gives identical
// amplitudes bitwise.
StateVector sample_haar_state(int n_qubits, std::uint64_t seed);

// Haar-random unitary of the given dimension: QR of a complex Gaussian matrix
// with the R-diagonal phase fix.
CMatrix haar_unitary(Eigen::Index dim, Rng& rng);

// Haar-random 2x2 unitary.
CMatrix sample_local_unitary(std::uint64_t seed);

// Random single-qubit channel via Stinespring dilation: a Haar unitary on
// qubit (x) ancilla (ancilla dimension n_kraus, prepared in |0>), ancilla
// traced out. n_kraus must be in [1, 4]; n_kraus = 1 gives a unitary channel.
KrausChannel sample_channel(std::uint64_t seed, int n_kraus);

// sum_i (I (x) K_i) rho (I (x) K_i)^dag with K_i acting on `target`.
DensityMatrix apply_channel_one_side(const DensityMatrix& rho, const KrausChannel& ch,
                                     int target);

// Typed partial trace; keep must be a non-empty subset of the qubits.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

// Two-qubit mixed state from the induced measure: partial trace of a Haar pure
// state on n_total qubits (3 or 4) down to qubits {0, 1}.
DensityMatrix sample_induced_two_qubit(int n_total, std::uint64_t seed);

// Relabels qubits: new qubit p is old qubit perm[p]. perm must be a
// permutation of 0..n-1.
StateVector relabel_qubits(const StateVector& psi, std::span<const int> perm);

}  // namespace entmono
