#pragma once

#include <Eigen/Dense>

#include "hyperent/sign_state.hpp"

namespace hyperent {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr int kMaxDenseQubits = 10;

/// Dense 2^n x 2^n density operator, basis ordering as in SignState.
///
/// Construction validates Hermiticity (entrywise 1e-12) and unit trace
/// (1e-12); positivity (eigenvalues >= -1e-10) is checked unless the caller
/// opts out for matrices it knows to be PSD by construction.
class DensityMatrix {
 public:
  enum class Check { Full, SkipPositivity };

  DensityMatrix(int qubits, ComplexMatrix entries, Check check = Check::Full);

  static DensityMatrix pure(const SignState& s);
  static DensityMatrix maximally_mixed(int qubits);

  int qubits() const noexcept { return n_; }
  Eigen::Index dimension() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  /// True when every entry has zero imaginary part.
  bool is_real() const;
  double purity() const;
  /// <s|rho|s>.
  double expectation(const SignState& s) const;

  /// Convex combination w*this + (1-w)*other; w in [0,1].
  DensityMatrix mix(const DensityMatrix& other, double w) const;

 private:
  int n_;
  ComplexMatrix m_;
};

/// Tensor product rho_a (on the qubits of `side_a`) with rho_b (the rest),
/// embedded in an n-qubit register. Each factor uses the local ordering in
/// which its lowest vertex is the least significant bit.
DensityMatrix embed_product(int qubits, EdgeMask side_a, const DensityMatrix& rho_a,
                            const DensityMatrix& rho_b);

}  // namespace hyperent
