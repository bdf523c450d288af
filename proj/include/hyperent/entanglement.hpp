#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperent/density_matrix.hpp"
#include "hyperent/hypergraph.hpp"

namespace hyperent {

/// Bipartition {A, complement of A} of n qubits. Stored canonically as the
/// numerically smaller of the two side masks, so both spellings compare equal.
class Bipartition {
 public:
  Bipartition(int qubits, EdgeMask side);

  /// "1|2,3,4", or a single side "1,2" (the complement is implied).
  static Bipartition parse(std::string_view text, int qubits);

  int qubits() const noexcept { return n_; }
  EdgeMask side() const noexcept { return side_; }
  EdgeMask complement() const noexcept { return ((EdgeMask{1} << n_) - 1) & ~side_; }
  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  int n_;
  EdgeMask side_;
};

/// The 2^(n-1) - 1 bipartitions of n qubits, ascending by canonical mask.
std::vector<Bipartition> all_bipartitions(int qubits);

/// Eigenvalues, descending.
struct Spectrum {
  std::vector<double> values;

  double min() const { return values.back(); }
  double max() const { return values.front(); }
  double sum() const;
};

struct EigenSystem {
  Spectrum spectrum;
  ComplexMatrix vectors;  // column j pairs with spectrum.values[j]
};

/// Cyclic Jacobi with complex rotations; stops once the off-diagonal
/// Frobenius norm falls below 1e-13 ||M||_F. Throws Error(InvalidArgument) if
/// M deviates from Hermitian by more than 1e-10 (scaled by max(1, ||M||)).
Spectrum eigenvalues_hermitian(const ComplexMatrix& m);
EigenSystem eigensystem_hermitian(const ComplexMatrix& m);

/// Transposes the tensor factor of the qubits in `side` (bit i-1 = qubit i):
/// (M^{T_B})_{ab} = M_{a'b'} where a', b' exchange their bits on `side`.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int qubits, EdgeMask side);
ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& b);

/// Absolute sum of the negative eigenvalues of rho^{T_B}; eigenvalues in
/// [-1e-10, 0) count as zero.
double negativity(const DensityMatrix& rho, const Bipartition& b);

/// (||rho^{T_B}||_1 - 1) / 2 with the trace norm taken from singular values.
double negativity_trace_norm(const DensityMatrix& rho, const Bipartition& b);

/// min eigenvalue of rho^{T_B} >= -1e-10.
bool is_ppt(const DensityMatrix& rho, const Bipartition& b);

}  // namespace hyperent
