#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyperent/density_matrix.hpp"
#include "hyperent/entanglement.hpp"
#include "hyperent/sdp.hpp"

namespace hyperent {

inline constexpr int kMaxGmnQubits = 5;

/// Normalization of the fully decomposable witness W = P_M + Q_M^{T_M}.
///  - TraceOne:        tr(W) = 1, P_M, Q_M >= 0.
///  - OperatorBounded: 0 <= P_M <= 1 and 0 <= Q_M <= 1 (PPTMixer convention).
/// Absolute GMN values differ between the two.
enum class Normalization { TraceOne, OperatorBounded };

const char* to_string(Normalization n);
/// "trace-one" | "operator-bounded".
Normalization parse_normalization(std::string_view text);

/// minimize tr(W rho) over fully decomposable witnesses.
struct GmnProblem {
  DensityMatrix rho;
  std::vector<Bipartition> bipartitions;  // all of them unless restricted
  Normalization normalization = Normalization::TraceOne;
  sdp::Settings settings;
};

/// Throws Error(InvalidArgument) for n < 2 (nothing to bipartition) and
/// Error(Capacity) above kMaxGmnQubits.
GmnProblem make_gmn_problem(const DensityMatrix& rho, Normalization normalization,
                            std::optional<std::vector<Bipartition>> bipartitions = std::nullopt);

struct BipartitionCertificate {
  Bipartition bipartition;
  ComplexMatrix p;
  ComplexMatrix q;
};

struct GmnSolution {
  sdp::Status status = sdp::Status::NumericalFailure;
  double objective = 0.0;       // tr(W rho) of the returned witness
  double bound = 0.0;           // dual bound: no decomposable W does better
  double relative_gap = 0.0;
  int iterations = 0;
  ComplexMatrix witness;
  std::vector<BipartitionCertificate> certificates;
};

/// Solves the PPT-mixer program with the interior-point solver. Real states
/// use real symmetric blocks; complex ones Hermitian blocks.
GmnSolution solve_gmn(const GmnProblem& problem);

/// |min(0, objective)|, reported as exactly 0 when the objective is within
/// 1e-9 of zero.
double gmn_value(const GmnSolution& solution);

/// Convenience wrapper over all bipartitions; throws Error(Numerical) if the
/// solver does not reach an optimal status.
double gmn(const DensityMatrix& rho, Normalization normalization);

/// Re-check of a GMN certificate with the Jacobi eigensolver.
struct CertificateCheck {
  double min_eigenvalue = 0.0;        // over all P_M, Q_M
  double max_eigenvalue = 0.0;        // over all P_M, Q_M
  double max_residual = 0.0;          // max_M ||W - P_M - Q_M^{T_M}||_F
  double normalization_error = 0.0;   // |tr W - 1|, or excess of max eigenvalue over 1
  bool passed = false;
};

CertificateCheck check_certificate(const GmnProblem& problem, const GmnSolution& solution, double tolerance = 1e-7);

/// Result of trying W = P_M + Q_M^{T_M} with P_M, Q_M >= 0 for each M.
struct DecompositionReport {
  struct Item {
    Bipartition bipartition;
    /// max t with Q_M >= t and W - Q_M^{T_M} >= t; >= 0 iff decomposable.
    double margin = 0.0;
    ComplexMatrix p;
    ComplexMatrix q;
    sdp::Status status = sdp::Status::NumericalFailure;
  };
  std::vector<Item> items;
  bool fully_decomposable = false;
};

DecompositionReport verify_witness(const ComplexMatrix& witness, int qubits, const std::vector<Bipartition>& bipartitions,
                                   double tolerance = 1e-7);

}  // namespace hyperent
