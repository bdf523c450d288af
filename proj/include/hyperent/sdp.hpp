#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace hyperent::sdp {

/// Block-diagonal semidefinite program in standard primal form
///
///   minimize   <C, X>
///   subject to <A_i, X> = b_i,  X = diag(X_1, ..., X_K) >= 0
///
/// with dual  maximize b^T y  s.t.  C - sum_i y_i A_i = Z >= 0.
/// Scalar is double (real symmetric blocks) or std::complex<double>
/// (Hermitian blocks); <A, X> = Re sum_rc conj(A_rc) X_rc.
template <typename Scalar>
struct Problem {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  struct Entry {
    int row;
    int col;
    Scalar value;
  };
  struct Part {
    int block;
    std::vector<Entry> entries;  // full Hermitian pattern, both triangles
  };
  struct Constraint {
    std::vector<Part> parts;
    double rhs = 0.0;
  };

  std::vector<int> block_sizes;
  std::vector<Matrix> objective;  // C, one matrix per block
  std::vector<Constraint> constraints;
  /// Optional structure hint, one entry per constraint: constraints in
  /// different groups >= 0 must not share a block; group -1 may touch any
  /// block. The Newton system then has block-arrow form and each group is
  /// eliminated separately before the -1 part is factored.
  std::vector<int> schur_groups;

  int add_block(int size);
  /// Adds value at (row, col) and its mirror conj(value) at (col, row).
  static void add_symmetric(Part& part, int row, int col, Scalar value);
};

struct Settings {
  double gap_tolerance = 1e-10;          // relative duality gap
  double feasibility_tolerance = 1e-10;  // relative primal/dual residuals
  double acceptable_tolerance = 1e-7;    // accepted when progress stalls
  int max_iterations = 120;
  bool verbose = false;
};

enum class Status { Optimal, PrimalInfeasible, DualInfeasible, MaxIterations, NumericalFailure };

const char* to_string(Status s);

template <typename Scalar>
struct Solution {
  using Matrix = typename Problem<Scalar>::Matrix;

  Status status = Status::NumericalFailure;
  std::vector<Matrix> primal;  // X
  std::vector<Matrix> slack;   // Z
  Eigen::VectorXd dual;        // y
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double relative_gap = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
};

/// Infeasible-start primal-dual interior-point method with Nesterov-Todd
/// scaling and Mehrotra predictor-corrector steps. Deterministic.
/// Throws Error(InvalidArgument) on malformed problems.
template <typename Scalar>
Solution<Scalar> solve(const Problem<Scalar>& problem, const Settings& settings = {});

extern template struct Problem<double>;
extern template struct Problem<std::complex<double>>;
extern template Solution<double> solve(const Problem<double>&, const Settings&);
extern template Solution<std::complex<double>> solve(const Problem<std::complex<double>>&, const Settings&);

}  // namespace hyperent::sdp
