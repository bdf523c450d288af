#include "hyperent/gmn.hpp"

#include <cmath>
#include <complex>

#include "hyperent/error.hpp"

namespace hyperent {

const char* to_string(Normalization n) {
  return n == Normalization::TraceOne ? "trace-one" : "operator-bounded";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "trace-one") return Normalization::TraceOne;
  if (text == "operator-bounded") return Normalization::OperatorBounded;
  throw Error(ErrorKind::InvalidArgument,
              "unknown normalization '" + std::string(text) + "' (expected trace-one or operator-bounded)");
}

GmnProblem make_gmn_problem(const DensityMatrix& rho, Normalization normalization,
                            std::optional<std::vector<Bipartition>> bipartitions) {
  const int n = rho.qubits();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "GMN needs at least two qubits: no bipartition exists");
  if (n > kMaxGmnQubits) {
    throw Error(ErrorKind::Capacity, "GMN limited to " + std::to_string(kMaxGmnQubits) + " qubits");
  }
  GmnProblem p{rho, bipartitions ? std::move(*bipartitions) : all_bipartitions(n), normalization, {}};
  if (p.bipartitions.empty()) throw Error(ErrorKind::InvalidArgument, "GMN needs at least one bipartition");
  for (const auto& b : p.bipartitions)
    if (b.qubits() != n) throw Error(ErrorKind::DimensionMismatch, "bipartition does not match the state size");
  return p;
}

namespace {

constexpr double kZeroClamp = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
constexpr bool kComplex = !std::is_same_v<Scalar, double>;

// Orthonormal basis of real symmetric (Scalar = double) or Hermitian matrices.
struct BasisElement {
  int row;
  int col;
  bool imaginary;
};

template <typename Scalar>
std::vector<BasisElement> hermitian_basis(int d) {
  std::vector<BasisElement> out;
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r <= c; ++r) {
      out.push_back({r, c, false});
      if (kComplex<Scalar> && r != c) out.push_back({r, c, true});
    }
  }
  return out;
}

template <typename Scalar>
Scalar basis_value(const BasisElement& e) {
  if (e.row == e.col) return Scalar(1.0);
  if constexpr (kComplex<Scalar>) {
    return e.imaginary ? Scalar(0.0, kInvSqrt2) : Scalar(kInvSqrt2, 0.0);
  } else {
    return kInvSqrt2;
  }
}

// Adds scale * E (or scale * E^{T_side} when side != 0) to `part`.
template <typename Scalar>
void add_basis(typename sdp::Problem<Scalar>::Part& part, const BasisElement& e, double scale, EdgeMask side = 0) {
  const auto s = static_cast<int>((static_cast<EdgeMask>(e.row) ^ static_cast<EdgeMask>(e.col)) & side);
  sdp::Problem<Scalar>::add_symmetric(part, e.row ^ s, e.col ^ s, scale * basis_value<Scalar>(e));
}

template <typename Scalar>
Mat<Scalar> basis_matrix(const std::vector<BasisElement>& basis, const Eigen::VectorXd& y, Eigen::Index offset, int d) {
  Mat<Scalar> m = Mat<Scalar>::Zero(d, d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& e = basis[i];
    const Scalar v = y(offset + static_cast<Eigen::Index>(i)) * basis_value<Scalar>(e);
    m(e.row, e.col) += v;
    if (e.row != e.col) {
      if constexpr (kComplex<Scalar>) m(e.col, e.row) += std::conj(v);
      else m(e.col, e.row) += v;
    }
  }
  return m;
}

template <typename Scalar>
Mat<Scalar> to_scalar(const ComplexMatrix& m) {
  if constexpr (kComplex<Scalar>) return m;
  else return m.real();
}

template <typename Scalar>
ComplexMatrix to_complex(const Mat<Scalar>& m) {
  if constexpr (kComplex<Scalar>) return m;
  else return m.template cast<std::complex<double>>();
}

template <typename Scalar>
double inner(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if constexpr (kComplex<Scalar>) return (a.adjoint() * b).trace().real();
  else return (a.transpose() * b).trace();
}

template <typename Scalar>
void fill_common(GmnSolution& out, const sdp::Solution<Scalar>& s) {
  out.status = s.status;
  out.relative_gap = s.relative_gap;
  out.iterations = s.iterations;
}

// tr(W) = 1: standard primal form with blocks (P_M, Q_M) per bipartition and
// equality constraints tying every P_M + Q_M^{T_M} to the first one.
template <typename Scalar>
GmnSolution solve_trace_one(const GmnProblem& prob) {
  const int n = prob.rho.qubits();
  const int d = 1 << n;
  const auto& bips = prob.bipartitions;
  const auto basis = hermitian_basis<Scalar>(d);
  const Mat<Scalar> rho = to_scalar<Scalar>(prob.rho.matrix());

  sdp::Problem<Scalar> sp;
  for (std::size_t j = 0; j < bips.size(); ++j) {
    sp.add_block(d);
    sp.add_block(d);
  }
  sp.objective[0] = rho;
  sp.objective[1] = to_scalar<Scalar>(partial_transpose(prob.rho.matrix(), n, bips[0].side()));

  using Constraint = typename sdp::Problem<Scalar>::Constraint;
  for (std::size_t j = 1; j < bips.size(); ++j) {
    const int pj = static_cast<int>(2 * j), qj = pj + 1;
    for (const auto& e : basis) {
      Constraint c;
      c.parts.resize(4);
      c.parts[0].block = pj;
      add_basis<Scalar>(c.parts[0], e, 1.0);
      c.parts[1].block = qj;
      add_basis<Scalar>(c.parts[1], e, 1.0, bips[j].side());
      c.parts[2].block = 0;
      add_basis<Scalar>(c.parts[2], e, -1.0);
      c.parts[3].block = 1;
      add_basis<Scalar>(c.parts[3], e, -1.0, bips[0].side());
      sp.constraints.push_back(std::move(c));
    }
  }
  Constraint trace;
  trace.rhs = 1.0;
  trace.parts.resize(2);
  trace.parts[0].block = 0;
  trace.parts[1].block = 1;
  for (int a = 0; a < d; ++a) {
    trace.parts[0].entries.push_back({a, a, Scalar(1.0)});
    trace.parts[1].entries.push_back({a, a, Scalar(1.0)});
  }
  sp.constraints.push_back(std::move(trace));

  const auto s = sdp::solve(sp, prob.settings);
  GmnSolution out;
  fill_common(out, s);
  out.objective = s.primal_objective;
  out.bound = s.dual_objective;
  const ComplexMatrix p0 = to_complex<Scalar>(s.primal[0]);
  const ComplexMatrix q0 = to_complex<Scalar>(s.primal[1]);
  out.witness = p0 + partial_transpose(q0, n, bips[0].side());
  for (std::size_t j = 0; j < bips.size(); ++j) {
    out.certificates.push_back({bips[j], to_complex<Scalar>(s.primal[2 * j]), to_complex<Scalar>(s.primal[2 * j + 1])});
  }
  return out;
}

// 0 <= P_M, Q_M <= 1: LMI in the free variables W and Q_M, posed as the
// dual side of the standard form.
template <typename Scalar>
GmnSolution solve_operator_bounded(const GmnProblem& prob) {
  const int n = prob.rho.qubits();
  const int d = 1 << n;
  const auto& bips = prob.bipartitions;
  const auto basis = hermitian_basis<Scalar>(d);
  const auto nb = static_cast<Eigen::Index>(basis.size());
  const Mat<Scalar> rho = to_scalar<Scalar>(prob.rho.matrix());
  const Mat<Scalar> id = Mat<Scalar>::Identity(d, d);

  sdp::Problem<Scalar> sp;
  // Blocks per bipartition j: 4j: Q, 4j+1: 1-Q, 4j+2: P = W - Q^T, 4j+3: 1-P.
  for (std::size_t j = 0; j < bips.size(); ++j) {
    for (int k = 0; k < 4; ++k) sp.add_block(d);
    sp.objective[4 * j + 1] = id;
    sp.objective[4 * j + 3] = id;
  }
  using Constraint = typename sdp::Problem<Scalar>::Constraint;
  for (const auto& e : basis) {  // W coordinates
    Constraint c;
    Mat<Scalar> em = Mat<Scalar>::Zero(d, d);
    em(e.row, e.col) = basis_value<Scalar>(e);
    if (e.row != e.col) {
      if constexpr (kComplex<Scalar>) em(e.col, e.row) = std::conj(basis_value<Scalar>(e));
      else em(e.col, e.row) = basis_value<Scalar>(e);
    }
    c.rhs = -inner<Scalar>(em, rho);
    sp.schur_groups.push_back(-1);
    for (std::size_t j = 0; j < bips.size(); ++j) {
      typename sdp::Problem<Scalar>::Part p, ip;
      p.block = static_cast<int>(4 * j + 2);
      add_basis<Scalar>(p, e, -1.0);
      ip.block = static_cast<int>(4 * j + 3);
      add_basis<Scalar>(ip, e, 1.0);
      c.parts.push_back(std::move(p));
      c.parts.push_back(std::move(ip));
    }
    sp.constraints.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < bips.size(); ++j) {  // Q_j coordinates
    for (const auto& e : basis) {
      Constraint c;
      c.parts.resize(4);
      c.parts[0].block = static_cast<int>(4 * j);
      add_basis<Scalar>(c.parts[0], e, -1.0);
      c.parts[1].block = static_cast<int>(4 * j + 1);
      add_basis<Scalar>(c.parts[1], e, 1.0);
      c.parts[2].block = static_cast<int>(4 * j + 2);
      add_basis<Scalar>(c.parts[2], e, 1.0, bips[j].side());
      c.parts[3].block = static_cast<int>(4 * j + 3);
      add_basis<Scalar>(c.parts[3], e, -1.0, bips[j].side());
      sp.constraints.push_back(std::move(c));
      sp.schur_groups.push_back(static_cast<int>(j));  // Q_j meets only its own blocks and W
    }
  }

  const auto s = sdp::solve(sp, prob.settings);
  GmnSolution out;
  fill_common(out, s);
  const Mat<Scalar> w = basis_matrix<Scalar>(basis, s.dual, 0, d);
  out.witness = to_complex<Scalar>(w);
  out.objective = inner<Scalar>(w, rho);
  out.bound = -s.primal_objective;
  for (std::size_t j = 0; j < bips.size(); ++j) {
    const ComplexMatrix q = to_complex<Scalar>(basis_matrix<Scalar>(basis, s.dual, nb * static_cast<Eigen::Index>(j + 1), d));
    ComplexMatrix p = out.witness - partial_transpose(q, n, bips[j].side());
    out.certificates.push_back({bips[j], std::move(p), q});
  }
  return out;
}

template <typename Scalar>
DecompositionReport::Item decompose(const ComplexMatrix& witness, int n, const Bipartition& b) {
  const int d = 1 << n;
  const auto basis = hermitian_basis<Scalar>(d);
  sdp::Problem<Scalar> sp;
  sp.add_block(d);  // Q - t
  sp.add_block(d);  // W - Q^T - t
  sp.objective[1] = to_scalar<Scalar>(witness);
  using Constraint = typename sdp::Problem<Scalar>::Constraint;
  for (const auto& e : basis) {
    Constraint c;
    c.parts.resize(2);
    c.parts[0].block = 0;
    add_basis<Scalar>(c.parts[0], e, -1.0);
    c.parts[1].block = 1;
    add_basis<Scalar>(c.parts[1], e, 1.0, b.side());
    sp.constraints.push_back(std::move(c));
  }
  Constraint t;
  t.rhs = 1.0;
  t.parts.resize(2);
  t.parts[0].block = 0;
  t.parts[1].block = 1;
  for (int a = 0; a < d; ++a) {
    t.parts[0].entries.push_back({a, a, Scalar(1.0)});
    t.parts[1].entries.push_back({a, a, Scalar(1.0)});
  }
  sp.constraints.push_back(std::move(t));

  const auto s = sdp::solve(sp, sdp::Settings{});
  DecompositionReport::Item item{b, s.dual_objective, {}, {}, s.status};
  item.q = to_complex<Scalar>(basis_matrix<Scalar>(basis, s.dual, 0, d));
  item.p = witness - partial_transpose(item.q, n, b.side());
  return item;
}

}  // namespace

GmnSolution solve_gmn(const GmnProblem& problem) {
  if (problem.rho.qubits() < 2 || problem.bipartitions.empty()) {
    throw Error(ErrorKind::InvalidArgument, "GMN needs at least two qubits and one bipartition");
  }
  if (problem.rho.qubits() > kMaxGmnQubits) throw Error(ErrorKind::Capacity, "GMN qubit limit exceeded");
  const bool real = problem.rho.is_real();
  if (problem.normalization == Normalization::TraceOne) {
    return real ? solve_trace_one<double>(problem) : solve_trace_one<std::complex<double>>(problem);
  }
  return real ? solve_operator_bounded<double>(problem) : solve_operator_bounded<std::complex<double>>(problem);
}

double gmn_value(const GmnSolution& solution) {
  return solution.objective > -kZeroClamp ? 0.0 : -solution.objective;
}

double gmn(const DensityMatrix& rho, Normalization normalization) {
  const GmnSolution s = solve_gmn(make_gmn_problem(rho, normalization));
  if (s.status != sdp::Status::Optimal) {
    throw Error(ErrorKind::Numerical, std::string("GMN solver stopped with status ") + sdp::to_string(s.status) +
                                          " (relative gap " + std::to_string(s.relative_gap) + ")");
  }
  return gmn_value(s);
}

CertificateCheck check_certificate(const GmnProblem& problem, const GmnSolution& solution, double tolerance) {
  CertificateCheck c;
  const int n = problem.rho.qubits();
  c.min_eigenvalue = std::numeric_limits<double>::infinity();
  c.max_eigenvalue = -std::numeric_limits<double>::infinity();
  for (const auto& cert : solution.certificates) {
    for (const ComplexMatrix* m : {&cert.p, &cert.q}) {
      const Spectrum s = eigenvalues_hermitian(*m);
      c.min_eigenvalue = std::min(c.min_eigenvalue, s.min());
      c.max_eigenvalue = std::max(c.max_eigenvalue, s.max());
    }
    const ComplexMatrix recon = cert.p + partial_transpose(cert.q, n, cert.bipartition.side());
    c.max_residual = std::max(c.max_residual, (solution.witness - recon).norm());
  }
  if (problem.normalization == Normalization::TraceOne) {
    c.normalization_error = std::abs(solution.witness.trace().real() - 1.0);
  } else {
    c.normalization_error = std::max(0.0, c.max_eigenvalue - 1.0);
  }
  c.passed = c.min_eigenvalue >= -tolerance && c.max_residual <= tolerance && c.normalization_error <= tolerance &&
             solution.certificates.size() == problem.bipartitions.size();
  return c;
}

DecompositionReport verify_witness(const ComplexMatrix& witness, int qubits, const std::vector<Bipartition>& bipartitions,
                                   double tolerance) {
  if (qubits < 2 || qubits > kMaxGmnQubits) throw Error(ErrorKind::InvalidArgument, "witness check needs 2..5 qubits");
  const Eigen::Index d = Eigen::Index{1} << qubits;
  if (witness.rows() != d || witness.cols() != d) throw Error(ErrorKind::DimensionMismatch, "witness size mismatch");
  if ((witness - witness.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorKind::InvalidArgument, "witness must be Hermitian");
  }
  const bool real = witness.imag().cwiseAbs().maxCoeff() == 0.0;
  DecompositionReport report;
  report.fully_decomposable = true;
  for (const auto& b : bipartitions) {
    auto item = real ? decompose<double>(witness, qubits, b) : decompose<std::complex<double>>(witness, qubits, b);
    if (item.status != sdp::Status::Optimal || item.margin < -tolerance) report.fully_decomposable = false;
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace hyperent
