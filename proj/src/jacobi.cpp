#include <algorithm>
#include <cmath>

#include "hyperent/entanglement.hpp"
#include "hyperent/error.hpp"

namespace hyperent {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 60;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

EigenSystem jacobi(const ComplexMatrix& m, bool want_vectors) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "eigensolver needs a square matrix");
  const Eigen::Index d = m.rows();
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol * scale) {
    throw Error(ErrorKind::InvalidArgument, "eigensolver input is not Hermitian");
  }
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v;
  if (want_vectors) v = ComplexMatrix::Identity(d, d);

  const double target = kOffDiagonalTol * std::max(m.norm(), 1e-300);
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < d; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const std::complex<double> apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        const std::complex<double> phase = apq / mag;  // e^{i phi}

        // Rotate the phase out of a(p,q): column q *= e^{-i phi}, row q *= e^{i phi}.
        a.col(q) *= std::conj(phase);
        a.row(q) *= phase;
        if (want_vectors) v.col(q) *= std::conj(phase);

        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        Eigen::VectorXcd colp = a.col(p), colq = a.col(q);
        a.col(p) = c * colp - s * colq;
        a.col(q) = s * colp + c * colq;
        Eigen::RowVectorXcd rowp = a.row(p), rowq = a.row(q);
        a.row(p) = c * rowp - s * rowq;
        a.row(q) = s * rowp + c * rowq;
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;

        if (want_vectors) {
          Eigen::VectorXcd vp = v.col(p), vq = v.col(q);
          v.col(p) = c * vp - s * vq;
          v.col(q) = s * vp + c * vq;
        }
      }
    }
  }
  if (off_diagonal_norm(a) > target) {
    throw Error(ErrorKind::Numerical, "Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() > a(y, y).real(); });

  EigenSystem out;
  out.spectrum.values.reserve(static_cast<std::size_t>(d));
  for (auto i : order) out.spectrum.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors.resize(d, d);
    for (Eigen::Index j = 0; j < d; ++j) out.vectors.col(j) = v.col(order[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace

Spectrum eigenvalues_hermitian(const ComplexMatrix& m) { return jacobi(m, false).spectrum; }

EigenSystem eigensystem_hermitian(const ComplexMatrix& m) { return jacobi(m, true); }

}  // namespace hyperent
