#include "hyperent/density_matrix.hpp"

#include <bit>
#include <cmath>

#include "hyperent/error.hpp"

namespace hyperent {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;

void check_dense_qubits(int n) {
  if (n < 1 || n > kMaxDenseQubits) {
    throw Error(ErrorKind::Capacity, "dense matrices support 1.." + std::to_string(kMaxDenseQubits) +
                                         " qubits, got " + std::to_string(n));
  }
}

// Gathers the bits of x selected by mask into the low bits.
std::size_t extract_bits(std::size_t x, EdgeMask mask) {
  std::size_t out = 0;
  int k = 0;
  for (int v = 0; mask >> v; ++v) {
    if (mask >> v & 1u) out |= ((x >> v) & 1u) << k++;
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(int qubits, ComplexMatrix entries, Check check)
    : n_(qubits), m_(std::move(entries)) {
  check_dense_qubits(qubits);
  const Eigen::Index d = Eigen::Index{1} << qubits;
  if (m_.rows() != d || m_.cols() != d) {
    throw Error(ErrorKind::DimensionMismatch, "density matrix must be 2^n x 2^n");
  }
  const double herm = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw Error(ErrorKind::InvalidArgument, "density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  const std::complex<double> tr = m_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorKind::InvalidArgument, "density matrix trace is " + std::to_string(tr.real()));
  }
  if (check == Check::Full) {
    ComplexMatrix shifted = m_;
    shifted.diagonal().array() += kPsdTol;
    Eigen::LLT<ComplexMatrix> llt(shifted);
    if (llt.info() != Eigen::Success) {
      throw Error(ErrorKind::InvalidArgument, "density matrix has an eigenvalue below -1e-10");
    }
  }
}

DensityMatrix DensityMatrix::pure(const SignState& s) {
  check_dense_qubits(s.qubits());
  const auto d = static_cast<Eigen::Index>(s.dimension());
  Eigen::VectorXd v(d);
  for (Eigen::Index x = 0; x < d; ++x) v(x) = s.sign(static_cast<std::size_t>(x));
  RealMatrix outer = v * v.transpose() / static_cast<double>(d);
  return DensityMatrix(s.qubits(), outer.cast<std::complex<double>>(), Check::SkipPositivity);
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
  check_dense_qubits(qubits);
  const Eigen::Index d = Eigen::Index{1} << qubits;
  return DensityMatrix(qubits, ComplexMatrix::Identity(d, d) / static_cast<double>(d), Check::SkipPositivity);
}

bool DensityMatrix::is_real() const { return m_.imag().cwiseAbs().maxCoeff() == 0.0; }

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

double DensityMatrix::expectation(const SignState& s) const {
  if (s.qubits() != n_) throw Error(ErrorKind::DimensionMismatch, "state and density matrix sizes differ");
  const auto d = m_.rows();
  Eigen::VectorXd v(d);
  for (Eigen::Index x = 0; x < d; ++x) v(x) = s.sign(static_cast<std::size_t>(x));
  return (v.cast<std::complex<double>>().dot(m_ * v.cast<std::complex<double>>())).real() / static_cast<double>(d);
}

DensityMatrix DensityMatrix::mix(const DensityMatrix& other, double w) const {
  if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "mixing matrices of different size");
  if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorKind::InvalidArgument, "mixing weight outside [0,1]");
  return DensityMatrix(n_, w * m_ + (1.0 - w) * other.m_, Check::SkipPositivity);
}

DensityMatrix embed_product(int qubits, EdgeMask side_a, const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  check_dense_qubits(qubits);
  const EdgeMask all = (EdgeMask{1} << qubits) - 1;
  const EdgeMask side_b = all & ~side_a;
  if ((side_a & ~all) || side_a == 0 || side_b == 0) {
    throw Error(ErrorKind::InvalidArgument, "product embedding needs a proper nonempty side");
  }
  if (rho_a.qubits() != std::popcount(side_a) || rho_b.qubits() != std::popcount(side_b)) {
    throw Error(ErrorKind::DimensionMismatch, "factor sizes do not match the bipartition");
  }
  const Eigen::Index d = Eigen::Index{1} << qubits;
  ComplexMatrix out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const auto ra = extract_bits(static_cast<std::size_t>(r), side_a);
    const auto rb = extract_bits(static_cast<std::size_t>(r), side_b);
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto ca = extract_bits(static_cast<std::size_t>(c), side_a);
      const auto cb = extract_bits(static_cast<std::size_t>(c), side_b);
      out(r, c) = rho_a.matrix()(static_cast<Eigen::Index>(ra), static_cast<Eigen::Index>(ca)) *
                  rho_b.matrix()(static_cast<Eigen::Index>(rb), static_cast<Eigen::Index>(cb));
    }
  }
  return DensityMatrix(qubits, std::move(out), DensityMatrix::Check::SkipPositivity);
}

}  // namespace hyperent
