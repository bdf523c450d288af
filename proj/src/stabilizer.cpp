#include "hyperent/stabilizer.hpp"

#include "hyperent/error.hpp"

namespace hyperent {

StabilizerOp stabilizer(const Hypergraph& h, int qubit) {
  if (qubit < 1 || qubit > h.vertex_count()) {
    throw Error(ErrorKind::InvalidArgument, "qubit index " + std::to_string(qubit) + " out of range 1.." +
                                                std::to_string(h.vertex_count()));
  }
  const EdgeMask bit = EdgeMask{1} << (qubit - 1);
  StabilizerOp g;
  g.qubit = qubit;
  for (EdgeMask e : h.edges())
    if (e & bit) g.phase_edges.push_back(e & ~bit);
  return g;
}

namespace {

// Sign picked up by basis string x under prod C_{e\i}.
int phase_sign(const StabilizerOp& g, std::size_t x) {
  int parity = 0;
  for (EdgeMask f : g.phase_edges) parity ^= (x & f) == f;
  return parity ? -1 : 1;
}

}  // namespace

SignState apply(const StabilizerOp& g, const SignState& s) {
  if (g.qubit < 1 || g.qubit > s.qubits()) throw Error(ErrorKind::InvalidArgument, "stabilizer qubit out of range");
  const std::size_t flip = std::size_t{1} << (g.qubit - 1);
  std::vector<std::int8_t> out(s.dimension());
  // (X C s)[x] = (C s)[x ^ flip]
  for (std::size_t x = 0; x < out.size(); ++x) {
    const std::size_t y = x ^ flip;
    out[x] = static_cast<std::int8_t>(phase_sign(g, y) * s.sign(y));
  }
  return SignState(s.qubits(), std::move(out));
}

RealMatrix to_matrix(const StabilizerOp& g, int qubits) {
  const Eigen::Index d = Eigen::Index{1} << qubits;
  const std::size_t flip = std::size_t{1} << (g.qubit - 1);
  RealMatrix m = RealMatrix::Zero(d, d);
  for (Eigen::Index y = 0; y < d; ++y) {
    const auto x = static_cast<Eigen::Index>(static_cast<std::size_t>(y) ^ flip);
    m(x, y) = phase_sign(g, static_cast<std::size_t>(y));
  }
  return m;
}

DensityMatrix stabilizer_projector(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > kMaxDenseQubits) {
    throw Error(ErrorKind::Capacity, "stabilizer projector limited to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::Index d = Eigen::Index{1} << n;
  RealMatrix proj = RealMatrix::Identity(d, d);
  for (int i = 1; i <= n; ++i) {
    const StabilizerOp g = stabilizer(h, i);
    const std::size_t flip = std::size_t{1} << (i - 1);
    // g is a signed permutation, so g * proj only reorders and negates rows.
    RealMatrix next(d, d);
    for (Eigen::Index y = 0; y < d; ++y) {
      const auto x = static_cast<Eigen::Index>(static_cast<std::size_t>(y) ^ flip);
      next.row(x) = 0.5 * (phase_sign(g, static_cast<std::size_t>(y)) * proj.row(y) + proj.row(x));
    }
    proj = std::move(next);
  }
  return DensityMatrix(n, proj.cast<std::complex<double>>(), DensityMatrix::Check::SkipPositivity);
}

bool check_stabilizers(const Hypergraph& h) {
  const SignState s = build_state(h);
  for (int i = 1; i <= h.vertex_count(); ++i)
    if (apply(stabilizer(h, i), s) != s) return false;
  return true;
}

}  // namespace hyperent
