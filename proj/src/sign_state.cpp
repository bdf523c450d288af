#include "hyperent/sign_state.hpp"

#include <cmath>

#include "hyperent/error.hpp"

namespace hyperent {

namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxStateQubits) {
    throw Error(ErrorKind::Capacity, "state vectors support 1.." + std::to_string(kMaxStateQubits) +
                                         " qubits, got " + std::to_string(n));
  }
}

}  // namespace

SignState::SignState(int qubits) : n_(qubits) {
  check_qubits(qubits);
  signs_.assign(std::size_t{1} << qubits, 1);
}

SignState::SignState(int qubits, std::vector<std::int8_t> signs) : n_(qubits), signs_(std::move(signs)) {
  check_qubits(qubits);
  if (signs_.size() != std::size_t{1} << qubits) {
    throw Error(ErrorKind::DimensionMismatch, "sign vector length must be 2^n");
  }
  for (auto s : signs_)
    if (s != 1 && s != -1) throw Error(ErrorKind::InvalidArgument, "sign entries must be +1 or -1");
}

double SignState::amplitude(std::size_t x) const {
  return signs_[x] / std::sqrt(static_cast<double>(signs_.size()));
}

SignState build_state(const Hypergraph& h) {
  SignState s(h.vertex_count());
  std::vector<std::int8_t> signs(s.dimension());
  const auto& edges = h.edges();
  for (std::size_t x = 0; x < signs.size(); ++x) {
    int parity = 0;
    for (EdgeMask e : edges) parity ^= (x & e) == e;
    signs[x] = parity ? -1 : 1;
  }
  return SignState(h.vertex_count(), std::move(signs));
}

SignState apply_ce(const SignState& s, EdgeMask e) {
  if (e == 0) throw Error(ErrorKind::InvalidArgument, "C_e needs a nonempty edge");
  if (e >> s.qubits()) throw Error(ErrorKind::InvalidArgument, "edge " + format_edge(e) + " exceeds the register");
  std::vector<std::int8_t> signs = s.signs();
  for (std::size_t x = 0; x < signs.size(); ++x)
    if ((x & e) == e) signs[x] = static_cast<std::int8_t>(-signs[x]);
  return SignState(s.qubits(), std::move(signs));
}

std::int64_t overlap_count(const SignState& a, const SignState& b) {
  if (a.qubits() != b.qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "inner product of states with different qubit counts");
  }
  std::int64_t sum = 0;
  for (std::size_t x = 0; x < a.dimension(); ++x) sum += a.sign(x) * b.sign(x);
  return sum;
}

mpq_class inner_product(const SignState& a, const SignState& b) {
  mpq_class q(mpz_class(overlap_count(a, b)), mpz_class(1) << a.qubits());
  q.canonicalize();
  return q;
}

}  // namespace hyperent
