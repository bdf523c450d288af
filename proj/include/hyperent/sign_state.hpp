#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

inline constexpr int kMaxStateQubits = 20;

/// Real equally weighted n-qubit state: the amplitude of basis index x is
/// signs[x] / sqrt(2^n). Bit (i-1) of x holds the value of qubit i.
class SignState {
 public:
  /// |+>^{(x)n}.
  explicit SignState(int qubits);
  SignState(int qubits, std::vector<std::int8_t> signs);

  int qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return signs_.size(); }
  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }
  int sign(std::size_t x) const { return signs_[x]; }
  double amplitude(std::size_t x) const;

  friend bool operator==(const SignState&, const SignState&) = default;

 private:
  int n_;
  std::vector<std::int8_t> signs_;
};

/// |H> = prod_e C_e |+>^n. Throws Error(Capacity) above kMaxStateQubits.
SignState build_state(const Hypergraph& h);

/// C_e = 1 - 2|1..1><1..1| on the vertices of e: flips every basis string
/// whose bits on e are all one.
SignState apply_ce(const SignState& s, EdgeMask e);

/// sum_x a_x b_x, i.e. 2^n <a|b>.
std::int64_t overlap_count(const SignState& a, const SignState& b);

/// Exact <a|b> = 2^-n sum_x a_x b_x.
mpq_class inner_product(const SignState& a, const SignState& b);

}  // namespace hyperent
