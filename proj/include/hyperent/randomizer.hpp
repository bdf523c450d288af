#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "hyperent/density_matrix.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/polynomial.hpp"
#include "hyperent/sign_state.hpp"

namespace hyperent {

/// Success probability p_k of the order-k gate.
class RandomizationParams {
 public:
  RandomizationParams() = default;
  explicit RandomizationParams(std::map<int, double> probabilities);

  /// p_k = p for every order 2..kMaxVertices.
  static RandomizationParams uniform(double p);
  /// "2=0.5,3=0.25"; a bare number means uniform.
  static RandomizationParams parse(std::string_view text);

  void set(int order, double p);
  bool has(int order) const { return p_.count(order) != 0; }
  /// Throws Error(InvalidArgument) when order k has no probability.
  double probability(int order) const;
  const std::map<int, double>& values() const noexcept { return p_; }

 private:
  std::map<int, double> p_;
};

struct Branch {
  std::uint32_t kept = 0;  // bit j: j-th randomizable edge applied
  Hypergraph subgraph;
  SignState state{1};
  double weight = 0.0;
};

/// Exact mixture sum_F w_F |F><F| over all spanning subhypergraphs.
struct BranchEnsemble {
  int qubits = 0;
  std::vector<Branch> branches;

  double total_weight() const;
};

/// Branches in ascending kept-mask order. Loops are applied in every branch.
BranchEnsemble randomize(const Hypergraph& h, const RandomizationParams& p);

/// sum_F w_F |F><F|. Requires n <= kMaxDenseQubits.
DensityMatrix ensemble_to_density(const BranchEnsemble& ensemble);

/// Same state as ensemble_to_density(randomize(h, p)), built entrywise from
/// the factorization over independent gates:
///   rho_ab = 2^-n s(a)s(b) prod_e [(1-p_e) + p_e c_e(a) c_e(b)]
/// with c_e(x) = -1 when e is contained in x.
DensityMatrix randomized_density(const Hypergraph& h, const RandomizationParams& p);

struct SymbolicBranch {
  std::uint32_t kept = 0;
  Hypergraph subgraph;
  RationalPolynomial weight;  // in variables p_k (id k)
};

/// prod_k p_k^{|E_{k,F}|} (1-p_k)^{|E_{k,H} \ E_{k,F}|} for the branch `kept`.
RationalPolynomial branch_weight(const Hypergraph& h, std::uint32_t kept);

std::vector<SymbolicBranch> symbolic_randomize(const Hypergraph& h);

}  // namespace hyperent
