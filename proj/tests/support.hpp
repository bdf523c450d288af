// Independent reference computations shared by the test suites.
#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "hyperent/density_matrix.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/polynomial.hpp"
#include "hyperent/randomizer.hpp"
#include "hyperent/sign_state.hpp"

namespace testing {

using namespace hyperent;

// sum_F w_F(P) <H|F>^2 with every branch state built explicitly.
inline RationalPolynomial brute_force_overlap(const Hypergraph& h) {
  const SignState target = build_state(h);
  const std::uint32_t m = static_cast<std::uint32_t>(h.randomizable_edges().size());
  RationalPolynomial sum;
  for (std::uint32_t kept = 0; kept < (1u << m); ++kept) {
    const mpq_class ip = inner_product(target, build_state(spanning_subhypergraph(h, kept)));
    sum += branch_weight(h, kept) * (ip * ip);
  }
  return sum;
}

// Dense Kronecker-free construction of a state vector: |+>^n then explicit
// sign flips, no bit tricks shared with the library.
inline Eigen::VectorXd dense_state(const Hypergraph& h) {
  const int n = h.vertex_count();
  Eigen::VectorXd v = Eigen::VectorXd::Constant(1 << n, std::pow(2.0, -n / 2.0));
  for (int x = 0; x < (1 << n); ++x)
    for (EdgeMask e : h.edges())
      if ((static_cast<EdgeMask>(x) & e) == e) v(x) = -v(x);
  return v;
}

// Random density matrix G G^+ / tr, G complex Ginibre (or real when asked).
inline DensityMatrix random_density(int qubits, std::mt19937_64& rng, bool real = false, int rank = 0) {
  const int d = 1 << qubits;
  const int r = rank > 0 ? rank : d;
  std::normal_distribution<double> g;
  ComplexMatrix a(d, r);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < r; ++j) a(i, j) = {g(rng), real ? 0.0 : g(rng)};
  ComplexMatrix m = a * a.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()).eval() * 0.5;
  return DensityMatrix(qubits, m);
}

// Random hypergraph on n vertices; each candidate edge of order >= 1 kept
// with probability `density`.
inline Hypergraph random_hypergraph(int n, std::mt19937_64& rng, double density = 0.35, int max_edges = 12) {
  std::bernoulli_distribution keep(density);
  std::vector<EdgeMask> edges;
  for (EdgeMask e = 1; e < (EdgeMask{1} << n) && static_cast<int>(edges.size()) < max_edges; ++e)
    if (keep(rng)) edges.push_back(e);
  return Hypergraph(n, edges);
}

inline RandomizationParams random_params(const Hypergraph& h, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RandomizationParams p;
  for (int k : h.randomizable_orders()) p.set(k, u(rng));
  return p;
}

}  // namespace testing
