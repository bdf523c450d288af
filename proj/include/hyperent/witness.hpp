#pragma once

#include <gmpxx.h>

#include "hyperent/hypergraph.hpp"
#include "hyperent/polynomial.hpp"

namespace hyperent {

/// O(rho_H^P) = tr(|H><H| rho_H^P) = sum_F w_F(P) <H|F>^2 as an exact
/// polynomial in p_k (variable id k). Requires n <= kMaxStateQubits and at
/// most kMaxRandomizableEdges randomizable edges.
///
/// Every <H|F> is read off one Walsh-Hadamard transform of the histogram of
/// "which randomizable edges does basis string x contain", since
/// 2^n <H|F> = sum_x (-1)^{#(deleted edges contained in x)}.
RationalPolynomial overlap_polynomial(const Hypergraph& h);

/// 2^-(n+1) sum_j C(m,j) (2^m + 2^j)^2 p^j (1-p)^(m-j), m = (n-1)/2, in the
/// variable p_3 (id 3). n odd >= 3.
RationalPolynomial flower_overlap_closed_form(int n);

/// (2^(k-1) - 1) / 2^(k-1); k >= 2.
mpq_class witness_alpha(int kappa_max);

/// (2^(n-k) - 1) / 2^n; 2 <= k <= n.
mpq_class robustness_threshold(int n, int kappa_max);

/// Offset and target of the projector witness alpha*1 - |H><H|.
struct WitnessSpec {
  int kappa_max = 0;
  mpq_class alpha;
};

WitnessSpec witness_spec(const Hypergraph& h);

/// tr(W rho_H^P) = alpha(kappa_max(H)) - O(rho_H^P).
RationalPolynomial witness_expectation(const Hypergraph& h);

struct CriticalPoint {
  double probability = 0.0;
  /// False when the overlap failed the increasing check and the root came
  /// from the sign-change scan.
  bool monotone = true;
};

/// Smallest p in [0,1] at which alpha - O(p) turns negative, to 1e-9.
/// `overlap` must be univariate in p (id 0) or constant. Throws
/// Error(Numerical) when the expectation never turns negative.
CriticalPoint critical_probability(const RationalPolynomial& overlap, const mpq_class& alpha);

/// Uniform-order hypergraphs only; multi-order ones need a path binding
/// (critical_probability_diagonal).
CriticalPoint critical_probability(const Hypergraph& h);

/// Threshold along p_k = p for every order k.
CriticalPoint critical_probability_diagonal(const Hypergraph& h);

}  // namespace hyperent
