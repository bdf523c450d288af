#include "hyperent/witness.hpp"

#include <map>
#include <vector>

#include "hyperent/error.hpp"
#include "hyperent/sign_state.hpp"

namespace hyperent {

namespace {

void walsh_hadamard(std::vector<std::int64_t>& a) {
  for (std::size_t len = 1; len < a.size(); len <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const auto u = a[j], v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
    }
  }
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

RationalPolynomial overlap_polynomial(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > kMaxStateQubits) throw Error(ErrorKind::Capacity, "overlap polynomial limited to " + std::to_string(kMaxStateQubits) + " qubits");
  const auto rand = h.randomizable_edges();
  const int m = static_cast<int>(rand.size());
  if (m > kMaxRandomizableEdges) {
    throw Error(ErrorKind::Capacity, std::to_string(m) + " randomizable edges exceed the limit of " +
                                         std::to_string(kMaxRandomizableEdges));
  }

  const std::uint32_t subsets = std::uint32_t{1} << m;
  std::vector<std::int64_t> spectrum(subsets, 0);
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    std::uint32_t contained = 0;
    for (int j = 0; j < m; ++j)
      if ((x & rand[j]) == rand[j]) contained |= std::uint32_t{1} << j;
    ++spectrum[contained];
  }
  walsh_hadamard(spectrum);  // spectrum[D] = 2^n <H|F> for F = H minus edges D

  // Weights depend only on how many edges of each order survive.
  std::vector<int> orders;
  std::map<int, int> total_per_order;
  for (EdgeMask e : rand) ++total_per_order[edge_order(e)];
  for (const auto& [k, c] : total_per_order) orders.push_back(k);

  std::map<std::vector<int>, mpz_class> grouped;
  for (std::uint32_t kept = 0; kept < subsets; ++kept) {
    std::vector<int> counts(orders.size(), 0);
    for (int j = 0; j < m; ++j) {
      if (kept >> j & 1u) {
        const int k = edge_order(rand[j]);
        for (std::size_t o = 0; o < orders.size(); ++o)
          if (orders[o] == k) ++counts[o];
      }
    }
    const std::int64_t t = spectrum[~kept & (subsets - 1)];
    mpz_class t2(t);
    t2 *= t2;
    grouped[counts] += t2;
  }

  const mpz_class four_n = mpz_class(1) << (2 * n);
  RationalPolynomial out;
  const auto one = RationalPolynomial::constant(1);
  for (const auto& [counts, sum] : grouped) {
    mpq_class c(sum, four_n);
    c.canonicalize();
    RationalPolynomial term = RationalPolynomial::constant(c);
    for (std::size_t o = 0; o < orders.size(); ++o) {
      const auto pk = RationalPolynomial::variable(orders[o]);
      term *= pk.pow(counts[o]) * (one - pk).pow(total_per_order[orders[o]] - counts[o]);
    }
    out += term;
  }
  return out;
}

RationalPolynomial flower_overlap_closed_form(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "flower closed form requires odd n >= 3");
  const int m = (n - 1) / 2;
  const auto p = RationalPolynomial::variable(3);
  const auto one = RationalPolynomial::constant(1);
  RationalPolynomial sum;
  for (int j = 0; j <= m; ++j) {
    const mpz_class base = (mpz_class(1) << m) + (mpz_class(1) << j);
    sum += p.pow(j) * (one - p).pow(m - j) * mpq_class(binomial(m, j) * base * base);
  }
  mpq_class scale(mpz_class(1), mpz_class(1) << (n + 1));
  return sum * scale;
}

mpq_class witness_alpha(int kappa_max) {
  if (kappa_max < 2) throw Error(ErrorKind::InvalidArgument, "witness offset needs kappa_max >= 2");
  if (kappa_max > kMaxVertices) throw Error(ErrorKind::InvalidArgument, "kappa_max too large");
  const mpz_class half = mpz_class(1) << (kappa_max - 1);
  mpq_class a(half - 1, half);
  a.canonicalize();
  return a;
}

mpq_class robustness_threshold(int n, int kappa_max) {
  if (kappa_max < 2 || kappa_max > n || n > kMaxVertices) {
    throw Error(ErrorKind::InvalidArgument, "robustness threshold needs 2 <= kappa_max <= n");
  }
  mpq_class t((mpz_class(1) << (n - kappa_max)) - 1, mpz_class(1) << n);
  t.canonicalize();
  return t;
}

WitnessSpec witness_spec(const Hypergraph& h) {
  WitnessSpec w;
  w.kappa_max = h.max_edge_order();
  w.alpha = witness_alpha(w.kappa_max);
  return w;
}

RationalPolynomial witness_expectation(const Hypergraph& h) {
  return RationalPolynomial::constant(witness_spec(h).alpha) - overlap_polynomial(h);
}

namespace {

constexpr double kRootTolerance = 1e-9;

// Shrinks [lo, hi] with f(lo) >= 0 > f(hi) until hi - lo <= kRootTolerance.
double bisect(const RationalPolynomial& f, mpq_class lo, mpq_class hi) {
  const mpq_class tol(kRootTolerance);
  while (hi - lo > tol) {
    mpq_class mid = (lo + hi) / 2;
    if (f.evaluate_uniform(mid) < 0) hi = mid;
    else lo = mid;
  }
  return mpq_class((lo + hi) / 2).get_d();
}

}  // namespace

CriticalPoint critical_probability(const RationalPolynomial& overlap, const mpq_class& alpha) {
  for (int v : overlap.variables())
    if (v != 0) throw Error(ErrorKind::InvalidArgument, "critical probability needs a polynomial in p alone");
  const RationalPolynomial f = RationalPolynomial::constant(alpha) - overlap;
  const RationalPolynomial slope = overlap.derivative(0);

  CriticalPoint out;
  for (int i = 0; i <= 100 && out.monotone; ++i) {
    if (slope.evaluate_uniform(mpq_class(i, 100)) < 0) out.monotone = false;
  }
  if (overlap.evaluate_uniform(1) <= overlap.evaluate_uniform(0)) out.monotone = false;

  if (f.evaluate_uniform(0) < 0) {
    out.probability = 0.0;
    return out;
  }
  if (out.monotone) {
    if (f.evaluate_uniform(1) >= 0) throw Error(ErrorKind::Numerical, "witness expectation never turns negative on [0,1]");
    out.probability = bisect(f, mpq_class(0), mpq_class(1));
    return out;
  }
  constexpr int kScan = 10000;
  for (int i = 1; i <= kScan; ++i) {
    mpq_class x(i, kScan);
    x.canonicalize();
    if (f.evaluate_uniform(x) < 0) {
      mpq_class prev(i - 1, kScan);
      prev.canonicalize();
      out.probability = bisect(f, prev, x);
      return out;
    }
  }
  throw Error(ErrorKind::Numerical, "witness expectation never turns negative on [0,1]");
}

CriticalPoint critical_probability(const Hypergraph& h) {
  if (h.randomizable_orders().size() > 1) {
    throw Error(ErrorKind::InvalidArgument,
                "hypergraph mixes edge orders; bind a path such as p_k = p (critical_probability_diagonal)");
  }
  return critical_probability_diagonal(h);
}

CriticalPoint critical_probability_diagonal(const Hypergraph& h) {
  const WitnessSpec w = witness_spec(h);
  return critical_probability(overlap_polynomial(h).bind_all(0), w.alpha);
}

}  // namespace hyperent
