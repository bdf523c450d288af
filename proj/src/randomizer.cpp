#include "hyperent/randomizer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "hyperent/error.hpp"

namespace hyperent {

namespace {

void check_probability(int order, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "probability p_" + std::to_string(order) + " = " + std::to_string(p) + " outside [0,1]");
  }
}

void check_edge_count(const Hypergraph& h) {
  const auto m = h.randomizable_edges().size();
  if (m > kMaxRandomizableEdges) {
    throw Error(ErrorKind::Capacity, std::to_string(m) + " randomizable edges exceed the limit of " +
                                         std::to_string(kMaxRandomizableEdges));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  std::string tmp(trim(s));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tmp, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tmp.size()) throw Error(ErrorKind::InvalidArgument, "bad probability '" + tmp + "'");
  return v;
}

// Probability of branch `kept` in long double, falling back to exact rational
// evaluation for tiny results.
double numeric_weight(const std::vector<EdgeMask>& rand, std::uint32_t kept, const RandomizationParams& p) {
  long double w = 1.0L;
  for (std::size_t j = 0; j < rand.size(); ++j) {
    const long double pk = p.probability(edge_order(rand[j]));
    w *= (kept >> j & 1u) ? pk : 1.0L - pk;
  }
  if (w != 0.0L && std::fabs(w) < 1e-14L) {
    mpq_class exact(1);
    for (std::size_t j = 0; j < rand.size(); ++j) {
      const mpq_class pk(p.probability(edge_order(rand[j])));
      exact *= (kept >> j & 1u) ? pk : mpq_class(1) - pk;
    }
    return exact.get_d();
  }
  return static_cast<double>(w);
}

}  // namespace

RandomizationParams::RandomizationParams(std::map<int, double> probabilities) : p_(std::move(probabilities)) {
  for (const auto& [k, p] : p_) {
    if (k < 2) throw Error(ErrorKind::InvalidArgument, "randomization orders start at 2");
    check_probability(k, p);
  }
}

RandomizationParams RandomizationParams::uniform(double p) {
  std::map<int, double> m;
  for (int k = 2; k <= kMaxVertices; ++k) m[k] = p;
  return RandomizationParams(std::move(m));
}

RandomizationParams RandomizationParams::parse(std::string_view text) {
  if (text.find('=') == std::string_view::npos) return uniform(parse_double(text));
  std::map<int, double> m;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "expected k=p in '" + std::string(item) + "'");
    int k = 0;
    const auto key = trim(item.substr(0, eq));
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
    if (ec != std::errc{} || ptr != key.data() + key.size()) {
      throw Error(ErrorKind::InvalidArgument, "bad order '" + std::string(key) + "'");
    }
    m[k] = parse_double(item.substr(eq + 1));
    start = end + 1;
  }
  return RandomizationParams(std::move(m));
}

void RandomizationParams::set(int order, double p) {
  if (order < 2) throw Error(ErrorKind::InvalidArgument, "randomization orders start at 2");
  check_probability(order, p);
  p_[order] = p;
}

double RandomizationParams::probability(int order) const {
  auto it = p_.find(order);
  if (it == p_.end()) throw Error(ErrorKind::InvalidArgument, "no probability given for order " + std::to_string(order));
  return it->second;
}

double BranchEnsemble::total_weight() const {
  long double s = 0.0L;
  for (const auto& b : branches) s += b.weight;
  return static_cast<double>(s);
}

BranchEnsemble randomize(const Hypergraph& h, const RandomizationParams& p) {
  check_edge_count(h);
  const auto rand = h.randomizable_edges();
  for (EdgeMask e : rand) p.probability(edge_order(e));
  BranchEnsemble ens;
  ens.qubits = h.vertex_count();
  const std::uint32_t count = std::uint32_t{1} << rand.size();
  ens.branches.reserve(count);
  for (std::uint32_t kept = 0; kept < count; ++kept) {
    Hypergraph f = spanning_subhypergraph(h, kept);
    SignState s = build_state(f);
    ens.branches.push_back(Branch{kept, std::move(f), std::move(s), numeric_weight(rand, kept, p)});
  }
  return ens;
}

DensityMatrix ensemble_to_density(const BranchEnsemble& ensemble) {
  const int n = ensemble.qubits;
  if (n < 1 || n > kMaxDenseQubits) {
    throw Error(ErrorKind::Capacity, "dense matrices support up to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Eigen::Index d = Eigen::Index{1} << n;
  RealMatrix rho = RealMatrix::Zero(d, d);
  Eigen::VectorXd v(d);
  for (const auto& b : ensemble.branches) {
    if (b.weight == 0.0) continue;
    for (Eigen::Index x = 0; x < d; ++x) v(x) = b.state.sign(static_cast<std::size_t>(x));
    rho.selfadjointView<Eigen::Lower>().rankUpdate(v, b.weight / static_cast<double>(d));
  }
  rho.triangularView<Eigen::StrictlyUpper>() = rho.transpose();
  return DensityMatrix(n, rho.cast<std::complex<double>>(), DensityMatrix::Check::SkipPositivity);
}

DensityMatrix randomized_density(const Hypergraph& h, const RandomizationParams& p) {
  const int n = h.vertex_count();
  if (n > kMaxDenseQubits) {
    throw Error(ErrorKind::Capacity, "dense matrices support up to " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  const auto rand = h.randomizable_edges();
  const auto loops = h.loops();
  std::vector<double> probs;
  for (EdgeMask e : rand) probs.push_back(p.probability(edge_order(e)));
  const Eigen::Index d = Eigen::Index{1} << n;
  auto loop_sign = [&](std::size_t x) {
    int parity = 0;
    for (EdgeMask e : loops) parity ^= (x & e) == e;
    return parity ? -1.0 : 1.0;
  };
  RealMatrix rho(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    const auto xa = static_cast<std::size_t>(a);
    for (Eigen::Index b = 0; b <= a; ++b) {
      const auto xb = static_cast<std::size_t>(b);
      double v = loop_sign(xa) * loop_sign(xb);
      for (std::size_t j = 0; j < rand.size(); ++j) {
        const bool flip = ((xa & rand[j]) == rand[j]) != ((xb & rand[j]) == rand[j]);
        if (flip) v *= 1.0 - 2.0 * probs[j];
      }
      rho(a, b) = rho(b, a) = v / static_cast<double>(d);
    }
  }
  return DensityMatrix(n, rho.cast<std::complex<double>>(), DensityMatrix::Check::SkipPositivity);
}

RationalPolynomial branch_weight(const Hypergraph& h, std::uint32_t kept) {
  const auto rand = h.randomizable_edges();
  RationalPolynomial w = RationalPolynomial::constant(1);
  for (std::size_t j = 0; j < rand.size(); ++j) {
    const auto pk = RationalPolynomial::variable(edge_order(rand[j]));
    w *= (kept >> j & 1u) ? pk : RationalPolynomial::constant(1) - pk;
  }
  return w;
}

std::vector<SymbolicBranch> symbolic_randomize(const Hypergraph& h) {
  check_edge_count(h);
  const std::uint32_t count = std::uint32_t{1} << h.randomizable_edges().size();
  std::vector<SymbolicBranch> out;
  out.reserve(count);
  for (std::uint32_t kept = 0; kept < count; ++kept) {
    out.push_back(SymbolicBranch{kept, spanning_subhypergraph(h, kept), branch_weight(h, kept)});
  }
  return out;
}

}  // namespace hyperent
