#include "hyperent/entanglement.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

#include "hyperent/error.hpp"

namespace hyperent {

namespace {

constexpr double kPptTol = 1e-10;

EdgeMask parse_side(std::string_view text, int qubits) {
  EdgeMask mask = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::InvalidArgument, "bad qubit index '" + std::string(item) + "' in bipartition");
    }
    if (v < 1 || v > qubits) {
      throw Error(ErrorKind::InvalidArgument, "bipartition qubit " + std::to_string(v) + " out of range 1.." +
                                                  std::to_string(qubits));
    }
    const EdgeMask bit = EdgeMask{1} << (v - 1);
    if (mask & bit) throw Error(ErrorKind::InvalidArgument, "qubit " + std::to_string(v) + " listed twice");
    mask |= bit;
    start = end + 1;
  }
  return mask;
}

}  // namespace

Bipartition::Bipartition(int qubits, EdgeMask side) : n_(qubits), side_(side) {
  if (qubits < 2 || qubits > kMaxVertices - 1) throw Error(ErrorKind::InvalidArgument, "bipartitions need 2 or more qubits");
  const EdgeMask all = (EdgeMask{1} << qubits) - 1;
  if (side == 0 || (side & ~all) || side == all) {
    throw Error(ErrorKind::InvalidArgument, "bipartition side must be a nonempty proper subset");
  }
  side_ = std::min(side, all & ~side);
}

Bipartition Bipartition::parse(std::string_view text, int qubits) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) return Bipartition(qubits, parse_side(text, qubits));
  const EdgeMask a = parse_side(text.substr(0, bar), qubits);
  const EdgeMask b = parse_side(text.substr(bar + 1), qubits);
  const EdgeMask all = (EdgeMask{1} << qubits) - 1;
  if ((a & b) || (a | b) != all) {
    throw Error(ErrorKind::InvalidArgument, "bipartition sides must be disjoint and cover all qubits");
  }
  return Bipartition(qubits, a);
}

std::string Bipartition::to_string() const {
  auto list = [](EdgeMask m) {
    std::string s;
    for (int v = 0; m >> v; ++v) {
      if (m >> v & 1u) {
        if (!s.empty()) s += ',';
        s += std::to_string(v + 1);
      }
    }
    return s;
  };
  return list(side_) + "|" + list(complement());
}

std::vector<Bipartition> all_bipartitions(int qubits) {
  std::vector<Bipartition> out;
  const EdgeMask all = (EdgeMask{1} << qubits) - 1;
  for (EdgeMask s = 1; s < all; ++s)
    if (s < (all & ~s)) out.emplace_back(qubits, s);
  return out;
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

ComplexMatrix partial_transpose(const ComplexMatrix& m, int qubits, EdgeMask side) {
  const Eigen::Index d = Eigen::Index{1} << qubits;
  if (m.rows() != d || m.cols() != d) throw Error(ErrorKind::DimensionMismatch, "partial transpose: matrix is not 2^n x 2^n");
  if (side >> qubits) throw Error(ErrorKind::InvalidArgument, "partial transpose: side exceeds the register");
  ComplexMatrix out(d, d);
  for (Eigen::Index b = 0; b < d; ++b) {
    for (Eigen::Index a = 0; a < d; ++a) {
      const auto s = static_cast<Eigen::Index>((static_cast<EdgeMask>(a) ^ static_cast<EdgeMask>(b)) & side);
      out(a ^ s, b ^ s) = m(a, b);
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& b) {
  if (rho.qubits() != b.qubits()) throw Error(ErrorKind::DimensionMismatch, "bipartition and state sizes differ");
  return partial_transpose(rho.matrix(), rho.qubits(), b.side());
}

double negativity(const DensityMatrix& rho, const Bipartition& b) {
  const Spectrum s = eigenvalues_hermitian(partial_transpose(rho, b));
  double neg = 0.0;
  for (double v : s.values)
    if (v < -kPptTol) neg -= v;
  return neg;
}

double negativity_trace_norm(const DensityMatrix& rho, const Bipartition& b) {
  const ComplexMatrix pt = partial_transpose(rho, b);
  Eigen::BDCSVD<ComplexMatrix> svd(pt);
  const double trace_norm = svd.singularValues().sum();
  return std::max(0.0, (trace_norm - 1.0) / 2.0);
}

bool is_ppt(const DensityMatrix& rho, const Bipartition& b) {
  return eigenvalues_hermitian(partial_transpose(rho, b)).min() >= -kPptTol;
}

}  // namespace hyperent
