#include "hyperent/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "hyperent/error.hpp"

namespace hyperent::sdp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::PrimalInfeasible: return "primal-infeasible";
    case Status::DualInfeasible: return "dual-infeasible";
    case Status::MaxIterations: return "max-iterations";
    case Status::NumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

template <typename Scalar>
int Problem<Scalar>::add_block(int size) {
  block_sizes.push_back(size);
  objective.push_back(Matrix::Zero(size, size));
  return static_cast<int>(block_sizes.size()) - 1;
}

template <typename Scalar>
void Problem<Scalar>::add_symmetric(Part& part, int row, int col, Scalar value) {
  if (row == col) {
    part.entries.push_back({row, col, value});
    return;
  }
  part.entries.push_back({row, col, value});
  if constexpr (std::is_same_v<Scalar, double>) {
    part.entries.push_back({col, row, value});
  } else {
    part.entries.push_back({col, row, std::conj(value)});
  }
}

namespace {

inline double re(double x) { return x; }
inline double re(const std::complex<double>& x) { return x.real(); }
inline double cj(double x) { return x; }
inline std::complex<double> cj(const std::complex<double>& x) { return std::conj(x); }

// Factorization of the symmetric positive definite Newton matrix. With
// group hints the matrix is block-arrow shaped,
//   [ M_11          M_1h ]
//   [       ...     ...  ]
//   [ M_h1  ...     M_hh ],
// and each M_gg is eliminated before the Schur complement on the hub is
// factored. Falls back to a dense factorization when any piece fails.
class SchurSolver {
 public:
  explicit SchurSolver(const std::vector<int>& groups) {
    if (groups.empty()) return;
    int count = 0;
    for (int g : groups) count = std::max(count, g + 1);
    groups_.resize(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < groups.size(); ++i) {
      (groups[i] < 0 ? hub_ : groups_[static_cast<std::size_t>(groups[i])]).push_back(static_cast<int>(i));
    }
    groups_.erase(std::remove_if(groups_.begin(), groups_.end(), [](const auto& g) { return g.empty(); }), groups_.end());
  }

  bool factor(Eigen::MatrixXd m) {
    arrow_ = !groups_.empty() && factor_arrow(m);
    if (arrow_) {
      m_ = std::move(m);
      // Probe accuracy on a known solution before trusting the elimination.
      const Eigen::VectorXd probe = Eigen::VectorXd::Ones(m_.rows());
      const Eigen::VectorXd back = solve(m_.selfadjointView<Eigen::Lower>() * probe);
      if ((back - probe).norm() <= 1e-8 * probe.norm()) return true;
      arrow_ = false;
      m = std::move(m_);
    }
    return factor_dense(std::move(m));
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& r) const {
    if (!arrow_) return dense_llt_ok_ ? Eigen::VectorXd(llt_.solve(r)) : Eigen::VectorXd(ldlt_.solve(r));
    // The eliminated form loses accuracy on ill-conditioned hubs; a few
    // refinement sweeps against the full matrix recover it.
    Eigen::VectorXd x = solve_arrow(r);
    const double target = 1e-14 * std::max(1.0, r.norm());
    for (int it = 0; it < 3; ++it) {
      const Eigen::VectorXd res = r - m_.selfadjointView<Eigen::Lower>() * x;
      if (res.norm() <= target) break;
      x += solve_arrow(res);
    }
    return x;
  }

 private:
  Eigen::VectorXd solve_arrow(const Eigen::VectorXd& r) const {
    Eigen::VectorXd out(r.size());
    Eigen::VectorXd rh = r(hub_);
    std::vector<Eigen::VectorXd> t(groups_.size());
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      t[g] = group_llt_[g].solve(r(groups_[g]));
      if (!hub_.empty()) rh.noalias() -= coupling_[g].transpose() * r(groups_[g]);
    }
    Eigen::VectorXd yh;
    if (!hub_.empty()) {
      yh = hub_llt_ok_ ? Eigen::VectorXd(hub_llt_.solve(rh)) : Eigen::VectorXd(hub_ldlt_.solve(rh));
      out(hub_) = yh;
    }
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (!hub_.empty()) t[g].noalias() -= coupling_[g] * yh;
      out(groups_[g]) = t[g];
    }
    return out;
  }

  static bool llt_with_retry(Eigen::MatrixXd m, Eigen::LLT<Eigen::MatrixXd>& llt) {
    llt.compute(m);
    if (llt.info() == Eigen::Success) return true;
    m.diagonal().array() += 1e-14 * std::max(1.0, m.diagonal().maxCoeff());
    llt.compute(m);
    return llt.info() == Eigen::Success;
  }

  bool factor_arrow(const Eigen::MatrixXd& m) {
    group_llt_.resize(groups_.size());
    coupling_.resize(groups_.size());
    Eigen::MatrixXd hub = m(hub_, hub_);
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      if (!llt_with_retry(m(groups_[g], groups_[g]), group_llt_[g])) return false;
      if (hub_.empty()) continue;
      // coupling = M_gg^{-1} M_gh
      coupling_[g] = group_llt_[g].solve(Eigen::MatrixXd(m(groups_[g], hub_)));
      hub.noalias() -= Eigen::MatrixXd(m(hub_, groups_[g])) * coupling_[g];
    }
    if (hub_.empty()) return true;
    // Cancellation can cost the hub its definiteness near the optimum.
    hub_llt_ok_ = llt_with_retry(hub, hub_llt_);
    if (hub_llt_ok_) return true;
    hub_ldlt_.compute(hub);
    return hub_ldlt_.info() == Eigen::Success;
  }

  bool factor_dense(Eigen::MatrixXd m) {
    dense_llt_ok_ = llt_with_retry(m, llt_);
    if (dense_llt_ok_) return true;
    ldlt_.compute(m);
    return ldlt_.info() == Eigen::Success;
  }

  std::vector<std::vector<int>> groups_;
  std::vector<int> hub_;
  bool arrow_ = false;
  Eigen::MatrixXd m_;
  std::vector<Eigen::LLT<Eigen::MatrixXd>> group_llt_;
  std::vector<Eigen::MatrixXd> coupling_;
  Eigen::LLT<Eigen::MatrixXd> hub_llt_;
  Eigen::LDLT<Eigen::MatrixXd> hub_ldlt_;
  bool hub_llt_ok_ = false;
  bool dense_llt_ok_ = false;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::LDLT<Eigen::MatrixXd> ldlt_;
};

template <typename Scalar>
class InteriorPoint {
 public:
  using Prob = Problem<Scalar>;
  using Matrix = typename Prob::Matrix;
  using Blocks = std::vector<Matrix>;

  InteriorPoint(const Prob& problem, const Settings& settings)
      : p_(problem), s_(settings), blocks_(static_cast<int>(problem.block_sizes.size())),
        m_(static_cast<int>(problem.constraints.size())) {
    validate();
    touching_.resize(static_cast<std::size_t>(blocks_));
    for (int i = 0; i < m_; ++i) {
      const auto& parts = p_.constraints[static_cast<std::size_t>(i)].parts;
      for (std::size_t q = 0; q < parts.size(); ++q) {
        touching_[static_cast<std::size_t>(parts[q].block)].push_back({i, static_cast<int>(q)});
      }
    }
    b_.resize(m_);
    for (int i = 0; i < m_; ++i) b_(i) = p_.constraints[static_cast<std::size_t>(i)].rhs;
    total_dim_ = 0;
    for (int n : p_.block_sizes) total_dim_ += n;
  }

  Solution<Scalar> run();

 private:
  struct Scaling {
    Matrix g;      // W = g g^*
    Matrix g_inv;
    Matrix w;
    Eigen::VectorXd d;  // g^-1 X g^-* = g^* Z g = diag(d)
  };

  struct Direction {
    Blocks dx, dz;
    Eigen::VectorXd dy;
  };

  void validate() const {
    if (blocks_ == 0) throw Error(ErrorKind::InvalidArgument, "SDP has no blocks");
    if (p_.objective.size() != p_.block_sizes.size()) throw Error(ErrorKind::InvalidArgument, "SDP objective/block mismatch");
    for (int k = 0; k < blocks_; ++k) {
      const auto n = p_.block_sizes[static_cast<std::size_t>(k)];
      const auto& c = p_.objective[static_cast<std::size_t>(k)];
      if (n < 1 || c.rows() != n || c.cols() != n) throw Error(ErrorKind::InvalidArgument, "SDP block size mismatch");
    }
    for (const auto& con : p_.constraints) {
      for (const auto& part : con.parts) {
        if (part.block < 0 || part.block >= blocks_) throw Error(ErrorKind::InvalidArgument, "SDP constraint names a missing block");
        const int n = p_.block_sizes[static_cast<std::size_t>(part.block)];
        for (const auto& e : part.entries)
          if (e.row < 0 || e.col < 0 || e.row >= n || e.col >= n) throw Error(ErrorKind::InvalidArgument, "SDP entry out of range");
      }
    }
    if (p_.schur_groups.empty()) return;
    if (p_.schur_groups.size() != p_.constraints.size()) {
      throw Error(ErrorKind::InvalidArgument, "SDP schur_groups needs one entry per constraint");
    }
    std::vector<int> owner(static_cast<std::size_t>(blocks_), -1);
    for (std::size_t i = 0; i < p_.constraints.size(); ++i) {
      const int g = p_.schur_groups[i];
      if (g < -1) throw Error(ErrorKind::InvalidArgument, "SDP schur group ids must be >= -1");
      if (g < 0) continue;
      for (const auto& part : p_.constraints[i].parts) {
        int& o = owner[static_cast<std::size_t>(part.block)];
        if (o >= 0 && o != g) throw Error(ErrorKind::InvalidArgument, "SDP schur groups share a block");
        o = g;
      }
    }
  }

  double apply_a(int i, const Blocks& x) const {
    double s = 0.0;
    for (const auto& part : p_.constraints[static_cast<std::size_t>(i)].parts) {
      const Matrix& xb = x[static_cast<std::size_t>(part.block)];
      for (const auto& e : part.entries) s += re(cj(e.value) * xb(e.row, e.col));
    }
    return s;
  }

  Eigen::VectorXd apply_a(const Blocks& x) const {
    Eigen::VectorXd out(m_);
    for (int i = 0; i < m_; ++i) out(i) = apply_a(i, x);
    return out;
  }

  Blocks apply_adjoint(const Eigen::VectorXd& y) const {
    Blocks out = zeros();
    for (int i = 0; i < m_; ++i) {
      if (y(i) == 0.0) continue;
      for (const auto& part : p_.constraints[static_cast<std::size_t>(i)].parts) {
        Matrix& ob = out[static_cast<std::size_t>(part.block)];
        for (const auto& e : part.entries) ob(e.row, e.col) += y(i) * e.value;
      }
    }
    return out;
  }

  Blocks zeros() const {
    Blocks out;
    for (int n : p_.block_sizes) out.push_back(Matrix::Zero(n, n));
    return out;
  }

  static double inner(const Blocks& a, const Blocks& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += re((a[k].adjoint() * b[k]).trace());
    return s;
  }

  static double frobenius(const Blocks& a) {
    double s = 0.0;
    for (const auto& m : a) s += m.squaredNorm();
    return std::sqrt(s);
  }

  static void hermitize(Matrix& m) { m = (0.5 * (m + m.adjoint())).eval(); }

  bool compute_scaling(const Blocks& x, const Blocks& z, std::vector<Scaling>& out) const {
    out.resize(static_cast<std::size_t>(blocks_));
    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      Eigen::LLT<Matrix> lx(x[kk]), lz(z[kk]);
      if (lx.info() != Eigen::Success || lz.info() != Eigen::Success) return false;
      const Matrix l = lx.matrixL();
      const Matrix r = lz.matrixL();
      Eigen::JacobiSVD<Matrix> svd(r.adjoint() * l, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const Eigen::VectorXd sv = svd.singularValues();
      if (sv.minCoeff() <= 0.0) return false;
      const Eigen::VectorXd inv_sqrt = sv.cwiseSqrt().cwiseInverse();
      Scaling& sc = out[kk];
      sc.d = sv;
      sc.g = l * svd.matrixV() * inv_sqrt.asDiagonal();
      sc.g_inv = inv_sqrt.asDiagonal() * svd.matrixU().adjoint() * r.adjoint();
      sc.w = sc.g * sc.g.adjoint();
      hermitize(sc.w);
    }
    return true;
  }

  Eigen::MatrixXd schur_complement(const std::vector<Scaling>& sc) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(m_, m_);
    Matrix bj;
    for (int j = 0; j < m_; ++j) {
      for (const auto& part : p_.constraints[static_cast<std::size_t>(j)].parts) {
        const auto kk = static_cast<std::size_t>(part.block);
        const Matrix& w = sc[kk].w;
        bj.setZero(w.rows(), w.cols());
        for (const auto& e : part.entries) bj.noalias() += e.value * w.col(e.row) * w.row(e.col);
        for (const auto& [i, q] : touching_[kk]) {
          if (i < j) continue;
          double s = 0.0;
          for (const auto& ei : p_.constraints[static_cast<std::size_t>(i)].parts[static_cast<std::size_t>(q)].entries) {
            s += re(cj(ei.value) * bj(ei.row, ei.col));
          }
          m(i, j) += s;
        }
      }
    }
    m.template triangularView<Eigen::StrictlyUpper>() = m.transpose();
    return m;
  }

  // Solves the Newton system for scaled complementarity right-hand side rc.
  Direction direction(const std::vector<Scaling>& sc, const SchurSolver& schur, const Eigen::VectorXd& rp,
                      const Blocks& rd, const Blocks& rc) const {
    Blocks t(static_cast<std::size_t>(blocks_)), wrdw(static_cast<std::size_t>(blocks_));
    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const auto& d = sc[kk].d;
      Matrix s = rc[kk];
      for (Eigen::Index c = 0; c < s.cols(); ++c)
        for (Eigen::Index r = 0; r < s.rows(); ++r) s(r, c) *= 2.0 / (d(r) + d(c));
      t[kk] = sc[kk].g * s * sc[kk].g.adjoint();
      wrdw[kk] = sc[kk].w * rd[kk] * sc[kk].w;
    }
    const Eigen::VectorXd h = rp - apply_a(t) + apply_a(wrdw);
    Direction dir;
    dir.dy = schur.solve(h);
    const Blocks aty = apply_adjoint(dir.dy);
    dir.dz.resize(static_cast<std::size_t>(blocks_));
    dir.dx.resize(static_cast<std::size_t>(blocks_));
    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      dir.dz[kk] = rd[kk] - aty[kk];
      hermitize(dir.dz[kk]);
      dir.dx[kk] = t[kk] - sc[kk].w * dir.dz[kk] * sc[kk].w;
      hermitize(dir.dx[kk]);
    }
    return dir;
  }

  // Largest alpha with diag(d) + alpha * delta >= 0 (capped at 1e300).
  static double max_step(const Eigen::VectorXd& d, const Matrix& delta) {
    const Eigen::VectorXd inv = d.cwiseSqrt().cwiseInverse();
    Matrix scaled = inv.asDiagonal() * delta * inv.asDiagonal();
    hermitize(scaled);
    Eigen::SelfAdjointEigenSolver<Matrix> es(scaled, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    return lmin >= 0.0 ? 1e300 : -1.0 / lmin;
  }

  std::pair<double, double> step_limits(const std::vector<Scaling>& sc, const Direction& dir, Blocks* dx_scaled,
                                        Blocks* dz_scaled) const {
    double ap = 1e300, ad = 1e300;
    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      Matrix dxs = sc[kk].g_inv * dir.dx[kk] * sc[kk].g_inv.adjoint();
      Matrix dzs = sc[kk].g.adjoint() * dir.dz[kk] * sc[kk].g;
      hermitize(dxs);
      hermitize(dzs);
      ap = std::min(ap, max_step(sc[kk].d, dxs));
      ad = std::min(ad, max_step(sc[kk].d, dzs));
      if (dx_scaled) (*dx_scaled)[kk] = std::move(dxs);
      if (dz_scaled) (*dz_scaled)[kk] = std::move(dzs);
    }
    return {ap, ad};
  }

  const Prob& p_;
  Settings s_;
  int blocks_;
  int m_;
  double total_dim_ = 0;
  Eigen::VectorXd b_;
  std::vector<std::vector<std::pair<int, int>>> touching_;  // block -> (constraint, part)
};

template <typename Scalar>
Solution<Scalar> InteriorPoint<Scalar>::run() {
  // Infeasible starting point scaled to the data.
  Blocks x, z;
  double norm_c = 0.0;
  for (int k = 0; k < blocks_; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const double n = p_.block_sizes[kk];
    double zeta = std::max(10.0, std::sqrt(n));
    double eta = std::max({10.0, std::sqrt(n), p_.objective[kk].norm()});
    for (const auto& [i, q] : touching_[kk]) {
      double an = 0.0;
      for (const auto& e : p_.constraints[static_cast<std::size_t>(i)].parts[static_cast<std::size_t>(q)].entries) an += std::norm(e.value);
      an = std::sqrt(an);
      zeta = std::max(zeta, n * (1.0 + std::abs(b_(i))) / (1.0 + an));
      eta = std::max(eta, an);
    }
    x.push_back(zeta * Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
    z.push_back(eta * Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)));
    norm_c += p_.objective[kk].squaredNorm();
  }
  norm_c = std::sqrt(norm_c);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(m_);
  const double norm_b = b_.norm();

  Solution<Scalar> sol;
  auto record = [&](int iter) {
    sol.primal = x;
    sol.slack = z;
    sol.dual = y;
    sol.primal_objective = inner(p_.objective, x);
    sol.dual_objective = b_.dot(y);
    sol.relative_gap = std::abs(sol.primal_objective - sol.dual_objective) /
                       (1.0 + std::abs(sol.primal_objective) + std::abs(sol.dual_objective));
    sol.primal_infeasibility = (b_ - apply_a(x)).norm() / (1.0 + norm_b);
    const Blocks aty = apply_adjoint(y);
    double rd = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) rd += (p_.objective[k] - aty[k] - z[k]).squaredNorm();
    sol.dual_infeasibility = std::sqrt(rd) / (1.0 + norm_c);
    sol.iterations = iter;
  };
  auto within = [&](double gap_tol, double feas_tol) {
    return sol.relative_gap <= gap_tol && sol.primal_infeasibility <= feas_tol && sol.dual_infeasibility <= feas_tol;
  };
  auto finish_stalled = [&](Status fallback) {
    sol.status = within(s_.acceptable_tolerance, s_.acceptable_tolerance) ? Status::Optimal : fallback;
    return sol;
  };

  std::vector<Scaling> sc;
  SchurSolver schur(p_.schur_groups);
  for (int iter = 0;; ++iter) {
    const Eigen::VectorXd rp = b_ - apply_a(x);
    const Blocks aty = apply_adjoint(y);
    Blocks rd(static_cast<std::size_t>(blocks_));
    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      rd[kk] = p_.objective[kk] - aty[kk] - z[kk];
      hermitize(rd[kk]);
    }
    record(iter);
    const double mu = inner(x, z) / total_dim_;
    if (s_.verbose) {
      std::fprintf(stderr, "sdp %3d  pobj % .10e  dobj % .10e  gap %.2e  pinf %.2e  dinf %.2e  mu %.2e\n", iter,
                   sol.primal_objective, sol.dual_objective, sol.relative_gap, sol.primal_infeasibility,
                   sol.dual_infeasibility, mu);
    }
    if (within(s_.gap_tolerance, s_.feasibility_tolerance)) {
      sol.status = Status::Optimal;
      return sol;
    }
    // Farkas-type certificates once the iterates blow up.
    if (sol.dual_objective > 0.0 && frobenius(apply_adjoint(y)) + frobenius(z) > 0.0) {
      const Blocks ay = apply_adjoint(y);
      Blocks az(static_cast<std::size_t>(blocks_));
      for (int k = 0; k < blocks_; ++k) az[static_cast<std::size_t>(k)] = ay[static_cast<std::size_t>(k)] + z[static_cast<std::size_t>(k)];
      if (frobenius(az) / sol.dual_objective < 1e-8 && y.norm() > 1e8) {
        sol.status = Status::PrimalInfeasible;
        return sol;
      }
    }
    if (sol.primal_objective < 0.0 && frobenius(x) > 1e8 &&
        apply_a(x).norm() / std::abs(sol.primal_objective) < 1e-8) {
      sol.status = Status::DualInfeasible;
      return sol;
    }
    if (iter >= s_.max_iterations) return finish_stalled(Status::MaxIterations);

    if (!compute_scaling(x, z, sc)) return finish_stalled(Status::NumericalFailure);
    if (!schur.factor(schur_complement(sc))) return finish_stalled(Status::NumericalFailure);

    // Predictor: target sigma = 0.
    Blocks rc(static_cast<std::size_t>(blocks_));
    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      rc[kk] = Matrix::Zero(sc[kk].d.size(), sc[kk].d.size());
      rc[kk].diagonal() = -sc[kk].d.cwiseAbs2().template cast<Scalar>();
    }
    Direction pred = direction(sc, schur, rp, rd, rc);
    Blocks dxs(static_cast<std::size_t>(blocks_)), dzs(static_cast<std::size_t>(blocks_));
    const auto [ap_max, ad_max] = step_limits(sc, pred, &dxs, &dzs);
    const double ap_aff = std::min(1.0, ap_max), ad_aff = std::min(1.0, ad_max);

    double mu_aff = 0.0;
    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      mu_aff += re(((x[kk] + ap_aff * pred.dx[kk]).adjoint() * (z[kk] + ad_aff * pred.dz[kk])).trace());
    }
    mu_aff /= total_dim_;
    const double expon = std::max(1.0, 3.0 * std::pow(std::min(ap_aff, ad_aff), 2));
    const double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, expon), 0.0, 1.0);

    // Corrector with the second-order term.
    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      Matrix cross = dxs[kk] * dzs[kk];
      rc[kk] = -0.5 * (cross + cross.adjoint());
      rc[kk].diagonal().array() += Scalar(sigma * mu);
      rc[kk].diagonal() -= sc[kk].d.cwiseAbs2().template cast<Scalar>();
    }
    Direction corr = direction(sc, schur, rp, rd, rc);
    const auto [ap_c, ad_c] = step_limits(sc, corr, nullptr, nullptr);
    const double gamma = std::min(0.99, 0.9 + 0.09 * std::min(ap_aff, ad_aff));
    const double ap = std::min(1.0, gamma * ap_c), ad = std::min(1.0, gamma * ad_c);
    if (ap < 1e-12 && ad < 1e-12) return finish_stalled(Status::NumericalFailure);

    for (int k = 0; k < blocks_; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      x[kk] += ap * corr.dx[kk];
      z[kk] += ad * corr.dz[kk];
      hermitize(x[kk]);
      hermitize(z[kk]);
    }
    y += ad * corr.dy;
  }
}

}  // namespace

template <typename Scalar>
Solution<Scalar> solve(const Problem<Scalar>& problem, const Settings& settings) {
  InteriorPoint<Scalar> ip(problem, settings);
  return ip.run();
}

template struct Problem<double>;
template struct Problem<std::complex<double>>;
template Solution<double> solve(const Problem<double>&, const Settings&);
template Solution<std::complex<double>> solve(const Problem<std::complex<double>>&, const Settings&);

}  // namespace hyperent::sdp
