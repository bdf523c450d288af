#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "hyperent/error.hpp"
#include "hyperent/sdp.hpp"

using namespace hyperent;
using namespace hyperent::sdp;

namespace {

template <typename Scalar>
Problem<Scalar> trace_one(const typename Problem<Scalar>::Matrix& c) {
  Problem<Scalar> p;
  p.add_block(static_cast<int>(c.rows()));
  p.objective[0] = c;
  typename Problem<Scalar>::Constraint t;
  t.rhs = 1.0;
  t.parts.push_back({0, {}});
  for (int i = 0; i < c.rows(); ++i) t.parts[0].entries.push_back({i, i, Scalar(1.0)});
  p.constraints.push_back(t);
  return p;
}

template <typename Scalar>
double min_eigenvalue_of(const Solution<Scalar>& s) {
  double m = 1e300;
  for (const auto& z : s.slack) m = std::min(m, Eigen::SelfAdjointEigenSolver<typename Solution<Scalar>::Matrix>(z).eigenvalues()(0));
  for (const auto& x : s.primal) m = std::min(m, Eigen::SelfAdjointEigenSolver<typename Solution<Scalar>::Matrix>(x).eigenvalues()(0));
  return m;
}

}  // namespace

TEST_CASE("minimum eigenvalue as an SDP (real)") {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> g;
  for (int d : {1, 3, 7}) {
    Eigen::MatrixXd a(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a(i, j) = g(rng);
    const Eigen::MatrixXd c = a + a.transpose();
    const auto s = solve(trace_one<double>(c));
    CHECK(s.status == Status::Optimal);
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(c).eigenvalues()(0);
    CHECK(s.primal_objective == doctest::Approx(lmin).epsilon(1e-8));
    CHECK(s.dual_objective == doctest::Approx(lmin).epsilon(1e-8));
    CHECK(s.dual(0) == doctest::Approx(lmin).epsilon(1e-8));
    CHECK(min_eigenvalue_of(s) > -1e-9);
  }
}

TEST_CASE("minimum eigenvalue as an SDP (complex)") {
  std::mt19937_64 rng(73);
  std::normal_distribution<double> g;
  const int d = 6;
  Eigen::MatrixXcd a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = {g(rng), g(rng)};
  const Eigen::MatrixXcd c = a + a.adjoint();
  const auto s = solve(trace_one<std::complex<double>>(c));
  CHECK(s.status == Status::Optimal);
  const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(c).eigenvalues()(0);
  CHECK(s.primal_objective == doctest::Approx(lmin).epsilon(1e-8));
  CHECK(s.primal[0].trace().real() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("linear program on 1x1 blocks") {
  // min x1 + 2 x2 + 3 x3  s.t.  x1 + x2 + x3 = 1,  x1 - x2 = -0.5.
  Problem<double> p;
  for (int i = 0; i < 3; ++i) {
    p.add_block(1);
    p.objective[i](0, 0) = i + 1.0;
  }
  Problem<double>::Constraint sum{{{0, {{0, 0, 1.0}}}, {1, {{0, 0, 1.0}}}, {2, {{0, 0, 1.0}}}}, 1.0};
  Problem<double>::Constraint diff{{{0, {{0, 0, 1.0}}}, {1, {{0, 0, -1.0}}}}, -0.5};
  p.constraints = {sum, diff};
  const auto s = solve(p);
  CHECK(s.status == Status::Optimal);
  CHECK(s.primal_objective == doctest::Approx(1.75).epsilon(1e-9));
  CHECK(s.primal[0](0, 0) == doctest::Approx(0.25).epsilon(1e-7));
  CHECK(s.primal[1](0, 0) == doctest::Approx(0.75).epsilon(1e-7));
}

TEST_CASE("Lovasz theta of the 5-cycle") {
  // theta = max <J, X>, tr X = 1, X_ij = 0 on edges; equals sqrt(5).
  Problem<double> p;
  p.add_block(5);
  p.objective[0] = -Eigen::MatrixXd::Ones(5, 5);
  Problem<double>::Constraint t{{{0, {}}}, 1.0};
  for (int i = 0; i < 5; ++i) t.parts[0].entries.push_back({i, i, 1.0});
  p.constraints.push_back(t);
  for (int i = 0; i < 5; ++i) {
    Problem<double>::Constraint e{{{0, {}}}, 0.0};
    Problem<double>::add_symmetric(e.parts[0], i, (i + 1) % 5, 1.0);
    p.constraints.push_back(e);
  }
  const auto s = solve(p);
  CHECK(s.status == Status::Optimal);
  CHECK(-s.primal_objective == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
  CHECK(s.relative_gap < 1e-9);
}

TEST_CASE("complementary slackness at the optimum") {
  Problem<double> p;
  p.add_block(3);
  p.add_block(2);
  p.objective[0] = Eigen::MatrixXd::Identity(3, 3);
  p.objective[0](0, 1) = p.objective[0](1, 0) = 0.4;
  p.objective[1] = Eigen::MatrixXd::Identity(2, 2) * 0.5;
  Problem<double>::Constraint c{{{0, {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}}}, {1, {{0, 0, 1.0}, {1, 1, 1.0}}}}, 2.0};
  p.constraints.push_back(c);
  const auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  double xz = 0;
  for (int b = 0; b < 2; ++b) xz += (s.primal[b] * s.slack[b]).trace();
  CHECK(std::abs(xz) < 1e-8);
  CHECK(s.primal_objective == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("infeasible problems are detected") {
  Problem<double> p = trace_one<double>(Eigen::MatrixXd::Identity(2, 2));
  p.constraints[0].rhs = -1.0;
  const auto s = solve(p);
  CHECK(s.status != Status::Optimal);
}

TEST_CASE("malformed problems throw") {
  Problem<double> p = trace_one<double>(Eigen::MatrixXd::Identity(2, 2));
  p.constraints[0].parts[0].block = 3;
  CHECK_THROWS_AS(solve(p), Error);
  Problem<double> q = trace_one<double>(Eigen::MatrixXd::Identity(2, 2));
  q.constraints[0].parts[0].entries.push_back({2, 0, 1.0});
  CHECK_THROWS_AS(solve(q), Error);
}
