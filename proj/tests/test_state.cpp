#include <algorithm>
#include <iterator>
#include <random>

#include "doctest.h"
#include "hyperent/error.hpp"
#include "hyperent/stabilizer.hpp"
#include "support.hpp"

using namespace hyperent;

TEST_CASE("single-edge state flips only the all-ones string") {
  const SignState s = build_state(family("single-edge", 4));
  for (std::size_t x = 0; x < 15; ++x) CHECK(s.sign(x) == 1);
  CHECK(s.sign(15) == -1);
  CHECK(s.amplitude(15) == doctest::Approx(-0.25));
}

TEST_CASE("state matches an explicit dense construction") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Hypergraph h = testing::random_hypergraph(1 + trial % 6, rng);
    const SignState s = build_state(h);
    const Eigen::VectorXd v = testing::dense_state(h);
    for (std::size_t x = 0; x < s.dimension(); ++x) CHECK(s.amplitude(x) == doctest::Approx(v(x)).epsilon(1e-15));
  }
}

TEST_CASE("gates commute and are involutions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const EdgeMask a = static_cast<EdgeMask>(rng() % ((1u << n) - 1)) + 1;
    const EdgeMask b = static_cast<EdgeMask>(rng() % ((1u << n) - 1)) + 1;
    const SignState plus(n);
    CHECK(apply_ce(apply_ce(plus, a), b) == apply_ce(apply_ce(plus, b), a));
    CHECK(apply_ce(apply_ce(plus, a), a) == plus);
  }
  CHECK_THROWS_AS(apply_ce(SignState(3), 0), Error);
  CHECK_THROWS_AS(apply_ce(SignState(3), 0b1000), Error);
}

TEST_CASE("overlap of two states equals overlap of the symmetric difference with |+>") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const Hypergraph a = testing::random_hypergraph(n, rng);
    const Hypergraph b = testing::random_hypergraph(n, rng);
    std::vector<EdgeMask> ea = a.edges(), eb = b.edges(), diff;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(diff));
    const Hypergraph d(n, diff);
    CHECK(inner_product(build_state(a), build_state(b)) == inner_product(build_state(d), SignState(n)));
  }
}

TEST_CASE("exact inner products") {
  CHECK(inner_product(build_state(clover(4)), SignState(4)) == mpq_class(1, 2));
  CHECK(inner_product(build_state(family("single-edge", 3)), SignState(3)) == mpq_class(3, 4));
  CHECK(overlap_count(SignState(2), SignState(2)) == 4);
  CHECK_THROWS_AS(overlap_count(SignState(2), SignState(3)), Error);
}

TEST_CASE("stabilizers fix their state") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Hypergraph h = testing::random_hypergraph(1 + trial % 7, rng);
    CHECK(check_stabilizers(h));
  }
  const Hypergraph h14 = family("complete-3-uniform", 4);
  const SignState s = build_state(h14);
  for (int i = 1; i <= 4; ++i) CHECK(apply(stabilizer(h14, i), s) == s);
  CHECK_THROWS_AS(stabilizer(h14, 5), Error);
}

TEST_CASE("stabilizers of a different hypergraph do not fix the state") {
  const Hypergraph h = family("complete-3-uniform", 4);
  const Hypergraph other = family("single-edge", 4);
  const SignState s = build_state(other);
  bool all = true;
  for (int i = 1; i <= 4; ++i) all = all && apply(stabilizer(h, i), s) == s;
  CHECK_FALSE(all);
}

TEST_CASE("stabilizer matrices are involutions and match the action on states") {
  const Hypergraph h(3, {0b001, 0b110, 0b111});
  const SignState s = build_state(h);
  for (int i = 1; i <= 3; ++i) {
    const RealMatrix g = to_matrix(stabilizer(h, i), 3);
    CHECK((g * g - RealMatrix::Identity(8, 8)).norm() < 1e-14);
    Eigen::VectorXd v(8);
    for (int x = 0; x < 8; ++x) v(x) = s.amplitude(x);
    CHECK((g * v - v).norm() < 1e-14);
  }
}

TEST_CASE("stabilizer projector is the state projector") {
  const Hypergraph h = family("complete-3-uniform", 4);
  const DensityMatrix p = stabilizer_projector(h);
  const DensityMatrix rho = DensityMatrix::pure(build_state(h));
  CHECK((p.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(p.purity() == doctest::Approx(1.0));
}

TEST_CASE("density matrix validation") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(1, m), Error);  // trace 2
  m *= 0.5;
  m(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityMatrix(1, m), Error);  // not Hermitian
  m(1, 0) = 0.3;
  CHECK_NOTHROW(DensityMatrix(1, m));
  m(0, 1) = m(1, 0) = 0.9;
  CHECK_THROWS_AS(DensityMatrix(1, m), Error);  // not PSD
  CHECK_NOTHROW(DensityMatrix(1, m, DensityMatrix::Check::SkipPositivity));
  CHECK_THROWS_AS(DensityMatrix(2, ComplexMatrix::Identity(2, 2) * 0.5), Error);
}

TEST_CASE("pure states, mixtures and products") {
  const SignState s = build_state(clover(3));
  const DensityMatrix rho = DensityMatrix::pure(s);
  CHECK(rho.is_real());
  CHECK(rho.purity() == doctest::Approx(1.0));
  CHECK(rho.expectation(s) == doctest::Approx(1.0));
  const DensityMatrix mixed = rho.mix(DensityMatrix::maximally_mixed(3), 0.5);
  CHECK(mixed.purity() == doctest::Approx(0.25 + 0.5 / 8 + 0.25 / 8));

  // |+>|+>...: embedding two pure factors gives the pure product state.
  const DensityMatrix a = DensityMatrix::pure(build_state(family("star", 2)));
  const DensityMatrix b = DensityMatrix::pure(SignState(1));
  const DensityMatrix ab = embed_product(3, 0b101, a, b);
  // Factor a sits on qubits 1 and 3, so the product is the graph state with edge {1,3}.
  const DensityMatrix expect = DensityMatrix::pure(build_state(Hypergraph(3, {0b101})));
  CHECK((ab.matrix() - expect.matrix()).norm() < 1e-14);
}
