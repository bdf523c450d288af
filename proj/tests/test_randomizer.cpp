#include <map>
#include <random>

#include "doctest.h"
#include "hyperent/error.hpp"
#include "hyperent/randomizer.hpp"
#include "support.hpp"

using namespace hyperent;

TEST_CASE("parameter parsing") {
  const auto p = RandomizationParams::parse("2=0.5, 3=0.25");
  CHECK(p.probability(2) == 0.5);
  CHECK(p.probability(3) == 0.25);
  CHECK_THROWS_AS(p.probability(4), Error);
  CHECK(RandomizationParams::parse("0.3").probability(7) == 0.3);
  CHECK_THROWS_AS(RandomizationParams::parse("2=1.5"), Error);
  CHECK_THROWS_AS(RandomizationParams::parse("1=0.5"), Error);
  CHECK_THROWS_AS(RandomizationParams::parse("2=x"), Error);
  CHECK_THROWS_AS(RandomizationParams::parse(""), Error);
}

TEST_CASE("H14 branch weights follow the binomial pattern") {
  const Hypergraph h = family("complete-3-uniform", 4);
  const auto branches = symbolic_randomize(h);
  REQUIRE(branches.size() == 16);
  const auto p = RationalPolynomial::variable(3);
  const auto q = RationalPolynomial::constant(1) - p;
  std::map<int, int> count_by_kept;
  for (const auto& b : branches) {
    const int k = __builtin_popcount(b.kept);
    CHECK(b.weight == p.pow(k) * q.pow(4 - k));
    CHECK(b.subgraph.edge_count() == static_cast<std::size_t>(k));
    ++count_by_kept[k];
  }
  CHECK(count_by_kept == std::map<int, int>{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}});
}

TEST_CASE("symbolic weights sum to one") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Hypergraph h = testing::random_hypergraph(4, rng, 0.4, 8);
    RationalPolynomial sum;
    for (const auto& b : symbolic_randomize(h)) sum += b.weight;
    CHECK(sum == RationalPolynomial::constant(1));
  }
}

TEST_CASE("numeric weights sum to one and match the symbolic ones") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Hypergraph h = testing::random_hypergraph(2 + trial % 4, rng);
    const auto params = testing::random_params(h, rng);
    const BranchEnsemble ens = randomize(h, params);
    CHECK(ens.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
    std::map<int, double> point(params.values().begin(), params.values().end());
    for (const auto& b : ens.branches) CHECK(b.weight == doctest::Approx(branch_weight(h, b.kept).evaluate(point)));
  }
}

TEST_CASE("product formula equals the branch sum") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const Hypergraph h = testing::random_hypergraph(1 + trial % 5, rng);
    const auto params = testing::random_params(h, rng);
    const DensityMatrix a = ensemble_to_density(randomize(h, params));
    const DensityMatrix b = randomized_density(h, params);
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("endpoints of the randomization") {
  const Hypergraph h(4, {0b0010, 0b0011, 0b1110});
  const DensityMatrix full = randomized_density(h, RandomizationParams::uniform(1.0));
  CHECK((full.matrix() - DensityMatrix::pure(build_state(h)).matrix()).norm() < 1e-14);
  // With every randomizable gate off only the loop on vertex 2 survives.
  const DensityMatrix none = randomized_density(h, RandomizationParams::uniform(0.0));
  CHECK((none.matrix() - DensityMatrix::pure(build_state(Hypergraph(4, {0b0010}))).matrix()).norm() < 1e-14);
}

TEST_CASE("H14 at p = 1/2 is mixed with unit trace") {
  const Hypergraph h = family("complete-3-uniform", 4);
  const auto params = RandomizationParams::uniform(0.5);
  const DensityMatrix rho = randomized_density(h, params);
  CHECK(rho.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-15));
  // Gram-matrix purity: sum_FG w_F w_G <F|G>^2.
  const BranchEnsemble ens = randomize(h, params);
  mpq_class purity = 0;
  for (const auto& f : ens.branches)
    for (const auto& g : ens.branches) {
      const mpq_class ip = inner_product(f.state, g.state);
      purity += mpq_class(f.weight) * mpq_class(g.weight) * ip * ip;
    }
  CHECK(rho.purity() == doctest::Approx(purity.get_d()).epsilon(1e-13));
  CHECK(rho.purity() < 1.0);
}

TEST_CASE("missing order probability is an error") {
  const Hypergraph h(3, {0b011, 0b111});
  CHECK_THROWS_AS(randomize(h, RandomizationParams({{2, 0.5}})), Error);
  CHECK_THROWS_AS(randomized_density(h, RandomizationParams({{3, 0.5}})), Error);
}

TEST_CASE("tiny weights are not lost") {
  const Hypergraph h = family("complete-2-uniform", 6);  // 15 edges
  const BranchEnsemble ens = randomize(h, RandomizationParams::uniform(1e-3));
  CHECK(ens.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ens.branches.back().weight == doctest::Approx(1e-45).epsilon(1e-9));
}
