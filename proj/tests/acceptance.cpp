// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hyperent/cli.hpp"
#include "hyperent/entanglement.hpp"
#include "hyperent/gmn.hpp"
#include "hyperent/stabilizer.hpp"
#include "hyperent/witness.hpp"
#include "support.hpp"

using namespace hyperent;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double v, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << num(dt, "%.2f") << " s]";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
}

RationalPolynomial row(std::vector<long> c, long d) { return RationalPolynomial::univariate(3, c, d); }

Outcome clover_overlaps() {
  const std::vector<RationalPolynomial> expected = {
      row({9, 7}, 16),
      row({4, 15, -15, 12}, 16),
      row({18, -22, 55, -44, 25}, 32),
      row({16, 45, -90, 145, -100, 48}, 64),
      row({50, -57, 228, -361, 417, -246, 97}, 128),
      row({64, 119, -357, 861, -1127, 1064, -560, 192}, 256),
      row({162, -140, 770, -1820, 3175, -3480, 2748, -1288, 385}, 512),
  };
  Outcome o;
  const auto t0 = Clock::now();
  for (int n = 3; n <= 9; ++n) {
    const auto got = overlap_polynomial(clover(n));
    if (!(got == expected[n - 3])) o.fail("Cl_" + std::to_string(n) + " gave " + got.to_string());
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.fail("took " + num(dt) + " s");
  return o;
}

Outcome thresholds() {
  struct Case {
    Hypergraph h;
    double expected;
  };
  const std::vector<Case> cases = {
      {clover(3), 0.429}, {clover(4), 0.758}, {clover(5), 0.820}, {clover(6), 0.857}, {clover(7), 0.881},
      {clover(8), 0.899}, {flower(3), 0.429}, {flower(5), 0.684}, {flower(7), 0.782}, {flower(9), 0.834},
  };
  Outcome o;
  const auto t0 = Clock::now();
  std::string table;
  for (const auto& c : cases) {
    const double p = critical_probability(c.h).probability;
    table += c.h.name() + "=" + num(p, "%.5f") + " ";
    if (std::abs(p - c.expected) > 5e-4) {
      o.fail(c.h.name() + " gave " + num(p, "%.5f") + ", expected " + num(c.expected, "%.3f") + " +- 0.0005");
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.fail("took " + num(dt) + " s");
  if (o.pass) o.detail = table;
  return o;
}

Outcome flower_identity() {
  Outcome o;
  for (int n = 3; n <= 11; n += 2)
    if (!(flower_overlap_closed_form(n) == overlap_polynomial(flower(n)))) o.fail("Fl_" + std::to_string(n) + " differs");
  return o;
}

Outcome stabilizers() {
  std::vector<Hypergraph> states = load_catalog(HYPERENT_DATA_DIR "/catalog.txt");
  for (int n = 3; n <= 8; ++n) states.push_back(clover(n));
  for (int n = 3; n <= 7; n += 2) states.push_back(flower(n));
  for (int n = 1; n <= 8; ++n) {
    states.push_back(family("edgeless", n));
    states.push_back(family("single-edge", n));
    if (n >= 2) states.push_back(family("star", n));
    for (int k = 1; k <= n; ++k) states.push_back(family("complete-" + std::to_string(k) + "-uniform", n));
  }
  Outcome o;
  int projectors = 0;
  for (const auto& h : states) {
    if (h.vertex_count() > 8) continue;
    if (!check_stabilizers(h)) o.fail("g_i|H> != |H> for " + to_inline_string(h));
    if (h.vertex_count() <= 6) {
      ++projectors;
      const double err = (stabilizer_projector(h).matrix() - DensityMatrix::pure(build_state(h)).matrix()).cwiseAbs().maxCoeff();
      if (err > 1e-12) o.fail("projector off by " + num(err) + " for " + to_inline_string(h));
    }
  }
  if (o.pass) o.detail = std::to_string(states.size()) + " states, " + std::to_string(projectors) + " projectors";
  return o;
}

Outcome randomization_consistency() {
  std::mt19937_64 rng(20240601);
  Outcome o;
  double worst_overlap = 0, worst_weight = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    const Hypergraph h = testing::random_hypergraph(n, rng, 0.4, 10);
    const auto params = testing::random_params(h, rng);
    const BranchEnsemble ens = randomize(h, params);
    const DensityMatrix rho = ensemble_to_density(ens);
    std::map<int, mpq_class> point;
    for (const auto& [k, p] : params.values()) point[k] = mpq_class(p);
    const double poly = overlap_polynomial(h).evaluate(point).get_d();
    worst_overlap = std::max(worst_overlap, std::abs(rho.expectation(build_state(h)) - poly));
    worst_weight = std::max(worst_weight, std::abs(ens.total_weight() - 1.0));
  }
  if (worst_overlap > 1e-10) o.fail("overlap mismatch " + num(worst_overlap));
  if (worst_weight > 1e-12) o.fail("weight sum off by " + num(worst_weight));
  if (o.pass) o.detail = "max |diff| " + num(worst_overlap) + ", max |sum w - 1| " + num(worst_weight);
  return o;
}

Outcome negativity_anchors() {
  Outcome o;
  for (const auto& h : {family("complete-3-uniform", 4), family("single-edge", 4), clover(5), flower(5),
                        Hypergraph(4, {0b0011, 0b1111}), family("complete-2-uniform", 4)}) {
    const DensityMatrix rho = randomized_density(h, RandomizationParams::uniform(0.0));
    for (const auto& b : all_bipartitions(h.vertex_count()))
      if (negativity(rho, b) != 0.0) o.fail("nonzero at p = 0 for " + to_inline_string(h) + " cut " + b.to_string());
  }
  const Bipartition cut = Bipartition::parse("1|2,3,4", 4);
  const double n14 = negativity(DensityMatrix::pure(build_state(family("complete-3-uniform", 4))), cut);
  const double n17 = negativity(DensityMatrix::pure(build_state(family("single-edge", 4))), cut);
  if (std::abs(n14 - 0.5) > 1e-9) o.fail("N(H14) = " + num(n14, "%.12f"));
  if (std::abs(n17 - std::sqrt(7.0) / 8) > 1e-9) o.fail("N(single-edge) = " + num(n17, "%.12f"));
  std::mt19937_64 rng(77);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const DensityMatrix rho = testing::random_density(n, rng, trial % 3 == 0, 1 + trial % 4);
    const auto bips = all_bipartitions(n);
    const Bipartition& b = bips[static_cast<std::size_t>(trial) % bips.size()];
    worst = std::max(worst, std::abs(negativity(rho, b) - negativity_trace_norm(rho, b)));
  }
  if (worst > 1e-9) o.fail("formulas disagree by " + num(worst));
  if (o.pass) o.detail = "N(H14) = " + num(n14, "%.12f") + ", N(single-edge) = " + num(n17, "%.12f") + ", max formula gap " + num(worst);
  return o;
}

Outcome monotone_negativity() {
  const Hypergraph h = family("complete-3-uniform", 4);
  const Bipartition cut = Bipartition::parse("1|2,3,4", 4);
  Outcome o;
  double prev = -1;
  for (int i = 0; i <= 20; ++i) {
    const double v = negativity(randomized_density(h, RandomizationParams::uniform(i / 20.0)), cut);
    if (v < prev - 1e-9) o.fail("drop at p3 = " + num(i / 20.0) + ": " + num(prev) + " -> " + num(v));
    prev = v;
  }
  return o;
}

// Biseparable / PPT-mixture states on 3 and 4 qubits, real and complex.
std::vector<DensityMatrix> separable_family() {
  std::mt19937_64 rng(4242);
  std::vector<DensityMatrix> out;
  const EdgeMask sides[] = {0b0001, 0b0010, 0b0011, 0b0101, 0b0110, 0b0100, 0b1001, 0b1000};
  for (int i = 0; i < 8; ++i) {
    const EdgeMask side = sides[i];
    const int na = __builtin_popcount(side);
    const bool real = i % 2 == 0;
    out.push_back(embed_product(4, side, testing::random_density(na, rng, real, 1 + i % 2),
                                testing::random_density(4 - na, rng, real, 1 + i % 3)));
  }
  for (int i = 0; i < 6; ++i) {
    const EdgeMask s1 = sides[i], s2 = sides[(i + 3) % 8];
    const int n1 = __builtin_popcount(s1), n2 = __builtin_popcount(s2);
    const DensityMatrix a = embed_product(4, s1, testing::random_density(n1, rng, false, 1),
                                          testing::random_density(4 - n1, rng, false, 1));
    const DensityMatrix b = embed_product(4, s2, testing::random_density(n2, rng, true, 1),
                                          testing::random_density(4 - n2, rng, true, 1));
    out.push_back(a.mix(b, 0.3 + 0.1 * i));
  }
  out.push_back(DensityMatrix::maximally_mixed(4));
  out.push_back(DensityMatrix::maximally_mixed(3));
  out.push_back(randomized_density(family("complete-3-uniform", 4), RandomizationParams::uniform(0.0)));
  out.push_back(randomized_density(Hypergraph(4, {0b0011, 0b1111}), RandomizationParams({{2, 1.0}, {4, 0.0}})));
  out.push_back(DensityMatrix::pure(build_state(Hypergraph(4, {0b0111}))));  // |C_123> (x) |+>
  out.push_back(embed_product(3, 0b001, testing::random_density(1, rng), testing::random_density(2, rng)));
  return out;
}

Outcome gmn_properties() {
  Outcome o;
  double slowest = 0;
  int solves = 0;
  auto run = [&](const DensityMatrix& rho, const std::string& what) {
    const GmnProblem p = make_gmn_problem(rho, Normalization::TraceOne);
    const auto t0 = Clock::now();
    const GmnSolution s = solve_gmn(p);
    const double dt = seconds_since(t0);
    ++solves;
    if (rho.qubits() == 4) slowest = std::max(slowest, dt);
    if (dt >= 30.0) o.fail(what + " took " + num(dt) + " s");
    if (s.status != sdp::Status::Optimal) {
      o.fail(what + ": solver " + sdp::to_string(s.status));
      return -1.0;
    }
    const CertificateCheck c = check_certificate(p, s);
    if (!c.passed) {
      o.fail(what + ": certificate (min eig " + num(c.min_eigenvalue) + ", residual " + num(c.max_residual) + ")");
    }
    return gmn_value(s);
  };
  const auto seps = separable_family();
  int zeros = 0;
  for (std::size_t i = 0; i < seps.size(); ++i) {
    const double v = run(seps[i], "separable #" + std::to_string(i));
    if (v == 0.0) ++zeros;
    else o.fail("separable #" + std::to_string(i) + " gave " + num(v));
  }
  const double h14 = run(DensityMatrix::pure(build_state(family("complete-3-uniform", 4))), "H14");
  const double h17 = run(DensityMatrix::pure(build_state(family("single-edge", 4))), "single-edge(4)");
  if (!(h14 > 0)) o.fail("gmn(H14) = " + num(h14));
  if (!(h17 > 0)) o.fail("gmn(single-edge) = " + num(h17));
  if (o.pass) {
    o.detail = std::to_string(zeros) + "/" + std::to_string(seps.size()) + " separable states exactly 0, gmn(H14) = " +
               num(h14) + ", gmn(single-edge) = " + num(h17) + ", " + std::to_string(solves) +
               " certificates verified, slowest 4-qubit solve " + num(slowest, "%.2f") + " s";
  }
  return o;
}

Outcome demo_sweep() {
  Outcome o;
  const auto path = std::filesystem::temp_directory_path() / "hyperent_acceptance_gmn.csv";
  std::ostringstream out, err;
  const int code = run_cli({"sweep", "--hypergraph", "vertices=4; edges={1,2},{1,2,3,4}", "--measure", "gmn",
                            "--normalization", "trace-one", "--grid", "11", "--out", path.string()},
                           out, err);
  if (code != 0) o.fail("exit code " + std::to_string(code) + ": " + err.str());
  std::ifstream in(path);
  std::vector<std::string> header, lines;
  for (std::string line; std::getline(in, line);) (line.rfind("#", 0) == 0 ? header : lines).push_back(line);
  std::filesystem::remove(path);

  std::string head;
  for (const auto& h : header) head += h + "\n";
  for (const char* key : {"# hyperent ", "# hypergraph: vertices=4; edges={1,2},{1,2,3,4}", "# measure: gmn",
                          "# normalization: trace-one"}) {
    if (head.find(key) == std::string::npos) o.fail(std::string("header lacks '") + key + "'");
  }
  if (lines.empty() || lines[0] != "p2,p4,gmn,status") {
    o.fail("unexpected column header");
    return o;
  }
  if (lines.size() != 122) o.fail("expected 121 rows, got " + std::to_string(lines.size() - 1));
  double first = -1, last = -1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f;
    std::istringstream s(lines[i]);
    for (std::string cell; std::getline(s, cell, ',');) f.push_back(cell);
    if (f.size() != 4 || f[3] != "ok") {
      o.fail("bad row '" + lines[i] + "'");
      continue;
    }
    const double v = std::stod(f[2]);
    if (f[0] == "0" && f[1] == "0") first = v;
    if (f[0] == "1" && f[1] == "1") last = v;
  }
  if (first != 0.0) o.fail("gmn(0,0) = " + num(first));
  if (!(last > 0.0)) o.fail("gmn(1,1) = " + num(last));
  if (o.pass) o.detail = "gmn(0,0) = 0, gmn(1,1) = " + num(last);
  return o;
}

}  // namespace

int main() {
  report(1, "clover overlap polynomials n = 3..9 match exactly", clover_overlaps);
  report(2, "critical probabilities of Cl_3..Cl_8 and Fl_3..Fl_9 within 0.0005", thresholds);
  report(3, "flower closed form equals the enumerated overlap, n = 3..11", flower_identity);
  report(4, "stabilizers fix every catalog/family state, projectors to 1e-12", stabilizers);
  report(5, "randomized-state overlap equals the polynomial on 100 random (H, P)", randomization_consistency);
  report(6, "negativity anchors and formula agreement", negativity_anchors);
  report(7, "H14 negativity nondecreasing in p3 on {1}|{2,3,4}", monotone_negativity);
  report(8, "GMN: zero on separable states, positive on H14 and single-edge, certificates verify", gmn_properties);
  report(9, "gmn sweep of {{1,2},{1,2,3,4}} on an 11x11 grid", demo_sweep);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
