#include "hyperent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <thread>

#include "json.hpp"

#include "hyperent/error.hpp"
#include "hyperent/randomizer.hpp"
#include "hyperent/witness.hpp"

namespace hyperent {

const char* to_string(Measure m) {
  switch (m) {
    case Measure::Negativity: return "negativity";
    case Measure::Gmn: return "gmn";
    case Measure::Overlap: return "overlap";
    case Measure::Witness: return "witness";
  }
  return "?";
}

Measure parse_measure(std::string_view text) {
  if (text == "negativity") return Measure::Negativity;
  if (text == "gmn") return Measure::Gmn;
  if (text == "overlap") return Measure::Overlap;
  if (text == "witness") return Measure::Witness;
  throw Error(ErrorKind::InvalidArgument,
              "unknown measure '" + std::string(text) + "' (expected negativity, gmn, overlap or witness)");
}

bool SweepResult::all_ok() const {
  for (const auto& r : rows)
    if (r.status != "ok") return false;
  return true;
}

namespace {

std::vector<std::string> variable_names(const SweepConfig& c) {
  if (c.diagonal) return {"p"};
  std::vector<std::string> out;
  for (int k : c.hypergraph.randomizable_orders()) out.push_back("p" + std::to_string(k));
  return out;
}

long grid_size(int resolution, std::size_t vars) {
  long total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    total *= resolution;
    if (total > kMaxGridPoints) return total;
  }
  return total;
}

// Formats doubles identically on every run and platform with IEEE doubles.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string normalization_label(const SweepConfig& c) {
  return c.normalization ? to_string(*c.normalization) : "n/a";
}

std::string bipartition_label(const SweepConfig& c) {
  return c.bipartition ? c.bipartition->to_string() : "n/a";
}

// Everything a worker needs, prepared once up front.
struct Evaluator {
  const SweepConfig& config;
  std::vector<int> orders;
  std::optional<RationalPolynomial> poly;  // overlap / witness

  explicit Evaluator(const SweepConfig& c) : config(c), orders(c.hypergraph.randomizable_orders()) {
    if (c.measure == Measure::Overlap || c.measure == Measure::Witness) {
      RationalPolynomial p = c.measure == Measure::Overlap ? overlap_polynomial(c.hypergraph)
                                                           : witness_expectation(c.hypergraph);
      poly = c.diagonal ? p.bind_all(0) : p;
    }
  }

  double operator()(const std::vector<double>& x) const {
    if (poly) {
      std::map<int, double> point;
      if (config.diagonal) point[0] = x[0];
      else
        for (std::size_t i = 0; i < orders.size(); ++i) point[orders[i]] = x[i];
      return poly->evaluate(point);
    }
    RandomizationParams params;
    for (std::size_t i = 0; i < orders.size(); ++i) params.set(orders[i], config.diagonal ? x[0] : x[i]);
    const DensityMatrix rho = randomized_density(config.hypergraph, params);
    if (config.measure == Measure::Negativity) return negativity(rho, *config.bipartition);
    const GmnSolution s = solve_gmn(make_gmn_problem(rho, *config.normalization));
    if (s.status != sdp::Status::Optimal) {
      throw Error(ErrorKind::Numerical, std::string("solver ") + sdp::to_string(s.status));
    }
    return gmn_value(s);
  }
};

std::string describe(const Error& e) {
  std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
  for (char& c : msg)
    if (c == ',' || c == '\n' || c == '"') c = ' ';
  return msg;
}

}  // namespace

void validate(const SweepConfig& c) {
  if (c.resolution < 2) throw Error(ErrorKind::InvalidArgument, "grid resolution must be at least 2");
  const int n = c.hypergraph.vertex_count();
  if (c.measure == Measure::Negativity) {
    if (!c.bipartition) throw Error(ErrorKind::InvalidArgument, "negativity sweeps need --bipartition");
    if (c.bipartition->qubits() != n) {
      throw Error(ErrorKind::InvalidArgument, "bipartition does not match the hypergraph size");
    }
  } else if (c.bipartition) {
    throw Error(ErrorKind::InvalidArgument, "--bipartition only applies to negativity sweeps");
  }
  if (c.measure == Measure::Gmn && !c.normalization) {
    throw Error(ErrorKind::InvalidArgument, "gmn sweeps need an explicit --normalization (trace-one or operator-bounded)");
  }
  if (c.measure != Measure::Gmn && c.normalization) {
    throw Error(ErrorKind::InvalidArgument, "--normalization only applies to gmn sweeps");
  }
  if (grid_size(c.resolution, variable_names(c).size()) > kMaxGridPoints) {
    throw Error(ErrorKind::Capacity, "grid exceeds " + std::to_string(kMaxGridPoints) + " points");
  }
}

int sweep_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("HYPERENT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, hw));
  }
  return hw;
}

SweepResult run_sweep(const SweepConfig& config, int threads) {
  validate(config);
  SweepResult result;
  result.variables = variable_names(config);
  const std::size_t vars = result.variables.size();
  const long total = grid_size(config.resolution, vars);
  const double step = 1.0 / (config.resolution - 1);

  result.rows.resize(static_cast<std::size_t>(total));
  for (long idx = 0; idx < total; ++idx) {
    auto& row = result.rows[static_cast<std::size_t>(idx)];
    row.coordinates.resize(vars);
    long rest = idx;  // last variable varies fastest
    for (std::size_t v = vars; v-- > 0;) {
      row.coordinates[v] = static_cast<double>(rest % config.resolution) * step;
      rest /= config.resolution;
    }
  }

  // Setup failures (e.g. too many edges for the overlap polynomial) hit every
  // row alike.
  std::optional<Evaluator> eval;
  try {
    eval.emplace(config);
  } catch (const Error& e) {
    for (auto& row : result.rows) row.status = describe(e);
    return result;
  }

  std::atomic<long> next{0};
  auto work = [&] {
    for (long i; (i = next.fetch_add(1)) < total;) {
      auto& row = result.rows[static_cast<std::size_t>(i)];
      try {
        row.value = (*eval)(row.coordinates);
        row.status = "ok";
      } catch (const Error& e) {
        row.status = describe(e);
      } catch (const std::exception& e) {
        row.status = describe(Error(ErrorKind::Numerical, e.what()));
      }
    }
  };
  const int workers = static_cast<int>(std::clamp<long>(threads, 1, total));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }  // joined here, before result leaves the function
  return result;
}

void write_csv(std::ostream& out, const SweepConfig& config, const SweepResult& result) {
  out << "# hyperent " << kVersion << "\n";
  out << "# hypergraph: " << to_inline_string(config.hypergraph) << "\n";
  out << "# measure: " << to_string(config.measure) << "\n";
  out << "# normalization: " << normalization_label(config) << "\n";
  out << "# bipartition: " << bipartition_label(config) << "\n";
  out << "# grid: " << config.resolution << " points per variable"
      << (config.diagonal ? ", p_k = p for every order" : "") << "\n";
  out << "# columns: grid coordinates, measure value (empty on failure), status\n";
  for (const auto& v : result.variables) out << v << ",";
  out << to_string(config.measure) << ",status\n";
  for (const auto& row : result.rows) {
    for (double x : row.coordinates) out << fmt(x) << ",";
    out << (row.value ? fmt(*row.value) : "") << "," << row.status << "\n";
  }
}

void write_json(std::ostream& out, const SweepConfig& config, const SweepResult& result) {
  nlohmann::ordered_json j;
  j["tool"] = "hyperent";
  j["version"] = kVersion;
  j["hypergraph"] = to_inline_string(config.hypergraph);
  j["measure"] = to_string(config.measure);
  j["normalization"] = normalization_label(config);
  j["bipartition"] = bipartition_label(config);
  j["resolution"] = config.resolution;
  j["diagonal"] = config.diagonal;
  j["variables"] = result.variables;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    nlohmann::ordered_json r;
    r["coordinates"] = row.coordinates;
    r["value"] = row.value ? nlohmann::ordered_json(*row.value) : nlohmann::ordered_json(nullptr);
    r["status"] = row.status;
    rows.push_back(std::move(r));
  }
  out << j.dump(2) << "\n";
}

}  // namespace hyperent
