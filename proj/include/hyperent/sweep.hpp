#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperent/entanglement.hpp"
#include "hyperent/gmn.hpp"
#include "hyperent/hypergraph.hpp"

namespace hyperent {

inline constexpr const char* kVersion = "0.1.0";

enum class Measure { Negativity, Gmn, Overlap, Witness };

const char* to_string(Measure m);
Measure parse_measure(std::string_view text);

/// Largest number of grid points a single sweep may evaluate.
inline constexpr long kMaxGridPoints = 1'000'000;

struct SweepConfig {
  Hypergraph hypergraph;
  Measure measure = Measure::Overlap;
  std::optional<Bipartition> bipartition;      // negativity only
  std::optional<Normalization> normalization;  // gmn only, and mandatory there
  int resolution = 11;                         // points per variable, >= 2
  /// One variable p with p_k = p for every order instead of one per order.
  bool diagonal = false;
};

/// Throws Error(InvalidArgument) on a config that cannot be run.
void validate(const SweepConfig& config);

struct SweepRow {
  std::vector<double> coordinates;  // one per variable
  std::optional<double> value;      // empty when the point failed
  std::string status;               // "ok" or a short failure description
};

struct SweepResult {
  std::vector<std::string> variables;  // "p2", "p3", ... or "p"
  std::vector<SweepRow> rows;          // lexicographic in grid coordinates
  bool all_ok() const;
};

/// Worker count from HYPERENT_THREADS, else the hardware concurrency.
int sweep_threads();

/// Evaluates every grid point i/(resolution-1). Points run in parallel on
/// `threads` workers; failures are recorded in the row, never dropped.
SweepResult run_sweep(const SweepConfig& config, int threads = sweep_threads());

void write_csv(std::ostream& out, const SweepConfig& config, const SweepResult& result);
void write_json(std::ostream& out, const SweepConfig& config, const SweepResult& result);

}  // namespace hyperent
