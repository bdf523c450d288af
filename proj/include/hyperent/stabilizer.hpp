#pragma once

#include <vector>

#include "hyperent/density_matrix.hpp"
#include "hyperent/hypergraph.hpp"
#include "hyperent/sign_state.hpp"

namespace hyperent {

/// g_i = X_i * prod_{e in E, i in e} C_{e \ {i}}.
///
/// A phase mask of 0 comes from a loop {i} and acts as the scalar -1.
struct StabilizerOp {
  int qubit = 1;  // 1-based
  std::vector<EdgeMask> phase_edges;
};

StabilizerOp stabilizer(const Hypergraph& h, int qubit);

/// g_i applied to a sign state; the result is again a sign state.
SignState apply(const StabilizerOp& g, const SignState& s);

/// Dense real matrix of g_i on n qubits.
RealMatrix to_matrix(const StabilizerOp& g, int qubits);

/// prod_i (g_i + 1)/2, assembled from the stabilizer generators alone.
/// Requires n <= kMaxDenseQubits.
DensityMatrix stabilizer_projector(const Hypergraph& h);

/// True when g_i|H> = |H> for every i.
bool check_stabilizers(const Hypergraph& h);

}  // namespace hyperent
