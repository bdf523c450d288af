#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hyperent {

/// Hyperedge as a vertex bitmask: bit (i-1) is set when vertex i belongs to
/// the edge. Vertices are 1-indexed everywhere outside this encoding.
using EdgeMask = std::uint32_t;

inline constexpr int kMaxVertices = 32;
/// Largest number of randomizable (order >= 2) edges we enumerate subsets of.
inline constexpr int kMaxRandomizableEdges = 20;

int edge_order(EdgeMask e);

/// "{1,2,3}" style rendering, vertices ascending.
std::string format_edge(EdgeMask e);

/// Number of edges per order k.
struct EdgeOrderProfile {
  std::map<int, int> counts;

  int total() const;
  int count(int order) const;
};

/// Immutable hypergraph on vertices {1..n}. Edges are kept in canonical order,
/// sorted by (order, numeric mask), so equal hypergraphs compare and serialize
/// identically. The name is a label only and does not take part in equality.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws Error(InvalidArgument) on empty/out-of-range/duplicate edges.
  Hypergraph(int vertex_count, std::vector<EdgeMask> edges, std::string name = {});

  static Hypergraph edgeless(int vertex_count, std::string name = {});

  int vertex_count() const noexcept { return n_; }
  const std::vector<EdgeMask>& edges() const noexcept { return edges_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// 0 for an edgeless hypergraph.
  int max_edge_order() const;
  EdgeOrderProfile order_profile() const;
  /// Orders k >= 2 that occur, ascending.
  std::vector<int> randomizable_orders() const;

  /// Edges of order >= 2 in canonical order; bit j of a subset mask refers to
  /// the j-th entry of this list.
  std::vector<EdgeMask> randomizable_edges() const;
  /// Order-1 edges (loops).
  std::vector<EdgeMask> loops() const;

  bool contains(EdgeMask e) const;
  Hypergraph with_name(std::string name) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<EdgeMask> edges_;
  std::string name_;
};

/// Spanning subhypergraph keeping all loops plus the randomizable edges whose
/// bit is set in `kept` (indexing as in randomizable_edges()).
Hypergraph spanning_subhypergraph(const Hypergraph& h, std::uint32_t kept);

/// All 2^m spanning subhypergraphs over the m randomizable edges, in
/// ascending order of the kept-edge mask (mask 0 keeps only the loops).
/// Throws Error(Capacity) when m > kMaxRandomizableEdges.
std::vector<Hypergraph> spanning_subhypergraphs(const Hypergraph& h);

// Catalog records -----------------------------------------------------------

/// Multi-line catalog record ("name=", "vertices=", "edges=" lines).
std::string serialize(const Hypergraph& h);
/// Single-line form "vertices=4; edges={1,2},{1,2,3,4}" (name omitted).
std::string to_inline_string(const Hypergraph& h);

/// Parses one record. Fields are separated by newlines or ';', '#' starts a
/// comment. Throws ParseError with line/column on malformed input.
Hypergraph parse_hypergraph(std::string_view text);

/// Parses a catalog of blank-line-separated records.
std::vector<Hypergraph> parse_catalog(std::string_view text);
std::vector<Hypergraph> load_catalog(const std::filesystem::path& path);
/// Throws Error(NotFound) when no record carries `name`.
const Hypergraph& find_by_name(const std::vector<Hypergraph>& catalog, std::string_view name);

// Families ------------------------------------------------------------------

/// Wheel of triangles around the center vertex n: edges {n, i, i+1} over the
/// rim 1..n-1 taken cyclically, deduplicated (clover(3) has a single edge).
Hypergraph clover(int n);

/// (n-1)/2 petals {2j-1, 2j, n} sharing only the center vertex n; n odd.
Hypergraph flower(int n);

/// Named generators: "clover", "flower", "star", "single-edge",
/// "complete-k-uniform" (e.g. "complete-3-uniform"), "edgeless".
Hypergraph family(std::string_view name, int n);

}  // namespace hyperent
