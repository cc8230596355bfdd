#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgm/canon.hpp"

namespace cgm {

// Simple graph with optional loops; n <= 32, adjacency rows as bitmasks.
// Bit v of adj[u] is the u-v edge; the diagonal bit is a loop.
struct LoopedGraph {
  int n = 0;
  std::vector<uint32_t> adj;
  std::vector<std::string> names;  // optional display names, else decimal indices

  LoopedGraph() = default;
  explicit LoopedGraph(int nn);

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v);
  void toggle_edge(int u, int v);
  bool has_loop(int v) const { return has_edge(v, v); }
  uint32_t neighbors(int v) const { return adj[v] & ~(uint32_t{1} << v); }
  int degree(int v) const { return __builtin_popcount(neighbors(v)); }
  bool is_simple() const;
  int edge_count() const;  // loops count once

  std::string name_of(int v) const;

  // stable labeled key (for orbit BFS dedup)
  std::string labeled_key() const;

  LoopedGraph induced(uint32_t keep_mask) const;
  bool operator==(const LoopedGraph& o) const { return n == o.n && adj == o.adj; }
};

LoopedGraph simple_local_complement(const LoopedGraph& g, int v);
LoopedGraph nonsimple_local_complement(const LoopedGraph& g, int v);
LoopedGraph loop_complement(const LoopedGraph& g, uint32_t vertex_mask);
// pivot on an existing non-loop edge uv of a simple graph
LoopedGraph pivot(const LoopedGraph& g, int u, int v);

bool is_connected(const LoopedGraph& g);
std::vector<uint32_t> components(const LoopedGraph& g);
// -1 when disconnected or n == 0; loops ignored
int diameter(const LoopedGraph& g);
// bipartition mask if bipartite (ignoring loops)
std::optional<uint32_t> bipartition(const LoopedGraph& g);

CanonResult canonical_form(const LoopedGraph& g);

constexpr uint64_t kDefaultOrbitCap = 5'000'000;

enum class OrbitMode { kLabeled, kUpToIso };

// Closure of g under simple local complementation (looped_mode: non-simple
// local complementation and single-vertex loop complementation instead).
// kLabeled returns every labeled graph reached; kUpToIso one representative
// per isomorphism class (the first labeled graph found in its class).
std::vector<LoopedGraph> local_equivalence_orbit(const LoopedGraph& g, OrbitMode mode,
                                                 bool looped_mode = false,
                                                 uint64_t cap = kDefaultOrbitCap);

struct VertexMinorWitness {
  std::vector<int> lc_vertices;     // simple local complementations, in order
  std::vector<int> delete_vertices; // then delete these
};

// true iff some graph locally equivalent to g has an induced subgraph
// isomorphic to h; witness replays on g
std::optional<VertexMinorWitness> is_vertex_minor(const LoopedGraph& g, const LoopedGraph& h,
                                                  uint64_t cap = kDefaultOrbitCap);
LoopedGraph replay_witness(const LoopedGraph& g, const VertexMinorWitness& w);

// all simple graphs on exactly n vertices, one per isomorphism class
std::vector<LoopedGraph> all_graphs_up_to_iso(int n);

// Multigraph: parallel edges and loops, stored as an edge list. Used for
// touch-graphs and graphs of matroids.
struct MultiGraph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;  // endpoints with u <= v; loop u == v
  std::vector<std::string> edge_labels;   // optional, aligned with edges

  MultiGraph() = default;
  explicit MultiGraph(int nn) : n(nn) {}
  void add_edge(int u, int v, std::string label = "");
  std::vector<std::vector<int>> multiplicity_matrix() const;  // diag = loop count
  int degree(int v) const;  // loops contribute 2
};

CanonResult canonical_form(const MultiGraph& g);
bool isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace cgm
