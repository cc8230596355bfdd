#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgm/gf2.hpp"
#include "cgm/graph.hpp"
#include "cgm/matroid.hpp"

namespace cgm {

// 4-regular multigraph at half-edge resolution. Edge e owns half-edges 2e
// (incident on edges[e][0]) and 2e+1 (on edges[e][1]); endpoints are stored
// smaller-first, and a loop owns both half-edges at its vertex.
struct FourRegularGraph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 4>> incidence;  // half-edges per vertex, ascending
  std::vector<std::string> names;             // optional display names

  int edge_count() const { return static_cast<int>(edges.size()); }
  int half_count() const { return 2 * edge_count(); }
  int vertex_of_half(int h) const { return edges[h >> 1][h & 1]; }
  std::string name_of(int v) const;
  std::string half_id(int h) const;  // "<edge>.<0|1>"

  auto operator<=>(const FourRegularGraph&) const = default;
};

// builds incidence and checks every vertex has degree exactly 4
FourRegularGraph four_regular(int n, std::vector<std::array<int, 2>> edges,
                              std::vector<std::string> names = {});
MultiGraph to_multigraph(const FourRegularGraph& f);

// One visit of a closed walk: arrive via in_half, leave via out_half. A
// circuit is a cyclic step sequence, stored as the least representative
// under rotation and reflection (reflection reverses and swaps in/out).
struct CircuitStep {
  int vertex = 0;
  int in_half = 0;
  int out_half = 0;
  auto operator<=>(const CircuitStep&) const = default;
};
using Circuit = std::vector<CircuitStep>;

Circuit canonical_circuit(Circuit c);
std::vector<int> word_of(const Circuit& c);

// Transition: a pairing of the four half-edges at a vertex into two disjoint
// pairs (each pair ascending, pairs ascending).
struct Transition {
  int vertex = 0;
  std::array<std::array<int, 2>, 2> pairs{};
  auto operator<=>(const Transition&) const = default;
};

Transition make_transition(const FourRegularGraph& f, int v,
                           std::array<std::array<int, 2>, 2> pairs);
std::array<Transition, 3> transitions_at(const FourRegularGraph& f, int v);
std::string transition_key(const FourRegularGraph& f, const Transition& t);

// Euler system: one circuit per connected component, canonical and sorted.
struct EulerSystem {
  FourRegularGraph g;
  std::vector<Circuit> words;
  auto operator<=>(const EulerSystem&) const = default;
};

// validates the circuits (edge-disjoint closed walks covering each component
// exactly once) and canonicalizes
EulerSystem euler_system(FourRegularGraph g, std::vector<Circuit> circuits);

enum class EulerMode { kOne, kAll };

// kOne: a single Hierholzer-constructed system. kAll: every Euler system,
// found by keeping the transition choices that close into one circuit per
// component.
std::vector<EulerSystem> euler_systems(const FourRegularGraph& f, EulerMode mode);

// reverses one of the two v-to-v walks of v's component circuit
EulerSystem kappa_transform(const EulerSystem& c, int v);

// v adjacent to w iff they alternate v..w..v..w along a component circuit
LoopedGraph interlacement(const EulerSystem& c);

// 0 = phi (used by c), 1 = chi (unused, orientation-consistent),
// 2 = psi (unused, orientation-inconsistent)
int transition_letter(const EulerSystem& c, const Transition& t);
Transition transition_of(const EulerSystem& c, int v, int letter);

struct CircuitPartition {
  FourRegularGraph g;
  std::vector<Transition> transitions;  // one per vertex, vertex order
  std::vector<Circuit> circuits;        // canonical, sorted
  auto operator<=>(const CircuitPartition&) const = default;
};

CircuitPartition circuit_partition(const FourRegularGraph& f, std::vector<Transition> ts);

// column v of IAS(interlacement(c)) picked by the phi/chi/psi label of p's
// transition at v
Gf2Matrix transition_matrix(const EulerSystem& c, const CircuitPartition& p);

// the transition matroid on T(F): IAS(interlacement(c)) with columns labeled
// by transition keys (the matroid does not depend on the choice of c)
BinaryMatroid transition_matroid(const EulerSystem& c);

// Touch-graph: one vertex per circuit of p, one edge per vertex of F (labeled
// with its name), joining the circuits incident there.
struct TouchGraph {
  MultiGraph graph;
  std::vector<Circuit> circuits;  // graph vertex i is circuits[i]
};

TouchGraph touch_graph(const CircuitPartition& p);

// rows = vertex cocycles (non-loop incident edges), columns = edges
Gf2Matrix cut_space_matrix(const MultiGraph& g);

// Detachment along a transition: the vertex is removed and its four
// half-edges are re-paired; free edges are discarded. vertex_map/half_map
// give the surviving identities (-1 = gone).
struct Detachment {
  FourRegularGraph graph;
  std::vector<int> vertex_map;
  std::vector<int> half_map;
};

Detachment detach(const FourRegularGraph& f, const Transition& t);

// all 4-regular multigraphs (or simple graphs) on n vertices up to
// isomorphism, sorted by canonical key; n <= 10
std::vector<FourRegularGraph> enumerate_four_regular(int n, bool simple_only);

// Rotation system: a multigraph with a cyclic order of incident half-edges
// at each vertex (half-edge ids as in FourRegularGraph).
struct RotationSystem {
  MultiGraph g;
  std::vector<std::vector<int>> rot;
};

RotationSystem rotation_system(MultiGraph g, std::vector<std::vector<int>> rot);

// face boundaries as orbits of darts (dart h leaves vertex_of(h) along h's
// edge); each orbit starts at its least dart
std::vector<std::vector<int>> faces(const RotationSystem& h);
bool is_planar_rotation(const RotationSystem& h);

// Boundary word of an epsilon-neighborhood of a spanning tree: a cyclic word
// of edge indices in which every edge appears exactly twice. Postconditions
// (asserted): the word's interlacement is bipartite between tree edges and
// chords, and the closed neighborhood of each chord is its fundamental
// circuit.
std::vector<int> boundary_trace(const RotationSystem& h, const std::vector<int>& tree);

// interlacement of cyclic words over letters 0..n-1, each letter appearing
// exactly twice in exactly one word
LoopedGraph word_interlacement(const std::vector<std::vector<int>>& words, int n,
                               std::vector<std::string> names = {});

// DOW text: one line per component, whitespace-separated vertex tokens, each
// token appearing exactly twice in one line; vertices ordered by sorted token
EulerSystem parse_dows(const std::string& text);
std::string dows_to_text(const EulerSystem& c);

// "r <v>: <h> <h> ..." lines, one per vertex, half-edge ids "<edge>.<0|1>"
RotationSystem parse_rotation(const MultiGraph& g, const std::string& text);
std::string rotation_to_text(const RotationSystem& h);

}  // namespace cgm
