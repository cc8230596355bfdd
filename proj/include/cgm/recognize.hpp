#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgm/graph.hpp"

namespace cgm {

enum class CircleMethod { kOracle, kObstruction, kBoth };

// Verdict of circle-graph recognition. The oracle produces a double
// occurrence word per component (joined with " ; "); the obstruction method
// names a forbidden vertex-minor (W5, BW3 or W7) and how to reach it.
struct CircleVerdict {
  bool circle = false;
  std::optional<std::string> dow;
  std::optional<std::string> obstruction;
  std::optional<VertexMinorWitness> witness;
};

// Circle-graph recognition for simple graphs. kOracle searches for a
// realizing double occurrence word (componentwise, n <= 9 per component);
// kObstruction tests the three excluded vertex-minors; kBoth runs both and
// insists they agree.
CircleVerdict is_circle(const LoopedGraph& g, CircleMethod method = CircleMethod::kBoth);

constexpr int kOracleMaxComponent = 9;

// characterizations, planar realizability and crossing bounds are quantified
// over vertex-minors / 3^n transversal sweeps, so they carry a small cap
constexpr int kReportMax = 8;

// One representative per isomorphism class of the vertex-minors of g with at
// least one vertex (g itself first). Closure uses the three elementary
// single-vertex reductions h - v, (h * v) - v and (h ^ vw) - v; every
// vertex-minor of g is locally equivalent to a graph isomorphic to one of the
// listed representatives on the same number of vertices.
std::vector<LoopedGraph> vertex_minor_classes(const LoopedGraph& g);

// Degree and bipartiteness facts collected across the labeled
// local-complementation orbit of g.
struct OrbitScan {
  uint64_t orbit_size = 0;
  bool degree_le1 = false;        // some member has a vertex of degree 0 or 1
  bool degree_le2 = false;        // some member has a vertex of degree <= 2
  bool adjacent_deg2 = false;     // some member has adjacent degree-2 vertices
  bool all_have_degree5 = true;   // every member has a vertex of degree 5
  bool bipartite_member = false;  // some member is bipartite
};
OrbitScan scan_local_equivalence_orbit(const LoopedGraph& g, uint64_t cap = kDefaultOrbitCap);

// true iff h is isomorphic to an interlacement graph of an Euler circuit of
// K_{4,4}, i.e. lies in the local-equivalence class of the K44 fixture
bool is_k44_interlacement(const LoopedGraph& h);

// Conditions of the known circle-graph characterizations, each evaluated
// independently, plus the verdict every characterization implies. The
// constructor cross-checks all implied verdicts against two-method
// recognition and throws std::logic_error on any disagreement.
struct CharacterizationReport {
  int n = 0;
  bool circle = false;  // is_circle, both methods

  // conditions on g itself
  bool transverse_circuit_le3 = false;   // some transverse circuit of size <= 3
  bool orbit_degree_le2 = false;         // some locally equivalent graph has a
                                         // vertex of degree <= 2
  bool transverse_all_cographic = false; // every transverse matroid cographic
  bool orbit_bipartite = false;          // some locally equivalent graph bipartite
  bool bw3_minor = false;                // BW3 vertex-minor (bipartite case only)
  bool bw4_minor = false;                // BW4 vertex-minor (bipartite case only)

  // conditions quantified over all vertex-minor classes (1..8 vertices)
  int minor_class_count = 0;
  bool minors_loop_or_3circuit_pair = false;  // every class on <= 7 vertices: the
                                              // isotropic matroid has a loop or two
                                              // intersecting 3-circuits
  bool minors8_no_two_circuit_transversal = false;  // every 8-vertex class without a
                                                    // loop or intersecting 3-circuits:
                                                    // no transverse matroid whose only
                                                    // circuits are two disjoint ones
  bool minors_circuit_alternatives = false;   // every class: transverse circuit <= 2,
                                              // or two transverse 3-circuits no
                                              // transversal contains, or K44 class
  bool minors_degree_alternatives = false;    // every class: K44 class, or LC-orbit
                                              // vertex of degree <= 1, or LC-orbit
                                              // adjacent degree-2 pair
  bool minors_degree_trichotomy = false;      // every class: LC-orbit degree <= 1, or
                                              // LC-orbit adjacent degree-2 pair, or
                                              // every orbit member has a degree-5 vertex

  // implied verdicts; each agrees with `circle` by construction
  std::optional<bool> small_graph_verdict;        // n <= 6 only
  bool cographic_small_circuit_verdict = false;
  bool circuit_alternative_verdict = false;
  bool degree_alternative_verdict = false;
  bool degree_trichotomy_verdict = false;
  std::optional<bool> bipartite_verdict;          // when orbit_bipartite
};

CharacterizationReport characterization_report(const LoopedGraph& g);

// Search for disjoint transversals T1, T2 with r(T1) + r(T2) = n whose union
// restricts the isotropic matroid to a planar matroid; equivalently, g is an
// interlacement graph of an Euler system of a planar 4-regular graph.
struct PlanarRealizability {
  bool realizable = false;
  std::string t1, t2;  // witnessing transversals as pcs-strings
};
PlanarRealizability planar_realizability(const LoopedGraph& g);

// Lower bound for the crossing number of every 4-regular graph with
// interlacement graph g: the minimum of r(T1) + r(T2) - n over disjoint
// transversal pairs. With refine, a bound of exactly 1 is raised to 2 when no
// witnessing pair has a planar union matroid.
int crossing_lower_bound(const LoopedGraph& g, bool refine = false);

}  // namespace cgm
