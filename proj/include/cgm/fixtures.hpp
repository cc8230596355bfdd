#pragma once

#include <string>

#include "cgm/gf2.hpp"
#include "cgm/graph.hpp"
#include "cgm/intmat.hpp"

namespace cgm {
namespace fixtures {

// Wheel W_k: hub is vertex 0 (name "1"), rim cycle on vertices 1..k.
LoopedGraph wheel(int k);
LoopedGraph w5();
LoopedGraph w7();

// Bouchet's third obstruction BW3: the wheel W3 with every rim edge
// subdivided, i.e. the bipartite fundamental graph of the Fano matroid.
// Vertices "1".."6" form the ring (odd = degree-3 rim, even = degree-2
// subdivision vertices); "7" is the hub, adjacent to 1, 3, 5.
LoopedGraph bw3();

// BW4: W4 with every rim edge subdivided; the bipartite fundamental graph
// of M(K_{3,3}). Ring "1".."8", hub "9" adjacent to 1, 3, 5, 7.
LoopedGraph bw4();

// Double occurrence word of an Euler circuit of K_{4,4} (tokens separated
// by spaces; letters 1,2,3,4 on one side, a,b,c,d on the other).
std::string k44_dow();

// Interlacement graph of that Euler circuit, vertex order 1,2,3,4,a,b,c,d.
LoopedGraph k44_interlacement();

// Transition matrices of two circuit partitions of K5 (5x5 over GF(2)).
Gf2Matrix k5_mcp();
Gf2Matrix k5_mdp();

// A principally unimodular example: 4x8 representation (I | A) of an
// 8-element matroid that passes the transversal-determinant test but is
// not regular. Columns t11..t14, t21..t24; skew pairs {t1j, t2j}.
IntMatrix pu_b();

// Touch-graphs arising from 4-element circuit partitions of K_{4,4}:
// a 4-cycle with all edges doubled, and K4 with two non-incident edges
// doubled (the cocycle matroid of the latter is the W7 nullity-3 type).
MultiGraph tg_doubled_c4();
MultiGraph tg_k4_plus2();

// Transversal of W7 whose transverse matroid has exactly two circuits.
std::string w7_special_transversal();

}  // namespace fixtures
}  // namespace cgm
