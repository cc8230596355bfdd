#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgm/gf2.hpp"
#include "cgm/isotropic.hpp"
#include "cgm/pu.hpp"

namespace cgm {

// Set system over ground set {0..n-1}; feasible sets as bitmasks, sorted
// ascending, deduplicated. Ground set capped at 16 elements.
struct SetSystem {
  int n = 0;
  std::vector<uint32_t> feasible;

  SetSystem() = default;
  SetSystem(int n_, std::vector<uint32_t> sets);

  bool contains(uint32_t s) const;
  bool operator==(const SetSystem&) const = default;
};

// exhaustive symmetric exchange axiom; nonempty feasible family required
bool is_delta_matroid(const SetSystem& d);

// all feasible sets share cardinality parity
bool is_even(const SetSystem& d);

// D*X: symmetric difference by x on every feasible set
SetSystem twist(const SetSystem& d, uint32_t x);

// D+X: Y feasible iff an odd number of Z in D satisfy Y-X <= Z <= Y
SetSystem loop_complement(const SetSystem& d, uint32_t x);

// D_A = subsets with nonsingular principal submatrix; a must be symmetric
SetSystem dm_from_matrix(const Gf2Matrix& a);

// inverse of dm_from_matrix for binary systems containing the empty set;
// roundtrip-validated, throws precondition_error otherwise
Gf2Matrix reconstruct_matrix(const SetSystem& d);

// representable over GF(2): twist-normalize by any feasible set and roundtrip
bool is_binary(const SetSystem& d);

// binary d, n <= 8: even, and the graph read off a normalization is a circle graph
bool is_eulerian(const SetSystem& d);

struct RegularVerdict {
  bool regular = false;
  std::optional<SignedSkewMatrix> witness;
};

// even binary d, n <= 8: representable by a PU skew-symmetric real matrix
RegularVerdict is_regular(const SetSystem& d);

// Delta-matroid of a 2-section: per vertex the lower remaining letter plays
// T1 and the higher plays T2; S is feasible iff the columns picking T2 on S
// and T1 off S are independent.
SetSystem section_delta_matroid(const MultimatroidSection& s);

// text format: "dm <n>" header, then one line per feasible set (sorted
// element indices, "-" for the empty set)
std::string dm_to_text(const SetSystem& d);
SetSystem dm_from_text(const std::string& text);

}  // namespace cgm
