#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgm/gf2.hpp"
#include "cgm/graph.hpp"

namespace cgm {

// Binary matroid as a multiset of GF(2) column vectors with labels.
// Columns are bitmasks over rows; element subsets are bitmasks (size <= 36
// in practice, so uint64 subset masks are fine).
struct BinaryMatroid {
  int nrows = 0;
  std::vector<uint64_t> cols;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(cols.size()); }
  int rank() const;
  int rank_of(uint64_t subset) const;
  bool independent(uint64_t subset) const {
    return rank_of(subset) == __builtin_popcountll(subset);
  }
  std::string label_of(int e) const;

  static BinaryMatroid from_matrix(const Gf2Matrix& m, std::vector<std::string> labels = {});
  Gf2Matrix to_matrix() const;
};

// circuits of size <= k, ordered by size then by element mask
std::vector<uint64_t> circuits_up_to(const BinaryMatroid& m, int k);

BinaryMatroid dual(const BinaryMatroid& m);
BinaryMatroid matroid_minor(const BinaryMatroid& m, uint64_t contract, uint64_t del);

// isomorphism as a circuit-preserving bijection; for binary matroids these
// are exactly the bijections induced by invertible GF(2) maps on columns
std::optional<std::vector<int>> matroid_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b);
bool matroids_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b);
uint64_t automorphism_count(const BinaryMatroid& m);

bool has_minor(const BinaryMatroid& m, const BinaryMatroid& target);

enum class MatroidClass { kGraphic, kCographic, kRegular, kPlanar };
bool class_test(const BinaryMatroid& m, MatroidClass cls);

enum class GraphMatroidKind { kCycle, kBond };
BinaryMatroid graph_matroid(const MultiGraph& g, GraphMatroidKind kind);

// named excluded minors
BinaryMatroid fano();
BinaryMatroid fano_dual();
BinaryMatroid mk5();
BinaryMatroid mk33();
BinaryMatroid mk5_dual();
BinaryMatroid mk33_dual();

}  // namespace cgm
