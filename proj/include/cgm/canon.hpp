#pragma once

#include <string>
#include <vector>

namespace cgm {

// Canonical labeling for small symmetric integer-entried matrices (graphs with
// loops on the diagonal, multigraphs with multiplicities). Hand-rolled
// individualization-refinement with backtracking; fine for n <= 12.
struct CanonResult {
  std::vector<int> perm;  // perm[new_index] = old_index
  std::string key;        // permuted matrix, row-major, one byte per entry
};

CanonResult canon_symmetric(const std::vector<std::vector<int>>& m);

}  // namespace cgm
