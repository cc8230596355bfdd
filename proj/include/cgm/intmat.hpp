#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cgm {

using bigint = boost::multiprecision::cpp_int;

// Exact integer matrix. Entries are unbounded-width integers so determinant
// work can never overflow, even though desk-scale values stay tiny.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<bigint> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  bigint& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const bigint& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  IntMatrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  bool operator==(const IntMatrix& o) const = default;
};

// Fraction-free Bareiss elimination; det of the empty 0x0 matrix is 1.
bigint int_det(const IntMatrix& m);

}  // namespace cgm
