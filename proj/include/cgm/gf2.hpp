#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgm {

// Dense GF(2) matrix, one 64-bit word per row (so cols <= 64, which covers
// everything at desk scale: the widest matrices here are n x 3n with n <= 16).
struct Gf2Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<uint64_t> bits;  // bits[r] bit c = entry (r,c)

  Gf2Matrix() = default;
  Gf2Matrix(int r, int c);

  static Gf2Matrix identity(int n);

  bool get(int r, int c) const { return (bits[r] >> c) & 1u; }
  void set(int r, int c, bool v) {
    if (v)
      bits[r] |= (uint64_t{1} << c);
    else
      bits[r] &= ~(uint64_t{1} << c);
  }
  void toggle(int r, int c) { bits[r] ^= (uint64_t{1} << c); }

  uint64_t row_mask(int r) const { return bits[r]; }
  // column as a bitmask over rows; requires rows <= 64
  uint64_t col_mask(int c) const;

  Gf2Matrix transposed() const;
  // columns selected by mask (ascending index), as a new matrix
  Gf2Matrix select_cols(uint64_t mask) const;

  bool operator==(const Gf2Matrix& o) const = default;
};

int gf2_rank(const Gf2Matrix& m);

// rank of a set of column vectors given as row-bitmasks
int gf2_rank_cols(const std::vector<uint64_t>& cols);
int gf2_rank_cols(const uint64_t* cols, int k);

struct Gf2Kernel {
  int rank = 0;
  // basis of the right null space in reduced echelon form over the free
  // coordinates, ordered by ascending free column; vector bit c = coordinate c
  std::vector<uint64_t> basis;
};

Gf2Kernel gf2_kernel(const Gf2Matrix& m);

// span membership / span equality helpers for small vector sets
bool gf2_same_span(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);

}  // namespace cgm
