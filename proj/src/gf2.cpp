#include "cgm/gf2.hpp"

#include <cassert>

#include "cgm/errors.hpp"

namespace cgm {

Gf2Matrix::Gf2Matrix(int r, int c) : rows(r), cols(c), bits(r, 0) {
  if (r < 0 || c < 0 || c > 64) throw precondition_error("gf2 matrix shape out of range");
}

Gf2Matrix Gf2Matrix::identity(int n) {
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

uint64_t Gf2Matrix::col_mask(int c) const {
  assert(rows <= 64);
  uint64_t out = 0;
  for (int r = 0; r < rows; ++r) out |= uint64_t{get(r, c)} << r;
  return out;
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

Gf2Matrix Gf2Matrix::select_cols(uint64_t mask) const {
  Gf2Matrix out(rows, __builtin_popcountll(mask));
  int j = 0;
  for (int c = 0; c < cols; ++c) {
    if (!((mask >> c) & 1u)) continue;
    for (int r = 0; r < rows; ++r)
      if (get(r, c)) out.set(r, j, true);
    ++j;
  }
  return out;
}

int gf2_rank(const Gf2Matrix& m) {
  std::vector<uint64_t> rows = m.bits;
  int rank = 0;
  for (int c = 0; c < m.cols; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if ((rows[r] >> c) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < m.rows; ++r)
      if (r != rank && ((rows[r] >> c) & 1u)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

int gf2_rank_cols(const uint64_t* cols, int k) {
  uint64_t basis[64];
  int rank = 0;
  for (int i = 0; i < k; ++i) {
    uint64_t v = cols[i];
    for (int b = 0; b < rank; ++b) {
      uint64_t low = basis[b] & -basis[b];
      if (v & low) v ^= basis[b];
    }
    if (v) basis[rank++] = v;
  }
  return rank;
}

int gf2_rank_cols(const std::vector<uint64_t>& cols) {
  return gf2_rank_cols(cols.data(), static_cast<int>(cols.size()));
}

Gf2Kernel gf2_kernel(const Gf2Matrix& m) {
  std::vector<uint64_t> rows = m.bits;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < m.cols; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if ((rows[r] >> c) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < m.rows; ++r)
      if (r != rank && ((rows[r] >> c) & 1u)) rows[r] ^= rows[rank];
    pivot_col.push_back(c);
    ++rank;
  }
  Gf2Kernel out;
  out.rank = rank;
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    uint64_t v = uint64_t{1} << f;
    for (int r = 0; r < rank; ++r)
      if ((rows[r] >> f) & 1u) v |= uint64_t{1} << pivot_col[r];
    out.basis.push_back(v);
  }
  return out;
}

bool gf2_same_span(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  int ra = gf2_rank_cols(a);
  int rb = gf2_rank_cols(b);
  if (ra != rb) return false;
  std::vector<uint64_t> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return gf2_rank_cols(both) == ra;
}

}  // namespace cgm
