#include "cgm/intmat.hpp"

#include "cgm/errors.hpp"

namespace cgm {

IntMatrix IntMatrix::select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  IntMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) out.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
  return out;
}

bigint int_det(const IntMatrix& m) {
  if (m.rows != m.cols) throw precondition_error("determinant requires a square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  std::vector<bigint> a = m.a;
  auto at = [&](int r, int c) -> bigint& { return a[static_cast<size_t>(r) * n + c]; };
  int sign = 1;
  bigint prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        bigint v = at(r, c) * at(k, k) - at(r, k) * at(k, c);
        at(r, c) = v / prev;  // exact by Bareiss
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

}  // namespace cgm
