#include <random>

#include "cgm/errors.hpp"
#include "cgm/gf2.hpp"
#include "cgm/intmat.hpp"
#include "doctest.h"

using namespace cgm;

namespace {

Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows) {
  Gf2Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c]) m.set(static_cast<int>(r), static_cast<int>(c), true);
  return m;
}

uint64_t vec_mask(const std::vector<int>& v) {
  uint64_t m = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) m |= uint64_t{1} << i;
  return m;
}

// independent oracle: cofactor expansion, first row
bigint cofactor_det(const IntMatrix& m) {
  if (m.rows == 0) return 1;
  if (m.rows == 1) return m.at(0, 0);
  bigint total = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix sub(m.rows - 1, m.cols - 1);
    for (int r = 1; r < m.rows; ++r) {
      int jj = 0;
      for (int j = 0; j < m.cols; ++j) {
        if (j == c) continue;
        sub.at(r - 1, jj++) = m.at(r, j);
      }
    }
    bigint term = m.at(0, c) * cofactor_det(sub);
    if (c % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("gf2 rank and kernel basics") {
  Gf2Matrix id = Gf2Matrix::identity(5);
  CHECK(gf2_rank(id) == 5);
  CHECK(gf2_kernel(id).basis.empty());

  Gf2Matrix z(3, 4);
  auto k = gf2_kernel(z);
  CHECK(k.rank == 0);
  CHECK(k.basis.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(k.basis[i] == (uint64_t{1} << i));
}

TEST_CASE("kernels of the two euler-circuit transition matrices of K5") {
  // two circuit-partition transition matrices sharing one kernel
  Gf2Matrix mc = from_rows({{1, 0, 1, 1, 0},
                            {0, 1, 1, 1, 0},
                            {0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0},
                            {0, 0, 1, 0, 1}});
  Gf2Matrix md = from_rows({{1, 1, 1, 0, 1},
                            {1, 1, 1, 0, 1},
                            {1, 1, 0, 0, 0},
                            {1, 0, 0, 1, 1},
                            {1, 1, 0, 0, 0}});
  auto kc = gf2_kernel(mc);
  auto kd = gf2_kernel(md);
  std::vector<uint64_t> expected{vec_mask({1, 1, 1, 0, 1}), vec_mask({1, 1, 0, 1, 0})};
  CHECK(gf2_same_span(kc.basis, expected));
  CHECK(gf2_same_span(kd.basis, expected));
  // the three nonzero kernel vectors
  std::vector<uint64_t> nonzero;
  for (uint64_t x = 1; x < 32; ++x) {
    bool in_span = true;
    std::vector<uint64_t> probe = expected;
    probe.push_back(x);
    in_span = gf2_rank_cols(probe) == 2;
    if (in_span) nonzero.push_back(x);
  }
  std::vector<uint64_t> want{vec_mask({1, 1, 1, 0, 1}), vec_mask({1, 1, 0, 1, 0}),
                             vec_mask({0, 0, 1, 1, 1})};
  std::sort(nonzero.begin(), nonzero.end());
  std::sort(want.begin(), want.end());
  CHECK(nonzero == want);
}

TEST_CASE("kernel vectors are deterministic reduced-echelon output") {
  Gf2Matrix m = from_rows({{1, 0, 1, 1, 0},
                           {0, 1, 1, 1, 0},
                           {0, 0, 1, 0, 1}});
  auto k = gf2_kernel(m);
  REQUIRE(k.basis.size() == 2);
  // free columns 3 and 4, ascending
  CHECK(k.basis[0] == vec_mask({1, 1, 0, 1, 0}));
  CHECK(k.basis[1] == vec_mask({1, 1, 1, 0, 1}));
  // kernel vectors annihilate the matrix
  for (uint64_t v : k.basis)
    for (int r = 0; r < m.rows; ++r) CHECK(__builtin_parityll(m.row_mask(r) & v) == 0);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 16);
    int c = 1 + static_cast<int>(rng() % 48);
    Gf2Matrix m(r, c);
    for (int i = 0; i < r; ++i) m.bits[i] = rng() & ((c == 64 ? ~uint64_t{0} : (uint64_t{1} << c) - 1));
    CHECK(gf2_rank(m) == gf2_rank(m.transposed()));
    auto k = gf2_kernel(m);
    CHECK(static_cast<int>(k.basis.size()) == c - k.rank);
  }
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 6);  // 0..5
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<int>(rng() % 7) - 3;
    CHECK(int_det(m) == cofactor_det(m));
  }
}

TEST_CASE("empty determinant is one") {
  IntMatrix m(0, 0);
  CHECK(int_det(m) == 1);
}

TEST_CASE("pfaffian identity for the all-plus-one skew block") {
  // skew-symmetric 4x4 with +1 above the diagonal: det = (a12 a34 - a13 a24 + a14 a23)^2 = 1
  IntMatrix a(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a.at(i, j) = (i < j) ? 1 : (i > j) ? -1 : 0;
  CHECK(int_det(a) == 1);
  // every principal minor lies in {0, 1}
  for (uint32_t s = 0; s < 16; ++s) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i)
      if ((s >> i) & 1u) idx.push_back(i);
    bigint d = int_det(a.select(idx, idx));
    CHECK((d == 0 || d == 1));
  }
}

TEST_CASE("determinant of singular integer matrices is zero") {
  IntMatrix m(3, 3);
  // rows 0 and 2 equal
  int vals[3][3] = {{2, -1, 4}, {0, 3, 1}, {2, -1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
  CHECK(int_det(m) == 0);
}
