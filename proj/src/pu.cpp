#include "cgm/pu.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "cgm/deltamatroid.hpp"
#include "cgm/errors.hpp"

namespace cgm {

SignedSkewMatrix::SignedSkewMatrix(IntMatrix m) : mat(std::move(m)) {
  if (mat.rows != mat.cols) throw precondition_error("skew matrix must be square");
  for (int i = 0; i < mat.rows; ++i)
    for (int j = 0; j <= i; ++j)
      if (mat.at(i, j) != -mat.at(j, i))
        throw precondition_error("matrix is not skew-symmetric with zero diagonal");
}

Gf2Matrix support_of(const SignedSkewMatrix& a) {
  Gf2Matrix s(a.n(), a.n());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j)
      if (a.mat.at(i, j) != 0) s.set(i, j, true);
  return s;
}

PuVerdict is_pu(const SignedSkewMatrix& a) {
  int n = a.n();
  if (n > 14) throw guard_error("pu check capped at 14 elements");
  for (int k = 1; k <= n; ++k)
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<int> idx;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) idx.push_back(v);
      bigint det = int_det(a.mat.select(idx, idx));
      if (det > 1 || det < -1) return {false, mask};
    }
  return {true, 0};
}

namespace {

// Bareiss over int64 on a masked principal submatrix; entries stay exact for
// n <= 10 with |a_ij| <= 1 (Hadamard bound ~ 3e5)
int64_t det_mask(const std::vector<std::vector<int64_t>>& a, uint32_t mask) {
  int idx[10], k = 0;
  for (uint32_t m = mask; m; m &= m - 1) idx[k++] = __builtin_ctz(m);
  int64_t w[10][10];
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) w[i][j] = a[idx[i]][idx[j]];
  int64_t prev = 1, sign = 1;
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k && piv < 0; ++r)
      if (w[r][col] != 0) piv = r;
    if (piv < 0) return 0;
    if (piv != col) {
      for (int c = 0; c < k; ++c) std::swap(w[piv][c], w[col][c]);
      sign = -sign;
    }
    for (int r = col + 1; r < k; ++r)
      for (int c = col + 1; c < k; ++c)
        w[r][c] = (w[r][c] * w[col][col] - w[r][col] * w[col][c]) / prev;
    prev = w[col][col];
  }
  return k ? sign * w[k - 1][k - 1] : 1;
}

struct SignSearch {
  int n;
  std::vector<std::vector<int64_t>> a;
  std::vector<std::vector<std::pair<int, int>>> stage_free;  // keyed by larger endpoint

  explicit SignSearch(const Gf2Matrix& support)
      : n(support.rows), a(n, std::vector<int64_t>(n, 0)), stage_free(n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        if (!support.get(i, j)) continue;
        int ri = find(i), rj = find(j);
        if (ri != rj) {
          parent[ri] = rj;  // forest edge, sign pinned
          a[i][j] = 1;
          a[j][i] = -1;
        } else {
          stage_free[j].push_back({i, j});
        }
      }
  }

  bool run() { return stage(0); }

  bool stage(int v) {
    if (v == n) return true;
    return assign(v, 0);
  }

  bool assign(int v, size_t k) {
    if (k == stage_free[v].size()) return check_stage(v) && stage(v + 1);
    auto [i, j] = stage_free[v][k];
    for (int s : {1, -1}) {
      a[i][j] = s;
      a[j][i] = -s;
      if (assign(v, k + 1)) return true;
    }
    a[i][j] = a[j][i] = 0;
    return false;
  }

  // all new principal minors on {0..v}; odd sizes vanish by skew-symmetry
  bool check_stage(int v) {
    for (uint32_t s = 0; s < (1u << v); ++s) {
      if (!(__builtin_popcount(s) & 1)) continue;
      int64_t d = det_mask(a, s | (1u << v));
      if (d > 1 || d < -1) return false;
    }
    return true;
  }

  SignedSkewMatrix result() const {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = a[i][j];
    return SignedSkewMatrix(std::move(m));
  }
};

}  // namespace

std::optional<SignedSkewMatrix> pu_sign(const Gf2Matrix& support) {
  if (support.rows != support.cols) throw precondition_error("support must be square");
  if (support.rows > 10) throw guard_error("pu signing capped at 10 elements");
  for (int i = 0; i < support.rows; ++i) {
    if (support.get(i, i)) throw precondition_error("support diagonal must be zero");
    for (int j = i + 1; j < support.rows; ++j)
      if (support.get(i, j) != support.get(j, i))
        throw precondition_error("support must be symmetric");
  }
  SignSearch search(support);
  if (search.run()) return search.result();
  return std::nullopt;
}

namespace {

bool even_dm_t_regular(const SetSystem& d) {
  Gf2Matrix a = reconstruct_matrix(twist(d, d.feasible.front()));
  return pu_sign(a).has_value();
}

std::string support_key(const Gf2Matrix& a) {
  std::string key;
  for (int r = 0; r < a.rows; ++r) {
    key += std::to_string(a.row_mask(r));
    key += ',';
  }
  return key;
}

}  // namespace

bool is_t_regular_section(const MultimatroidSection& s) {
  if (!s.deleted) throw precondition_error("t-regularity needs a 2-section");
  if (!is_tight(s)) throw precondition_error("section is not tight");
  SetSystem d = section_delta_matroid(s);
  if (d.feasible.empty() || !is_even(d))
    throw std::logic_error("tight section extracted a non-even delta-matroid");
  return even_dm_t_regular(d);
}

TRegularResult is_t_regular_isotropic(const IsotropicPresentation& p, int max_n) {
  int n = p.n();
  max_n = std::min(max_n, 10);
  if (n > max_n) throw guard_error("t-regularity sweep capped at " + std::to_string(max_n));
  Gf2Matrix adj(n, n);
  for (int r = 0; r < n; ++r)
    for (int v = 0; v < n; ++v) adj.set(r, v, p.ias.get(r, n + v));
  SetSystem d_adj = dm_from_matrix(adj);
  std::unordered_map<std::string, bool> memo;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::string pcs(n, 'p');
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int v = n - 1; v >= 0; --v) {
      pcs[v] = "pcs"[c % 3];
      c /= 3;
    }
    MultimatroidSection sec = multimatroid_section(p, pcs);
    SetSystem d = section_delta_matroid(sec);
    uint32_t f = 0, cc = 0;
    for (int v = 0; v < n; ++v) {
      if (pcs[v] == 'p') f |= 1u << v;
      if (pcs[v] == 'c') cc |= 1u << v;
    }
    // relabeling identity: the section's delta-matroid is D_A * F + (F u C)
    if (!(loop_complement(twist(d_adj, f), f | cc) == d))
      throw std::logic_error("transversal relabeling identity violated");
    bool tight = !d.feasible.empty() && is_even(d);
    if (n <= 4 && tight != is_tight(sec))
      throw std::logic_error("tightness/evenness bridge violated");
    if (!tight) continue;
    Gf2Matrix a = reconstruct_matrix(twist(d, d.feasible.front()));
    std::string key = support_key(a);
    auto it = memo.find(key);
    bool ok = it != memo.end() ? it->second : (memo[key] = pu_sign(a).has_value());
    if (!ok) return {false, pcs};
  }
  return {true, std::nullopt};
}

}  // namespace cgm
