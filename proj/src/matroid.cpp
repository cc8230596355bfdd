#include "cgm/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

#include "cgm/errors.hpp"

namespace cgm {

int BinaryMatroid::rank() const {
  return gf2_rank_cols(cols);
}

int BinaryMatroid::rank_of(uint64_t subset) const {
  uint64_t basis[64];
  int rank = 0;
  for (uint64_t s = subset; s; s &= s - 1) {
    uint64_t v = cols[__builtin_ctzll(s)];
    for (int b = 0; b < rank; ++b) {
      uint64_t low = basis[b] & -basis[b];
      if (v & low) v ^= basis[b];
    }
    if (v) basis[rank++] = v;
  }
  return rank;
}

std::string BinaryMatroid::label_of(int e) const {
  if (e < static_cast<int>(labels.size()) && !labels[e].empty()) return labels[e];
  return std::to_string(e);
}

BinaryMatroid BinaryMatroid::from_matrix(const Gf2Matrix& m, std::vector<std::string> labels) {
  BinaryMatroid out;
  out.nrows = m.rows;
  for (int c = 0; c < m.cols; ++c) out.cols.push_back(m.col_mask(c));
  out.labels = std::move(labels);
  return out;
}

Gf2Matrix BinaryMatroid::to_matrix() const {
  Gf2Matrix m(nrows, size());
  for (int c = 0; c < size(); ++c)
    for (int r = 0; r < nrows; ++r)
      if ((cols[c] >> r) & 1u) m.set(r, c, true);
  return m;
}

std::vector<uint64_t> circuits_up_to(const BinaryMatroid& m, int k) {
  if (k < 0 || k > m.size()) throw precondition_error("circuit size bound out of range");
  if (m.size() > 36) throw guard_error("circuit enumeration supported for <= 36 elements");
  std::vector<uint64_t> out;
  int n = m.size();
  // subsets by size; S is a circuit iff dependent with every proper subset independent
  for (int size = 1; size <= k; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      uint64_t mask = 0;
      for (int i : pick) mask |= uint64_t{1} << i;
      if (m.rank_of(mask) == size - 1) {
        bool minimal = true;
        for (uint64_t s = mask; s && minimal; s &= s - 1)
          if (m.rank_of(mask & ~(s & -s)) < size - 1) minimal = false;
        if (minimal) out.push_back(mask);
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

BinaryMatroid dual(const BinaryMatroid& m) {
  int n = m.size();
  int r = m.rank();
  // standard form: greedy basis, row-reduce so basis columns are unit vectors
  std::vector<uint64_t> cols = m.cols;
  std::vector<int> basis_elems;
  {
    uint64_t basis[64];
    int rank = 0;
    for (int e = 0; e < n; ++e) {
      uint64_t v = cols[e];
      for (int b = 0; b < rank; ++b) {
        uint64_t low = basis[b] & -basis[b];
        if (v & low) v ^= basis[b];
      }
      if (v) {
        basis[rank++] = v;
        basis_elems.push_back(e);
      }
    }
  }
  // express every column in the chosen basis: solve via Gaussian elimination
  // on the r basis columns
  std::vector<uint64_t> bcols;
  for (int e : basis_elems) bcols.push_back(m.cols[e]);
  // reduce [bcols | col] for each col
  // build row-reduced transform: represent each column as r-bit combination
  std::vector<uint64_t> combo(n, 0);  // bit i = coefficient of basis_elems[i]
  {
    // eliminate: carry combination tags alongside
    std::vector<std::pair<uint64_t, uint64_t>> tagged;  // (vector, tag)
    for (int i = 0; i < r; ++i) tagged.push_back({bcols[i], uint64_t{1} << i});
    // echelonize tagged basis
    std::vector<std::pair<uint64_t, uint64_t>> ech;
    for (auto [v, t] : tagged) {
      for (auto& [bv, bt] : ech) {
        uint64_t low = bv & -bv;
        if (v & low) {
          v ^= bv;
          t ^= bt;
        }
      }
      assert(v);
      ech.push_back({v, t});
    }
    for (int e = 0; e < n; ++e) {
      uint64_t v = m.cols[e], t = 0;
      for (auto& [bv, bt] : ech) {
        uint64_t low = bv & -bv;
        if (v & low) {
          v ^= bv;
          t ^= bt;
        }
      }
      assert(v == 0);
      combo[e] = t;
    }
  }
  // standard-form rep now has basis element i as unit row i; dual rep has
  // one row per non-basis element, with (E^T | I) layout in element order
  BinaryMatroid out;
  out.nrows = n - r;
  out.cols.assign(n, 0);
  out.labels = m.labels;
  out.labels.resize(n);
  std::vector<int> nonbasis;
  std::vector<bool> is_basis(n, false);
  for (int e : basis_elems) is_basis[e] = true;
  for (int e = 0; e < n; ++e)
    if (!is_basis[e]) nonbasis.push_back(e);
  for (size_t j = 0; j < nonbasis.size(); ++j) {
    int e = nonbasis[j];
    out.cols[e] = uint64_t{1} << j;  // identity part
    uint64_t t = combo[e];
    for (int i = 0; i < r; ++i)
      if ((t >> i) & 1u) out.cols[basis_elems[i]] |= uint64_t{1} << j;
  }
  return out;
}

BinaryMatroid matroid_minor(const BinaryMatroid& m, uint64_t contract, uint64_t del) {
  if (contract & del) throw precondition_error("contract and delete sets must be disjoint");
  std::vector<uint64_t> cols = m.cols;
  int nrows = m.nrows;
  uint64_t used_rows = 0;
  // contract: pivot each non-loop element, dropping its pivot row; loops drop silently
  for (uint64_t s = contract; s; s &= s - 1) {
    int e = __builtin_ctzll(s);
    uint64_t v = cols[e] & ~used_rows;
    if (!v) continue;  // loop after earlier contractions
    int prow = __builtin_ctzll(v);
    for (int x = 0; x < m.size(); ++x)
      if (x != e && ((cols[x] >> prow) & 1u)) cols[x] ^= cols[e];
    used_rows |= uint64_t{1} << prow;
  }
  // compress rows
  BinaryMatroid out;
  out.nrows = nrows - __builtin_popcountll(used_rows);
  uint64_t drop = contract | del;
  for (int e = 0; e < m.size(); ++e) {
    if ((drop >> e) & 1u) continue;
    uint64_t v = cols[e] & ~used_rows;
    uint64_t packed = 0;
    int j = 0;
    for (int r = 0; r < nrows; ++r) {
      if ((used_rows >> r) & 1u) continue;
      if ((v >> r) & 1u) packed |= uint64_t{1} << j;
      ++j;
    }
    out.cols.push_back(packed);
    out.labels.push_back(m.label_of(e));
  }
  return out;
}

namespace {

// Isomorphism search between binary matroids via invertible GF(2) maps.
// Elements are grouped into loops and parallel classes of distinct nonzero
// column values; matroid isomorphisms correspond to linear bijections of the
// distinct values respecting multiplicities (unique GF(2) representability).
struct ValueClasses {
  std::vector<uint64_t> values;      // distinct nonzero column values
  std::vector<int> mult;             // multiplicities
  std::vector<std::vector<int>> elems;  // element ids per value
  std::vector<int> loops;            // elements with zero column
};

ValueClasses classify(const BinaryMatroid& m) {
  ValueClasses vc;
  std::map<uint64_t, std::vector<int>> by_value;
  for (int e = 0; e < m.size(); ++e) {
    if (m.cols[e] == 0)
      vc.loops.push_back(e);
    else
      by_value[m.cols[e]].push_back(e);
  }
  for (auto& [v, es] : by_value) {
    vc.values.push_back(v);
    vc.mult.push_back(static_cast<int>(es.size()));
    vc.elems.push_back(es);
  }
  return vc;
}

struct LinearMapSearch {
  const ValueClasses& a;
  const ValueClasses& b;
  std::map<uint64_t, int> b_index;  // value -> index in b.values
  int r;                            // common rank
  bool count_all;
  uint64_t count = 0;
  std::vector<int> found_map;  // a-value index -> b-value index (first found)
  bool found = false;

  LinearMapSearch(const ValueClasses& aa, const ValueClasses& bb, int rank, bool all)
      : a(aa), b(bb), r(rank), count_all(all) {
    for (size_t i = 0; i < b.values.size(); ++i) b_index[b.values[i]] = static_cast<int>(i);
  }

  // greedy basis of a's distinct values
  std::vector<int> basis_of_a() const {
    std::vector<int> out;
    uint64_t basis[64];
    int rank = 0;
    for (size_t i = 0; i < a.values.size() && rank < r; ++i) {
      uint64_t v = a.values[i];
      for (int x = 0; x < rank; ++x) {
        uint64_t low = basis[x] & -basis[x];
        if (v & low) v ^= basis[x];
      }
      if (v) {
        basis[rank++] = v;
        out.push_back(static_cast<int>(i));
      }
    }
    return out;
  }

  void run() {
    std::vector<int> abasis = basis_of_a();
    if (static_cast<int>(abasis.size()) != r) return;  // degenerate
    std::vector<int> image(abasis.size(), -1);
    std::vector<bool> used(b.values.size(), false);
    extend(abasis, image, used, 0);
  }

  // after assigning images of basis prefix, every a-value in the prefix span
  // must map to a b-value of equal multiplicity, injectively
  bool consistent(const std::vector<int>& abasis, const std::vector<int>& image, int depth,
                  std::vector<bool>& used_elem_values) const {
    // enumerate span combinations of the first `depth` basis values
    std::fill(used_elem_values.begin(), used_elem_values.end(), false);
    for (uint64_t combo = 1; combo < (uint64_t{1} << depth); ++combo) {
      uint64_t av = 0, bv = 0;
      for (int i = 0; i < depth; ++i)
        if ((combo >> i) & 1u) {
          av ^= a.values[abasis[i]];
          bv ^= b.values[image[i]];
        }
      auto ait = std::lower_bound(a.values.begin(), a.values.end(), av);
      bool a_has = ait != a.values.end() && *ait == av;
      auto bit = b_index.find(bv);
      bool b_has = bit != b_index.end();
      if (a_has != b_has) return false;
      if (a_has) {
        int ai = static_cast<int>(ait - a.values.begin());
        int bi = bit->second;
        if (a.mult[ai] != b.mult[bi]) return false;
        if (used_elem_values[bi]) return false;  // injectivity within span
        used_elem_values[bi] = true;
      }
    }
    return true;
  }

  void extend(const std::vector<int>& abasis, std::vector<int>& image, std::vector<bool>& used,
              int depth) {
    if (!count_all && found) return;
    if (depth == static_cast<int>(abasis.size())) {
      // full linear map determined; verify every a-value maps into b-values
      // (span consistency already checked) -- count it
      ++count;
      if (!found) {
        found = true;
        found_map.assign(a.values.size(), -1);
        // recompute the forced images for all values
        for (size_t i = 0; i < a.values.size(); ++i) {
          uint64_t av = a.values[i];
          // express av in a-basis by elimination
          uint64_t bv = express(abasis, image, av);
          found_map[i] = b_index.at(bv);
        }
      }
      return;
    }
    std::vector<bool> scratch(b.values.size(), false);
    for (size_t cand = 0; cand < b.values.size(); ++cand) {
      if (used[cand]) continue;
      if (b.mult[cand] != a.mult[abasis[depth]]) continue;
      image[depth] = static_cast<int>(cand);
      used[cand] = true;
      if (consistent(abasis, image, depth + 1, scratch)) extend(abasis, image, used, depth + 1);
      used[cand] = false;
      image[depth] = -1;
      if (!count_all && found) return;
    }
  }

  uint64_t express(const std::vector<int>& abasis, const std::vector<int>& image,
                   uint64_t av) const {
    // eliminate av against a-basis, tracking the b-image combination
    std::vector<std::pair<uint64_t, uint64_t>> ech;
    for (size_t i = 0; i < abasis.size(); ++i) {
      uint64_t v = a.values[abasis[i]], t = b.values[image[i]];
      for (auto& [bv2, bt2] : ech) {
        uint64_t low = bv2 & -bv2;
        if (v & low) {
          v ^= bv2;
          t ^= bt2;
        }
      }
      ech.push_back({v, t});
    }
    uint64_t v = av, t = 0;
    for (auto& [bv2, bt2] : ech) {
      uint64_t low = bv2 & -bv2;
      if (v & low) {
        v ^= bv2;
        t ^= bt2;
      }
    }
    assert(v == 0);
    return t;
  }
};

uint64_t factorial(int k) {
  uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

}  // namespace

std::optional<std::vector<int>> matroid_isomorphism(const BinaryMatroid& a,
                                                    const BinaryMatroid& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.rank() != b.rank()) return std::nullopt;
  ValueClasses va = classify(a), vb = classify(b);
  if (va.loops.size() != vb.loops.size()) return std::nullopt;
  if (va.values.size() != vb.values.size()) return std::nullopt;
  {
    std::vector<int> ma = va.mult, mb = vb.mult;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return std::nullopt;
  }
  if (va.values.empty()) {
    // all loops
    std::vector<int> out(a.size());
    for (size_t i = 0; i < va.loops.size(); ++i) out[va.loops[i]] = vb.loops[i];
    return out;
  }
  LinearMapSearch s(va, vb, a.rank(), false);
  s.run();
  if (!s.found) return std::nullopt;
  std::vector<int> out(a.size(), -1);
  for (size_t i = 0; i < va.loops.size(); ++i) out[va.loops[i]] = vb.loops[i];
  for (size_t vi = 0; vi < va.values.size(); ++vi) {
    auto& src = va.elems[vi];
    auto& dst = vb.elems[s.found_map[vi]];
    assert(src.size() == dst.size());
    for (size_t j = 0; j < src.size(); ++j) out[src[j]] = dst[j];
  }
  return out;
}

bool matroids_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  return matroid_isomorphism(a, b).has_value();
}

uint64_t automorphism_count(const BinaryMatroid& m) {
  ValueClasses vc = classify(m);
  uint64_t base = factorial(static_cast<int>(vc.loops.size()));
  for (int mult : vc.mult) base *= factorial(mult);
  if (vc.values.empty()) return base;
  LinearMapSearch s(vc, vc, m.rank(), true);
  s.run();
  return base * s.count;
}

namespace {

// Restriction containment: does some subset of `cols` (values with
// multiplicities) form a matroid isomorphic to target? Search linear maps of
// target's basis into available distinct values.
struct RestrictionSearch {
  const ValueClasses& avail;
  const BinaryMatroid& target;
  ValueClasses tc;
  int target_loops;

  RestrictionSearch(const ValueClasses& av, const BinaryMatroid& t) : avail(av), target(t) {
    tc = classify(t);
    target_loops = static_cast<int>(tc.loops.size());
  }

  bool run() {
    if (target_loops > 0) return false;  // targets here are loopless
    int r = target.rank();
    // greedy basis of target's distinct values
    std::vector<int> tbasis;
    {
      uint64_t basis[64];
      int rank = 0;
      for (size_t i = 0; i < tc.values.size() && rank < r; ++i) {
        uint64_t v = tc.values[i];
        for (int x = 0; x < rank; ++x) {
          uint64_t low = basis[x] & -basis[x];
          if (v & low) v ^= basis[x];
        }
        if (v) {
          basis[rank++] = v;
          tbasis.push_back(static_cast<int>(i));
        }
      }
      if (rank != r) return false;
    }
    std::map<uint64_t, int> avail_index;
    for (size_t i = 0; i < avail.values.size(); ++i)
      avail_index[avail.values[i]] = static_cast<int>(i);
    std::vector<int> image(tbasis.size(), -1);
    std::vector<bool> used(avail.values.size(), false);
    return extend(tbasis, image, used, 0, avail_index);
  }

  bool extend(const std::vector<int>& tbasis, std::vector<int>& image, std::vector<bool>& used,
              int depth, const std::map<uint64_t, int>& avail_index) {
    if (depth == static_cast<int>(tbasis.size())) return check_full(tbasis, image, avail_index);
    for (size_t cand = 0; cand < avail.values.size(); ++cand) {
      if (used[cand]) continue;
      if (avail.mult[cand] < tc.mult[tbasis[depth]]) continue;
      image[depth] = static_cast<int>(cand);
      used[cand] = true;
      // images must stay independent so the embedding is rank-preserving
      std::vector<uint64_t> img;
      for (int i = 0; i <= depth; ++i) img.push_back(avail.values[image[i]]);
      if (gf2_rank_cols(img) == depth + 1 && partial_ok(tbasis, image, depth + 1, avail_index) &&
          extend(tbasis, image, used, depth + 1, avail_index))
        return true;
      used[cand] = false;
      image[depth] = -1;
    }
    return false;
  }

  // spanned target values must land on available values with enough
  // multiplicity; injective on values
  bool partial_ok(const std::vector<int>& tbasis, const std::vector<int>& image, int depth,
                  const std::map<uint64_t, int>& avail_index) const {
    std::vector<int> demand(avail.values.size(), 0);
    for (uint64_t combo = 1; combo < (uint64_t{1} << depth); ++combo) {
      uint64_t tv = 0, av = 0;
      for (int i = 0; i < depth; ++i)
        if ((combo >> i) & 1u) {
          tv ^= tc.values[tbasis[i]];
          av ^= avail.values[image[i]];
        }
      auto tit = std::lower_bound(tc.values.begin(), tc.values.end(), tv);
      bool t_has = tit != tc.values.end() && *tit == tv;
      if (!t_has) continue;  // this span element not used by the target
      auto ait = avail_index.find(av);
      if (ait == avail_index.end()) return false;
      int ti = static_cast<int>(tit - tc.values.begin());
      int ai = ait->second;
      demand[ai] += tc.mult[ti];
      if (demand[ai] > avail.mult[ai]) return false;
    }
    return true;
  }

  bool check_full(const std::vector<int>& tbasis, const std::vector<int>& image,
                  const std::map<uint64_t, int>& avail_index) const {
    return partial_ok(tbasis, image, static_cast<int>(tbasis.size()), avail_index);
  }
};

bool restriction_contains(const std::vector<uint64_t>& cols, const BinaryMatroid& target) {
  BinaryMatroid host;
  host.nrows = 64;
  host.cols = cols;
  ValueClasses vc = classify(host);
  RestrictionSearch rs(vc, target);
  return rs.run();
}

}  // namespace

bool has_minor(const BinaryMatroid& m, const BinaryMatroid& target) {
  int rm = m.rank();
  int rt = target.rank();
  if (rt > rm || target.size() > m.size()) return false;
  int csize = rm - rt;
  // every minor equals M/C - D with C independent of size rank(M) - rank(N)
  int n = m.size();
  std::vector<int> stack;
  std::vector<std::vector<uint64_t>> basis_stack{{}};

  // depth-first over independent sets of size csize, in lex order
  std::vector<uint64_t> work = m.cols;
  std::function<bool(int)> rec = [&](int start) -> bool {
    if (static_cast<int>(stack.size()) == csize) {
      // contract the chosen set: reduce all other columns by the basis,
      // then drop to quotient coordinates (keep reduced masks as-is; rank
      // structure in the quotient equals reduced-vector rank structure)
      const std::vector<uint64_t>& basis = basis_stack.back();
      std::vector<uint64_t> reduced;
      uint64_t in_c = 0;
      for (int e : stack) in_c |= uint64_t{1} << e;
      for (int e = 0; e < n; ++e) {
        if ((in_c >> e) & 1u) continue;
        uint64_t v = m.cols[e];
        for (uint64_t b : basis) {
          uint64_t low = b & -b;
          if (v & low) v ^= b;
        }
        reduced.push_back(v);
      }
      // pivot coordinates of the contraction basis are now zero in every
      // reduced column; the quotient matroid is the column matroid of the
      // reduced vectors
      if (restriction_contains(reduced, target)) return true;
      return false;
    }
    for (int e = start; e < n; ++e) {
      const std::vector<uint64_t>& basis = basis_stack.back();
      uint64_t v = m.cols[e];
      for (uint64_t b : basis) {
        uint64_t low = b & -b;
        if (v & low) v ^= b;
      }
      if (!v) continue;  // dependent on chosen set
      std::vector<uint64_t> nb = basis;
      nb.push_back(v);
      stack.push_back(e);
      basis_stack.push_back(std::move(nb));
      if (rec(e + 1)) return true;
      stack.pop_back();
      basis_stack.pop_back();
    }
    return false;
  };
  return rec(0);
}

bool class_test(const BinaryMatroid& m, MatroidClass cls) {
  if (m.size() > 20) throw guard_error("class test supported for <= 20 elements");
  switch (cls) {
    case MatroidClass::kRegular:
      return !has_minor(m, fano()) && !has_minor(m, fano_dual());
    case MatroidClass::kGraphic:
      return class_test(m, MatroidClass::kRegular) && !has_minor(m, mk5_dual()) &&
             !has_minor(m, mk33_dual());
    case MatroidClass::kCographic:
      return class_test(m, MatroidClass::kRegular) && !has_minor(m, mk5()) &&
             !has_minor(m, mk33());
    case MatroidClass::kPlanar:
      return class_test(m, MatroidClass::kGraphic) && class_test(m, MatroidClass::kCographic);
  }
  return false;
}

BinaryMatroid graph_matroid(const MultiGraph& g, GraphMatroidKind kind) {
  Gf2Matrix inc(g.n, static_cast<int>(g.edges.size()));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (u != v) {
      inc.set(u, static_cast<int>(e), true);
      inc.set(v, static_cast<int>(e), true);
    }
    // loop: zero column
  }
  std::vector<std::string> labels;
  for (size_t e = 0; e < g.edges.size(); ++e)
    labels.push_back(e < g.edge_labels.size() && !g.edge_labels[e].empty()
                         ? g.edge_labels[e]
                         : std::to_string(e));
  BinaryMatroid cycle = BinaryMatroid::from_matrix(inc, labels);
  if (kind == GraphMatroidKind::kCycle) return cycle;
  return dual(cycle);
}

namespace {

BinaryMatroid from_cols(int nrows, std::vector<uint64_t> cols) {
  BinaryMatroid m;
  m.nrows = nrows;
  m.cols = std::move(cols);
  return m;
}

MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  MultiGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

}  // namespace

BinaryMatroid fano() {
  // all seven nonzero vectors of GF(2)^3
  return from_cols(3, {0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});
}

BinaryMatroid fano_dual() { return dual(fano()); }

BinaryMatroid mk5() { return graph_matroid(complete_graph(5), GraphMatroidKind::kCycle); }

BinaryMatroid mk33() { return graph_matroid(complete_bipartite(3, 3), GraphMatroidKind::kCycle); }

BinaryMatroid mk5_dual() { return dual(mk5()); }

BinaryMatroid mk33_dual() { return dual(mk33()); }

}  // namespace cgm
