#include "cgm/isotropic.hpp"

#include <algorithm>
#include <array>

#include "cgm/errors.hpp"

namespace cgm {
namespace {

constexpr long kTightCap = 5'000'000;

int letter_rank(char c) {
  switch (c) {
    case 'p': return 0;
    case 'c': return 1;
    case 's': return 2;
    case '-': return -1;
    default: throw precondition_error("pcs string may only contain p, c, s, -");
  }
}

// order for printed subtransversals: '-' < 'p' < 'c' < 's'
bool pcs_less(const std::string& a, const std::string& b) {
  static const auto key = [](char c) { return letter_rank(c) + 1; };
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return key(a[i]) < key(b[i]);
  }
  return a.size() < b.size();
}

void check_pcs(const IsotropicPresentation& p, const std::string& pcs, bool allow_dash) {
  if (static_cast<int>(pcs.size()) != p.n())
    throw precondition_error("pcs string length must equal vertex count");
  for (char c : pcs) {
    if (letter_rank(c) < 0 && !allow_dash)
      throw precondition_error("total transversal may not contain -");
  }
}

}  // namespace

std::string IsotropicPresentation::element_label(int element) const {
  return std::string(1, "pcs"[letter_of(element)]) + ":" + g.name_of(vertex_of(element));
}

IsotropicPresentation ias_presentation(const LoopedGraph& g) {
  if (g.n < 1 || g.n > 21)
    throw precondition_error("isotropic presentation needs 1 <= n <= 21");
  IsotropicPresentation p{g, Gf2Matrix(g.n, 3 * g.n)};
  for (int r = 0; r < g.n; ++r) {
    for (int v = 0; v < g.n; ++v) {
      bool a = (g.adj[r] >> v) & 1u;
      if (r == v) p.ias.set(r, v, true);
      if (a) p.ias.set(r, g.n + v, true);
      if (a != (r == v)) p.ias.set(r, 2 * g.n + v, true);
    }
  }
  return p;
}

BinaryMatroid isotropic_matroid(const IsotropicPresentation& p) {
  std::vector<std::string> labels(3 * p.n());
  for (int e = 0; e < 3 * p.n(); ++e) labels[e] = p.element_label(e);
  return BinaryMatroid::from_matrix(p.ias, labels);
}

bool is_total_transversal(const std::string& pcs) {
  if (pcs.empty()) return false;
  for (char c : pcs) {
    if (c != 'p' && c != 'c' && c != 's') return false;
  }
  return true;
}

std::vector<int> transversal_elements(const IsotropicPresentation& p, const std::string& pcs) {
  check_pcs(p, pcs, true);
  std::vector<int> elems;
  for (int v = 0; v < p.n(); ++v) {
    int r = letter_rank(pcs[v]);
    if (r >= 0) elems.push_back(r * p.n() + v);
  }
  return elems;
}

int transversal_rank(const IsotropicPresentation& p, const std::string& pcs) {
  std::vector<uint64_t> cols;
  for (int e : transversal_elements(p, pcs)) cols.push_back(p.column(e));
  return gf2_rank_cols(cols);
}

BinaryMatroid transverse_matroid(const IsotropicPresentation& p, const std::string& pcs) {
  check_pcs(p, pcs, false);
  BinaryMatroid m;
  m.nrows = p.n();
  for (int e : transversal_elements(p, pcs)) {
    m.cols.push_back(p.column(e));
    m.labels.push_back(p.g.name_of(p.vertex_of(e)));
  }
  return m;
}

std::vector<std::string> transverse_circuits(const IsotropicPresentation& p, int max_size) {
  int n = p.n();
  if (max_size < 0 || max_size > n)
    throw precondition_error("transverse circuit size must be between 0 and n");
  std::vector<std::string> out;
  std::vector<uint64_t> cols;
  for (int k = 1; k <= max_size; ++k) {
    std::vector<std::string> found;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != k) continue;
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) verts.push_back(v);
      long total = 1;
      for (int i = 0; i < k; ++i) total *= 3;
      for (long code = 0; code < total; ++code) {
        std::string pcs(n, '-');
        long c = code;
        for (int i = 0; i < k; ++i) {
          pcs[verts[i]] = "pcs"[c % 3];
          c /= 3;
        }
        cols.clear();
        for (int e : transversal_elements(p, pcs)) cols.push_back(p.column(e));
        if (gf2_rank_cols(cols) != k - 1) continue;
        bool circuit = true;
        for (int drop = 0; drop < k && circuit; ++drop) {
          std::vector<uint64_t> sub;
          for (int i = 0; i < k; ++i)
            if (i != drop) sub.push_back(cols[i]);
          if (gf2_rank_cols(sub) != k - 1) circuit = false;
        }
        if (circuit) found.push_back(pcs);
      }
    }
    std::sort(found.begin(), found.end(), pcs_less);
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

BinaryMatroid isotropic_minor(const IsotropicPresentation& p, const std::string& sub_pcs) {
  check_pcs(p, sub_pcs, true);
  uint64_t contract = 0, del = 0;
  for (int v = 0; v < p.n(); ++v) {
    int r = letter_rank(sub_pcs[v]);
    if (r < 0) continue;
    for (int l = 0; l < 3; ++l) {
      uint64_t bit = 1ull << (l * p.n() + v);
      if (l == r)
        contract |= bit;
      else
        del |= bit;
    }
  }
  return matroid_minor(isotropic_matroid(p), contract, del);
}

MultimatroidSection multimatroid_section(const IsotropicPresentation& p, const std::string& pcs) {
  check_pcs(p, pcs, false);
  MultimatroidSection s{p, pcs, {}};
  for (int v = 0; v < p.n(); ++v) {
    std::vector<int> rem;
    for (int l = 0; l < 3; ++l)
      if (l != letter_rank(pcs[v])) rem.push_back(l);
    s.remaining.push_back(rem);
  }
  return s;
}

MultimatroidSection full_section(const IsotropicPresentation& p) {
  MultimatroidSection s{p, std::nullopt, {}};
  for (int v = 0; v < p.n(); ++v) s.remaining.push_back({0, 1, 2});
  return s;
}

namespace {

// echelon basis indexed by top bit, with undo support
struct TopBitBasis {
  std::array<uint64_t, 64> slot{};

  // returns filled slot index, or -1 when the column is already in the span
  int insert(uint64_t u) {
    while (u) {
      int h = 63 - __builtin_clzll(u);
      if (!slot[h]) {
        slot[h] = u;
        return h;
      }
      u ^= slot[h];
    }
    return -1;
  }
  bool in_span(uint64_t u) const {
    while (u) {
      int h = 63 - __builtin_clzll(u);
      if (!slot[h]) return false;
      u ^= slot[h];
    }
    return true;
  }
};

struct TightSearch {
  const MultimatroidSection& s;
  int n;
  int skip;
  std::vector<int> order;
  TopBitBasis basis;

  explicit TightSearch(const MultimatroidSection& sec) : s(sec), n(sec.pres.n()) {}

  bool run(int skipped) {
    skip = skipped;
    order.clear();
    for (int v = 0; v < n; ++v)
      if (v != skip) order.push_back(v);
    basis = TopBitBasis{};
    return dfs(0);
  }

  bool dfs(size_t idx) {
    if (idx == order.size()) {
      for (int l : s.remaining[skip])
        if (basis.in_span(s.pres.column(l * n + skip))) return true;
      return false;  // independent near-transversal with no dependent extension
    }
    int v = order[idx];
    for (int l : s.remaining[v]) {
      int h = basis.insert(s.pres.column(l * n + v));
      if (h < 0) continue;  // dependent prefix: every extension stays dependent
      bool ok = dfs(idx + 1);
      basis.slot[h] = 0;
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

bool is_tight(const MultimatroidSection& s) {
  long work = 0;
  for (int w = 0; w < s.pres.n(); ++w) {
    long prod = 1;
    for (int v = 0; v < s.pres.n(); ++v) {
      if (v == w) continue;
      prod *= static_cast<long>(s.remaining[v].size());
      if (prod > kTightCap) throw guard_error("tightness check exceeds work cap");
    }
    work += prod;
    if (work > kTightCap) throw guard_error("tightness check exceeds work cap");
  }
  TightSearch search(s);
  for (int w = 0; w < s.pres.n(); ++w)
    if (!search.run(w)) return false;
  return true;
}

}  // namespace cgm
