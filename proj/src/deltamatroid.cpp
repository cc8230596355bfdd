#include "cgm/deltamatroid.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "cgm/errors.hpp"
#include "cgm/recognize.hpp"

namespace cgm {
namespace {

void check_subset(const SetSystem& d, uint32_t x) {
  if (d.n < 32 && (x >> d.n) != 0)
    throw precondition_error("subset has elements outside the ground set");
}

// nonsingularity of the principal submatrix rows[mask] x mask
bool principal_nonsingular(const std::vector<uint32_t>& rows, uint32_t mask) {
  std::array<uint32_t, 16> piv{};
  for (uint32_t m = mask; m; m &= m - 1) {
    uint32_t u = rows[__builtin_ctz(m)] & mask;
    while (u) {
      int h = 31 - __builtin_clz(u);
      if (!piv[h]) {
        piv[h] = u;
        break;
      }
      u ^= piv[h];
    }
    if (!u) return false;  // dependent row
  }
  return true;
}

}  // namespace

SetSystem::SetSystem(int n_, std::vector<uint32_t> sets) : n(n_), feasible(std::move(sets)) {
  if (n < 0 || n > 16) throw precondition_error("set system ground set capped at 16");
  for (uint32_t s : feasible)
    if ((s >> n) != 0) throw precondition_error("feasible set outside the ground set");
  std::sort(feasible.begin(), feasible.end());
  feasible.erase(std::unique(feasible.begin(), feasible.end()), feasible.end());
}

bool SetSystem::contains(uint32_t s) const {
  return std::binary_search(feasible.begin(), feasible.end(), s);
}

bool is_delta_matroid(const SetSystem& d) {
  if (d.feasible.empty()) return false;
  std::vector<char> in(1u << d.n, 0);
  for (uint32_t s : d.feasible) in[s] = 1;
  for (uint32_t x : d.feasible)
    for (uint32_t y : d.feasible) {
      uint32_t diff = x ^ y;
      for (uint32_t xb = diff; xb; xb &= xb - 1) {
        uint32_t bx = xb & ~(xb - 1);
        bool ok = false;
        for (uint32_t yb = diff; yb && !ok; yb &= yb - 1) ok = in[x ^ (bx | (yb & ~(yb - 1)))];
        if (!ok) return false;
      }
    }
  return true;
}

bool is_even(const SetSystem& d) {
  for (uint32_t s : d.feasible)
    if ((__builtin_popcount(s) & 1) != (__builtin_popcount(d.feasible.front()) & 1)) return false;
  return true;
}

SetSystem twist(const SetSystem& d, uint32_t x) {
  check_subset(d, x);
  std::vector<uint32_t> out;
  out.reserve(d.feasible.size());
  for (uint32_t s : d.feasible) out.push_back(s ^ x);
  return SetSystem(d.n, std::move(out));
}

SetSystem loop_complement(const SetSystem& d, uint32_t x) {
  check_subset(d, x);
  std::vector<char> in(1u << d.n, 0);
  for (uint32_t s : d.feasible) in[s] = 1;
  std::vector<uint32_t> out;
  for (uint32_t y = 0; y < (1u << d.n); ++y) {
    uint32_t base = y & ~x, var = y & x;
    int parity = 0;
    uint32_t w = var;
    for (;;) {
      parity ^= in[base | w];
      if (!w) break;
      w = (w - 1) & var;
    }
    if (parity) out.push_back(y);
  }
  return SetSystem(d.n, std::move(out));
}

SetSystem dm_from_matrix(const Gf2Matrix& a) {
  if (a.rows != a.cols) throw precondition_error("adjacency-style matrix must be square");
  if (a.rows > 16) throw precondition_error("set system ground set capped at 16");
  int n = a.rows;
  std::vector<uint32_t> rows(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (a.get(r, c) != a.get(c, r)) throw precondition_error("matrix must be symmetric");
      if (a.get(r, c)) rows[r] |= 1u << c;
    }
  }
  std::vector<uint32_t> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask)
    if (principal_nonsingular(rows, mask)) out.push_back(mask);
  return SetSystem(n, std::move(out));
}

Gf2Matrix reconstruct_matrix(const SetSystem& d) {
  if (!d.contains(0))
    throw precondition_error("reconstruction needs the empty set feasible");
  int n = d.n;
  Gf2Matrix a(n, n);
  for (int v = 0; v < n; ++v)
    if (d.contains(1u << v)) a.set(v, v, true);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      bool pair = d.contains((1u << v) | (1u << w));
      bool sv = d.contains(1u << v), sw = d.contains(1u << w);
      bool e = (pair && (!sv || !sw)) || (!pair && sv && sw);
      a.set(v, w, e);
      a.set(w, v, e);
    }
  if (!(dm_from_matrix(a) == d))
    throw precondition_error("set system is not binary with the empty set feasible");
  return a;
}

bool is_binary(const SetSystem& d) {
  if (d.feasible.empty()) return false;
  SetSystem d0 = twist(d, d.feasible.front());
  try {
    reconstruct_matrix(d0);
  } catch (const precondition_error&) {
    return false;
  }
  return true;
}

namespace {

LoopedGraph graph_of_support(const Gf2Matrix& a) {
  LoopedGraph g(a.rows);
  for (int v = 0; v < a.rows; ++v)
    for (int w = v + 1; w < a.rows; ++w)
      if (a.get(v, w)) g.add_edge(v, w);
  return g;
}

}  // namespace

bool is_eulerian(const SetSystem& d) {
  if (d.n > 10) throw guard_error("eulerian decision capped at 10 elements");
  if (!is_binary(d)) throw precondition_error("eulerian decision needs a binary delta-matroid");
  if (!is_even(d)) return false;
  Gf2Matrix a = reconstruct_matrix(twist(d, d.feasible.front()));
  // even with the empty set feasible: no singletons, so the diagonal is zero
  LoopedGraph g = graph_of_support(a);
  bool oracle_ok = true;
  for (uint32_t comp : components(g))
    if (__builtin_popcount(comp) > kOracleMaxComponent) oracle_ok = false;
  return is_circle(g, oracle_ok ? CircleMethod::kBoth : CircleMethod::kObstruction).circle;
}

RegularVerdict is_regular(const SetSystem& d) {
  if (d.n > 8) throw guard_error("regularity decision capped at 8 elements");
  if (!is_binary(d)) throw precondition_error("regularity decision needs a binary delta-matroid");
  if (!is_even(d)) throw precondition_error("regularity decision needs an even delta-matroid");
  Gf2Matrix a = reconstruct_matrix(twist(d, d.feasible.front()));
  auto signing = pu_sign(a);
  return {signing.has_value(), std::move(signing)};
}

SetSystem section_delta_matroid(const MultimatroidSection& s) {
  if (!s.deleted) throw precondition_error("section delta-matroid needs a 2-section");
  int n = s.pres.n();
  if (n > 16) throw guard_error("section delta-matroid capped at 16 vertices");
  std::vector<uint64_t> lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    lo[v] = s.pres.column(s.remaining[v][0] * n + v);
    hi[v] = s.pres.column(s.remaining[v][1] * n + v);
  }
  std::vector<uint32_t> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::array<uint64_t, 64> piv{};
    bool independent = true;
    for (int v = 0; v < n && independent; ++v) {
      uint64_t u = ((mask >> v) & 1u) ? hi[v] : lo[v];
      while (u) {
        int h = 63 - __builtin_clzll(u);
        if (!piv[h]) {
          piv[h] = u;
          break;
        }
        u ^= piv[h];
      }
      if (!u) independent = false;
    }
    if (independent) out.push_back(mask);
  }
  return SetSystem(n, std::move(out));
}

std::string dm_to_text(const SetSystem& d) {
  std::ostringstream out;
  out << "dm " << d.n << "\n";
  for (uint32_t s : d.feasible) {
    if (!s) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for (int v = 0; v < d.n; ++v)
      if ((s >> v) & 1u) {
        if (!first) out << ' ';
        out << v;
        first = false;
      }
    out << '\n';
  }
  return out.str();
}

SetSystem dm_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  int n = -1;
  if (!(in >> header) || header != "dm" || !(in >> n) || n < 0 || n > 16)
    throw precondition_error("delta-matroid text must start with 'dm <n>'");
  std::string line;
  std::getline(in, line);  // rest of header line
  std::vector<uint32_t> sets;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    uint32_t mask = 0;
    bool any = false;
    while (ls >> tok) {
      any = true;
      if (tok == "-") continue;
      size_t pos = 0;
      int v = -1;
      try {
        v = std::stoi(tok, &pos);
      } catch (...) {
      }
      if (pos != tok.size() || v < 0 || v >= n)
        throw precondition_error("bad element index in delta-matroid text");
      mask |= 1u << v;
    }
    if (any) sets.push_back(mask);
  }
  return SetSystem(n, std::move(sets));
}

}  // namespace cgm
