#include "cgm/recognize.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cgm/errors.hpp"
#include "cgm/fixtures.hpp"
#include "cgm/isotropic.hpp"
#include "cgm/matroid.hpp"

namespace cgm {

namespace {

// Depth-first search for a double occurrence word realizing g exactly
// (labeled). Grows the word one position at a time; a vertex's adjacency is
// fully forced against every non-future vertex by the time it closes, so
// wrong branches die early.
struct DowSearch {
  const LoopedGraph& g;
  int m;                       // component size
  std::vector<int> verts;      // component vertices, word built over 0..m-1
  std::vector<uint32_t> adj;   // adjacency re-indexed to the component
  std::vector<int> word;
  std::vector<int> open_seq;   // opening order, -1 when not open
  std::vector<uint32_t> inter; // closed vertices interlacing an open vertex
  uint32_t open_mask = 0, closed_mask = 0, unopened_mask = 0;
  int next_seq = 0;

  explicit DowSearch(const LoopedGraph& gg, const std::vector<int>& comp)
      : g(gg), m(static_cast<int>(comp.size())), verts(comp) {
    adj.resize(m);
    open_seq.assign(m, -1);
    inter.assign(m, 0);
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < m; ++i) local[verts[i]] = i;
    for (int i = 0; i < m; ++i) {
      uint32_t nb = g.neighbors(verts[i]);
      for (int u = 0; u < g.n; ++u)
        if (((nb >> u) & 1) && local[u] >= 0) adj[i] |= uint32_t{1} << local[u];
    }
    unopened_mask = (m == 32) ? ~uint32_t{0} : (uint32_t{1} << m) - 1;
  }

  void open(int v) {
    word.push_back(v);
    open_seq[v] = next_seq++;
    inter[v] = 0;
    unopened_mask &= ~(uint32_t{1} << v);
    open_mask |= uint32_t{1} << v;
  }

  void close(int v) {
    word.push_back(v);
    open_mask &= ~(uint32_t{1} << v);
    closed_mask |= uint32_t{1} << v;
    uint32_t vb = uint32_t{1} << v;
    for (uint32_t rest = open_mask; rest; rest &= rest - 1) {
      int u = __builtin_ctz(rest);
      if (open_seq[u] > open_seq[v]) inter[u] |= vb;
    }
  }

  void undo_open(int v) {
    word.pop_back();
    open_seq[v] = -1;
    --next_seq;
    unopened_mask |= uint32_t{1} << v;
    open_mask &= ~(uint32_t{1} << v);
  }

  void undo_close(int v) {
    word.pop_back();
    closed_mask &= ~(uint32_t{1} << v);
    open_mask |= uint32_t{1} << v;
    uint32_t vb = uint32_t{1} << v;
    for (uint32_t rest = open_mask; rest; rest &= rest - 1) {
      int u = __builtin_ctz(rest);
      if (u != v) inter[u] &= ~vb;
    }
  }

  // v may close only if its row of g matches the forced pattern
  bool close_ok(int v) const {
    uint32_t opened_after = 0;
    for (uint32_t rest = open_mask & ~(uint32_t{1} << v); rest; rest &= rest - 1) {
      int u = __builtin_ctz(rest);
      if (open_seq[u] > open_seq[v]) opened_after |= uint32_t{1} << u;
    }
    if ((adj[v] & open_mask & ~(uint32_t{1} << v)) != opened_after) return false;
    return (adj[v] & closed_mask) == inter[v];
  }

  bool dfs() {
    if (static_cast<size_t>(word.size()) == static_cast<size_t>(2 * m)) return true;
    for (uint32_t rest = open_mask; rest; rest &= rest - 1) {
      int v = __builtin_ctz(rest);
      if (!close_ok(v)) continue;
      close(v);
      if (dfs()) return true;
      undo_close(v);
    }
    for (uint32_t rest = unopened_mask; rest; rest &= rest - 1) {
      int v = __builtin_ctz(rest);
      if (adj[v] & closed_mask) continue;  // disjoint intervals force non-edges
      open(v);
      if (dfs()) return true;
      undo_open(v);
    }
    return false;
  }

  std::optional<std::string> run() {
    open(0);
    if (!dfs()) return std::nullopt;
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) out += ' ';
      out += g.name_of(verts[word[i]]);
    }
    return out;
  }
};

std::optional<std::string> oracle_dow(const LoopedGraph& g) {
  std::string joined;
  for (uint32_t comp_mask : components(g)) {
    std::vector<int> comp;
    for (int v = 0; v < g.n; ++v)
      if ((comp_mask >> v) & 1) comp.push_back(v);
    if (static_cast<int>(comp.size()) > kOracleMaxComponent)
      throw guard_error("oracle limited to components with at most 9 vertices");
    DowSearch search(g, comp);
    auto word = search.run();
    if (!word) return std::nullopt;
    if (!joined.empty()) joined += " ; ";
    joined += *word;
  }
  return joined;
}

}  // namespace

CircleVerdict is_circle(const LoopedGraph& g, CircleMethod method) {
  if (!g.is_simple()) throw precondition_error("circle recognition expects a simple graph");
  CircleVerdict out;
  if (g.n == 0) {
    out.circle = true;
    if (method != CircleMethod::kObstruction) out.dow = "";
    return out;
  }

  bool oracle_ran = false, oracle_circle = false;
  if (method == CircleMethod::kOracle || method == CircleMethod::kBoth) {
    auto dow = oracle_dow(g);
    oracle_ran = true;
    oracle_circle = dow.has_value();
    out.circle = oracle_circle;
    out.dow = std::move(dow);
  }
  if (method == CircleMethod::kObstruction || method == CircleMethod::kBoth) {
    bool found = false;
    const std::pair<const char*, LoopedGraph> obstructions[] = {
        {"W5", fixtures::w5()}, {"BW3", fixtures::bw3()}, {"W7", fixtures::w7()}};
    for (const auto& [name, h] : obstructions) {
      if (auto w = is_vertex_minor(g, h)) {
        found = true;
        out.obstruction = name;
        out.witness = *w;
        break;
      }
    }
    if (oracle_ran && oracle_circle != !found)
      throw std::logic_error("recognition methods disagree");
    out.circle = !found;
    if (oracle_ran) out.circle = oracle_circle;
  }
  return out;
}

std::vector<LoopedGraph> vertex_minor_classes(const LoopedGraph& g) {
  if (!g.is_simple()) throw precondition_error("vertex_minor_classes: graph must be simple");
  if (g.n > kReportMax) throw guard_error("vertex_minor_classes: graph too large");
  std::vector<LoopedGraph> classes;
  if (g.n == 0) return classes;
  std::unordered_set<std::string> seen;
  std::vector<LoopedGraph> queue;
  auto push = [&](const LoopedGraph& h) {
    if (h.n == 0) return;
    auto key = canonical_form(h).key;
    if (seen.insert(key).second) {
      classes.push_back(h);
      queue.push_back(h);
    }
  };
  push(g);
  for (size_t head = 0; head < queue.size(); ++head) {
    LoopedGraph h = queue[head];
    // every proper vertex-minor arises by iterating the three elementary
    // one-vertex reductions h - v, (h * v) - v, (h ^ vw) - v
    for (int v = 0; v < h.n; ++v) {
      uint32_t rest = ((h.n == 32 ? 0u : (1u << h.n)) - 1) & ~(1u << v);
      push(h.induced(rest));
      if (h.degree(v) == 0) continue;
      push(simple_local_complement(h, v).induced(rest));
      int w = std::countr_zero(h.adj[v]);
      push(pivot(h, v, w).induced(rest));
    }
  }
  return classes;
}

OrbitScan scan_local_equivalence_orbit(const LoopedGraph& g, uint64_t cap) {
  if (!g.is_simple())
    throw precondition_error("scan_local_equivalence_orbit: graph must be simple");
  OrbitScan out;
  auto orbit = local_equivalence_orbit(g, OrbitMode::kLabeled, false, cap);
  out.orbit_size = orbit.size();
  for (const auto& h : orbit) {
    bool deg5 = false;
    for (int v = 0; v < h.n; ++v) {
      int d = h.degree(v);
      if (d <= 1) out.degree_le1 = true;
      if (d <= 2) out.degree_le2 = true;
      if (d == 5) deg5 = true;
      if (d == 2) {
        uint32_t m = h.adj[v];
        while (m) {
          int u = std::countr_zero(m);
          m &= m - 1;
          if (u > v && h.degree(u) == 2 && h.has_edge(u, v)) out.adjacent_deg2 = true;
        }
      }
    }
    if (!deg5) out.all_have_degree5 = false;
    if (bipartition(h).has_value()) out.bipartite_member = true;
  }
  return out;
}

bool is_k44_interlacement(const LoopedGraph& h) {
  if (h.n != 8 || !h.is_simple()) return false;
  static const std::unordered_set<std::string> keys = [] {
    std::unordered_set<std::string> s;
    for (const auto& m :
         local_equivalence_orbit(fixtures::k44_interlacement(), OrbitMode::kUpToIso, false))
      s.insert(canonical_form(m).key);
    return s;
  }();
  return keys.count(canonical_form(h).key) > 0;
}

namespace {

// M[IAS(h)] has a loop or two 3-element circuits sharing an element.
bool loop_or_intersecting_3circuits(const IsotropicPresentation& p) {
  int m = 3 * p.g.n;
  std::vector<uint64_t> cols(m);
  for (int e = 0; e < m; ++e) {
    cols[e] = p.column(e);
    if (cols[e] == 0) return true;
  }
  std::vector<int> through(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (cols[i] == cols[j]) continue;
      for (int k = j + 1; k < m; ++k) {
        if (cols[k] == cols[i] || cols[k] == cols[j]) continue;
        if ((cols[i] ^ cols[j] ^ cols[k]) != 0) continue;
        if (++through[i] > 1 || ++through[j] > 1 || ++through[k] > 1) return true;
      }
    }
  return false;
}

// Some transverse matroid of h consists of precisely two (necessarily
// disjoint) circuits.
bool has_two_circuit_transversal(const IsotropicPresentation& p) {
  int n = p.g.n;
  long total = 1;
  for (int v = 0; v < n; ++v) total *= 3;
  for (long code = 0; code < total; ++code) {
    Gf2Matrix m(n, n);
    long c = code;
    for (int v = 0; v < n; ++v, c /= 3) {
      uint64_t col = p.column((c % 3) * n + v);
      for (int r = 0; r < n; ++r)
        if ((col >> r) & 1) m.set(r, v, true);
    }
    auto ker = gf2_kernel(m);
    int d = static_cast<int>(ker.basis.size());
    if (d < 2) continue;
    std::vector<uint64_t> supports;
    for (uint32_t pick = 1; pick < (1u << d); ++pick) {
      uint64_t s = 0;
      for (int b = 0; b < d; ++b)
        if ((pick >> b) & 1) s ^= ker.basis[b];
      supports.push_back(s);
    }
    std::vector<uint64_t> circuits;
    for (uint64_t s : supports) {
      bool minimal = true;
      for (uint64_t t : supports)
        if (t != s && (t & ~s) == 0) {
          minimal = false;
          break;
        }
      if (minimal) circuits.push_back(s);
    }
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    if (circuits.size() == 2 && (circuits[0] & circuits[1]) == 0) return true;
  }
  return false;
}

// Two transverse 3-circuits that no single transversal contains both of.
bool has_conflicting_3circuits(const IsotropicPresentation& p) {
  auto tc = transverse_circuits(p, std::min(3, p.g.n));
  std::vector<std::string> threes;
  for (const auto& s : tc)
    if (static_cast<int>(s.size()) -
            static_cast<int>(std::count(s.begin(), s.end(), '-')) ==
        3)
      threes.push_back(s);
  for (size_t i = 0; i < threes.size(); ++i)
    for (size_t j = i + 1; j < threes.size(); ++j)
      for (size_t v = 0; v < threes[i].size(); ++v)
        if (threes[i][v] != '-' && threes[j][v] != '-' && threes[i][v] != threes[j][v])
          return true;
  return false;
}

bool all_transverse_cographic(const IsotropicPresentation& p) {
  int n = p.g.n;
  long total = 1;
  for (int v = 0; v < n; ++v) total *= 3;
  std::string pcs(n, 'p');
  const char letters[3] = {'p', 'c', 's'};
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int v = 0; v < n; ++v, c /= 3) pcs[v] = letters[c % 3];
    auto m = transverse_matroid(p, pcs);
    // with at most kReportMax = 8 elements the only excluded minors in
    // reach are the Fano plane and its dual; minors never raise rank or
    // nullity, so most transversals can be skipped outright
    int r = m.rank(), nul = n - r;
    bool maybe_fano = r >= 3 && nul >= 4;
    bool maybe_fano_dual = r >= 4 && nul >= 3;
    if (!maybe_fano && !maybe_fano_dual) continue;
    if (!class_test(m, MatroidClass::kCographic)) return false;
  }
  return true;
}

// Rank of every transversal of M[IAS(g)], indexed by base-3 code
// (digit v = 0,1,2 selecting the phi/chi/psi element of vertex v).
struct TransversalSweep {
  int n;
  long total;
  std::vector<long> pow3;
  std::vector<uint64_t> col;  // 3n element columns
  std::vector<int8_t> rank;
  explicit TransversalSweep(const IsotropicPresentation& p) : n(p.g.n) {
    total = 1;
    pow3.assign(n, 1);
    for (int v = 0; v < n; ++v) {
      pow3[v] = total;
      total *= 3;
    }
    col.resize(3 * n);
    for (int e = 0; e < 3 * n; ++e) col[e] = p.column(e);
    rank.resize(total);
    std::vector<uint64_t> sel(n);
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int v = 0; v < n; ++v, c /= 3) sel[v] = col[(c % 3) * n + v];
      rank[code] = static_cast<int8_t>(gf2_rank_cols(sel));
    }
  }
  int letter(long code, int v) const { return (code / pow3[v]) % 3; }
  std::string pcs(long code) const {
    static const char letters[3] = {'p', 'c', 's'};
    std::string s(n, 'p');
    for (int v = 0; v < n; ++v) s[v] = letters[letter(code, v)];
    return s;
  }
  // the transversal disjoint from `code` choosing, at each vertex, the
  // first or second remaining letter as directed by the bits of `alt`
  long partner(long code, uint32_t alt) const {
    long out = 0;
    for (int v = 0; v < n; ++v)
      out += pow3[v] * ((letter(code, v) + 1 + ((alt >> v) & 1)) % 3);
    return out;
  }
};

// Planarity of the 2n-element union of two disjoint transversals,
// memoized by the base-3 code of the letters *missing* at each vertex.
bool union_planar(const IsotropicPresentation& p, const TransversalSweep& sweep, long code1,
                  long code2, std::unordered_map<long, bool>& memo) {
  int n = sweep.n;
  long ukey = 0;
  for (int v = 0; v < n; ++v)
    ukey += sweep.pow3[v] * (3 - sweep.letter(code1, v) - sweep.letter(code2, v));
  auto it = memo.find(ukey);
  if (it != memo.end()) return it->second;
  BinaryMatroid m;
  m.nrows = n;
  for (int v = 0; v < n; ++v) {
    int miss = static_cast<int>((ukey / sweep.pow3[v]) % 3);
    for (int l = 0; l < 3; ++l) {
      if (l == miss) continue;
      m.cols.push_back(sweep.col[l * n + v]);
      m.labels.push_back(p.element_label(l * n + v));
    }
  }
  bool planar = class_test(m, MatroidClass::kPlanar);
  memo.emplace(ukey, planar);
  return planar;
}

}  // namespace

CharacterizationReport characterization_report(const LoopedGraph& g) {
  if (!g.is_simple())
    throw precondition_error("characterization_report: graph must be simple");
  if (g.n < 1) throw precondition_error("characterization_report: graph must be nonempty");
  if (g.n > kReportMax) throw guard_error("characterization_report: graph too large");
  CharacterizationReport rep;
  rep.n = g.n;
  rep.circle = is_circle(g, CircleMethod::kBoth).circle;

  auto p = ias_presentation(g);
  rep.transverse_circuit_le3 = !transverse_circuits(p, std::min(3, g.n)).empty();
  auto scan = scan_local_equivalence_orbit(g);
  rep.orbit_degree_le2 = scan.degree_le2;
  rep.orbit_bipartite = scan.bipartite_member;
  rep.transverse_all_cographic = all_transverse_cographic(p);
  if (rep.orbit_bipartite) {
    rep.bw3_minor = is_vertex_minor(g, fixtures::bw3()).has_value();
    rep.bw4_minor = is_vertex_minor(g, fixtures::bw4()).has_value();
  }

  auto classes = vertex_minor_classes(g);
  rep.minor_class_count = static_cast<int>(classes.size());
  rep.minors_loop_or_3circuit_pair = true;
  rep.minors8_no_two_circuit_transversal = true;
  rep.minors_circuit_alternatives = true;
  rep.minors_degree_alternatives = true;
  rep.minors_degree_trichotomy = true;
  for (const auto& h : classes) {
    auto hp = ias_presentation(h);
    bool k44 = is_k44_interlacement(h);
    bool loop_or_pair = loop_or_intersecting_3circuits(hp);
    if (h.n <= 7 && !loop_or_pair) rep.minors_loop_or_3circuit_pair = false;
    if (h.n == 8 && !loop_or_pair && has_two_circuit_transversal(hp))
      rep.minors8_no_two_circuit_transversal = false;
    if (!k44) {
      bool circ2 = !transverse_circuits(hp, std::min(2, h.n)).empty();
      if (!circ2 && !has_conflicting_3circuits(hp)) rep.minors_circuit_alternatives = false;
    }
    auto hscan = scan_local_equivalence_orbit(h);
    if (!k44 && !hscan.degree_le1 && !hscan.adjacent_deg2)
      rep.minors_degree_alternatives = false;
    if (!hscan.degree_le1 && !hscan.adjacent_deg2 && !hscan.all_have_degree5)
      rep.minors_degree_trichotomy = false;
  }

  rep.cographic_small_circuit_verdict = rep.transverse_all_cographic &&
                                        rep.minors_loop_or_3circuit_pair &&
                                        rep.minors8_no_two_circuit_transversal;
  rep.circuit_alternative_verdict = rep.minors_circuit_alternatives;
  rep.degree_alternative_verdict = rep.minors_degree_alternatives;
  rep.degree_trichotomy_verdict = rep.minors_degree_trichotomy;

  // each characterization must agree with both recognition methods;
  // a disagreement is a logic error, never resolved by precedence
  if (rep.n <= 6) {
    rep.small_graph_verdict = rep.transverse_circuit_le3;
    if (rep.transverse_circuit_le3 != rep.orbit_degree_le2 ||
        *rep.small_graph_verdict != rep.circle)
      throw std::logic_error("small-graph characterization disagrees");
  }
  if (rep.cographic_small_circuit_verdict != rep.circle ||
      rep.circuit_alternative_verdict != rep.circle ||
      rep.degree_alternative_verdict != rep.circle ||
      rep.degree_trichotomy_verdict != rep.circle)
    throw std::logic_error("minor-class characterization disagrees");
  if (rep.orbit_bipartite) {
    rep.bipartite_verdict = rep.transverse_all_cographic;
    if (*rep.bipartite_verdict != rep.circle ||
        *rep.bipartite_verdict != (!rep.bw3_minor && !rep.bw4_minor))
      throw std::logic_error("bipartite characterization disagrees");
  }
  return rep;
}

PlanarRealizability planar_realizability(const LoopedGraph& g) {
  if (!g.is_simple()) throw precondition_error("planar_realizability: graph must be simple");
  if (g.n > kReportMax) throw guard_error("planar_realizability: graph too large");
  PlanarRealizability out;
  if (g.n == 0) {
    out.realizable = true;
    return out;
  }
  auto p = ias_presentation(g);
  TransversalSweep sweep(p);
  std::unordered_map<long, bool> memo;
  for (long code = 0; code < sweep.total; ++code) {
    if (sweep.rank[code] > g.n) continue;
    for (uint32_t alt = 0; alt < (1u << g.n); ++alt) {
      long other = sweep.partner(code, alt);
      if (sweep.rank[code] + sweep.rank[other] != g.n) continue;
      if (union_planar(p, sweep, code, other, memo)) {
        out.realizable = true;
        out.t1 = sweep.pcs(code);
        out.t2 = sweep.pcs(other);
        return out;
      }
    }
  }
  return out;
}

int crossing_lower_bound(const LoopedGraph& g, bool refine) {
  if (!g.is_simple()) throw precondition_error("crossing_lower_bound: graph must be simple");
  if (g.n > kReportMax) throw guard_error("crossing_lower_bound: graph too large");
  if (g.n == 0) return 0;
  auto p = ias_presentation(g);
  TransversalSweep sweep(p);
  int best = INT_MAX;
  for (long code = 0; code < sweep.total; ++code)
    for (uint32_t alt = 0; alt < (1u << g.n); ++alt) {
      int sum = sweep.rank[code] + sweep.rank[sweep.partner(code, alt)];
      best = std::min(best, sum);
    }
  int bound = best - g.n;
  if (!refine || bound != 1) return bound;
  // bound 1 is exact iff some rank-sum-(n+1) pair also has planar union
  std::unordered_map<long, bool> memo;
  for (long code = 0; code < sweep.total; ++code)
    for (uint32_t alt = 0; alt < (1u << g.n); ++alt) {
      long other = sweep.partner(code, alt);
      if (sweep.rank[code] + sweep.rank[other] != g.n + 1) continue;
      if (union_planar(p, sweep, code, other, memo)) return 1;
    }
  return 2;
}

}  // namespace cgm
