#include "cgm/fourregular.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cgm/errors.hpp"
#include "cgm/isotropic.hpp"

namespace cgm {
namespace {

// euler_systems(mode=all) walks 3^n transition choices
constexpr int kEulerAllMax = 13;
constexpr int kEnumerateMax = 10;

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

int component_count(const FourRegularGraph& f) {
  DisjointSet ds(f.n);
  int comps = f.n;
  for (const auto& e : f.edges)
    if (ds.unite(e[0], e[1])) --comps;
  return comps;
}

// transition partner of every half-edge, through its vertex
std::vector<int> through_map(const FourRegularGraph& f, const std::vector<Transition>& ts) {
  std::vector<int> tmap(f.half_count(), -1);
  for (const auto& t : ts) {
    for (const auto& pr : t.pairs) {
      tmap[pr[0]] = pr[1];
      tmap[pr[1]] = pr[0];
    }
  }
  return tmap;
}

// circuits induced by a full transition choice; each half-edge is an entry
// state of exactly one directed traversal, and a traversal and its reverse
// use disjoint entry states, so marking both sides visits each circuit once
std::vector<Circuit> trace_circuits(const FourRegularGraph& f, const std::vector<int>& tmap) {
  std::vector<char> seen(f.half_count(), 0);
  std::vector<Circuit> out;
  for (int h0 = 0; h0 < f.half_count(); ++h0) {
    if (seen[h0]) continue;
    Circuit c;
    int h = h0;
    do {
      int o = tmap[h];
      c.push_back({f.vertex_of_half(h), h, o});
      seen[h] = seen[o] = 1;
      h = o ^ 1;
    } while (h != h0);
    out.push_back(canonical_circuit(std::move(c)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<std::array<int, 2>, 2> normalized_pairs(std::array<std::array<int, 2>, 2> pairs) {
  for (auto& pr : pairs)
    if (pr[0] > pr[1]) std::swap(pr[0], pr[1]);
  if (pairs[1] < pairs[0]) std::swap(pairs[0], pairs[1]);
  return pairs;
}

// the two visits of v on its component circuit
std::array<CircuitStep, 2> visits_of(const EulerSystem& c, int v) {
  for (const auto& w : c.words) {
    std::array<CircuitStep, 2> got{};
    int found = 0;
    for (const auto& s : w)
      if (s.vertex == v && found < 2) got[found++] = s;
    if (found == 2) return got;
    if (found != 0) break;
  }
  throw std::logic_error("euler system misses a vertex");
}

}  // namespace

std::string FourRegularGraph::name_of(int v) const {
  if (v >= 0 && v < static_cast<int>(names.size()) && !names[v].empty()) return names[v];
  return std::to_string(v);
}

std::string FourRegularGraph::half_id(int h) const {
  return std::to_string(h >> 1) + "." + std::to_string(h & 1);
}

FourRegularGraph four_regular(int n, std::vector<std::array<int, 2>> edges,
                              std::vector<std::string> names) {
  if (n < 0) throw precondition_error("vertex count may not be negative");
  for (auto& e : edges) {
    if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n)
      throw precondition_error("edge endpoint outside the vertex range");
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw precondition_error("name list length must equal vertex count");
  FourRegularGraph f;
  f.n = n;
  f.edges = std::move(edges);
  f.names = std::move(names);
  std::vector<std::vector<int>> inc(n);
  for (int h = 0; h < f.half_count(); ++h) inc[f.vertex_of_half(h)].push_back(h);
  f.incidence.resize(n);
  for (int v = 0; v < n; ++v) {
    if (inc[v].size() != 4) throw precondition_error("every vertex must have degree exactly 4");
    std::copy(inc[v].begin(), inc[v].end(), f.incidence[v].begin());
  }
  return f;
}

MultiGraph to_multigraph(const FourRegularGraph& f) {
  MultiGraph g(f.n);
  for (const auto& e : f.edges) g.add_edge(e[0], e[1]);
  return g;
}

Circuit canonical_circuit(Circuit c) {
  const int m = static_cast<int>(c.size());
  if (m == 0) return c;
  Circuit r(m);
  for (int i = 0; i < m; ++i)
    r[i] = {c[m - 1 - i].vertex, c[m - 1 - i].out_half, c[m - 1 - i].in_half};
  Circuit best = c;
  Circuit cand(m);
  for (const Circuit* base : {&c, &r}) {
    for (int k = 0; k < m; ++k) {
      for (int i = 0; i < m; ++i) cand[i] = (*base)[(k + i) % m];
      if (cand < best) best = cand;
    }
  }
  return best;
}

std::vector<int> word_of(const Circuit& c) {
  std::vector<int> w;
  w.reserve(c.size());
  for (const auto& s : c) w.push_back(s.vertex);
  return w;
}

Transition make_transition(const FourRegularGraph& f, int v,
                           std::array<std::array<int, 2>, 2> pairs) {
  if (v < 0 || v >= f.n) throw precondition_error("transition vertex outside the graph");
  pairs = normalized_pairs(pairs);
  std::array<int, 4> got{pairs[0][0], pairs[0][1], pairs[1][0], pairs[1][1]};
  std::sort(got.begin(), got.end());
  if (got != f.incidence[v])
    throw precondition_error("transition must pair the four half-edges at its vertex");
  return {v, pairs};
}

std::array<Transition, 3> transitions_at(const FourRegularGraph& f, int v) {
  if (v < 0 || v >= f.n) throw precondition_error("transition vertex outside the graph");
  const auto& h = f.incidence[v];
  return {Transition{v, {{{h[0], h[1]}, {h[2], h[3]}}}},
          Transition{v, {{{h[0], h[2]}, {h[1], h[3]}}}},
          Transition{v, {{{h[0], h[3]}, {h[1], h[2]}}}}};
}

std::string transition_key(const FourRegularGraph& f, const Transition& t) {
  auto pairs = normalized_pairs(t.pairs);
  std::string s = f.name_of(t.vertex) + ":";
  for (const auto& pr : pairs)
    s += "(" + f.half_id(pr[0]) + " " + f.half_id(pr[1]) + ")";
  return s;
}

EulerSystem euler_system(FourRegularGraph g, std::vector<Circuit> circuits) {
  std::vector<char> used(g.half_count(), 0);
  for (const auto& c : circuits) {
    if (c.empty()) throw precondition_error("euler circuit may not be empty");
    const int m = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
      const auto& s = c[i];
      if (s.in_half < 0 || s.in_half >= g.half_count() || s.out_half < 0 ||
          s.out_half >= g.half_count() || g.vertex_of_half(s.in_half) != s.vertex ||
          g.vertex_of_half(s.out_half) != s.vertex)
        throw precondition_error("circuit step does not sit on its vertex");
      if ((s.out_half ^ 1) != c[(i + 1) % m].in_half)
        throw precondition_error("consecutive circuit steps must share an edge");
      for (int h : {s.in_half, s.out_half}) {
        if (used[h]) throw precondition_error("circuits reuse a half-edge");
        used[h] = 1;
      }
    }
  }
  if (std::find(used.begin(), used.end(), char{0}) != used.end())
    throw precondition_error("circuits must cover every edge");
  if (static_cast<int>(circuits.size()) != component_count(g))
    throw precondition_error("an euler system has exactly one circuit per component");
  for (auto& c : circuits) c = canonical_circuit(std::move(c));
  std::sort(circuits.begin(), circuits.end());
  return {std::move(g), std::move(circuits)};
}

std::vector<EulerSystem> euler_systems(const FourRegularGraph& f, EulerMode mode) {
  if (mode == EulerMode::kOne) {
    std::vector<char> edge_used(f.edge_count(), 0);
    std::vector<char> vertex_done(f.n, 0);
    std::vector<int> cursor(f.n, 0);
    std::vector<Circuit> circuits;
    for (int start = 0; start < f.n; ++start) {
      if (vertex_done[start]) continue;
      std::vector<int> tour;  // out-halves of the component tour, built backwards
      std::function<void(int)> go = [&](int v) {
        vertex_done[v] = 1;
        while (cursor[v] < 4) {
          int h = f.incidence[v][cursor[v]++];
          if (edge_used[h >> 1]) continue;
          edge_used[h >> 1] = 1;
          go(f.vertex_of_half(h ^ 1));
          tour.push_back(h);
        }
      };
      go(start);
      std::reverse(tour.begin(), tour.end());
      const int m = static_cast<int>(tour.size());
      Circuit c(m);
      for (int i = 0; i < m; ++i) {
        int out = tour[i];
        int in = tour[(i + m - 1) % m] ^ 1;
        c[i] = {f.vertex_of_half(out), in, out};
      }
      circuits.push_back(std::move(c));
    }
    return {euler_system(f, std::move(circuits))};
  }

  if (f.n > kEulerAllMax)
    throw guard_error("euler system enumeration is limited to 13 vertices");
  const int comps = component_count(f);
  std::vector<std::array<Transition, 3>> menu;
  menu.reserve(f.n);
  for (int v = 0; v < f.n; ++v) menu.push_back(transitions_at(f, v));
  std::vector<EulerSystem> out;
  std::vector<int> pick(f.n, 0);
  std::vector<Transition> ts(f.n);
  while (true) {
    for (int v = 0; v < f.n; ++v) ts[v] = menu[v][pick[v]];
    auto circuits = trace_circuits(f, through_map(f, ts));
    if (static_cast<int>(circuits.size()) == comps)
      out.push_back(euler_system(f, std::move(circuits)));
    int v = 0;
    while (v < f.n && pick[v] == 2) pick[v++] = 0;
    if (v == f.n) break;
    ++pick[v];
  }
  std::sort(out.begin(), out.end());
  return out;
}

EulerSystem kappa_transform(const EulerSystem& c, int v) {
  if (v < 0 || v >= c.g.n) throw precondition_error("kappa vertex outside the graph");
  std::vector<Circuit> words = c.words;
  for (auto& w : words) {
    std::vector<int> pos;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (w[i].vertex == v) pos.push_back(i);
    if (pos.empty()) continue;
    const int p = pos[0], q = pos[1];
    Circuit nw(w.begin(), w.begin() + p);
    nw.push_back({v, w[p].in_half, w[q].in_half});
    for (int i = q - 1; i > p; --i) nw.push_back({w[i].vertex, w[i].out_half, w[i].in_half});
    nw.push_back({v, w[p].out_half, w[q].out_half});
    nw.insert(nw.end(), w.begin() + q + 1, w.end());
    w = std::move(nw);
    return euler_system(c.g, std::move(words));
  }
  throw std::logic_error("euler system misses a vertex");
}

LoopedGraph interlacement(const EulerSystem& c) {
  std::vector<std::vector<int>> ws;
  ws.reserve(c.words.size());
  for (const auto& w : c.words) ws.push_back(word_of(w));
  return word_interlacement(ws, c.g.n, c.g.names);
}

int transition_letter(const EulerSystem& c, const Transition& t) {
  Transition probe = make_transition(c.g, t.vertex, t.pairs);
  auto vis = visits_of(c, t.vertex);
  const int i1 = vis[0].in_half, o1 = vis[0].out_half;
  const int i2 = vis[1].in_half, o2 = vis[1].out_half;
  const auto phi = normalized_pairs({{{i1, o1}, {i2, o2}}});
  const auto chi = normalized_pairs({{{i1, o2}, {i2, o1}}});
  const auto psi = normalized_pairs({{{i1, i2}, {o1, o2}}});
  if (probe.pairs == phi) return 0;
  if (probe.pairs == chi) return 1;
  if (probe.pairs == psi) return 2;
  throw std::logic_error("transition matches no letter");
}

Transition transition_of(const EulerSystem& c, int v, int letter) {
  if (letter < 0 || letter > 2) throw precondition_error("letter must be 0, 1 or 2");
  if (v < 0 || v >= c.g.n) throw precondition_error("transition vertex outside the graph");
  auto vis = visits_of(c, v);
  const int i1 = vis[0].in_half, o1 = vis[0].out_half;
  const int i2 = vis[1].in_half, o2 = vis[1].out_half;
  std::array<std::array<int, 2>, 2> pairs;
  if (letter == 0)
    pairs = {{{i1, o1}, {i2, o2}}};
  else if (letter == 1)
    pairs = {{{i1, o2}, {i2, o1}}};
  else
    pairs = {{{i1, i2}, {o1, o2}}};
  return {v, normalized_pairs(pairs)};
}

CircuitPartition circuit_partition(const FourRegularGraph& f, std::vector<Transition> ts) {
  if (static_cast<int>(ts.size()) != f.n)
    throw precondition_error("a circuit partition has one transition per vertex");
  for (int v = 0; v < f.n; ++v) {
    if (ts[v].vertex != v)
      throw precondition_error("transitions must be listed in vertex order");
    ts[v] = make_transition(f, v, ts[v].pairs);
  }
  auto circuits = trace_circuits(f, through_map(f, ts));
  return {f, std::move(ts), std::move(circuits)};
}

Gf2Matrix transition_matrix(const EulerSystem& c, const CircuitPartition& p) {
  if (!(c.g == p.g))
    throw precondition_error("euler system and circuit partition live on different graphs");
  IsotropicPresentation pres = ias_presentation(interlacement(c));
  const int n = c.g.n;
  Gf2Matrix m(n, n);
  for (int v = 0; v < n; ++v) {
    int col = transition_letter(c, p.transitions[v]) * n + v;
    for (int r = 0; r < n; ++r) m.set(r, v, pres.ias.get(r, col));
  }
  return m;
}

BinaryMatroid transition_matroid(const EulerSystem& c) {
  IsotropicPresentation pres = ias_presentation(interlacement(c));
  const int n = c.g.n;
  std::vector<std::string> labels(3 * n);
  for (int letter = 0; letter < 3; ++letter)
    for (int v = 0; v < n; ++v)
      labels[letter * n + v] = transition_key(c.g, transition_of(c, v, letter));
  return BinaryMatroid::from_matrix(pres.ias, std::move(labels));
}

TouchGraph touch_graph(const CircuitPartition& p) {
  std::map<std::array<int, 2>, int> owner;  // single transition -> circuit index
  for (int i = 0; i < static_cast<int>(p.circuits.size()); ++i) {
    for (const auto& s : p.circuits[i]) {
      owner[{std::min(s.in_half, s.out_half), std::max(s.in_half, s.out_half)}] = i;
    }
  }
  MultiGraph tg(static_cast<int>(p.circuits.size()));
  for (int v = 0; v < p.g.n; ++v) {
    int c1 = owner.at(p.transitions[v].pairs[0]);
    int c2 = owner.at(p.transitions[v].pairs[1]);
    tg.add_edge(std::min(c1, c2), std::max(c1, c2), p.g.name_of(v));
  }
  return {std::move(tg), p.circuits};
}

Gf2Matrix cut_space_matrix(const MultiGraph& g) {
  if (g.edges.size() > 64) throw guard_error("cut space matrix is limited to 64 edges");
  Gf2Matrix m(g.n, static_cast<int>(g.edges.size()));
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (g.edges[e][0] == g.edges[e][1]) continue;
    m.set(g.edges[e][0], e, true);
    m.set(g.edges[e][1], e, true);
  }
  return m;
}

Detachment detach(const FourRegularGraph& f, const Transition& t0) {
  Transition t = make_transition(f, t0.vertex, t0.pairs);
  const int v = t.vertex;
  std::vector<int> tmap(f.half_count(), -1);
  for (const auto& pr : t.pairs) {
    tmap[pr[0]] = pr[1];
    tmap[pr[1]] = pr[0];
  }
  auto at_v = [&](int h) { return f.vertex_of_half(h) == v; };
  std::vector<int> vertex_map(f.n);
  for (int w = 0; w < f.n; ++w) vertex_map[w] = w < v ? w : (w == v ? -1 : w - 1);
  std::vector<int> half_map(f.half_count(), -1);
  std::vector<std::array<int, 2>> new_edges;
  for (int e = 0; e < f.edge_count(); ++e) {
    if (at_v(2 * e) || at_v(2 * e + 1)) continue;
    half_map[2 * e] = 2 * static_cast<int>(new_edges.size());
    half_map[2 * e + 1] = half_map[2 * e] + 1;
    new_edges.push_back({vertex_map[f.edges[e][0]], vertex_map[f.edges[e][1]]});
  }
  // splice the chains that pass through v; chains with both ends at v are
  // free edges and vanish
  std::vector<char> consumed(f.half_count(), 0);
  for (int g0 = 0; g0 < f.half_count(); ++g0) {
    if (at_v(g0) || !at_v(g0 ^ 1) || consumed[g0]) continue;
    int x = g0 ^ 1;
    int g1 = -1;
    while (true) {
      int y = tmap[x];
      if (!at_v(y ^ 1)) {
        g1 = y ^ 1;
        break;
      }
      x = y ^ 1;
    }
    consumed[g0] = consumed[g1] = 1;
    int w0 = vertex_map[f.vertex_of_half(g0)];
    int w1 = vertex_map[f.vertex_of_half(g1)];
    int e = static_cast<int>(new_edges.size());
    if (w0 <= w1) {
      half_map[g0] = 2 * e;
      half_map[g1] = 2 * e + 1;
      new_edges.push_back({w0, w1});
    } else {
      half_map[g1] = 2 * e;
      half_map[g0] = 2 * e + 1;
      new_edges.push_back({w1, w0});
    }
  }
  std::vector<std::string> names;
  if (!f.names.empty()) {
    names = f.names;
    names.erase(names.begin() + v);
  }
  return {four_regular(f.n - 1, std::move(new_edges), std::move(names)), std::move(vertex_map),
          std::move(half_map)};
}

std::vector<FourRegularGraph> enumerate_four_regular(int n, bool simple_only) {
  if (n < 0 || n > kEnumerateMax)
    throw guard_error("four-regular enumeration is limited to 10 vertices");
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  std::vector<int> res(n, 4);
  std::map<std::string, FourRegularGraph> found;
  auto record = [&]() {
    std::vector<std::array<int, 2>> edges;
    MultiGraph mg(n);
    for (int u = 0; u < n; ++u) {
      for (int k = 0; k < mult[u][u]; ++k) edges.push_back({u, u});
      for (int w = u + 1; w < n; ++w)
        for (int k = 0; k < mult[u][w]; ++k) edges.push_back({u, w});
    }
    for (const auto& e : edges) mg.add_edge(e[0], e[1]);
    std::string key = canonical_form(mg).key;
    if (!found.count(key)) found.emplace(std::move(key), four_regular(n, edges));
  };
  std::function<void(int)> place;
  std::function<void(int, int, int)> fill;
  place = [&](int u) {
    if (u == n) {
      record();
      return;
    }
    if (res[u] == 0) {
      place(u + 1);
      return;
    }
    const int max_loops = simple_only ? 0 : res[u] / 2;
    for (int l = 0; l <= max_loops; ++l) {
      mult[u][u] = l;
      fill(u, u + 1, res[u] - 2 * l);
      mult[u][u] = 0;
    }
  };
  fill = [&](int u, int w, int r) {
    if (r == 0) {
      int saved = res[u];
      res[u] = 0;
      place(u + 1);
      res[u] = saved;
      return;
    }
    if (w == n) return;
    int cap = std::min(r, res[w]);
    if (simple_only) cap = std::min(cap, 1);
    for (int k = 0; k <= cap; ++k) {
      mult[u][w] = mult[w][u] = k;
      res[w] -= k;
      fill(u, w + 1, r - k);
      res[w] += k;
      mult[u][w] = mult[w][u] = 0;
    }
  };
  if (simple_only && n >= 5) {
    // every class has a labeling whose first vertex meets exactly 1, 2, 3, 4
    for (int w = 1; w <= 4; ++w) {
      mult[0][w] = mult[w][0] = 1;
      --res[w];
    }
    res[0] = 0;
    place(1);
  } else if (!simple_only || n == 0) {
    place(0);
  }
  std::vector<FourRegularGraph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

RotationSystem rotation_system(MultiGraph g, std::vector<std::vector<int>> rot) {
  const int half_count = 2 * static_cast<int>(g.edges.size());
  if (static_cast<int>(rot.size()) != g.n)
    throw precondition_error("a rotation system has one rotation per vertex");
  std::vector<char> seen(half_count, 0);
  for (int v = 0; v < g.n; ++v) {
    for (int h : rot[v]) {
      if (h < 0 || h >= half_count)
        throw precondition_error("half-edge id outside the graph");
      if (g.edges[h >> 1][h & 1] != v)
        throw precondition_error("half-edge listed at the wrong vertex");
      if (seen[h]) throw precondition_error("half-edge listed twice in the rotation");
      seen[h] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), char{0}) != seen.end())
    throw precondition_error("rotation must list every half-edge");
  return {std::move(g), std::move(rot)};
}

std::vector<std::vector<int>> faces(const RotationSystem& h) {
  const int half_count = 2 * static_cast<int>(h.g.edges.size());
  std::vector<int> at_vertex(half_count), at_index(half_count);
  for (int v = 0; v < h.g.n; ++v) {
    for (int i = 0; i < static_cast<int>(h.rot[v].size()); ++i) {
      at_vertex[h.rot[v][i]] = v;
      at_index[h.rot[v][i]] = i;
    }
  }
  auto next = [&](int d) {
    int p = d ^ 1;
    const auto& r = h.rot[at_vertex[p]];
    return r[(at_index[p] + 1) % r.size()];
  };
  std::vector<char> seen(half_count, 0);
  std::vector<std::vector<int>> orbits;
  for (int d0 = 0; d0 < half_count; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = next(d);
    } while (d != d0);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_planar_rotation(const RotationSystem& h) {
  DisjointSet ds(h.g.n);
  for (const auto& e : h.g.edges) ds.unite(e[0], e[1]);
  std::vector<int> vcount(h.g.n, 0), ecount(h.g.n, 0), fcount(h.g.n, 0);
  for (int v = 0; v < h.g.n; ++v) ++vcount[ds.find(v)];
  for (const auto& e : h.g.edges) ++ecount[ds.find(e[0])];
  for (const auto& orbit : faces(h))
    ++fcount[ds.find(h.g.edges[orbit[0] >> 1][orbit[0] & 1])];
  for (int v = 0; v < h.g.n; ++v) {
    if (ds.find(v) != v) continue;
    int fc = ecount[v] == 0 ? 1 : fcount[v];
    if (vcount[v] - ecount[v] + fc != 2) return false;
  }
  return true;
}

std::vector<int> boundary_trace(const RotationSystem& h, const std::vector<int>& tree) {
  const int n = h.g.n;
  const int edge_count = static_cast<int>(h.g.edges.size());
  if (n == 0) throw precondition_error("boundary trace needs at least one vertex");
  if (edge_count > 32) throw guard_error("boundary trace is limited to 32 edges");
  DisjointSet ds(n);
  int comps = n;
  for (const auto& e : h.g.edges)
    if (ds.unite(e[0], e[1])) --comps;
  if (comps != 1) throw precondition_error("boundary trace needs a connected graph");
  if (!is_planar_rotation(h)) throw precondition_error("rotation system is not planar");
  std::vector<char> in_tree(edge_count, 0);
  if (static_cast<int>(tree.size()) != n - 1)
    throw precondition_error("tree is not a spanning tree");
  DisjointSet ts(n);
  for (int e : tree) {
    if (e < 0 || e >= edge_count) throw precondition_error("tree edge outside the graph");
    if (in_tree[e]) throw precondition_error("tree edge listed twice");
    in_tree[e] = 1;
    if (!ts.unite(h.g.edges[e][0], h.g.edges[e][1]))
      throw precondition_error("tree is not a spanning tree");
  }

  const int half_count = 2 * edge_count;
  std::vector<int> at_vertex(half_count), at_index(half_count);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(h.rot[v].size()); ++i) {
      at_vertex[h.rot[v][i]] = v;
      at_index[h.rot[v][i]] = i;
    }
  }
  std::vector<int> word;
  if (edge_count > 0) {
    // walk the boundary of the thickened tree: tree edges are crossed, chord
    // slots are passed by
    int v = 0, i = 0;
    int steps = 0;
    do {
      int half = h.rot[v][i];
      int e = half >> 1;
      word.push_back(e);
      if (in_tree[e]) {
        int p = half ^ 1;
        v = at_vertex[p];
        i = (at_index[p] + 1) % static_cast<int>(h.rot[v].size());
      } else {
        i = (i + 1) % static_cast<int>(h.rot[v].size());
      }
      if (++steps > half_count) throw std::logic_error("boundary trace failed to close");
    } while (!(v == 0 && i == 0));
    if (steps != half_count)
      throw std::logic_error("boundary trace failed to cover the boundary");
  }

  // asserted postconditions: DOW; bipartite interlacement between tree edges
  // and chords; chord neighborhoods are fundamental circuits
  std::vector<int> uses(edge_count, 0);
  for (int e : word) ++uses[e];
  for (int e = 0; e < edge_count; ++e)
    if (uses[e] != 2) throw std::logic_error("boundary trace postcondition violated: not a DOW");
  LoopedGraph il = word_interlacement({word}, edge_count);
  for (int e = 0; e < edge_count; ++e)
    for (int e2 = e + 1; e2 < edge_count; ++e2)
      if (il.has_edge(e, e2) && in_tree[e] == in_tree[e2])
        throw std::logic_error("boundary trace postcondition violated: not bipartite");
  std::vector<std::vector<std::array<int, 2>>> tree_adj(n);  // (tree edge, far end)
  for (int e = 0; e < edge_count; ++e) {
    if (!in_tree[e]) continue;
    tree_adj[h.g.edges[e][0]].push_back({e, h.g.edges[e][1]});
    tree_adj[h.g.edges[e][1]].push_back({e, h.g.edges[e][0]});
  }
  for (int e = 0; e < edge_count; ++e) {
    if (in_tree[e]) continue;
    std::vector<int> parent_edge(n, -1), parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{h.g.edges[e][0]};
    seen[h.g.edges[e][0]] = 1;
    for (size_t q = 0; q < queue.size(); ++q) {
      for (const auto& [te, far] : tree_adj[queue[q]]) {
        if (seen[far]) continue;
        seen[far] = 1;
        parent_edge[far] = te;
        parent[far] = queue[q];
        queue.push_back(far);
      }
    }
    uint32_t fundamental = uint32_t{1} << e;
    for (int w = h.g.edges[e][1]; w != h.g.edges[e][0]; w = parent[w])
      fundamental |= uint32_t{1} << parent_edge[w];
    uint32_t closed = il.adj[e] | (uint32_t{1} << e);
    if (closed != fundamental)
      throw std::logic_error(
          "boundary trace postcondition violated: chord neighborhood is not a fundamental circuit");
  }
  return word;
}

LoopedGraph word_interlacement(const std::vector<std::vector<int>>& words, int n,
                               std::vector<std::string> names) {
  if (n < 0 || n > 32) throw guard_error("word interlacement is limited to 32 letters");
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw precondition_error("name list length must equal letter count");
  std::vector<int> word_index(n, -1);
  std::vector<std::array<int, 2>> where(n, {-1, -1});
  for (int wi = 0; wi < static_cast<int>(words.size()); ++wi) {
    for (int i = 0; i < static_cast<int>(words[wi].size()); ++i) {
      int letter = words[wi][i];
      if (letter < 0 || letter >= n) throw precondition_error("letter outside the alphabet");
      if (word_index[letter] == -1) {
        word_index[letter] = wi;
        where[letter][0] = i;
      } else if (word_index[letter] == wi && where[letter][1] == -1) {
        where[letter][1] = i;
      } else {
        throw precondition_error("each letter must appear exactly twice in one word");
      }
    }
  }
  for (int letter = 0; letter < n; ++letter)
    if (where[letter][1] == -1)
      throw precondition_error("each letter must appear exactly twice in one word");
  LoopedGraph g(n);
  g.names = std::move(names);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (word_index[a] != word_index[b]) continue;
      int inside = 0;
      for (int i : where[b])
        if (i > where[a][0] && i < where[a][1]) ++inside;
      if (inside == 1) g.add_edge(a, b);
    }
  }
  return g;
}

EulerSystem parse_dows(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string t;
    while (ls >> t) tokens.push_back(t);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  std::map<std::string, std::array<int, 2>> counts;  // (line, occurrences)
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    for (const auto& tok : lines[li]) {
      auto it = counts.find(tok);
      if (it == counts.end())
        counts.emplace(tok, std::array<int, 2>{li, 1});
      else if (it->second[0] == li)
        ++it->second[1];
      else
        throw precondition_error("each vertex token must appear exactly twice in one component");
    }
  }
  std::vector<std::string> names;
  for (const auto& [tok, c] : counts) {
    if (c[1] != 2)
      throw precondition_error("each vertex token must appear exactly twice in one component");
    names.push_back(tok);
  }
  std::map<std::string, int> index;
  for (int v = 0; v < static_cast<int>(names.size()); ++v) index[names[v]] = v;

  std::vector<std::array<int, 2>> edges;
  std::vector<Circuit> circuits;
  for (const auto& tokens : lines) {
    const int m = static_cast<int>(tokens.size());
    std::vector<int> out_half(m), in_half(m);
    for (int i = 0; i < m; ++i) {
      int u = index[tokens[i]];
      int w = index[tokens[(i + 1) % m]];
      int e = static_cast<int>(edges.size());
      edges.push_back({std::min(u, w), std::max(u, w)});
      out_half[i] = u <= w ? 2 * e : 2 * e + 1;
      in_half[(i + 1) % m] = out_half[i] ^ 1;
    }
    Circuit c(m);
    for (int i = 0; i < m; ++i) c[i] = {index[tokens[i]], in_half[i], out_half[i]};
    circuits.push_back(std::move(c));
  }
  return euler_system(four_regular(static_cast<int>(names.size()), std::move(edges), names),
                      std::move(circuits));
}

std::string dows_to_text(const EulerSystem& c) {
  // emit each word in its name-lexicographic minimal rotation/reflection so
  // the text depends only on the named cyclic words, not on edge indexing
  std::vector<std::string> lines;
  for (const auto& w : c.words) {
    const int m = static_cast<int>(w.size());
    std::vector<std::string> seq(m), best;
    for (int i = 0; i < m; ++i) seq[i] = c.g.name_of(w[i].vertex);
    std::vector<std::string> cand(m);
    for (int rev = 0; rev < 2; ++rev) {
      for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) cand[i] = seq[(k + i) % m];
        if (best.empty() || cand < best) best = cand;
      }
      std::reverse(seq.begin(), seq.end());
    }
    std::string line;
    for (int i = 0; i < m; ++i) {
      if (i) line += ' ';
      line += best[i];
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + '\n';
  return out;
}

RotationSystem parse_rotation(const MultiGraph& g, const std::string& text) {
  std::vector<std::vector<int>> rot(g.n);
  std::vector<char> got(g.n, 0);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head, vtok;
    if (!(ls >> head)) continue;
    if (head != "r") throw precondition_error("rotation lines must start with r");
    if (!(ls >> vtok) || vtok.empty() || vtok.back() != ':')
      throw precondition_error("rotation line needs a vertex followed by a colon");
    int v = -1;
    try {
      size_t used = 0;
      v = std::stoi(vtok.substr(0, vtok.size() - 1), &used);
      if (used + 1 != vtok.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= g.n) throw precondition_error("rotation vertex outside the graph");
    if (got[v]) throw precondition_error("rotation vertex listed twice");
    got[v] = 1;
    std::string htok;
    while (ls >> htok) {
      auto dot = htok.find('.');
      if (dot == std::string::npos)
        throw precondition_error("half-edge ids look like <edge>.<0|1>");
      int e = -1, side = -1;
      try {
        size_t used = 0;
        e = std::stoi(htok.substr(0, dot), &used);
        if (used != dot) e = -1;
        std::string s = htok.substr(dot + 1);
        used = 0;
        side = std::stoi(s, &used);
        if (used != s.size()) side = -1;
      } catch (const std::exception&) {
        e = -1;
      }
      if (e < 0 || e >= static_cast<int>(g.edges.size()) || (side != 0 && side != 1))
        throw precondition_error("half-edge ids look like <edge>.<0|1>");
      rot[v].push_back(2 * e + side);
    }
  }
  if (std::find(got.begin(), got.end(), char{0}) != got.end())
    throw precondition_error("rotation must cover every vertex");
  return rotation_system(g, std::move(rot));
}

std::string rotation_to_text(const RotationSystem& h) {
  std::string out;
  for (int v = 0; v < h.g.n; ++v) {
    out += "r " + std::to_string(v) + ":";
    for (int half : h.rot[v])
      out += " " + std::to_string(half >> 1) + "." + std::to_string(half & 1);
    out += '\n';
  }
  return out;
}

}  // namespace cgm
