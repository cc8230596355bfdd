#include "cgm/graph.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>
#include <unordered_set>

#include "cgm/errors.hpp"

namespace cgm {

LoopedGraph::LoopedGraph(int nn) : n(nn), adj(nn, 0) {
  if (nn < 0 || nn > 32) throw precondition_error("graph order out of range (0..32)");
}

void LoopedGraph::add_edge(int u, int v) {
  adj[u] |= uint32_t{1} << v;
  adj[v] |= uint32_t{1} << u;
}

void LoopedGraph::toggle_edge(int u, int v) {
  adj[u] ^= uint32_t{1} << v;
  if (u != v) adj[v] ^= uint32_t{1} << u;
}

bool LoopedGraph::is_simple() const {
  for (int v = 0; v < n; ++v)
    if (has_loop(v)) return false;
  return true;
}

int LoopedGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += __builtin_popcount(adj[v] & (~uint32_t{0} >> (31 - v)));
  return total;
}

std::string LoopedGraph::name_of(int v) const {
  if (v < static_cast<int>(names.size()) && !names[v].empty()) return names[v];
  return std::to_string(v);
}

std::string LoopedGraph::labeled_key() const {
  std::string k;
  k.reserve(1 + 4 * n);
  k.push_back(static_cast<char>(n));
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((adj[v] >> (8 * b)) & 0xff));
  return k;
}

LoopedGraph LoopedGraph::induced(uint32_t keep_mask) const {
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if ((keep_mask >> v) & 1u) keep.push_back(v);
  LoopedGraph out(static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i) {
    for (size_t j = i; j < keep.size(); ++j)
      if (has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (!names.empty()) out.names.push_back(name_of(keep[i]));
  }
  return out;
}

LoopedGraph simple_local_complement(const LoopedGraph& g, int v) {
  if (!g.is_simple()) throw precondition_error("simple local complementation needs a simple graph");
  LoopedGraph out = g;
  uint32_t nb = g.neighbors(v);
  for (int u = 0; u < g.n; ++u)
    if ((nb >> u) & 1u) out.adj[u] ^= nb & ~(uint32_t{1} << u);
  return out;
}

LoopedGraph nonsimple_local_complement(const LoopedGraph& g, int v) {
  LoopedGraph out = g;
  uint32_t nb = g.neighbors(v);
  for (int u = 0; u < g.n; ++u)
    if ((nb >> u) & 1u) out.adj[u] ^= nb;  // toggles pairs and the loop at u
  return out;
}

LoopedGraph loop_complement(const LoopedGraph& g, uint32_t vertex_mask) {
  LoopedGraph out = g;
  for (int v = 0; v < g.n; ++v)
    if ((vertex_mask >> v) & 1u) out.adj[v] ^= uint32_t{1} << v;
  return out;
}

LoopedGraph pivot(const LoopedGraph& g, int u, int v) {
  if (u == v || !g.has_edge(u, v)) throw precondition_error("pivot needs an existing non-loop edge");
  return simple_local_complement(simple_local_complement(simple_local_complement(g, u), v), u);
}

std::vector<uint32_t> components(const LoopedGraph& g) {
  std::vector<uint32_t> comps;
  uint32_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((seen >> s) & 1u) continue;
    uint32_t comp = uint32_t{1} << s;
    while (true) {
      uint32_t grow = comp;
      for (int v = 0; v < g.n; ++v)
        if ((comp >> v) & 1u) grow |= g.neighbors(v);
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

bool is_connected(const LoopedGraph& g) { return g.n <= 1 || components(g).size() == 1; }

int diameter(const LoopedGraph& g) {
  if (g.n == 0 || !is_connected(g)) return -1;
  int best = 0;
  for (int s = 0; s < g.n; ++s) {
    uint32_t reached = uint32_t{1} << s;
    int depth = 0;
    while (reached != (uint32_t{1} << g.n) - 1) {
      uint32_t grow = reached;
      for (int v = 0; v < g.n; ++v)
        if ((reached >> v) & 1u) grow |= g.neighbors(v);
      if (grow == reached) return -1;
      reached = grow;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

std::optional<uint32_t> bipartition(const LoopedGraph& g) {
  std::vector<int> side(g.n, -1);
  uint32_t mask = 0;
  for (int s = 0; s < g.n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      uint32_t nb = g.neighbors(v);
      for (int u = 0; u < g.n; ++u) {
        if (!((nb >> u) & 1u)) continue;
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          if (side[u]) mask |= uint32_t{1} << u;
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return mask;
}

CanonResult canonical_form(const LoopedGraph& g) {
  std::vector<std::vector<int>> m(g.n, std::vector<int>(g.n, 0));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) m[u][v] = g.has_edge(u, v) ? 1 : 0;
  return canon_symmetric(m);
}

std::vector<LoopedGraph> local_equivalence_orbit(const LoopedGraph& g, OrbitMode mode,
                                                 bool looped_mode, uint64_t cap) {
  if (!looped_mode && !g.is_simple())
    throw precondition_error("simple-mode orbit needs a simple graph");
  std::vector<LoopedGraph> out;
  std::unordered_set<std::string> seen;
  auto key_of = [&](const LoopedGraph& x) {
    return mode == OrbitMode::kLabeled ? x.labeled_key() : canonical_form(x).key;
  };
  std::vector<LoopedGraph> queue{g};
  seen.insert(key_of(g));
  out.push_back(g);
  size_t head = 0;
  while (head < queue.size()) {
    LoopedGraph cur = queue[head++];
    std::vector<LoopedGraph> next;
    for (int v = 0; v < g.n; ++v) {
      if (looped_mode) {
        next.push_back(nonsimple_local_complement(cur, v));
        next.push_back(loop_complement(cur, uint32_t{1} << v));
      } else if (cur.degree(v) > 0) {
        next.push_back(simple_local_complement(cur, v));
      }
    }
    for (auto& x : next) {
      std::string k = key_of(x);
      if (seen.count(k)) continue;
      if (out.size() >= cap) throw guard_error("local equivalence orbit exceeds cap");
      seen.insert(k);
      out.push_back(x);
      queue.push_back(x);
    }
  }
  return out;
}

namespace {

struct OrbitNode {
  LoopedGraph graph;      // labeled snapshot reached from the start graph
  int parent = -1;        // index into node list
  int lc_vertex = -1;     // local complementation producing this from parent
};

}  // namespace

std::optional<VertexMinorWitness> is_vertex_minor(const LoopedGraph& g, const LoopedGraph& h,
                                                  uint64_t cap) {
  if (!g.is_simple() || !h.is_simple())
    throw precondition_error("vertex-minor test needs simple graphs");
  if (h.n > g.n) return std::nullopt;
  const std::string target = canonical_form(h).key;

  auto scan = [&](const LoopedGraph& cand) -> std::optional<uint32_t> {
    // any induced subgraph of cand isomorphic to h?
    std::vector<int> pick(h.n);
    for (int i = 0; i < h.n; ++i) pick[i] = i;
    while (true) {
      uint32_t mask = 0;
      for (int i : pick) mask |= uint32_t{1} << i;
      if (canonical_form(cand.induced(mask)).key == target) return mask;
      int i = h.n - 1;
      while (i >= 0 && pick[i] == cand.n - h.n + i) --i;
      if (i < 0) return std::nullopt;
      ++pick[i];
      for (int j = i + 1; j < h.n; ++j) pick[j] = pick[j - 1] + 1;
    }
  };

  std::vector<OrbitNode> nodes;
  std::unordered_set<std::string> seen;
  nodes.push_back({g, -1, -1});
  seen.insert(canonical_form(g).key);
  size_t head = 0;
  while (head < nodes.size()) {
    size_t cur = head++;
    if (auto mask = scan(nodes[cur].graph)) {
      VertexMinorWitness w;
      for (int i = static_cast<int>(cur); i > 0; i = nodes[i].parent)
        w.lc_vertices.push_back(nodes[i].lc_vertex);
      std::reverse(w.lc_vertices.begin(), w.lc_vertices.end());
      for (int v = 0; v < g.n; ++v)
        if (!((*mask >> v) & 1u)) w.delete_vertices.push_back(v);
      return w;
    }
    for (int v = 0; v < g.n; ++v) {
      if (nodes[cur].graph.degree(v) == 0) continue;
      LoopedGraph x = simple_local_complement(nodes[cur].graph, v);
      std::string k = canonical_form(x).key;
      if (seen.count(k)) continue;
      if (nodes.size() >= cap) throw guard_error("vertex-minor orbit exceeds cap");
      seen.insert(k);
      nodes.push_back({std::move(x), static_cast<int>(cur), v});
    }
  }
  return std::nullopt;
}

LoopedGraph replay_witness(const LoopedGraph& g, const VertexMinorWitness& w) {
  LoopedGraph cur = g;
  for (int v : w.lc_vertices) cur = simple_local_complement(cur, v);
  uint32_t keep = (g.n == 32 ? ~uint32_t{0} : (uint32_t{1} << g.n) - 1);
  for (int v : w.delete_vertices) keep &= ~(uint32_t{1} << v);
  return cur.induced(keep);
}

std::vector<LoopedGraph> all_graphs_up_to_iso(int n) {
  if (n < 0 || n > 8) throw guard_error("graph census supported for n <= 8");
  std::vector<LoopedGraph> reps{LoopedGraph(0)};
  for (int k = 1; k <= n; ++k) {
    std::unordered_set<std::string> seen;
    std::vector<LoopedGraph> next;
    for (const auto& base : reps) {
      for (uint32_t mask = 0; mask < (uint32_t{1} << (k - 1)); ++mask) {
        LoopedGraph g(k);
        g.adj = base.adj;
        g.adj.resize(k, 0);
        for (int v = 0; v < k - 1; ++v)
          if ((mask >> v) & 1u) g.add_edge(v, k - 1);
        std::string key = canonical_form(g).key;
        if (seen.insert(key).second) next.push_back(g);
      }
    }
    reps = std::move(next);
  }
  return reps;
}

void MultiGraph::add_edge(int u, int v, std::string label) {
  if (u > v) std::swap(u, v);
  edges.push_back({u, v});
  edge_labels.push_back(std::move(label));
}

std::vector<std::vector<int>> MultiGraph::multiplicity_matrix() const {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (auto& e : edges) {
    if (e[0] == e[1])
      m[e[0]][e[0]] += 1;
    else {
      m[e[0]][e[1]] += 1;
      m[e[1]][e[0]] += 1;
    }
  }
  return m;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (auto& e : edges) {
    if (e[0] == v) ++d;
    if (e[1] == v) ++d;
  }
  return d;
}

CanonResult canonical_form(const MultiGraph& g) { return canon_symmetric(g.multiplicity_matrix()); }

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  return canonical_form(a).key == canonical_form(b).key;
}

}  // namespace cgm
