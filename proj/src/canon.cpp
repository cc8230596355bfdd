#include "cgm/canon.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace cgm {

namespace {

struct CanonSearch {
  const std::vector<std::vector<int>>& m;
  int n;
  bool have_best = false;
  std::string best_key;
  std::vector<int> best_perm;

  explicit CanonSearch(const std::vector<std::vector<int>>& mm) : m(mm), n(static_cast<int>(mm.size())) {}

  // one round of 1-WL refinement with edge values; colors become dense ints
  void refine(std::vector<int>& color) const {
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.reserve(2 * n + 2);
        s.push_back(color[v]);
        s.push_back(m[v][v]);
        std::vector<std::pair<int, int>> nb;
        nb.reserve(n - 1);
        for (int u = 0; u < n; ++u)
          if (u != v) nb.emplace_back(color[u], m[v][u]);
        std::sort(nb.begin(), nb.end());
        for (auto& p : nb) {
          s.push_back(p.first);
          s.push_back(p.second);
        }
        sig[v] = {std::move(s), v};
      }
      std::map<std::vector<int>, int> dense;
      for (auto& p : sig) dense.emplace(p.first, 0);
      int next = 0;
      for (auto& kv : dense) kv.second = next++;
      std::vector<int> nc(n);
      for (auto& p : sig) nc[p.second] = dense[p.first];
      if (nc == color) return;
      color = std::move(nc);
    }
  }

  void consider(const std::vector<int>& color) {
    // discrete coloring: vertex order by color
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[color[v]] = v;
    std::string key;
    key.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) key.push_back(static_cast<char>(m[perm[i]][perm[j]]));
    if (!have_best || key < best_key) {
      have_best = true;
      best_key = std::move(key);
      best_perm = std::move(perm);
    }
  }

  void descend(std::vector<int> color) {
    refine(color);
    int cell_color = -1, cell_size = 0;
    for (int c = 0;; ++c) {
      int cnt = 0;
      for (int v = 0; v < n; ++v)
        if (color[v] == c) ++cnt;
      if (cnt == 0) break;
      if (cnt > 1) {
        cell_color = c;
        cell_size = cnt;
        break;
      }
    }
    if (cell_color < 0) {
      consider(color);
      return;
    }
    (void)cell_size;
    for (int v = 0; v < n; ++v) {
      if (color[v] != cell_color) continue;
      std::vector<int> child = color;
      // individualize v: shift everything at or above its color up by one
      for (int u = 0; u < n; ++u)
        if (child[u] >= cell_color && u != v) ++child[u];
      descend(std::move(child));
    }
  }
};

}  // namespace

CanonResult canon_symmetric(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return {{}, ""};
  CanonSearch s(m);
  s.descend(std::vector<int>(n, 0));
  assert(s.have_best);
  return {s.best_perm, s.best_key};
}

}  // namespace cgm
