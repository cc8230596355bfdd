#include "cgm/fixtures.hpp"

#include <string>
#include <vector>

#include "cgm/errors.hpp"

namespace cgm {
namespace fixtures {

namespace {

LoopedGraph named_graph(int n) {
  LoopedGraph g(n);
  g.names.resize(n);
  for (int v = 0; v < n; ++v) g.names[v] = std::to_string(v + 1);
  return g;
}

}  // namespace

LoopedGraph wheel(int k) {
  if (k < 3) throw precondition_error("wheel: rim needs at least 3 vertices");
  LoopedGraph g = named_graph(k + 1);
  for (int v = 1; v <= k; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v == k ? 1 : v + 1);
  }
  return g;
}

LoopedGraph w5() { return wheel(5); }
LoopedGraph w7() { return wheel(7); }

LoopedGraph bw3() {
  LoopedGraph g = named_graph(7);
  for (int v = 0; v < 6; ++v) g.add_edge(v, (v + 1) % 6);
  g.add_edge(6, 0);
  g.add_edge(6, 2);
  g.add_edge(6, 4);
  return g;
}

LoopedGraph bw4() {
  LoopedGraph g = named_graph(9);
  for (int v = 0; v < 8; ++v) g.add_edge(v, (v + 1) % 8);
  g.add_edge(8, 0);
  g.add_edge(8, 2);
  g.add_edge(8, 4);
  g.add_edge(8, 6);
  return g;
}

std::string k44_dow() { return "a 1 b 2 c 3 b 4 a 3 d 4 c 1 d 2"; }

LoopedGraph k44_interlacement() {
  LoopedGraph g(8);
  for (const char* s : {"1", "2", "3", "4", "a", "b", "c", "d"}) g.names.push_back(s);
  const int edges[13][2] = {{0, 1}, {0, 4}, {0, 7}, {1, 4}, {1, 5}, {2, 3}, {2, 4},
                            {2, 5}, {3, 4}, {3, 7}, {4, 6}, {5, 6}, {6, 7}};
  for (auto& e : edges) g.add_edge(e[0], e[1]);
  return g;
}

Gf2Matrix k5_mcp() {
  const int rows[5][5] = {{1, 0, 1, 1, 0},
                          {0, 1, 1, 1, 0},
                          {0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0},
                          {0, 0, 1, 0, 1}};
  Gf2Matrix m(5, 5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      if (rows[r][c]) m.set(r, c, true);
  return m;
}

Gf2Matrix k5_mdp() {
  const int rows[5][5] = {{1, 1, 1, 0, 1},
                          {1, 1, 1, 0, 1},
                          {1, 1, 0, 0, 0},
                          {1, 0, 0, 1, 1},
                          {1, 1, 0, 0, 0}};
  Gf2Matrix m(5, 5);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      if (rows[r][c]) m.set(r, c, true);
  return m;
}

IntMatrix pu_b() {
  const int rows[4][8] = {{1, 0, 0, 0, 0, 1, 1, 1},
                          {0, 1, 0, 0, -1, 0, 1, 1},
                          {0, 0, 1, 0, -1, -1, 0, 1},
                          {0, 0, 0, 1, -1, -1, -1, 0}};
  IntMatrix m(4, 8);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 8; ++c) m.at(r, c) = rows[r][c];
  return m;
}

MultiGraph tg_doubled_c4() {
  MultiGraph g(4);
  for (int v = 0; v < 4; ++v) {
    g.add_edge(v, (v + 1) % 4);
    g.add_edge(v, (v + 1) % 4);
  }
  return g;
}

MultiGraph tg_k4_plus2() {
  MultiGraph g(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  return g;
}

std::string w7_special_transversal() { return "ppcppssp"; }

}  // namespace fixtures
}  // namespace cgm
