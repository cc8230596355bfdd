#include <random>
#include <set>

#include "cgm/errors.hpp"
#include "cgm/graph.hpp"
#include "doctest.h"

using namespace cgm;

namespace {

LoopedGraph path(int n) {
  LoopedGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

LoopedGraph cycle(int n) {
  LoopedGraph g = path(n);
  if (n > 2) g.add_edge(n - 1, 0);
  return g;
}

LoopedGraph wheel(int rim) {
  // hub 0, rim 1..rim
  LoopedGraph g(rim + 1);
  for (int v = 1; v <= rim; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v == rim ? 1 : v + 1);
  }
  return g;
}

LoopedGraph random_simple(std::mt19937_64& rng, int n, double p = 0.5) {
  LoopedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::uniform_real_distribution<>(0, 1)(rng) < p) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("local complementation of a path at its middle vertex") {
  LoopedGraph p3 = path(3);
  LoopedGraph t = simple_local_complement(p3, 1);
  CHECK(t.has_edge(0, 2));
  CHECK(t.has_edge(0, 1));
  CHECK(t.has_edge(1, 2));
  CHECK(t.edge_count() == 3);
}

TEST_CASE("simple local complementation is an involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    LoopedGraph g = random_simple(rng, n);
    int v = static_cast<int>(rng() % n);
    CHECK(simple_local_complement(simple_local_complement(g, v), v) == g);
  }
}

TEST_CASE("pivot equals lc-lc-lc and is symmetric in its edge") {
  std::mt19937_64 rng(12);
  int found = 0;
  while (found < 50) {
    LoopedGraph g = random_simple(rng, 6);
    for (int u = 0; u < 6 && found < 50; ++u)
      for (int v = u + 1; v < 6 && found < 50; ++v) {
        if (!g.has_edge(u, v)) continue;
        CHECK(pivot(g, u, v) == pivot(g, v, u));
        ++found;
      }
  }
}

TEST_CASE("nonsimple local complementation toggles loops in the neighborhood") {
  LoopedGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  LoopedGraph x = nonsimple_local_complement(g, 0);
  CHECK(x.has_edge(1, 2));
  CHECK(x.has_loop(1));
  CHECK(x.has_loop(2));
  CHECK(!x.has_loop(0));
  CHECK(nonsimple_local_complement(x, 0) == g);
}

TEST_CASE("loop complement toggles exactly the requested loops") {
  LoopedGraph g(4);
  g.add_edge(0, 1);
  LoopedGraph x = loop_complement(g, 0b1010);
  CHECK(x.has_loop(1));
  CHECK(x.has_loop(3));
  CHECK(!x.has_loop(0));
  CHECK(loop_complement(x, 0b1010) == g);
}

TEST_CASE("canonical form identifies relabelings and separates non-isomorphic graphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    LoopedGraph g = random_simple(rng, n);
    if (rng() % 2) g = loop_complement(g, static_cast<uint32_t>(rng()) & ((1u << n) - 1));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    LoopedGraph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v)
        if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    CHECK(canonical_form(g).key == canonical_form(h).key);
  }
  CHECK(canonical_form(path(4)).key != canonical_form(cycle(4)).key);
  // a loop distinguishes
  LoopedGraph a = path(3);
  CHECK(canonical_form(a).key != canonical_form(loop_complement(a, 1)).key);
}

TEST_CASE("orbit of a single vertex is itself") {
  LoopedGraph k1(1);
  auto orbit = local_equivalence_orbit(k1, OrbitMode::kLabeled);
  CHECK(orbit.size() == 1);
}

TEST_CASE("wheel with five spokes: orbit contains a cubic graph") {
  LoopedGraph w5 = wheel(5);
  auto orbit = local_equivalence_orbit(w5, OrbitMode::kUpToIso);
  bool cubic = false;
  for (auto& g : orbit) {
    bool all3 = true;
    for (int v = 0; v < g.n; ++v) all3 = all3 && g.degree(v) == 3;
    cubic = cubic || all3;
  }
  CHECK(cubic);
  // no member has a vertex of degree <= 2
  for (auto& g : orbit)
    for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) >= 3);
}

TEST_CASE("labeled orbit and iso orbit are closed and consistent") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    LoopedGraph g = random_simple(rng, 5);
    auto labeled = local_equivalence_orbit(g, OrbitMode::kLabeled);
    auto iso = local_equivalence_orbit(g, OrbitMode::kUpToIso);
    std::set<std::string> iso_keys;
    for (auto& x : iso) iso_keys.insert(canonical_form(x).key);
    CHECK(iso_keys.size() == iso.size());
    std::set<std::string> from_labeled;
    for (auto& x : labeled) from_labeled.insert(canonical_form(x).key);
    CHECK(from_labeled == iso_keys);
  }
}

TEST_CASE("orbit membership is symmetric") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    LoopedGraph g = random_simple(rng, 5);
    auto orbit = local_equivalence_orbit(g, OrbitMode::kLabeled);
    LoopedGraph h = orbit[rng() % orbit.size()];
    auto back = local_equivalence_orbit(h, OrbitMode::kLabeled);
    bool has_g = false;
    for (auto& x : back) has_g = has_g || (x == g);
    CHECK(has_g);
  }
}

TEST_CASE("orbit cap raises a guard error") {
  LoopedGraph g = wheel(7);
  CHECK_THROWS_AS(local_equivalence_orbit(g, OrbitMode::kLabeled, false, 3), guard_error);
}

TEST_CASE("vertex minor: reflexivity and single deletions") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    LoopedGraph g = random_simple(rng, 5);
    auto w = is_vertex_minor(g, g);
    REQUIRE(w.has_value());
    CHECK(canonical_form(replay_witness(g, *w)).key == canonical_form(g).key);
    uint32_t keep = (1u << 5) - 1 - (1u << (rng() % 5));
    LoopedGraph h = g.induced(keep);
    auto w2 = is_vertex_minor(g, h);
    REQUIRE(w2.has_value());
    CHECK(canonical_form(replay_witness(g, *w2)).key == canonical_form(h).key);
  }
}

TEST_CASE("vertex minor is invariant under local equivalence of the host") {
  std::mt19937_64 rng(17);
  LoopedGraph g = random_simple(rng, 6);
  LoopedGraph h = cycle(4);
  bool base = is_vertex_minor(g, h).has_value();
  auto orbit = local_equivalence_orbit(g, OrbitMode::kUpToIso);
  for (size_t i = 0; i < orbit.size() && i < 5; ++i)
    CHECK(is_vertex_minor(orbit[i], h).has_value() == base);
}

TEST_CASE("graph census counts match the literature") {
  CHECK(all_graphs_up_to_iso(4).size() == 11);
  CHECK(all_graphs_up_to_iso(5).size() == 34);
  CHECK(all_graphs_up_to_iso(6).size() == 156);
  CHECK(all_graphs_up_to_iso(7).size() == 1044);
}

TEST_CASE("diameter and connectivity helpers") {
  CHECK(diameter(cycle(5)) == 2);
  CHECK(diameter(path(4)) == 3);
  LoopedGraph two(2);
  CHECK(diameter(two) == -1);
  CHECK(is_connected(path(4)));
  CHECK(!is_connected(two));
  CHECK(bipartition(cycle(4)).has_value());
  CHECK(!bipartition(cycle(5)).has_value());
}

TEST_CASE("multigraph canonical form distinguishes multiplicity patterns") {
  MultiGraph doubled_c4(4);
  for (int v = 0; v < 4; ++v) {
    doubled_c4.add_edge(v, (v + 1) % 4);
    doubled_c4.add_edge(v, (v + 1) % 4);
  }
  MultiGraph k4_plus(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4_plus.add_edge(u, v);
  k4_plus.add_edge(0, 1);
  k4_plus.add_edge(2, 3);
  CHECK(!isomorphic(doubled_c4, k4_plus));
  // relabeled doubled cycle
  MultiGraph relab(4);
  int perm[4] = {2, 0, 3, 1};
  for (int v = 0; v < 4; ++v) {
    relab.add_edge(perm[v], perm[(v + 1) % 4]);
    relab.add_edge(perm[v], perm[(v + 1) % 4]);
  }
  CHECK(isomorphic(doubled_c4, relab));
  // loops count in the canonical form
  MultiGraph l1(2), l2(2);
  l1.add_edge(0, 0);
  l1.add_edge(0, 1);
  l2.add_edge(0, 1);
  l2.add_edge(0, 1);
  CHECK(!isomorphic(l1, l2));
}
