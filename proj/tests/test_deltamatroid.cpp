#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cgm/deltamatroid.hpp"
#include "cgm/errors.hpp"
#include "cgm/fixtures.hpp"
#include "cgm/gf2.hpp"
#include "cgm/graph.hpp"
#include "cgm/isotropic.hpp"
#include "cgm/matroid.hpp"
#include "cgm/recognize.hpp"
#include "doctest.h"

using namespace cgm;

namespace {

// independent axiom oracle on std::set representations
bool naive_axiom(int n, const std::vector<uint32_t>& sets) {
  if (sets.empty()) return false;
  std::set<uint32_t> fam(sets.begin(), sets.end());
  for (uint32_t x : fam)
    for (uint32_t y : fam) {
      for (int e = 0; e < n; ++e) {
        if (!((x ^ y) >> e & 1u)) continue;
        bool ok = false;
        for (int f = 0; f < n && !ok; ++f) {
          if (!((x ^ y) >> f & 1u)) continue;
          ok = fam.count(x ^ ((1u << e) | (1u << f))) > 0;
        }
        if (!ok) return false;
      }
    }
  return true;
}

// single-element loop complementation by the exactly-one-of rule
SetSystem plus_one(const SetSystem& d, int v) {
  std::vector<uint32_t> out;
  uint32_t bit = 1u << v;
  for (uint32_t s = 0; s < (1u << d.n); ++s) {
    bool f;
    if (s & bit)
      f = d.contains(s) != d.contains(s ^ bit);  // exactly one of S, S-v feasible
    else
      f = d.contains(s);
    if (f) out.push_back(s);
  }
  return SetSystem(d.n, out);
}

Gf2Matrix random_symmetric(int n, std::mt19937& rng, bool with_diag) {
  Gf2Matrix a(n, n);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < n; ++i) {
    if (with_diag && coin(rng)) a.set(i, i, true);
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) {
        a.set(i, j, true);
        a.set(j, i, true);
      }
  }
  return a;
}

bool same_matrix(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (int r = 0; r < a.rows; ++r)
    if (a.row_mask(r) != b.row_mask(r)) return false;
  return true;
}

SetSystem bases_system(const BinaryMatroid& m) {
  int ne = static_cast<int>(m.cols.size());
  int r = m.rank();
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < (1u << ne); ++s)
    if (__builtin_popcount(s) == r && m.rank_of(s) == r) bases.push_back(s);
  return SetSystem(ne, bases);
}

MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

uint32_t random_mask(int n, std::mt19937& rng) {
  return std::uniform_int_distribution<uint32_t>(0, (1u << n) - 1)(rng);
}

std::string dm_key(const SetSystem& d) {
  std::string k;
  for (uint32_t s : d.feasible) {
    k += std::to_string(s);
    k += ',';
  }
  return k;
}

}  // namespace

TEST_CASE("symmetric exchange axiom on worked families") {
  CHECK(is_delta_matroid(SetSystem(0, {0})));
  CHECK(is_delta_matroid(SetSystem(2, {0, 0b11})));
  CHECK_FALSE(is_delta_matroid(SetSystem(3, {0, 0b001, 0b111})));
  CHECK_FALSE(is_delta_matroid(SetSystem(2, {})));
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 4;
    std::vector<uint32_t> sets;
    for (uint32_t s = 0; s < (1u << n); ++s)
      if (rng() & 1u) sets.push_back(s);
    CHECK(is_delta_matroid(SetSystem(n, sets)) == naive_axiom(n, sets));
  }
}

TEST_CASE("twist is an involution and preserves evenness and the axiom") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 5;
    SetSystem d = dm_from_matrix(random_symmetric(n, rng, trial % 2 == 0));
    CHECK(twist(d, 0) == d);
    uint32_t x = random_mask(n, rng);
    CHECK(twist(twist(d, x), x) == d);
    CHECK(is_delta_matroid(twist(d, x)));
    if (is_even(d)) CHECK(is_even(twist(d, x)));
  }
  CHECK_THROWS_AS(twist(SetSystem(2, {0}), 0b100), precondition_error);
}

TEST_CASE("loop complementation: identity, composition, involution, binary closure") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 5;
    // arbitrary set systems for the pointwise rules
    std::vector<uint32_t> sets;
    for (uint32_t s = 0; s < (1u << n); ++s)
      if (rng() & 1u) sets.push_back(s);
    SetSystem d(n, sets);
    CHECK(loop_complement(d, 0) == d);
    uint32_t x = random_mask(n, rng);
    SetSystem folded = d;
    for (int v = 0; v < n; ++v)
      if ((x >> v) & 1u) folded = plus_one(folded, v);
    CHECK(loop_complement(d, x) == folded);
  }
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 4;
    SetSystem d = twist(dm_from_matrix(random_symmetric(n, rng, true)), random_mask(n, rng));
    uint32_t x = random_mask(n, rng);
    int v = static_cast<int>(rng() % n);
    SetSystem dv = loop_complement(d, 1u << v);
    CHECK(loop_complement(dv, 1u << v) == d);  // involution on binary systems
    CHECK(is_binary(loop_complement(d, x)));
  }
}

TEST_CASE("delta-matroid of a symmetric matrix") {
  CHECK(dm_from_matrix(Gf2Matrix(3, 3)) == SetSystem(3, {0}));
  Gf2Matrix k2(2, 2);
  k2.set(0, 1, true);
  k2.set(1, 0, true);
  CHECK(dm_from_matrix(k2) == SetSystem(2, {0, 0b11}));
  Gf2Matrix looped(2, 2);
  looped.set(0, 0, true);
  CHECK(dm_from_matrix(looped).contains(0b01));
  Gf2Matrix bad(2, 2);
  bad.set(0, 1, true);
  CHECK_THROWS_AS(dm_from_matrix(bad), precondition_error);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 6;
    Gf2Matrix a = random_symmetric(n, rng, true);
    SetSystem d = dm_from_matrix(a);
    CHECK(d.contains(0));
    CHECK(is_delta_matroid(d));
    bool zero_diag = true;
    for (int v = 0; v < n; ++v)
      if (a.get(v, v)) zero_diag = false;
    CHECK(is_even(d) == zero_diag);
  }
}

TEST_CASE("matrix reconstruction and binarity") {
  CHECK(same_matrix(reconstruct_matrix(SetSystem(2, {0})), Gf2Matrix(2, 2)));
  // {0, {v}, {v,w}} forces a loop at v and the edge vw
  Gf2Matrix expect(2, 2);
  expect.set(0, 0, true);
  expect.set(0, 1, true);
  expect.set(1, 0, true);
  CHECK(same_matrix(reconstruct_matrix(SetSystem(2, {0, 0b01, 0b11})), expect));
  CHECK_THROWS_AS(reconstruct_matrix(SetSystem(2, {0b01, 0b11})), precondition_error);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 6;
    Gf2Matrix a = random_symmetric(n, rng, true);
    CHECK(same_matrix(reconstruct_matrix(dm_from_matrix(a)), a));
    CHECK(is_binary(twist(dm_from_matrix(a), random_mask(n, rng))));
  }

  // bases of U_{2,4}: a delta-matroid that is not binary
  SetSystem u24(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  CHECK(is_delta_matroid(u24));
  CHECK_FALSE(is_binary(u24));
  CHECK_THROWS_WITH_AS(reconstruct_matrix(twist(u24, 0b0011)),
                       "set system is not binary with the empty set feasible", precondition_error);
}

TEST_CASE("eulerian examples: cycle graphs, complete-graph matroids") {
  LoopedGraph c5(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  Gf2Matrix a5(5, 5);
  for (int v = 0; v < 5; ++v)
    for (int w = 0; w < 5; ++w)
      if (c5.has_edge(v, w)) a5.set(v, w, true);
  CHECK(is_eulerian(dm_from_matrix(a5)));
  CHECK(is_eulerian(SetSystem(0, {0})));

  // planar if and only if eulerian, on cycle matroids
  CHECK(is_eulerian(bases_system(graph_matroid(complete_graph(4), GraphMatroidKind::kCycle))));
  CHECK_FALSE(is_eulerian(bases_system(graph_matroid(complete_graph(5), GraphMatroidKind::kCycle))));

  SetSystem u24(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  CHECK_THROWS_AS(is_eulerian(u24), precondition_error);
  CHECK_THROWS_AS(is_eulerian(SetSystem(12, {0})), guard_error);

  // not even -> not eulerian
  Gf2Matrix looped(3, 3);
  looped.set(0, 0, true);
  CHECK_FALSE(is_eulerian(dm_from_matrix(looped)));
}

TEST_CASE("regularity: circle graphs yes, a W5-closure member no") {
  CHECK(is_regular(SetSystem(3, {0})).regular);
  for (const auto& g : all_graphs_up_to_iso(5)) {
    Gf2Matrix a(g.n, g.n);
    for (int v = 0; v < g.n; ++v)
      for (int w = 0; w < g.n; ++w)
        if (g.has_edge(v, w)) a.set(v, w, true);
    auto verdict = is_regular(dm_from_matrix(a));
    CHECK(verdict.regular);
    REQUIRE(verdict.witness.has_value());
    CHECK(is_pu(*verdict.witness).pu);
    CHECK(same_matrix(support_of(*verdict.witness), a));
  }

  // breadth-first closure of D_{A(W5)} under single twists and loop complements
  LoopedGraph w5 = fixtures::w5();
  Gf2Matrix a(6, 6);
  for (int v = 0; v < 6; ++v)
    for (int w = 0; w < 6; ++w)
      if (w5.has_edge(v, w)) a.set(v, w, true);
  SetSystem start = dm_from_matrix(a);
  std::set<std::string> seen{dm_key(start)};
  std::deque<SetSystem> queue{start};
  bool found_nonregular = false;
  int expanded = 0;
  while (!queue.empty() && !found_nonregular && expanded < 5000) {
    SetSystem d = queue.front();
    queue.pop_front();
    ++expanded;
    if (is_even(d) && !is_regular(d).regular) {
      found_nonregular = true;
      break;
    }
    for (int v = 0; v < 6; ++v) {
      for (SetSystem next : {twist(d, 1u << v), loop_complement(d, 1u << v)}) {
        std::string key = dm_key(next);
        if (seen.insert(key).second) queue.push_back(next);
      }
    }
  }
  CHECK(found_nonregular);

  SetSystem u24(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100});
  CHECK_THROWS_AS(is_regular(u24), precondition_error);
  Gf2Matrix looped(2, 2);
  looped.set(0, 0, true);
  CHECK_THROWS_AS(is_regular(dm_from_matrix(looped)), precondition_error);
}

TEST_CASE("normal form: any op sequence equals D*X+Y*Z with X inside Y") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + trial % 4;
    SetSystem d = twist(dm_from_matrix(random_symmetric(n, rng, true)), random_mask(n, rng));
    SetSystem cur = d;
    for (int step = 0; step < 6; ++step) {
      uint32_t m = random_mask(n, rng);
      cur = (rng() & 1u) ? twist(cur, m) : loop_complement(cur, m);
    }
    bool matched = false;
    for (uint32_t y = 0; y < (1u << n) && !matched; ++y)
      for (uint32_t x = y;; x = (x - 1) & y) {  // X subset of Y
        SetSystem cand = loop_complement(twist(d, x), y);
        for (uint32_t z = 0; z < (1u << n) && !matched; ++z)
          if (twist(cand, z) == cur) matched = true;
        if (x == 0 || matched) break;
      }
    CHECK(matched);
  }
}

TEST_CASE("eulerian iff every even twist-plus combination is regular") {
  // statement 2 of the closure characterization: X inside Y, D*X+Y even
  auto all_even_combos_regular = [](const SetSystem& d) {
    for (uint32_t y = 0; y < (1u << d.n); ++y)
      for (uint32_t x = y;; x = (x - 1) & y) {
        SetSystem cand = loop_complement(twist(d, x), y);
        if (!cand.feasible.empty() && is_even(cand) && !is_regular(cand).regular) return false;
        if (x == 0) break;
      }
    return true;
  };
  // the characterization assumes an even input; exhaustive over simple
  // adjacencies (every even binary system with the empty set feasible is one)
  std::mt19937 rng(31);
  for (int n = 1; n <= 4; ++n) {
    long total = 1l << (n * (n - 1) / 2);
    for (long code = 0; code < total; ++code) {
      Gf2Matrix a(n, n);
      long c = code;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (c & 1l) {
            a.set(i, j, true);
            a.set(j, i, true);
          }
          c >>= 1;
        }
      SetSystem d = twist(dm_from_matrix(a), random_mask(n, rng));
      CHECK(is_eulerian(d) == all_even_combos_regular(d));
    }
  }
  for (int trial = 0; trial < 8; ++trial) {
    SetSystem d = dm_from_matrix(random_symmetric(5, rng, false));
    CHECK(is_eulerian(d));
    CHECK(all_even_combos_regular(d));
  }
  // first genuinely non-eulerian even case: the wheel W5
  LoopedGraph w5 = fixtures::w5();
  Gf2Matrix a5(6, 6);
  for (int v = 0; v < 6; ++v)
    for (int w = 0; w < 6; ++w)
      if (w5.has_edge(v, w)) a5.set(v, w, true);
  SetSystem dw5 = dm_from_matrix(a5);
  CHECK_FALSE(is_eulerian(dw5));
  CHECK_FALSE(all_even_combos_regular(dw5));
}

TEST_CASE("matroid bases form delta-matroids") {
  CHECK(is_delta_matroid(bases_system(graph_matroid(complete_graph(4), GraphMatroidKind::kCycle))));
  CHECK(is_delta_matroid(bases_system(graph_matroid(complete_graph(5), GraphMatroidKind::kCycle))));
  CHECK(is_delta_matroid(bases_system(fano())));
  // binary matroids stay binary as delta-matroids
  CHECK(is_binary(bases_system(fano())));
}

TEST_CASE("section extraction: worked K2 cases and the psi-deleted identity") {
  LoopedGraph k2(2);
  k2.add_edge(0, 1);
  auto p = ias_presentation(k2);
  CHECK(section_delta_matroid(multimatroid_section(p, "ss")) == SetSystem(2, {0, 0b11}));
  CHECK(section_delta_matroid(multimatroid_section(p, "pp")) == SetSystem(2, {0, 0b01, 0b10}));
  CHECK(section_delta_matroid(multimatroid_section(p, "cc")) == SetSystem(2, {0, 0b01, 0b10}));
  CHECK_THROWS_AS(section_delta_matroid(full_section(p)), precondition_error);

  std::mt19937 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + trial % 5;
    Gf2Matrix a = random_symmetric(n, rng, false);
    LoopedGraph g(n);
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (a.get(v, w)) g.add_edge(v, w);
    auto pres = ias_presentation(g);
    CHECK(section_delta_matroid(multimatroid_section(pres, std::string(n, 's'))) ==
          dm_from_matrix(a));

    // random deleted transversal: extraction matches D_A * F + (F u C),
    // and the section is tight exactly when the extraction is even
    std::string pcs(n, 'p');
    uint32_t f = 0, c = 0;
    for (int v = 0; v < n; ++v) {
      pcs[v] = "pcs"[rng() % 3];
      if (pcs[v] == 'p') f |= 1u << v;
      if (pcs[v] == 'c') c |= 1u << v;
    }
    auto sec = multimatroid_section(pres, pcs);
    SetSystem d = section_delta_matroid(sec);
    CHECK(d == loop_complement(twist(dm_from_matrix(a), f), f | c));
    CHECK(is_tight(sec) == is_even(d));
  }
}

TEST_CASE("delta-matroid text format") {
  SetSystem d(3, {0, 0b011, 0b101});
  CHECK(dm_to_text(d) == "dm 3\n-\n0 1\n0 2\n");
  CHECK(dm_from_text(dm_to_text(d)) == d);
  CHECK(dm_from_text("dm 2\n-\n") == SetSystem(2, {0}));
  CHECK_THROWS_AS(dm_from_text("graph 3"), precondition_error);
  CHECK_THROWS_AS(dm_from_text("dm 2\n0 5\n"), precondition_error);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + trial % 6;
    SetSystem s = twist(dm_from_matrix(random_symmetric(n, rng, true)), random_mask(n, rng));
    CHECK(dm_from_text(dm_to_text(s)) == s);
  }
}
