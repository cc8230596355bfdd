#include <random>
#include <set>

#include "cgm/errors.hpp"
#include "cgm/matroid.hpp"
#include "doctest.h"

using namespace cgm;

namespace {

BinaryMatroid from_cols(int nrows, std::vector<uint64_t> cols) {
  BinaryMatroid m;
  m.nrows = nrows;
  m.cols = std::move(cols);
  return m;
}

// brute-force dual rank check: r*(S) = |S| + r(E-S) - r(E)
bool dual_rank_ok(const BinaryMatroid& m, const BinaryMatroid& d) {
  if (m.size() != d.size()) return false;
  int n = m.size();
  int rm = m.rank();
  for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
    int want = __builtin_popcountll(s) + m.rank_of(~s & ((uint64_t{1} << n) - 1)) - rm;
    if (d.rank_of(s) != want) return false;
  }
  return true;
}

BinaryMatroid random_matroid(std::mt19937_64& rng, int nrows, int ncols) {
  BinaryMatroid m;
  m.nrows = nrows;
  for (int c = 0; c < ncols; ++c) m.cols.push_back(rng() & ((uint64_t{1} << nrows) - 1));
  return m;
}

}  // namespace

TEST_CASE("circuits of rank-two column sets") {
  // three pairwise independent columns spanning a plane: one 3-circuit
  BinaryMatroid u23 = from_cols(2, {0b01, 0b10, 0b11});
  auto c = circuits_up_to(u23, 3);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == 0b111);
  // adding a parallel element brings 2-circuits
  BinaryMatroid m = from_cols(2, {0b01, 0b10, 0b11, 0b01});
  auto c2 = circuits_up_to(m, 2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == 0b1001);
}

TEST_CASE("loops are one-element circuits") {
  BinaryMatroid m = from_cols(2, {0b00, 0b01});
  auto c = circuits_up_to(m, 2);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == 0b01);
}

TEST_CASE("fano and its dual") {
  BinaryMatroid f = fano();
  CHECK(f.rank() == 3);
  CHECK(f.size() == 7);
  BinaryMatroid fd = fano_dual();
  CHECK(fd.rank() == 4);
  CHECK(matroids_isomorphic(fd, dual(fano())));
  CHECK(!matroids_isomorphic(f, fd));
  CHECK(dual_rank_ok(f, fd));
  // self-dual check fails for fano but the double dual returns it
  CHECK(matroids_isomorphic(dual(fd), f));
}

TEST_CASE("dual satisfies the rank identity on random matroids") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMatroid m = random_matroid(rng, 4, 3 + static_cast<int>(rng() % 6));
    CHECK(dual_rank_ok(m, dual(m)));
  }
}

TEST_CASE("minor: contracting an edge of mk5 gives a matroid with mk4 restriction") {
  BinaryMatroid m = mk5();
  // contract element 0, delete nothing: rank drops by one
  BinaryMatroid q = matroid_minor(m, 1, 0);
  CHECK(q.rank() == m.rank() - 1);
  CHECK(q.size() == 9);
  // deleting a loop-free element keeps rank
  BinaryMatroid d = matroid_minor(m, 0, 1);
  CHECK(d.rank() == 4);
  CHECK(d.size() == 9);
}

TEST_CASE("isomorphism finds relabelings and rejects different matroids") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    BinaryMatroid m = random_matroid(rng, 4, 6);
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    BinaryMatroid p;
    p.nrows = m.nrows;
    p.cols.resize(6);
    for (int i = 0; i < 6; ++i) p.cols[perm[i]] = m.cols[i];
    auto iso = matroid_isomorphism(m, p);
    REQUIRE(iso.has_value());
    // verify the witness preserves rank on random subsets
    for (int t = 0; t < 20; ++t) {
      uint64_t s = rng() % 64;
      uint64_t img = 0;
      for (int e = 0; e < 6; ++e)
        if ((s >> e) & 1u) img |= uint64_t{1} << (*iso)[e];
      CHECK(m.rank_of(s) == p.rank_of(img));
    }
  }
  CHECK(!matroids_isomorphic(fano(), fano_dual()));
  CHECK(!matroids_isomorphic(mk5(), mk33()));
}

TEST_CASE("automorphism counts of small matroids") {
  // the rank-one matroid {loop, two parallel non-loops}: loops fixed, swap the pair
  BinaryMatroid m = from_cols(1, {0b0, 0b1, 0b1});
  CHECK(automorphism_count(m) == 2);
  // free matroid on 3 elements: all permutations are linear
  BinaryMatroid f = from_cols(3, {0b001, 0b010, 0b100});
  CHECK(automorphism_count(f) == 6);
  // fano: PGL(3,2) has order 168
  CHECK(automorphism_count(fano()) == 168);
  CHECK(automorphism_count(fano_dual()) == 168);
}

TEST_CASE("minor containment") {
  CHECK(has_minor(mk5(), mk5()));
  CHECK(!has_minor(mk5(), fano()));
  CHECK(!has_minor(mk5(), mk33()));
  CHECK(!has_minor(mk33(), mk5()));
  CHECK(has_minor(fano(), from_cols(2, {0b01, 0b10, 0b11})));
  // fano has no fano-dual minor and vice versa
  CHECK(!has_minor(fano(), fano_dual()));
  CHECK(!has_minor(fano_dual(), fano()));
}

TEST_CASE("class tests on the standard examples") {
  CHECK(!class_test(fano(), MatroidClass::kRegular));
  CHECK(!class_test(fano_dual(), MatroidClass::kRegular));
  CHECK(class_test(mk5(), MatroidClass::kRegular));
  CHECK(class_test(mk5(), MatroidClass::kGraphic));
  CHECK(!class_test(mk5(), MatroidClass::kCographic));
  CHECK(!class_test(mk5(), MatroidClass::kPlanar));
  CHECK(class_test(mk33(), MatroidClass::kGraphic));
  CHECK(!class_test(mk33(), MatroidClass::kCographic));
  CHECK(class_test(mk5_dual(), MatroidClass::kCographic));
  CHECK(!class_test(mk5_dual(), MatroidClass::kGraphic));
  // the cycle matroid of K4 is planar
  MultiGraph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK(class_test(graph_matroid(k4, GraphMatroidKind::kCycle), MatroidClass::kPlanar));
}

TEST_CASE("graph matroids: trees, loops, and duality") {
  MultiGraph tree(4);
  tree.add_edge(0, 1);
  tree.add_edge(1, 2);
  tree.add_edge(1, 3);
  BinaryMatroid cyc = graph_matroid(tree, GraphMatroidKind::kCycle);
  CHECK(cyc.rank() == 3);
  CHECK(circuits_up_to(cyc, 3).empty());
  MultiGraph with_loop = tree;
  with_loop.add_edge(2, 2);
  BinaryMatroid wl = graph_matroid(with_loop, GraphMatroidKind::kCycle);
  auto c = circuits_up_to(wl, 1);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == (uint64_t{1} << 3));
  // bond matroid of a cycle = uniform rank-one-ish dual behavior
  MultiGraph c3(3);
  c3.add_edge(0, 1);
  c3.add_edge(1, 2);
  c3.add_edge(2, 0);
  BinaryMatroid bond = graph_matroid(c3, GraphMatroidKind::kBond);
  CHECK(bond.rank() == 1);
  CHECK(dual_rank_ok(graph_matroid(c3, GraphMatroidKind::kCycle), bond));
}

TEST_CASE("planar equals graphic and cographic on graph matroids") {
  // planar graph: K4 plus a pendant edge
  MultiGraph g(5);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  g.add_edge(3, 4);
  BinaryMatroid m = graph_matroid(g, GraphMatroidKind::kCycle);
  CHECK(class_test(m, MatroidClass::kGraphic));
  CHECK(class_test(m, MatroidClass::kCographic));
  CHECK(class_test(m, MatroidClass::kPlanar));
  // K5 and K33 cycle matroids are graphic but not planar
  CHECK(!class_test(mk5(), MatroidClass::kPlanar));
  CHECK(!class_test(mk33(), MatroidClass::kPlanar));
}
