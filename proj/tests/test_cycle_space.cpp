#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "spincomb/cycle_space.hpp"
#include "spincomb/enumerate.hpp"
#include "spincomb/transform.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace spincomb;

namespace {

EdgeSubset subset(const Multigraph& g, std::initializer_list<EdgeId> ids) {
  auto s = g.empty_edge_set();
  for (auto e : ids) s.set(e);
  return s;
}

std::uint64_t mask_of(const EdgeSubset& s) {
  std::uint64_t m = 0;
  for (auto e : s.indices()) m |= std::uint64_t{1} << e;
  return m;
}

EdgeSubset subset_of(const Multigraph& g, std::uint64_t mask) {
  auto s = g.empty_edge_set();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (mask >> e & 1U) s.set(e);
  return s;
}

std::set<EdgeSubset> all_cyclic(const Multigraph& g) {
  std::set<EdgeSubset> out;
  for (const auto& s : cyclic_sets(g)) out.insert(s);
  return out;
}

std::set<std::size_t> odd_up_to(std::size_t g) {
  std::set<std::size_t> out{0};
  for (std::size_t k = 1; k <= g; k += 2) out.insert(k);
  return out;
}

}  // namespace

TEST_CASE("boundary") {
  auto loop = shapes::loop();
  CHECK(boundary(loop, loop.full_edge_set()).none());
  auto edge = build_graph(2, {{0, 1}});
  CHECK(boundary(edge, edge.full_edge_set()).count() == 2);
  auto k4 = shapes::tetrahedron();
  CHECK(boundary(k4, subset(k4, {0, 1, 3})).none());
  CHECK(boundary(k4, subset(k4, {0})).indices() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("is_cyclic and is_eulerian") {
  auto k4 = shapes::tetrahedron();
  CHECK(is_cyclic(k4, k4.empty_edge_set()));
  CHECK_FALSE(is_cyclic(k4, k4.full_edge_set()));
  CHECK(is_cyclic(shapes::fat_triangle(), shapes::fat_triangle().full_edge_set()));
  CHECK(is_eulerian(shapes::loop()));
  CHECK_FALSE(is_eulerian(k4));
  CHECK(is_eulerian(shapes::fat_triangle()));
}

TEST_CASE("is_circuit") {
  auto loop = shapes::loop();
  CHECK(is_circuit(loop, loop.full_edge_set()));
  auto two_triangles = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_circuit(two_triangles, two_triangles.full_edge_set()));
  auto k4 = shapes::tetrahedron();
  // 0-1-3-2-0 uses (0,1) (1,3) (2,3) (0,2)
  CHECK(is_circuit(k4, subset(k4, {0, 4, 5, 1})));
  CHECK_FALSE(is_circuit(k4, k4.empty_edge_set()));
  auto bowtie = build_graph(2, {{0, 0}, {0, 1}, {0, 1}});
  CHECK_FALSE(is_circuit(bowtie, bowtie.full_edge_set()));
}

TEST_CASE("cycle_basis") {
  auto path = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(cycle_basis(path).dimension() == 0);

  auto loop_basis = cycle_basis(shapes::loop());
  REQUIRE(loop_basis.dimension() == 1);
  CHECK(loop_basis.basis_vectors[0].indices() == std::vector<EdgeId>{0});

  auto split = cycle_basis(shapes::split(4));
  CHECK(split.spanning_forest.indices() == std::vector<EdgeId>{0});
  REQUIRE(split.dimension() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(split.basis_vectors[i].indices() == std::vector<EdgeId>{0, i + 1});
    CHECK(split.pivot_edges[i] == i + 1);
  }
}

TEST_CASE("cyclic_sets enumeration") {
  auto path = build_graph(3, {{0, 1}, {1, 2}});
  auto tree_sets = all_cyclic(path);
  CHECK(tree_sets == std::set<EdgeSubset>{path.empty_edge_set()});

  auto loop = shapes::loop();
  CHECK(all_cyclic(loop) == std::set<EdgeSubset>{loop.empty_edge_set(), loop.full_edge_set()});

  auto k4 = shapes::tetrahedron();
  auto sets = all_cyclic(k4);
  CHECK(sets.size() == 8);
  std::map<std::size_t, int> by_size;
  for (const auto& s : sets) {
    CHECK(is_cyclic(k4, s));
    ++by_size[s.count()];
  }
  CHECK(by_size == std::map<std::size_t, int>{{0, 1}, {3, 4}, {4, 3}});

  auto range = cyclic_sets(k4);
  CHECK(range.size() == 8);
  CHECK((*range.begin()).none());
  // consecutive sets differ by exactly one basis vector
  auto it = range.begin();
  EdgeSubset prev = *it;
  for (++it; it != range.end(); ++it) {
    auto diff = *it ^ prev;
    bool is_basis = false;
    for (const auto& b : range.basis().basis_vectors) is_basis |= diff == b;
    CHECK(is_basis);
    prev = *it;
  }
}

TEST_CASE("cyclic_sets cap") {
  std::vector<std::pair<VertexId, VertexId>> loops(31, {0, 0});
  auto big = build_graph(1, loops);
  try {
    cyclic_sets(big);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
    CHECK(e.detail().find("31") != std::string::npos);
  }
  CHECK(cyclic_sets(big, 31).size() == (std::uint64_t{1} << 31));
  CHECK_THROWS_AS(cyclic_sets(shapes::split(5), 3), Error);
}

TEST_CASE("cyclic_betti_set") {
  CHECK(cyclic_betti_set(shapes::loop()).members == std::set<std::size_t>{0, 1});
  CHECK(cyclic_betti_set(shapes::fat_triangle()).members == std::set<std::size_t>{0, 1, 2, 4});
  CHECK(cyclic_betti_set(shapes::tetrahedron()).members == std::set<std::size_t>{0, 1});
  for (std::size_t g = 1; g <= 10; ++g) {
    CAPTURE(g);
    CHECK(cyclic_betti_set(shapes::split(g + 1)).members == odd_up_to(g));
  }
  CHECK(cyclic_betti_histogram(shapes::tetrahedron()) == std::vector<std::uint64_t>{1, 7, 0, 0});
  CHECK(cyclic_betti_histogram(shapes::fat_triangle()) == std::vector<std::uint64_t>{1, 11, 3, 0, 1});
}

TEST_CASE("cyclic_set_with_betti") {
  auto w = cyclic_set_with_betti(shapes::fat_triangle(), 2);
  REQUIRE(w.has_value());
  CHECK(is_cyclic(shapes::fat_triangle(), *w));
  CHECK(betti_number(shapes::fat_triangle(), *w) == 2);
  CHECK_FALSE(cyclic_set_with_betti(shapes::tetrahedron(), 2).has_value());
}

TEST_CASE("circuit_decomposition") {
  auto loop = shapes::loop();
  CHECK(circuit_decomposition(loop, loop.full_edge_set()) == std::vector<EdgeSubset>{loop.full_edge_set()});

  auto k4 = shapes::tetrahedron();
  auto tri = subset(k4, {0, 1, 3});
  CHECK(circuit_decomposition(k4, tri) == std::vector<EdgeSubset>{tri});

  auto fat = shapes::fat_triangle();
  auto parts = circuit_decomposition(fat, fat.full_edge_set());
  auto sum = fat.empty_edge_set();
  for (const auto& p : parts) {
    CHECK(is_circuit(fat, p));
    CHECK((sum & p).none());
    sum ^= p;
  }
  CHECK(sum == fat.full_edge_set());
  // the walk leaves 0 by edge 0 and returns by edge 1
  CHECK(parts.front().indices() == std::vector<EdgeId>{0, 1});

  CHECK_THROWS_AS(circuit_decomposition(k4, k4.full_edge_set()), Error);
  try {
    circuit_decomposition(k4, subset(k4, {0}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCyclic);
  }
  CHECK(circuit_decomposition(k4, k4.empty_edge_set()).empty());
}

namespace {

void check_properties(const Multigraph& g) {
  const auto b1 = betti_number(g);
  const auto basis = cycle_basis(g);
  CHECK(basis.dimension() == b1);
  std::vector<std::uint64_t> rows;
  for (const auto& v : basis.basis_vectors) {
    CHECK(is_cyclic(g, v));
    rows.push_back(mask_of(v));
  }
  for (std::size_t i = 0; i < basis.dimension(); ++i)
    for (std::size_t j = 0; j < basis.dimension(); ++j)
      CHECK(basis.basis_vectors[j].test(basis.pivot_edges[i]) == (i == j));

  // oracle equivalence: parity test vs span membership vs Gray-code enumeration
  const auto even = oracle::even_masks(g);
  std::set<std::uint64_t> even_set(even.begin(), even.end());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
    const bool cyc = is_cyclic(g, subset_of(g, m));
    CHECK(cyc == even_set.contains(m));
    CHECK(cyc == oracle::in_span(rows, m));
    CHECK(cyc == boundary(g, subset_of(g, m)).none());
  }
  std::set<std::uint64_t> enumerated;
  for (const auto& s : cyclic_sets(g)) enumerated.insert(mask_of(s));
  CHECK(enumerated == even_set);
  CHECK(even.size() == (std::size_t{1} << b1));

  const auto betti = cyclic_betti_set(g);
  CHECK(betti.members == oracle::betti_set(g));
  CHECK(betti.contains(0));                                                    // P2
  CHECK(betti.max() <= b1);                                                    // P1
  CHECK((betti.members == std::set<std::size_t>{0}) == (b1 == 0));             // P3
  CHECK((b1 == 0) == !betti.contains(1));                                      // P3
  const auto bridges = separating_edges(g);
  for (auto m : even) CHECK((subset_of(g, m) & bridges).none());              // P6
  const auto non_bridges = bridges.complement();
  CHECK(betti.contains(b1) == is_cyclic(g, non_bridges));                      // P7
  CHECK(is_eulerian(g) == (bridges.none() && betti.contains(b1)));            // P8

  // P4 on a random-looking sub-edge-set: every other edge
  auto sub_edges = g.empty_edge_set();
  for (EdgeId e = 0; e < g.edge_count(); e += 2) sub_edges.set(e);
  auto sub = induced_subgraph(g, sub_edges);
  for (auto n : cyclic_betti_set(sub).members) CHECK(betti.contains(n));

  for (auto m : even) {
    const auto s = subset_of(g, m);
    auto parts = circuit_decomposition(g, s);
    auto sum = g.empty_edge_set();
    for (const auto& p : parts) {
      CHECK(is_circuit(g, p));
      CHECK((sum & p).none());
      sum ^= p;
    }
    CHECK(sum == s);
  }
}

std::set<std::size_t> sumset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  std::set<std::size_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(x + y);
  return out;
}

/// Glues b onto a by identifying vertex 0 of b with vertex `at` of a.
Multigraph glue(const Multigraph& a, const Multigraph& b, VertexId at) {
  std::vector<Edge> edges = a.edges();
  auto map = [&](VertexId v) { return v == 0 ? at : a.vertex_count() + v - 1; };
  for (const auto& e : b.edges()) edges.push_back({std::min(map(e.u), map(e.v)), std::max(map(e.u), map(e.v))});
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
  return build_graph(a.vertex_count() + b.vertex_count() - 1, pairs);
}

}  // namespace

TEST_CASE("cycle-space properties over the exhaustive corpus up to 6 edges") {
  auto corpus = enumerate_multigraphs(6, {});
  CHECK(corpus.size() > 100);
  for (const auto& g : corpus) check_properties(g);
}

TEST_CASE("cycle-space properties over random graphs up to 12 edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    CAPTURE(trial);
    check_properties(testing::random_multigraph(rng, 8, 12));
  }
}

TEST_CASE("P5 sumset for unions sharing at most one vertex") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = testing::random_connected(rng, testing::uniform(rng, 1, 4), testing::uniform(rng, 0, 4));
    auto b = testing::random_connected(rng, testing::uniform(rng, 1, 4), testing::uniform(rng, 0, 4));
    const auto expect = sumset(cyclic_betti_set(a).members, cyclic_betti_set(b).members);
    CHECK(cyclic_betti_set(disjoint_union(a, b)).members == expect);
    CHECK(cyclic_betti_set(glue(a, b, testing::uniform(rng, 0, a.vertex_count() - 1))).members == expect);
  }
}
