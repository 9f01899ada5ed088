#include "spincomb/transform.hpp"

#include <algorithm>
#include <string>

#include "spincomb/canonical.hpp"

namespace spincomb {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::split: return "split";
    case Classification::loop: return "loop";
    case Classification::tetrahedron: return "tetrahedron";
    case Classification::fat_triangle: return "fat_triangle";
    case Classification::other: return "other";
  }
  return "other";
}

namespace {

// Drops vertex `gone` (which no edge may still touch) and shifts higher ids down.
Multigraph without_vertex(std::size_t vertex_count, std::vector<Edge> edges, VertexId gone) {
  for (auto& e : edges) {
    if (e.u > gone) --e.u;
    if (e.v > gone) --e.v;
  }
  return Multigraph::degenerate(vertex_count - 1, std::move(edges));
}

std::string vertex_text(VertexId v) { return "vertex " + std::to_string(v); }

}  // namespace

Multigraph eliminate_valency1(const Multigraph& g, VertexId v) {
  const auto d = valency(g, v);
  if (d != 1) throw Error(ErrorKind::WrongValency, vertex_text(v) + " has valency " + std::to_string(d) + ", expected 1");
  const EdgeId pendant = g.incident(v).front();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (e != pendant) edges.push_back(g.edges()[e]);
  return without_vertex(g.vertex_count(), std::move(edges), v);
}

Multigraph smooth_valency2(const Multigraph& g, VertexId v) {
  const auto d = valency(g, v);
  if (d != 2) throw Error(ErrorKind::WrongValency, vertex_text(v) + " has valency " + std::to_string(d) + ", expected 2");
  if (loop_count(g, v) != 0) throw Error(ErrorKind::LoopVertex, vertex_text(v) + " carries a loop");
  const auto inc = g.incident(v);
  const EdgeId keep = inc[0], drop = inc[1];
  const VertexId a = g.edges()[keep].other(v), b = g.edges()[drop].other(v);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e == drop) continue;
    edges.push_back(e == keep ? Edge{std::min(a, b), std::max(a, b)} : g.edges()[e]);
  }
  return without_vertex(g.vertex_count(), std::move(edges), v);
}

Multigraph contract_separating_edge(const Multigraph& g, EdgeId e) {
  const auto& bridge = g.edge(e);
  if (!separating_edges(g).test(e)) throw Error(ErrorKind::NotSeparating, "edge " + std::to_string(e) + " is not a bridge");
  const VertexId kept = bridge.u, gone = bridge.v;
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    Edge ed = g.edges()[f];
    if (ed.u == gone) ed.u = kept;
    if (ed.v == gone) ed.v = kept;
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    edges.push_back(ed);
  }
  return without_vertex(g.vertex_count(), std::move(edges), gone);
}

bool is_superstable(const Multigraph& g) {
  if (g.vertex_count() == 0) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto d = valency(g, v);
    if (d >= 3) continue;
    if (d == 2 && loop_count(g, v) == 1) continue;
    return false;
  }
  return true;
}

std::vector<VertexId> reducible_vertices(const Multigraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto d = valency(g, v);
    if (d == 1 || (d == 2 && loop_count(g, v) == 0)) out.push_back(v);
  }
  return out;
}

namespace {

void require_cyclic_components(const Multigraph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorKind::VanishingComponent, "empty graph");
  std::vector<std::size_t> block(g.vertex_count());
  const auto comps = connected_components(g);
  std::vector<std::size_t> edge_count(comps.size(), 0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (VertexId v : comps[c]) block[v] = c;
  for (const auto& e : g.edges()) ++edge_count[block[e.u]];
  for (std::size_t c = 0; c < comps.size(); ++c)
    if (edge_count[c] + 1 == comps[c].size())
      throw Error(ErrorKind::VanishingComponent,
                  "component containing vertex " + std::to_string(comps[c].front()) + " is a tree");
}

template <class Pick>
Multigraph reduce(const Multigraph& g, Pick pick) {
  require_cyclic_components(g);
  Multigraph cur = g;
  for (;;) {
    const auto candidates = reducible_vertices(cur);
    if (candidates.empty()) break;
    const VertexId v = pick(candidates);
    cur = valency(cur, v) == 1 ? eliminate_valency1(cur, v) : smooth_valency2(cur, v);
  }
  return cur;
}

}  // namespace

Multigraph superstable_reduction(const Multigraph& g) {
  return reduce(g, [](const std::vector<VertexId>& c) { return c.front(); });
}

Multigraph superstable_reduction(const Multigraph& g, std::mt19937_64& rng) {
  return reduce(g, [&](const std::vector<VertexId>& c) {
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    return c[pick(rng)];
  });
}

bool is_split(const Multigraph& g) {
  if (g.vertex_count() != 2 || !is_connected(g)) return false;
  return std::none_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
}

bool is_loop_graph(const Multigraph& g) {
  return g.vertex_count() == 1 && g.edge_count() == 1 && g.edges().front().is_loop();
}

bool is_tetrahedron(const Multigraph& g) {
  return g.vertex_count() == 4 && g.edge_count() == 6 && are_isomorphic(g, shapes::tetrahedron());
}

bool is_fat_triangle(const Multigraph& g) {
  return g.vertex_count() == 3 && g.edge_count() == 6 && are_isomorphic(g, shapes::fat_triangle());
}

Classification classify(const Multigraph& g) {
  if (is_split(g)) return Classification::split;
  if (is_loop_graph(g)) return Classification::loop;
  if (is_tetrahedron(g)) return Classification::tetrahedron;
  if (is_fat_triangle(g)) return Classification::fat_triangle;
  return Classification::other;
}

namespace {

void require_superstable(const Multigraph& g) {
  if (!is_superstable(g)) throw Error(ErrorKind::NotSuperstable, "classification checks need a superstable graph");
}

}  // namespace

Verdict check_theorem2(const Multigraph& g, const BettiSet& betti, std::size_t cap) {
  require_superstable(g);
  Verdict v;
  v.classification = classify(g);
  if (betti.contains(2)) {
    v.witness = cyclic_set_with_betti(g, 2, cap);
    return v;
  }
  v.hypothesis_holds = true;
  const auto b = betti_number(g);
  v.holds = v.classification == Classification::split ||
            (b == 1 && v.classification == Classification::loop) ||
            (b == 3 && v.classification == Classification::tetrahedron);
  return v;
}

Verdict check_theorem3(const Multigraph& g, const BettiSet& betti, std::size_t cap) {
  require_superstable(g);
  Verdict v;
  v.classification = classify(g);
  if (betti.contains(3)) {
    v.witness = cyclic_set_with_betti(g, 3, cap);
    return v;
  }
  if (betti.max() <= 3) return v;
  v.hypothesis_holds = true;
  v.holds = betti_number(g) == 4 && v.classification == Classification::fat_triangle;
  return v;
}

Verdict check_theorem2(const Multigraph& g, std::size_t cap) {
  require_superstable(g);
  return check_theorem2(g, cyclic_betti_set(g, cap), cap);
}

Verdict check_theorem3(const Multigraph& g, std::size_t cap) {
  require_superstable(g);
  return check_theorem3(g, cyclic_betti_set(g, cap), cap);
}

namespace shapes {

Multigraph loop() { return build_graph(1, {{0, 0}}); }

Multigraph tetrahedron() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Multigraph fat_triangle() { return build_graph(3, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}}); }

Multigraph triangle() { return build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Multigraph split(std::size_t edges) {
  std::vector<std::pair<VertexId, VertexId>> pairs(edges, {0, 1});
  return build_graph(2, pairs);
}

}  // namespace shapes

}  // namespace spincomb
