#include "spincomb/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace spincomb {

namespace {

std::string pair_text(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    auto& ed = edges_[e];
    if (ed.u >= vertex_count_ || ed.v >= vertex_count_)
      throw Error(ErrorKind::BadIndex, "edge " + std::to_string(e) + " " + pair_text(ed.u, ed.v) +
                                           " references a vertex >= " + std::to_string(vertex_count_));
    if (ed.u > ed.v) std::swap(ed.u, ed.v);
    incidence_[ed.u].push_back(e);
    if (!ed.is_loop()) incidence_[ed.v].push_back(e);
  }
}

Multigraph Multigraph::degenerate(std::size_t vertex_count, std::vector<Edge> edges) {
  return Multigraph(vertex_count, std::move(edges));
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw Error(ErrorKind::BadIndex, "edge " + std::to_string(e) + " out of range");
  return edges_[e];
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
  if (v >= vertex_count_) throw Error(ErrorKind::BadIndex, "vertex " + std::to_string(v) + " out of range");
  return incidence_[v];
}

Multigraph build_graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_pairs) {
  if (vertex_count == 0) throw Error(ErrorKind::EmptyGraph, "a graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(edge_pairs.size());
  for (const auto& [a, b] : edge_pairs) {
    if (a >= vertex_count || b >= vertex_count)
      throw Error(ErrorKind::BadIndex, "pair " + pair_text(a, b) + " with vertex_count " + std::to_string(vertex_count));
    edges.push_back(Edge{a, b});
  }
  auto g = Multigraph::degenerate(vertex_count, std::move(edges));
  for (VertexId v = 0; v < vertex_count; ++v)
    if (g.incident(v).empty()) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v));
  return g;
}

Multigraph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edge_pairs) {
  return build_graph(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edge_pairs.begin(), edge_pairs.size()));
}

std::size_t valency(const Multigraph& g, VertexId v) {
  std::size_t n = 0;
  for (EdgeId e : g.incident(v)) n += g.edges()[e].is_loop() ? 2 : 1;
  return n;
}

std::size_t loop_count(const Multigraph& g, VertexId v) {
  std::size_t n = 0;
  for (EdgeId e : g.incident(v)) n += g.edges()[e].is_loop() ? 1 : 0;
  return n;
}

std::vector<std::vector<VertexId>> connected_components(const Multigraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const auto& e : g.edges()) sets.unite(e.u, e.v);
  std::vector<std::vector<VertexId>> blocks;
  std::vector<std::size_t> block_of_root(g.vertex_count(), static_cast<std::size_t>(-1));
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto r = sets.find(v);
    if (block_of_root[r] == static_cast<std::size_t>(-1)) {
      block_of_root[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[r]].push_back(v);
  }
  return blocks;
}

std::size_t component_count(const Multigraph& g) {
  DisjointSets sets(g.vertex_count());
  std::size_t c = g.vertex_count();
  for (const auto& e : g.edges())
    if (sets.unite(e.u, e.v)) --c;
  return c;
}

bool is_connected(const Multigraph& g) { return component_count(g) == 1; }

std::size_t betti_number(const Multigraph& g) {
  return g.edge_count() + component_count(g) - g.vertex_count();
}

std::size_t betti_number(const Multigraph& g, const EdgeSubset& s) {
  if (s.width() != g.edge_count())
    throw Error(ErrorKind::WidthMismatch, "edge subset width " + std::to_string(s.width()));
  // Every edge that closes a cycle in a growing forest adds one to b1.
  DisjointSets sets(g.vertex_count());
  std::size_t b = 0;
  for (EdgeId e : s.indices()) {
    const auto& ed = g.edges()[e];
    if (!sets.unite(ed.u, ed.v)) ++b;
  }
  return b;
}

namespace {

struct LowLink {
  const Multigraph& g;
  std::vector<std::size_t> order;
  std::vector<std::size_t> low;
  std::size_t clock = 0;
  EdgeSubset bridges;
  std::vector<bool> articulation;

  explicit LowLink(const Multigraph& graph)
      : g(graph),
        order(graph.vertex_count(), 0),
        low(graph.vertex_count(), 0),
        bridges(graph.edge_count()),
        articulation(graph.vertex_count(), false) {}

  void visit(VertexId v, EdgeId via, bool is_root) {
    order[v] = low[v] = ++clock;
    std::size_t children = 0;
    for (EdgeId e : g.incident(v)) {
      const auto& ed = g.edges()[e];
      if (ed.is_loop() || e == via) continue;
      VertexId w = ed.other(v);
      if (order[w] == 0) {
        ++children;
        visit(w, e, false);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > order[v]) bridges.set(e);
        if (!is_root && low[w] >= order[v]) articulation[v] = true;
      } else {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (is_root && children >= 2) articulation[v] = true;
  }

  void run() {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (order[v] == 0) visit(v, static_cast<EdgeId>(-1), true);
  }
};

}  // namespace

EdgeSubset separating_edges(const Multigraph& g) {
  LowLink ll(g);
  ll.run();
  return ll.bridges;
}

std::vector<VertexId> separating_vertices(const Multigraph& g) {
  LowLink ll(g);
  ll.run();
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (ll.articulation[v]) out.push_back(v);
  return out;
}

Multigraph induced_subgraph(const Multigraph& g, const EdgeSubset& s, std::vector<VertexId>& vertex_origin) {
  if (s.width() != g.edge_count())
    throw Error(ErrorKind::WidthMismatch, "edge subset width " + std::to_string(s.width()));
  std::vector<bool> used(g.vertex_count(), false);
  const auto members = s.indices();
  for (EdgeId e : members) {
    used[g.edges()[e].u] = true;
    used[g.edges()[e].v] = true;
  }
  std::vector<VertexId> renumber(g.vertex_count(), 0);
  vertex_origin.clear();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!used[v]) continue;
    renumber[v] = vertex_origin.size();
    vertex_origin.push_back(v);
  }
  std::vector<Edge> edges;
  edges.reserve(members.size());
  for (EdgeId e : members) edges.push_back(Edge{renumber[g.edges()[e].u], renumber[g.edges()[e].v]});
  return Multigraph::degenerate(vertex_origin.size(), std::move(edges));
}

Multigraph induced_subgraph(const Multigraph& g, const EdgeSubset& s) {
  std::vector<VertexId> origin;
  return induced_subgraph(g, s, origin);
}

Multigraph relabel_vertices(const Multigraph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.vertex_count())
    throw Error(ErrorKind::BadIndex, "permutation length " + std::to_string(perm.size()));
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back(Edge{perm[e.u], perm[e.v]});
  return Multigraph::degenerate(g.vertex_count(), std::move(edges));
}

Multigraph reorder_edges(const Multigraph& g, std::span<const EdgeId> order) {
  if (order.size() != g.edge_count())
    throw Error(ErrorKind::BadIndex, "edge order length " + std::to_string(order.size()));
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (EdgeId e : order) edges.push_back(g.edge(e));
  return Multigraph::degenerate(g.vertex_count(), std::move(edges));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = a.vertex_count();
  for (const auto& e : b.edges()) edges.push_back(Edge{e.u + shift, e.v + shift});
  return Multigraph::degenerate(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace spincomb
