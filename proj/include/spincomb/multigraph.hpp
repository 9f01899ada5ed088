#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spincomb/chain.hpp"

namespace spincomb {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Unordered endpoint pair, stored with u <= v. u == v is a loop.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const noexcept { return u == v; }
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph with loops and parallel edges.
///
/// Vertices are 0..vertex_count()-1 and edges 0..edge_count()-1, both dense
/// and fixed for the lifetime of the value. Graphs are immutable; every
/// transform returns a new graph.
///
/// Graphs built through build_graph() never have isolated vertices.
/// Internal rewrites (induced subgraphs, contractions) may produce degenerate
/// values, including the empty graph; those go through Multigraph::degenerate.
class Multigraph {
 public:
  Multigraph() = default;

  /// Accepts isolated vertices and the empty graph. Endpoints must be in range.
  static Multigraph degenerate(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const;

  /// Edge ids incident to v, ascending; a loop appears once.
  std::span<const EdgeId> incident(VertexId v) const;

  EdgeSubset empty_edge_set() const { return EdgeSubset(edges_.size()); }
  EdgeSubset full_edge_set() const { return EdgeSubset::full(edges_.size()); }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Validated construction: every index in range, no isolated vertex, at least one vertex.
Multigraph build_graph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edge_pairs);
Multigraph build_graph(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edge_pairs);

/// Incidences at v; a loop counts twice.
std::size_t valency(const Multigraph& g, VertexId v);

/// Number of loops at v.
std::size_t loop_count(const Multigraph& g, VertexId v);

/// Blocks of mutually reachable vertices, each block ascending, blocks ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Multigraph& g);
std::size_t component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// delta - nu + c. Zero for the empty graph.
std::size_t betti_number(const Multigraph& g);

/// First Betti number of the subgraph generated by s, without materialising it.
std::size_t betti_number(const Multigraph& g, const EdgeSubset& s);

/// Bridges. Loops and edges with a parallel twin are never bridges.
EdgeSubset separating_edges(const Multigraph& g);

/// Articulation vertices: removing the vertex and all its edges raises the component count.
std::vector<VertexId> separating_vertices(const Multigraph& g);

/// Subgraph generated by the edges of s: vertices are exactly the endpoints,
/// relabelled in ascending original order; edges keep ascending original order.
Multigraph induced_subgraph(const Multigraph& g, const EdgeSubset& s);

/// Same as induced_subgraph, also reporting the original vertex of each new vertex.
Multigraph induced_subgraph(const Multigraph& g, const EdgeSubset& s, std::vector<VertexId>& vertex_origin);

/// Relabels vertices: new index of old vertex v is perm[v]. Edge order is kept.
Multigraph relabel_vertices(const Multigraph& g, std::span<const VertexId> perm);

/// Reorders edges: edge i of the result is edge order[i] of g.
Multigraph reorder_edges(const Multigraph& g, std::span<const EdgeId> order);

/// Disjoint union; vertices and edges of b follow those of a.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

}  // namespace spincomb
