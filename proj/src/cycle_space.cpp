#include "spincomb/cycle_space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace spincomb {

namespace {

void require_width(const Multigraph& g, const EdgeSubset& s) {
  if (s.width() != g.edge_count())
    throw Error(ErrorKind::WidthMismatch,
                "edge subset width " + std::to_string(s.width()) + " vs edge count " + std::to_string(g.edge_count()));
}

std::vector<std::size_t> subset_valencies(const Multigraph& g, const EdgeSubset& s) {
  std::vector<std::size_t> val(g.vertex_count(), 0);
  for (EdgeId e : s.indices()) {
    ++val[g.edges()[e].u];
    ++val[g.edges()[e].v];
  }
  return val;
}

}  // namespace

ZeroChain boundary(const Multigraph& g, const EdgeSubset& s) {
  require_width(g, s);
  ZeroChain z(g.vertex_count());
  for (EdgeId e : s.indices()) {
    z.flip(g.edges()[e].u);
    z.flip(g.edges()[e].v);
  }
  return z;
}

bool is_cyclic(const Multigraph& g, const EdgeSubset& s) {
  require_width(g, s);
  for (auto d : subset_valencies(g, s))
    if (d % 2 != 0) return false;
  return true;
}

bool is_eulerian(const Multigraph& g) { return is_cyclic(g, g.full_edge_set()); }

bool is_circuit(const Multigraph& g, const EdgeSubset& s) {
  require_width(g, s);
  if (s.none()) return false;
  const auto val = subset_valencies(g, s);
  for (auto d : val)
    if (d != 0 && d != 2) return false;
  return component_count(induced_subgraph(g, s)) == 1;
}

CycleBasis cycle_basis(const Multigraph& g) {
  const auto n = g.vertex_count();
  CycleBasis basis;
  basis.graph_edge_count = g.edge_count();
  basis.spanning_forest = EdgeSubset(g.edge_count());

  // Greedy forest in edge order.
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<std::vector<EdgeId>> forest_adj(n);
  std::vector<EdgeId> non_forest;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges()[e];
    auto a = find(ed.u), b = find(ed.v);
    if (a == b) {
      non_forest.push_back(e);
      continue;
    }
    root[std::max(a, b)] = std::min(a, b);
    basis.spanning_forest.set(e);
    forest_adj[ed.u].push_back(e);
    forest_adj[ed.v].push_back(e);
  }

  // Root each tree at its smallest vertex and record parent edges and depths.
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<EdgeId> parent_edge(n, none);
  std::vector<std::size_t> depth(n, none);
  for (VertexId r = 0; r < n; ++r) {
    if (depth[r] != none) continue;
    depth[r] = 0;
    std::vector<VertexId> stack{r};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : forest_adj[v]) {
        VertexId w = g.edges()[e].other(v);
        if (depth[w] != none) continue;
        depth[w] = depth[v] + 1;
        parent_edge[w] = e;
        stack.push_back(w);
      }
    }
  }

  for (EdgeId e : non_forest) {
    EdgeSubset cycle(g.edge_count());
    cycle.set(e);
    VertexId a = g.edges()[e].u, b = g.edges()[e].v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      EdgeId pe = parent_edge[a];
      cycle.flip(pe);
      a = g.edges()[pe].other(a);
    }
    basis.basis_vectors.push_back(std::move(cycle));
    basis.pivot_edges.push_back(e);
  }
  return basis;
}

CyclicSets::CyclicSets(const Multigraph& g, std::size_t cap) : basis_(cycle_basis(g)) {
  if (basis_.dimension() > cap || basis_.dimension() >= 63)
    throw Error(ErrorKind::CapExceeded, "b1 = " + std::to_string(basis_.dimension()) +
                                            " exceeds enumeration cap " + std::to_string(cap));
}

CyclicSets::iterator& CyclicSets::iterator::operator++() {
  ++step_;
  if (basis_ && step_ < (std::uint64_t{1} << basis_->dimension()))
    current_ ^= basis_->basis_vectors[static_cast<std::size_t>(std::countr_zero(step_))];
  return *this;
}

std::vector<std::uint64_t> cyclic_betti_histogram(const Multigraph& g, std::size_t cap) {
  CyclicSets sets(g, cap);
  std::vector<std::uint64_t> hist(sets.basis().dimension() + 1, 0);
  for (const auto& s : sets) ++hist[betti_number(g, s)];
  return hist;
}

BettiSet cyclic_betti_set(const Multigraph& g, std::size_t cap) {
  BettiSet out;
  const auto hist = cyclic_betti_histogram(g, cap);
  for (std::size_t n = 0; n < hist.size(); ++n)
    if (hist[n] != 0) out.members.insert(n);
  return out;
}

std::optional<EdgeSubset> cyclic_set_with_betti(const Multigraph& g, std::size_t n, std::size_t cap) {
  for (const auto& s : CyclicSets(g, cap))
    if (betti_number(g, s) == n) return s;
  return std::nullopt;
}

std::vector<EdgeSubset> circuit_decomposition(const Multigraph& g, const EdgeSubset& s) {
  require_width(g, s);
  if (!is_cyclic(g, s)) throw Error(ErrorKind::NotCyclic, "edge set " + s.to_bit_string() + " has an odd valency");

  std::vector<EdgeSubset> circuits;
  EdgeSubset remaining = s;
  while (remaining.any()) {
    const EdgeId first = remaining.indices().front();
    const auto& fe = g.edges()[first];
    EdgeSubset in_walk(g.edge_count());
    in_walk.set(first);
    std::vector<VertexId> walk_vertices{fe.u, fe.v};
    std::vector<EdgeId> walk_edges{first};

    auto close_at = [&](VertexId v) -> std::optional<std::size_t> {
      for (std::size_t i = 0; i + 1 < walk_vertices.size(); ++i)
        if (walk_vertices[i] == v) return i;
      return std::nullopt;
    };

    std::size_t start = 0;
    if (fe.is_loop()) {
      start = 0;
    } else {
      for (;;) {
        const VertexId here = walk_vertices.back();
        EdgeId next = static_cast<EdgeId>(-1);
        for (EdgeId e : g.incident(here)) {
          if (remaining.test(e) && !in_walk.test(e)) {
            next = e;
            break;
          }
        }
        // Even valencies guarantee an exit from every vertex the walk enters.
        if (next == static_cast<EdgeId>(-1))
          throw Error(ErrorKind::NotCyclic, "walk stuck at vertex " + std::to_string(here));
        in_walk.set(next);
        walk_edges.push_back(next);
        const VertexId there = g.edges()[next].other(here);
        walk_vertices.push_back(there);
        if (auto pos = close_at(there)) {
          start = *pos;
          break;
        }
      }
    }

    EdgeSubset circuit(g.edge_count());
    for (std::size_t i = start; i < walk_edges.size(); ++i) circuit.set(walk_edges[i]);
    remaining ^= circuit;
    circuits.push_back(std::move(circuit));
  }
  return circuits;
}

}  // namespace spincomb
