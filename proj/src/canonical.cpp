#include "spincomb/canonical.hpp"

#include <algorithm>
#include <string>

namespace spincomb {

namespace {

struct VertexInvariant {
  std::size_t valency = 0;
  std::size_t loops = 0;
  std::vector<std::size_t> neighbour_valencies;

  friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
  friend bool operator==(const VertexInvariant&, const VertexInvariant&) = default;
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
  const auto n = g.vertex_count();
  if (n > kCanonicalMaxVertices)
    throw Error(ErrorKind::TooLarge, "canonical form needs <= " + std::to_string(kCanonicalMaxVertices) +
                                         " vertices, got " + std::to_string(n));

  std::vector<VertexInvariant> inv(n);
  for (VertexId v = 0; v < n; ++v) {
    inv[v].valency = valency(g, v);
    inv[v].loops = loop_count(g, v);
  }
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : g.incident(v)) {
      const auto& ed = g.edges()[e];
      if (!ed.is_loop()) inv[v].neighbour_valencies.push_back(inv[ed.other(v)].valency);
    }
    std::sort(inv[v].neighbour_valencies.begin(), inv[v].neighbour_valencies.end());
  }

  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return inv[a] > inv[b]; });

  // Blocks of equal invariant, as [begin, end) ranges into `order`.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  CanonicalForm best;
  best.vertex_count = n;
  bool have_best = false;
  std::vector<VertexId> label(n);
  std::vector<Edge> candidate(g.edge_count());

  for (;;) {
    for (std::size_t i = 0; i < n; ++i) label[order[i]] = i;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto a = label[g.edges()[e].u], b = label[g.edges()[e].v];
      candidate[e] = Edge{std::min(a, b), std::max(a, b)};
    }
    std::sort(candidate.begin(), candidate.end());
    if (!have_best || candidate < best.edges) {
      best.edges = candidate;
      have_best = true;
    }

    // Odometer over the permutations of each block.
    std::size_t b = blocks.size();
    for (; b > 0; --b) {
      auto [lo, hi] = blocks[b - 1];
      if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                order.begin() + static_cast<std::ptrdiff_t>(hi)))
        break;
    }
    if (b == 0) break;
  }
  return best;
}

bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace spincomb
