#pragma once

// Brute-force reference implementations. Nothing here calls into the
// algorithms it is used to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "spincomb/multigraph.hpp"

namespace spincomb::oracle {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

inline Pairs pairs_of(const Multigraph& g) {
  Pairs p;
  for (const auto& e : g.edges()) p.emplace_back(e.u, e.v);
  return p;
}

/// Components by plain DFS; vertices in `skip_vertices` and edges in `skip_edges` are removed.
inline std::size_t components(std::size_t n, const Pairs& edges, const std::vector<bool>& skip_edges = {},
                              const std::vector<bool>& skip_vertices = {}) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!skip_edges.empty() && skip_edges[i]) continue;
    auto [a, b] = edges[i];
    if (!skip_vertices.empty() && (skip_vertices[a] || skip_vertices[b])) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::size_t c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || (!skip_vertices.empty() && skip_vertices[s])) continue;
    ++c;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return c;
}

/// Bridges by deleting each edge and recounting.
inline std::vector<std::size_t> bridges(const Multigraph& g) {
  const auto p = pairs_of(g);
  const auto base = components(g.vertex_count(), p);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < p.size(); ++e) {
    std::vector<bool> skip(p.size(), false);
    skip[e] = true;
    if (components(g.vertex_count(), p, skip) > base) out.push_back(e);
  }
  return out;
}

/// Articulation vertices by deleting each vertex with its edges and recounting.
inline std::vector<std::size_t> cut_vertices(const Multigraph& g) {
  const auto p = pairs_of(g);
  const auto base = components(g.vertex_count(), p);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> skip(g.vertex_count(), false);
    skip[v] = true;
    if (components(g.vertex_count(), p, {}, skip) > base) out.push_back(v);
  }
  return out;
}

/// Edge subset as a mask (edge count <= 63).
inline bool all_even(const Multigraph& g, std::uint64_t mask) {
  std::vector<int> val(g.vertex_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (mask >> e & 1U) {
      val[g.edges()[e].u] += 1;
      val[g.edges()[e].v] += 1;
    }
  return std::all_of(val.begin(), val.end(), [](int d) { return d % 2 == 0; });
}

/// b1 of the subgraph generated by `mask`: edges - touched vertices + components.
inline std::size_t subgraph_betti(const Multigraph& g, std::uint64_t mask) {
  Pairs sub;
  std::vector<bool> touched(g.vertex_count(), false);
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (mask >> e & 1U) {
      sub.emplace_back(g.edges()[e].u, g.edges()[e].v);
      touched[g.edges()[e].u] = touched[g.edges()[e].v] = true;
    }
  std::vector<bool> skip_v(g.vertex_count());
  std::size_t nv = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    skip_v[v] = !touched[v];
    nv += touched[v];
  }
  const auto c = components(g.vertex_count(), sub, {}, skip_v);
  return sub.size() + c - nv;
}

/// Every even edge subset, as masks.
inline std::vector<std::uint64_t> even_masks(const Multigraph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m)
    if (all_even(g, m)) out.push_back(m);
  return out;
}

inline std::set<std::size_t> betti_set(const Multigraph& g) {
  std::set<std::size_t> out;
  for (auto m : even_masks(g)) out.insert(subgraph_betti(g, m));
  return out;
}

/// Membership of `target` in the GF(2) span of `rows` by Gaussian elimination.
inline bool in_span(std::vector<std::uint64_t> rows, std::uint64_t target) {
  std::vector<std::uint64_t> reduced;
  for (auto r : rows) {
    for (auto b : reduced) r = std::min(r, r ^ b);
    if (r) {
      reduced.push_back(r);
      std::sort(reduced.rbegin(), reduced.rend());
    }
  }
  for (auto b : reduced) target = std::min(target, target ^ b);
  return target == 0;
}

/// Sorted edge list under a vertex map.
inline std::vector<std::pair<std::size_t, std::size_t>> image(const Pairs& edges, const std::vector<std::size_t>& perm) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto [a, b] : edges) out.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
  std::sort(out.begin(), out.end());
  return out;
}

/// Isomorphism by trying all n! bijections.
inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const auto target = image(pairs_of(b), [&] {
    std::vector<std::size_t> id(b.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    return id;
  }());
  std::vector<std::size_t> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  const auto pa = pairs_of(a);
  do {
    if (image(pa, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Number of isomorphism classes of multigraphs without isolated vertices,
/// with 1..max_edges edges on at most max_vertices vertices, accepted by `keep`.
/// Enumerates every labelled edge multiset and folds whole orbits under all
/// vertex permutations.
inline std::size_t class_count(std::size_t max_edges, std::size_t max_vertices,
                               const std::function<bool(const Multigraph&)>& keep) {
  std::size_t classes = 0;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    Pairs all_pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) all_pairs.emplace_back(i, j);
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
    for (std::size_t d = 1; d <= max_edges; ++d) {
      std::vector<std::size_t> pick(d, 0);  // non-decreasing indices into all_pairs
      for (;;) {
        Pairs edges;
        for (auto i : pick) edges.push_back(all_pairs[i]);
        std::vector<int> deg(n, 0);
        for (auto [a, b] : edges) {
          ++deg[a];
          ++deg[b];
        }
        if (std::all_of(deg.begin(), deg.end(), [](int x) { return x > 0; }) && !seen.contains(edges)) {
          std::vector<std::size_t> perm(n);
          std::iota(perm.begin(), perm.end(), 0);
          do seen.insert(image(edges, perm));
          while (std::next_permutation(perm.begin(), perm.end()));
          if (keep(build_graph(n, edges))) ++classes;
        }
        // next non-decreasing tuple
        std::size_t k = d;
        while (k > 0 && pick[k - 1] + 1 == all_pairs.size()) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t t = k; t < d; ++t) pick[t] = pick[k - 1];
      }
    }
  }
  return classes;
}

}  // namespace spincomb::oracle
