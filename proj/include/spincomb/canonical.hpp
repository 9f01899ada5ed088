#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "spincomb/multigraph.hpp"

namespace spincomb {

/// Largest vertex count canonical_form accepts.
inline constexpr std::size_t kCanonicalMaxVertices = 8;

/// Isomorphism-class key: the sorted edge list under the lexicographically
/// smallest admissible vertex relabelling. Equal keys iff isomorphic.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  /// The graph spelled out by the key.
  Multigraph graph() const { return Multigraph::degenerate(vertex_count, edges); }
};

/// Exhaustive search over vertex bijections that respect a degree-based
/// vertex invariant (valency, loop count, neighbour valencies); vertices
/// with larger invariants get smaller labels.
///
/// Throws TooLarge above kCanonicalMaxVertices vertices.
CanonicalForm canonical_form(const Multigraph& g);

bool are_isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace spincomb

template <>
struct std::hash<spincomb::CanonicalForm> {
  std::size_t operator()(const spincomb::CanonicalForm& c) const noexcept {
    std::size_t h = c.vertex_count * 1315423911u;
    for (const auto& e : c.edges) h = h * 1099511628211ULL ^ (e.u * 31 + e.v + 1);
    return h;
  }
};
