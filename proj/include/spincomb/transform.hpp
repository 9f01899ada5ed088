#pragma once

#include <optional>
#include <random>
#include <string_view>

#include "spincomb/cycle_space.hpp"
#include "spincomb/multigraph.hpp"

namespace spincomb {

enum class Classification { split, loop, tetrahedron, fat_triangle, other };

std::string_view to_string(Classification c);

/// Outcome of checking one classification theorem on one graph.
///
/// hypothesis_holds distinguishes an exercised check from a vacuous one.
/// witness, when present, is a cyclic set showing the hypothesis fails.
struct Verdict {
  bool holds = true;
  bool hypothesis_holds = false;
  Classification classification = Classification::other;
  std::optional<EdgeSubset> witness;
};

// The three rewrites that preserve b1 and the cyclic Betti set.

/// Contracts the single edge at a valency-1 vertex.
Multigraph eliminate_valency1(const Multigraph& g, VertexId v);

/// Replaces the two edges at a valency-2 vertex by one edge joining their far ends.
/// The merged edge takes the position of the lower of the two edge ids.
Multigraph smooth_valency2(const Multigraph& g, VertexId v);

/// Contracts a bridge, merging its endpoints into the lower-numbered one.
Multigraph contract_separating_edge(const Multigraph& g, EdgeId e);

/// Valency >= 3 everywhere, except a vertex whose only edge is one loop.
/// The empty graph is not superstable.
bool is_superstable(const Multigraph& g);

/// Vertices where operation 1 or 2 applies.
std::vector<VertexId> reducible_vertices(const Multigraph& g);

/// Applies operations 1 and 2, always at the lowest reducible vertex, until superstable.
/// Throws VanishingComponent when some component has b1 = 0.
Multigraph superstable_reduction(const Multigraph& g);

/// Same, picking the next reducible vertex uniformly at random.
Multigraph superstable_reduction(const Multigraph& g, std::mt19937_64& rng);

bool is_split(const Multigraph& g);
bool is_loop_graph(const Multigraph& g);
bool is_tetrahedron(const Multigraph& g);
bool is_fat_triangle(const Multigraph& g);

/// First matching shape among split, loop, tetrahedron, fat triangle.
Classification classify(const Multigraph& g);

/// Superstable with 2 not in B: split, or the loop (b1 = 1), or the tetrahedron (b1 = 3).
Verdict check_theorem2(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap);

/// Superstable with 3 not in B and some member above 3: b1 = 4 and the fat triangle.
Verdict check_theorem3(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap);

/// Same checks, reusing an already computed Betti set.
Verdict check_theorem2(const Multigraph& g, const BettiSet& betti, std::size_t cap = kDefaultEnumerationCap);
Verdict check_theorem3(const Multigraph& g, const BettiSet& betti, std::size_t cap = kDefaultEnumerationCap);

/// Shapes used throughout tests and examples.
namespace shapes {
Multigraph loop();
Multigraph tetrahedron();
Multigraph fat_triangle();
Multigraph triangle();
/// Two vertices joined by `edges` parallel edges.
Multigraph split(std::size_t edges);
}  // namespace shapes

}  // namespace spincomb
