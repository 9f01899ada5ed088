#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "spincomb/canonical.hpp"
#include "spincomb/multigraph.hpp"
#include "spincomb/transform.hpp"

namespace spincomb {

struct EnumerationFilter {
  bool connected = false;
  bool superstable = false;
  bool bridgeless = false;
};

inline constexpr std::size_t kEnumerationMaxEdges = 10;
inline constexpr std::size_t kSweepMaxEdges = 9;

/// Largest vertex count a connected graph with `edges` edges can have under `filter`.
std::size_t max_connected_vertices(std::size_t edges, const EnumerationFilter& filter);

/// One representative per isomorphism class of multigraphs with 1..max_edges
/// edges passing `filter`, ordered by (vertex count, edge count, key).
///
/// Connected classes come from an exhaustive search over pair multiplicities
/// with non-increasing valencies, deduplicated by canonical_form. Disconnected
/// classes are multisets of connected ones; their key is the sorted list of
/// component keys, which for a connected graph is its canonical form.
///
/// Throws TooLarge when max_edges exceeds 10 or a connected class could need
/// more than 8 vertices.
std::vector<Multigraph> enumerate_multigraphs(std::size_t max_edges, const EnumerationFilter& filter);

struct SweepViolation {
  Multigraph graph;
  Verdict verdict;
};

struct SweepReport {
  std::size_t max_edges = 0;
  std::size_t graphs_examined = 0;
  std::size_t hypothesis_exercised = 0;
  std::size_t vacuous = 0;
  std::vector<SweepViolation> violations;
  std::map<Classification, std::size_t> exercised_by_class;
  std::vector<Multigraph> exercised;
  double elapsed_seconds = 0.0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Runs check_theorem2 over every superstable class with at most max_edges edges.
SweepReport sweep_theorem2(std::size_t max_edges);

/// Runs check_theorem3 over every superstable class with at most max_edges edges.
SweepReport sweep_theorem3(std::size_t max_edges);

}  // namespace spincomb
