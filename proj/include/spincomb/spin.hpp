#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "spincomb/cycle_space.hpp"
#include "spincomb/multigraph.hpp"
#include "spincomb/transform.hpp"

namespace spincomb {

using BigInt = boost::multiprecision::cpp_int;

/// 2^k as an unbounded integer.
BigInt pow2(std::size_t k);

/// Dual graph of a stable curve: one vertex per irreducible component, one
/// edge per node, and the geometric genus of each component.
///
/// The graph must be connected. A single vertex without edges (a smooth curve)
/// is accepted.
class CurveDualGraph {
 public:
  CurveDualGraph(Multigraph graph, std::vector<std::size_t> genus_marks);

  const Multigraph& graph() const noexcept { return graph_; }
  const std::vector<std::size_t>& genus_marks() const noexcept { return genus_marks_; }

  /// Sum of genus marks.
  std::size_t geometric_genus_sum() const;

  /// Every genus-0 component meets at least 3 node branches. Advisory only.
  bool is_stable() const;

 private:
  Multigraph graph_;
  std::vector<std::size_t> genus_marks_;
};

/// Exact numerics of the scheme of spin curves over a stable curve.
/// Multiplicities are stored as exponents of 2.
struct SpinReport {
  std::size_t b = 0;
  std::size_t p = 0;
  std::size_t genus = 0;
  BigInt even_set_count;
  BigInt component_count;
  /// exponent n -> number of components of multiplicity 2^n.
  std::map<std::size_t, BigInt> multiplicity_multiset;
  std::set<std::size_t> multiplicity_set_exponents;
  BigInt length;
  BettiSet betti;
};

/// Quasistable support attached to one even set of nodes.
struct SupportDescription {
  EdgeSubset even_set;
  /// Nodes replaced by an exceptional component: the complement of the even set.
  EdgeSubset blown_up_nodes;
  std::size_t exceptional_components = 0;
  /// b1 of the even set; the points over this support come in 2^{2p} * 2^{gluing_dimension}.
  std::size_t gluing_dimension = 0;
  BigInt point_count;
  std::size_t multiplicity_exponent = 0;
};

/// b1 + p.
std::size_t curve_genus(const CurveDualGraph& x);

/// Even sets of nodes, which are exactly the cyclic sets of the dual graph.
CyclicSets even_sets(const CurveDualGraph& x, std::size_t cap = kDefaultEnumerationCap);

/// Throws InternalLengthMismatch if the total length is not 2^{2g}.
SpinReport spin_report(const CurveDualGraph& x, std::size_t cap = kDefaultEnumerationCap);

/// {b - n : n in B}.
std::set<std::size_t> multiplicity_set(const CurveDualGraph& x, std::size_t cap = kDefaultEnumerationCap);

bool is_compact_type(const CurveDualGraph& x);

/// Throws NotEven when delta is not cyclic.
SupportDescription support_description(const CurveDualGraph& x, const EdgeSubset& delta);

/// A component of multiplicity 2^g and none of multiplicity 2^{g-2} forces a
/// split curve, or genus 3 with the tetrahedron as dual graph.
/// Throws PreconditionFailed on unstable input.
Verdict check_corollary_split(const CurveDualGraph& x, std::size_t cap = kDefaultEnumerationCap);

/// Both parts of the genus >= 4 superstable check.
///
/// Part (i) is evaluated through the gap-2 graph classification (split, loop
/// or tetrahedron). `part_i_two_components` reports whether the curve really
/// has exactly two smooth components, which fails when positive genus marks
/// sit on a loop or tetrahedron dual graph.
struct FinalCorollaryVerdict {
  Verdict part_i;
  bool part_i_two_components = false;
  Verdict part_ii;
};

/// Throws PreconditionFailed unless genus >= 4 and the dual graph is superstable.
FinalCorollaryVerdict check_corollary_final(const CurveDualGraph& x, std::size_t cap = kDefaultEnumerationCap);

}  // namespace spincomb
