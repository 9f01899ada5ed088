#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <vector>

#include "spincomb/multigraph.hpp"

namespace spincomb {

/// Largest b1 for which the 2^b1 cyclic sets may be enumerated.
inline constexpr std::size_t kDefaultEnumerationCap = 30;

/// Fundamental-cycle basis of the GF(2) cycle space.
struct CycleBasis {
  std::size_t graph_edge_count = 0;
  EdgeSubset spanning_forest;
  std::vector<EdgeSubset> basis_vectors;
  /// The non-forest edge that generated each basis vector.
  std::vector<EdgeId> pivot_edges;

  std::size_t dimension() const noexcept { return basis_vectors.size(); }
};

/// Set of cyclic Betti numbers {b1(D) : D cyclic}.
struct BettiSet {
  std::set<std::size_t> members;

  bool contains(std::size_t n) const { return members.contains(n); }
  std::size_t max() const { return members.empty() ? 0 : *members.rbegin(); }
  friend bool operator==(const BettiSet&, const BettiSet&) = default;
};

ZeroChain boundary(const Multigraph& g, const EdgeSubset& s);

/// Every vertex has even valency in the subgraph generated by s.
bool is_cyclic(const Multigraph& g, const EdgeSubset& s);

/// Full edge set is cyclic.
bool is_eulerian(const Multigraph& g);

/// Non-empty, connected, every valency exactly 2.
bool is_circuit(const Multigraph& g, const EdgeSubset& s);

/// Spanning forest grown greedily in edge-index order; one fundamental
/// cycle per remaining edge, listed by ascending edge index.
CycleBasis cycle_basis(const Multigraph& g);

/// All 2^b1 cyclic sets in Gray-code order, starting from the empty set.
///
/// Holds its own copy of the basis, so it may outlive the graph it was built from.
class CyclicSets {
 public:
  explicit CyclicSets(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap);

  const CycleBasis& basis() const noexcept { return basis_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << basis_.dimension(); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = EdgeSubset;
    using difference_type = std::ptrdiff_t;
    using pointer = const EdgeSubset*;
    using reference = const EdgeSubset&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    /// Position in the enumeration; the Gray code of it selects the basis vectors.
    std::uint64_t index() const noexcept { return step_; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.step_ == b.step_; }

   private:
    friend class CyclicSets;
    iterator(const CycleBasis* basis, std::uint64_t step) : basis_(basis), step_(step) {
      if (basis_) current_ = EdgeSubset(basis_->graph_edge_count);
    }

    const CycleBasis* basis_ = nullptr;
    std::uint64_t step_ = 0;
    EdgeSubset current_;
  };

  iterator begin() const { return iterator(&basis_, 0); }
  iterator end() const { return iterator(nullptr, size()); }

 private:
  CycleBasis basis_;
};

inline CyclicSets cyclic_sets(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap) {
  return CyclicSets(g, cap);
}

BettiSet cyclic_betti_set(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap);

/// histogram[n] = number of cyclic sets D with b1(D) = n; length b1(g) + 1.
std::vector<std::uint64_t> cyclic_betti_histogram(const Multigraph& g, std::size_t cap = kDefaultEnumerationCap);

/// First cyclic set (in enumeration order) whose Betti number is n.
std::optional<EdgeSubset> cyclic_set_with_betti(const Multigraph& g, std::size_t n,
                                                std::size_t cap = kDefaultEnumerationCap);

/// Splits a cyclic set into edge-disjoint circuits.
///
/// Repeatedly walks from the lowest remaining edge, always leaving a vertex
/// by its lowest unused edge, until the walk revisits a vertex; the closed
/// part of the walk is peeled off as a circuit.
std::vector<EdgeSubset> circuit_decomposition(const Multigraph& g, const EdgeSubset& s);

}  // namespace spincomb
