#include "spincomb/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>

#include "spincomb/cycle_space.hpp"

namespace spincomb {

std::size_t max_connected_vertices(std::size_t edges, const EnumerationFilter& filter) {
  if (edges == 0) return 0;
  if (filter.superstable) return std::max<std::size_t>(1, 2 * edges / 3);
  if (filter.bridgeless) return edges;
  return edges + 1;
}

namespace {

// Exhaustive search over multiplicities of the vertex pairs (i, j), i <= j,
// for connected labelled multigraphs with a fixed vertex and edge count.
// Valencies are forced non-increasing in vertex order; every isomorphism
// class has such a labelling.
class ConnectedSearch {
 public:
  ConnectedSearch(std::size_t vertices, std::size_t edges, const EnumerationFilter& filter,
                  std::unordered_set<CanonicalForm>& found)
      : n_(vertices), edges_(edges), filter_(filter), found_(found), deg_(vertices, 0) {
    for (VertexId i = 0; i < n_; ++i)
      for (VertexId j = i; j < n_; ++j) pairs_.push_back(Edge{i, j});
    // With two or more vertices a connected superstable graph has no valency
    // below 3 and a bridgeless one has no leaf.
    if (n_ >= 2) min_valency_ = filter_.superstable ? 3 : filter_.bridgeless ? 2 : 1;
  }

  void run() { visit(0, edges_); }

 private:
  void visit(std::size_t k, std::size_t remaining) {
    if (k == pairs_.size()) {
      if (remaining == 0) accept();
      return;
    }
    const auto [i, j] = pairs_[k];
    const bool row_ends = j + 1 == n_;
    for (std::size_t m = 0; m <= remaining; ++m) {
      add(i, j, m);
      if (admissible(i, row_ends, remaining - m)) visit(k + 1, remaining - m);
      remove(i, j, m);
      if (i > 0 && deg_[i] + (i == j ? 2 : 1) * (m + 1) > deg_[i - 1]) break;
    }
  }

  void add(VertexId i, VertexId j, std::size_t m) {
    chosen_.insert(chosen_.end(), m, Edge{i, j});
    deg_[i] += m;
    deg_[j] += m;
  }

  void remove(VertexId i, VertexId j, std::size_t m) {
    chosen_.resize(chosen_.size() - m);
    deg_[i] -= m;
    deg_[j] -= m;
  }

  bool admissible(VertexId i, bool row_ends, std::size_t remaining) const {
    if (i > 0 && deg_[i] > deg_[i - 1]) return false;
    // Valency still missing, across vertices whose row is open.
    const VertexId first_open = row_ends ? i + 1 : i;
    std::size_t deficit = 0;
    for (VertexId v = first_open; v < n_; ++v)
      if (deg_[v] < min_valency_) deficit += min_valency_ - deg_[v];
    if (deficit > 2 * remaining) return false;
    if (!row_ends) return true;

    if (deg_[i] < min_valency_) return false;
    if (i + 1 < n_ && closed_prefix_component(i)) return false;
    return true;
  }

  // True if some component spanned by finished vertices 0..i has no edge to a later vertex.
  bool closed_prefix_component(VertexId last_done) const {
    std::vector<std::size_t> root(n_);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const auto& e : chosen_) root[find(e.u)] = find(e.v);
    std::vector<bool> reaches_open(n_, false);
    for (VertexId v = last_done + 1; v < n_; ++v) reaches_open[find(v)] = true;
    for (VertexId v = 0; v <= last_done; ++v)
      if (!reaches_open[find(v)]) return true;
    return false;
  }

  void accept() {
    auto g = Multigraph::degenerate(n_, chosen_);
    if (!is_connected(g)) return;
    if (filter_.superstable && !is_superstable(g)) return;
    if (filter_.bridgeless && separating_edges(g).any()) return;
    found_.insert(canonical_form(g));
  }

  std::size_t n_;
  std::size_t edges_;
  EnumerationFilter filter_;
  std::unordered_set<CanonicalForm>& found_;
  std::vector<Edge> pairs_;
  std::vector<Edge> chosen_;
  std::vector<std::size_t> deg_;
  std::size_t min_valency_ = 1;
};

struct OrderedGraph {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<CanonicalForm> parts;
  Multigraph graph;
};

bool ordered_before(const OrderedGraph& a, const OrderedGraph& b) {
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.parts < b.parts;
}

}  // namespace

std::vector<Multigraph> enumerate_multigraphs(std::size_t max_edges, const EnumerationFilter& filter) {
  if (max_edges > kEnumerationMaxEdges)
    throw Error(ErrorKind::TooLarge, "max_edges " + std::to_string(max_edges) + " > " +
                                         std::to_string(kEnumerationMaxEdges));
  if (max_connected_vertices(max_edges, filter) > kCanonicalMaxVertices)
    throw Error(ErrorKind::TooLarge, "classes with " + std::to_string(max_edges) +
                                         " edges may exceed " + std::to_string(kCanonicalMaxVertices) +
                                         " vertices under this filter");

  std::vector<OrderedGraph> connected;
  for (std::size_t d = 1; d <= max_edges; ++d) {
    std::unordered_set<CanonicalForm> found;
    for (std::size_t n = 1; n <= max_connected_vertices(d, filter); ++n) ConnectedSearch(n, d, filter, found).run();
    for (const auto& c : found) connected.push_back(OrderedGraph{c.vertex_count, d, {c}, c.graph()});
  }
  std::sort(connected.begin(), connected.end(), ordered_before);

  std::vector<OrderedGraph> all = connected;
  if (!filter.connected) {
    // Multisets of at least two connected classes, indices non-decreasing.
    std::vector<std::size_t> picked;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t budget) {
      if (picked.size() >= 2) {
        OrderedGraph u;
        u.graph = Multigraph::degenerate(0, {});
        for (auto idx : picked) {
          u.vertices += connected[idx].vertices;
          u.edges += connected[idx].edges;
          u.parts.push_back(connected[idx].parts.front());
          u.graph = disjoint_union(u.graph, connected[idx].graph);
        }
        all.push_back(std::move(u));
      }
      for (std::size_t idx = from; idx < connected.size(); ++idx) {
        if (connected[idx].edges > budget) continue;
        picked.push_back(idx);
        extend(idx, budget - connected[idx].edges);
        picked.pop_back();
      }
    };
    extend(0, max_edges);
    // Parts are listed in connected-class order, which is already sorted.
    std::sort(all.begin(), all.end(), ordered_before);
  }

  std::vector<Multigraph> out;
  out.reserve(all.size());
  for (auto& o : all) out.push_back(std::move(o.graph));
  return out;
}

namespace {

template <class Check>
SweepReport sweep(std::size_t max_edges, Check check) {
  if (max_edges > kSweepMaxEdges)
    throw Error(ErrorKind::TooLarge, "sweeps support at most " + std::to_string(kSweepMaxEdges) + " edges");
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.max_edges = max_edges;
  for (const auto& g : enumerate_multigraphs(max_edges, EnumerationFilter{.superstable = true})) {
    ++report.graphs_examined;
    const auto betti = cyclic_betti_set(g);
    Verdict v = check(g, betti);
    if (v.hypothesis_holds) {
      ++report.hypothesis_exercised;
      ++report.exercised_by_class[v.classification];
      report.exercised.push_back(g);
    } else {
      ++report.vacuous;
    }
    if (!v.holds) report.violations.push_back(SweepViolation{g, std::move(v)});
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SweepReport sweep_theorem2(std::size_t max_edges) {
  return sweep(max_edges, [](const Multigraph& g, const BettiSet& b) { return check_theorem2(g, b); });
}

SweepReport sweep_theorem3(std::size_t max_edges) {
  return sweep(max_edges, [](const Multigraph& g, const BettiSet& b) { return check_theorem3(g, b); });
}

}  // namespace spincomb
