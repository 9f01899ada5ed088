#include "spincomb/spin.hpp"

#include <numeric>
#include <string>

namespace spincomb {

BigInt pow2(std::size_t k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

CurveDualGraph::CurveDualGraph(Multigraph graph, std::vector<std::size_t> genus_marks)
    : graph_(std::move(graph)), genus_marks_(std::move(genus_marks)) {
  if (genus_marks_.size() != graph_.vertex_count())
    throw Error(ErrorKind::BadIndex, std::to_string(genus_marks_.size()) + " genus marks for " +
                                         std::to_string(graph_.vertex_count()) + " vertices");
  if (graph_.vertex_count() == 0) throw Error(ErrorKind::EmptyGraph, "a curve has at least one component");
  if (!is_connected(graph_)) throw Error(ErrorKind::Disconnected, "stable curves are connected");
}

std::size_t CurveDualGraph::geometric_genus_sum() const {
  return std::accumulate(genus_marks_.begin(), genus_marks_.end(), std::size_t{0});
}

bool CurveDualGraph::is_stable() const {
  for (VertexId v = 0; v < graph_.vertex_count(); ++v)
    if (genus_marks_[v] == 0 && valency(graph_, v) < 3) return false;
  return true;
}

std::size_t curve_genus(const CurveDualGraph& x) { return betti_number(x.graph()) + x.geometric_genus_sum(); }

CyclicSets even_sets(const CurveDualGraph& x, std::size_t cap) { return CyclicSets(x.graph(), cap); }

SpinReport spin_report(const CurveDualGraph& x, std::size_t cap) {
  SpinReport r;
  r.b = betti_number(x.graph());
  r.p = x.geometric_genus_sum();
  r.genus = r.b + r.p;

  const auto hist = cyclic_betti_histogram(x.graph(), cap);
  const BigInt line_bundle_choices = pow2(2 * r.p);
  for (std::size_t n = 0; n < hist.size(); ++n) {
    if (hist[n] == 0) continue;
    r.betti.members.insert(n);
    r.even_set_count += hist[n];
    const BigInt count = BigInt(hist[n]) * line_bundle_choices * pow2(n);
    const std::size_t exponent = r.b - n;
    r.component_count += count;
    r.multiplicity_multiset[exponent] += count;
    r.multiplicity_set_exponents.insert(exponent);
    r.length += count * pow2(exponent);
  }

  if (r.even_set_count != pow2(r.b) || r.length != pow2(2 * r.genus))
    throw Error(ErrorKind::InternalLengthMismatch,
                "length " + r.length.str() + " differs from 2^" + std::to_string(2 * r.genus));
  return r;
}

std::set<std::size_t> multiplicity_set(const CurveDualGraph& x, std::size_t cap) {
  const auto b = betti_number(x.graph());
  std::set<std::size_t> out;
  for (auto n : cyclic_betti_set(x.graph(), cap).members) out.insert(b - n);
  return out;
}

bool is_compact_type(const CurveDualGraph& x) { return betti_number(x.graph()) == 0; }

SupportDescription support_description(const CurveDualGraph& x, const EdgeSubset& delta) {
  if (delta.width() != x.graph().edge_count())
    throw Error(ErrorKind::WidthMismatch, "edge subset width " + std::to_string(delta.width()));
  if (!is_cyclic(x.graph(), delta))
    throw Error(ErrorKind::NotEven, "node set " + delta.to_bit_string() + " is not even");
  SupportDescription d;
  d.even_set = delta;
  d.blown_up_nodes = delta.complement();
  d.exceptional_components = d.blown_up_nodes.count();
  d.gluing_dimension = betti_number(x.graph(), delta);
  d.point_count = pow2(2 * x.geometric_genus_sum() + d.gluing_dimension);
  d.multiplicity_exponent = betti_number(x.graph()) - d.gluing_dimension;
  return d;
}

Verdict check_corollary_split(const CurveDualGraph& x, std::size_t cap) {
  if (!x.is_stable()) throw Error(ErrorKind::PreconditionFailed, "curve is not stable");
  const auto& g = x.graph();
  const auto genus = curve_genus(x);
  const auto b = betti_number(g);
  const auto exps = multiplicity_set(x, cap);

  Verdict v;
  v.classification = classify(g);
  const bool top = exps.contains(genus);
  const bool second = genus >= 2 && exps.contains(genus - 2);
  if (!top || second) {
    // Exponent genus - 2 comes from a cyclic set of betti b - genus + 2.
    if (top && second) v.witness = cyclic_set_with_betti(g, b + 2 - genus, cap);
    return v;
  }
  v.hypothesis_holds = true;
  v.holds = v.classification == Classification::split ||
            (genus == 3 && v.classification == Classification::tetrahedron);
  return v;
}

FinalCorollaryVerdict check_corollary_final(const CurveDualGraph& x, std::size_t cap) {
  const auto& g = x.graph();
  const auto genus = curve_genus(x);
  if (genus < 4) throw Error(ErrorKind::PreconditionFailed, "genus " + std::to_string(genus) + " < 4");
  if (!is_superstable(g)) throw Error(ErrorKind::PreconditionFailed, "dual graph is not superstable");

  const auto b = betti_number(g);
  const auto exps = multiplicity_set(x, cap);
  const auto shape = classify(g);
  FinalCorollaryVerdict out;

  out.part_i.classification = shape;
  if (b >= 2 && exps.contains(b - 2)) {
    out.part_i.witness = cyclic_set_with_betti(g, 2, cap);
  } else {
    out.part_i.hypothesis_holds = true;
    out.part_i.holds = shape == Classification::split || (b == 1 && shape == Classification::loop) ||
                       (b == 3 && shape == Classification::tetrahedron);
    out.part_i_two_components = shape == Classification::split;
  }

  out.part_ii.classification = shape;
  const bool third = b >= 3 && exps.contains(b - 3);
  const bool smaller = b >= 4 && *exps.begin() < b - 3;
  if (third) {
    out.part_ii.witness = cyclic_set_with_betti(g, 3, cap);
  } else if (smaller) {
    out.part_ii.hypothesis_holds = true;
    out.part_ii.holds = b == 4 && shape == Classification::fat_triangle;
  }
  return out;
}

}  // namespace spincomb
