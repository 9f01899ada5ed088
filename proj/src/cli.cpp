#include "spincomb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "spincomb/curve_file.hpp"
#include "spincomb/enumerate.hpp"
#include "spincomb/spin.hpp"

namespace spincomb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::size_t cap = kDefaultEnumerationCap;
};

CurveFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_curve_file(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.detail());
  }
}

std::optional<std::size_t> exact_log2(const BigInt& x) {
  if (x <= 0) return std::nullopt;
  const auto msb = boost::multiprecision::msb(x);
  if (x != pow2(msb)) return std::nullopt;
  return static_cast<std::size_t>(msb);
}

std::string count_text(const BigInt& x) {
  auto s = x.str();
  if (auto k = exact_log2(x)) s += " (2^" + std::to_string(*k) + ")";
  return s;
}

Json count_json(const BigInt& x) {
  Json j;
  j["decimal"] = x.str();
  if (auto k = exact_log2(x))
    j["log2"] = *k;
  else
    j["log2"] = nullptr;
  return j;
}

std::string power_text(std::size_t exponent) {
  if (exponent == 0) return "1";
  if (exponent == 1) return "2";
  return "2^" + std::to_string(exponent);
}

template <class Range>
std::string brace_list(const Range& r) {
  std::string s = "{";
  bool first = true;
  for (const auto& x : r) {
    if (!first) s += ", ";
    s += x;
    first = false;
  }
  return s + "}";
}

std::vector<std::string> edge_names(const CurveFile& f, const EdgeSubset& s) {
  std::vector<std::string> out;
  for (auto e : s.indices()) out.push_back(f.edge_names[e]);
  return out;
}

std::vector<std::string> numbers(const std::set<std::size_t>& s) {
  std::vector<std::string> out;
  for (auto n : s) out.push_back(std::to_string(n));
  return out;
}

Json verdict_json(const CurveFile& f, const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["hypothesis_holds"] = v.hypothesis_holds;
  j["classification"] = std::string(to_string(v.classification));
  if (v.witness)
    j["witness"] = edge_names(f, *v.witness);
  else
    j["witness"] = nullptr;
  return j;
}

std::string verdict_text(const CurveFile& f, const Verdict& v) {
  std::string s = v.holds ? "holds" : "FAILS";
  s += v.hypothesis_holds ? " (hypothesis exercised" : " (vacuous";
  s += ", classification " + std::string(to_string(v.classification));
  if (v.witness) s += ", witness " + brace_list(edge_names(f, *v.witness));
  return s + ")";
}

int cmd_analyze(const std::string& path, const Options& opt, std::ostream& out) {
  const auto file = load(path);
  const auto& g = file.curve.graph();
  const auto bridges = edge_names(file, separating_edges(g));
  std::vector<std::string> cut_vertices;
  for (auto v : separating_vertices(g)) cut_vertices.push_back(file.vertex_names[v]);
  const auto betti = cyclic_betti_set(g, opt.cap);

  if (opt.json) {
    Json j;
    j["edges"] = g.edge_count();
    j["vertices"] = g.vertex_count();
    j["components"] = component_count(g);
    j["betti_number"] = betti_number(g);
    j["separating_edges"] = bridges;
    j["separating_vertices"] = cut_vertices;
    j["eulerian"] = is_eulerian(g);
    j["cyclic_betti_set"] = betti.members;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "edges: " << g.edge_count() << '\n'
      << "vertices: " << g.vertex_count() << '\n'
      << "components: " << component_count(g) << '\n'
      << "betti number: " << betti_number(g) << '\n'
      << "separating edges: " << brace_list(bridges) << '\n'
      << "separating vertices: " << brace_list(cut_vertices) << '\n'
      << "eulerian: " << (is_eulerian(g) ? "yes" : "no") << '\n'
      << "cyclic betti set: " << brace_list(numbers(betti.members)) << '\n';
  return kExitOk;
}

int cmd_spin(const std::string& path, const Options& opt, std::ostream& out) {
  const auto file = load(path);
  const auto r = spin_report(file.curve, opt.cap);
  std::vector<std::string> l_set;
  for (auto e : r.multiplicity_set_exponents) l_set.push_back(power_text(e));

  if (opt.json) {
    Json j;
    j["b"] = r.b;
    j["p"] = r.p;
    j["genus"] = r.genus;
    j["stable"] = file.curve.is_stable();
    j["even_set_count"] = count_json(r.even_set_count);
    j["component_count"] = count_json(r.component_count);
    Json mult = Json::array();
    for (auto it = r.multiplicity_multiset.rbegin(); it != r.multiplicity_multiset.rend(); ++it)
      mult.push_back(Json{{"exponent", it->first}, {"count", count_json(it->second)}});
    j["multiplicity_multiset"] = mult;
    j["multiplicity_set_exponents"] = r.multiplicity_set_exponents;
    j["length"] = count_json(r.length);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "b: " << r.b << '\n' << "p: " << r.p << '\n' << "genus: " << r.genus << '\n';
  if (!file.curve.is_stable()) out << "warning: curve is not stable (a genus-0 component has fewer than 3 nodes)\n";
  out << "even sets: " << count_text(r.even_set_count) << '\n'
      << "components: " << count_text(r.component_count) << '\n'
      << "multiplicities:\n";
  for (auto it = r.multiplicity_multiset.rbegin(); it != r.multiplicity_multiset.rend(); ++it)
    out << "  " << power_text(it->first) << ": " << count_text(it->second) << '\n';
  out << "L(S_X) = " << brace_list(l_set) << '\n' << "length: " << count_text(r.length) << '\n';
  return kExitOk;
}

int cmd_classify(const std::string& path, const Options& opt, std::ostream& out) {
  const auto file = load(path);
  const auto& g = file.curve.graph();
  const bool superstable = is_superstable(g);
  std::optional<Verdict> t2, t3, cor_split;
  std::optional<FinalCorollaryVerdict> cor_final;
  if (superstable) {
    const auto betti = cyclic_betti_set(g, opt.cap);
    t2 = check_theorem2(g, betti, opt.cap);
    t3 = check_theorem3(g, betti, opt.cap);
    if (curve_genus(file.curve) >= 4) cor_final = check_corollary_final(file.curve, opt.cap);
  }
  if (file.curve.is_stable()) cor_split = check_corollary_split(file.curve, opt.cap);

  if (opt.json) {
    Json j;
    j["superstable"] = superstable;
    j["stable"] = file.curve.is_stable();
    j["split"] = is_split(g);
    j["loop"] = is_loop_graph(g);
    j["tetrahedron"] = is_tetrahedron(g);
    j["fat_triangle"] = is_fat_triangle(g);
    j["gap2_classification"] = t2 ? verdict_json(file, *t2) : Json(nullptr);
    j["gap3_classification"] = t3 ? verdict_json(file, *t3) : Json(nullptr);
    j["split_criterion"] = cor_split ? verdict_json(file, *cor_split) : Json(nullptr);
    if (cor_final) {
      Json c;
      c["part_i"] = verdict_json(file, cor_final->part_i);
      c["part_i_two_components"] = cor_final->part_i_two_components;
      c["part_ii"] = verdict_json(file, cor_final->part_ii);
      j["genus4_superstable"] = c;
    } else {
      j["genus4_superstable"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "superstable: " << yn(superstable) << '\n'
        << "stable: " << yn(file.curve.is_stable()) << '\n'
        << "split: " << yn(is_split(g)) << '\n'
        << "loop: " << yn(is_loop_graph(g)) << '\n'
        << "tetrahedron: " << yn(is_tetrahedron(g)) << '\n'
        << "fat_triangle: " << yn(is_fat_triangle(g)) << '\n';
    const std::string na = "not applicable";
    out << "gap-2 classification: " << (t2 ? verdict_text(file, *t2) : na) << '\n'
        << "gap-3 classification: " << (t3 ? verdict_text(file, *t3) : na) << '\n'
        << "split criterion: " << (cor_split ? verdict_text(file, *cor_split) : na) << '\n';
    if (cor_final) {
      out << "genus>=4 superstable (i): " << verdict_text(file, cor_final->part_i)
          << (cor_final->part_i.hypothesis_holds
                  ? (cor_final->part_i_two_components ? " [two components]" : " [not two components]")
                  : "")
          << '\n'
          << "genus>=4 superstable (ii): " << verdict_text(file, cor_final->part_ii) << '\n';
    } else {
      out << "genus>=4 superstable: " << na << '\n';
    }
  }
  const bool refuted = (t2 && !t2->holds) || (t3 && !t3->holds) || (cor_split && !cor_split->holds) ||
                       (cor_final && (!cor_final->part_i.holds || !cor_final->part_ii.holds));
  return refuted ? kExitViolation : kExitOk;
}

int cmd_evensets(const std::string& path, const Options& opt, std::ostream& out) {
  const auto file = load(path);
  Json list = Json::array();
  for (const auto& delta : even_sets(file.curve, opt.cap)) {
    const auto d = support_description(file.curve, delta);
    if (opt.json) {
      Json j;
      j["nodes"] = edge_names(file, delta);
      j["betti"] = d.gluing_dimension;
      j["blown_up"] = edge_names(file, d.blown_up_nodes);
      j["points"] = count_json(d.point_count);
      j["multiplicity_exponent"] = d.multiplicity_exponent;
      list.push_back(std::move(j));
    } else {
      out << brace_list(edge_names(file, delta)) << "  b1=" << d.gluing_dimension
          << "  points=" << count_text(d.point_count) << "  multiplicity=" << power_text(d.multiplicity_exponent)
          << '\n';
    }
  }
  if (opt.json) out << list.dump(2) << '\n';
  return kExitOk;
}

Json sweep_json(const SweepReport& r) {
  Json j;
  j["max_edges"] = r.max_edges;
  j["graphs_examined"] = r.graphs_examined;
  j["hypothesis_exercised"] = r.hypothesis_exercised;
  j["vacuous"] = r.vacuous;
  j["violations"] = r.violations.size();
  Json classes = Json::object();
  for (const auto& [c, n] : r.exercised_by_class) classes[std::string(to_string(c))] = n;
  j["exercised_by_class"] = classes;
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

void sweep_text(std::ostream& out, const std::string& title, const SweepReport& r) {
  out << title << " (max_edges " << r.max_edges << "): examined " << r.graphs_examined << ", exercised "
      << r.hypothesis_exercised << ", vacuous " << r.vacuous << ", violations " << r.violations.size() << ", "
      << std::fixed << std::setprecision(2) << r.elapsed_seconds << " s\n";
  out << "  exercised classes:";
  for (const auto& [c, n] : r.exercised_by_class) out << ' ' << to_string(c) << '=' << n;
  out << '\n';
  for (const auto& v : r.violations) {
    out << "  VIOLATION:";
    for (const auto& e : v.graph.edges()) out << " (" << e.u << ',' << e.v << ')';
    out << '\n';
  }
}

int cmd_verify(std::size_t max_edges, const Options& opt, std::ostream& out) {
  const auto r2 = sweep_theorem2(max_edges);
  const auto r3 = sweep_theorem3(max_edges);
  if (opt.json) {
    Json j;
    j["gap2_classification"] = sweep_json(r2);
    j["gap3_classification"] = sweep_json(r3);
    out << j.dump(2) << '\n';
  } else {
    sweep_text(out, "gap-2 classification sweep", r2);
    sweep_text(out, "gap-3 classification sweep", r3);
  }
  return r2.ok() && r3.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle spaces, cyclic Betti sets and spin curve numerics of stable curve dual graphs", "spincomb"};
  Options opt;
  app.add_flag("--json", opt.json, "Structured JSON output");
  app.add_option("--cap", opt.cap, "Largest b1 whose cyclic sets may be enumerated")->capture_default_str();
  app.require_subcommand(1);

  std::string path;
  std::size_t max_edges = 0;
  auto* analyze = app.add_subcommand("analyze", "Structure of the dual graph");
  auto* spin = app.add_subcommand("spin", "Numerics of the scheme of spin curves");
  auto* classify = app.add_subcommand("classify", "Shape recognisers and classification checks");
  auto* evensets = app.add_subcommand("evensets", "List every even set of nodes");
  for (auto* sub : {analyze, spin, classify, evensets}) {
    sub->add_option("path", path, "Curve file")->required();
    sub->add_flag("--json", opt.json, "Structured JSON output");
  }
  auto* verify = app.add_subcommand("verify", "Exhaustive classification sweeps over superstable graphs");
  verify->add_option("max_edges", max_edges, "Largest edge count")->required();
  verify->add_flag("--json", opt.json, "Structured JSON output");

  std::vector<std::string> argv_store{"spincomb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, opt, out);
    if (spin->parsed()) return cmd_spin(path, opt, out);
    if (classify->parsed()) return cmd_classify(path, opt, out);
    if (evensets->parsed()) return cmd_evensets(path, opt, out);
    if (verify->parsed()) return cmd_verify(max_edges, opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace spincomb::cli
