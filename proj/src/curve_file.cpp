#include "spincomb/curve_file.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace spincomb {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& reason) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + reason);
}

std::optional<std::size_t> parse_genus(std::string_view word) {
  constexpr std::string_view prefix = "genus=";
  if (!word.starts_with(prefix)) return std::nullopt;
  word.remove_prefix(prefix.size());
  if (word.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

struct PendingEdge {
  std::size_t line;
  std::string a, b;
};

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
  std::vector<std::string> vertex_names, edge_names;
  std::vector<std::size_t> marks;
  std::vector<PendingEdge> pending;
  std::map<std::string, VertexId, std::less<>> vertex_index;
  std::map<std::string, EdgeId, std::less<>> edge_index;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto words = split_words(line);
    if (words.empty()) continue;
    if (words[0] == "v") {
      if (words.size() != 3) parse_error(line_no, "expected 'v <name> genus=<int>'");
      const auto genus = parse_genus(words[2]);
      if (!genus) parse_error(line_no, "bad genus field '" + std::string(words[2]) + "'");
      std::string name(words[1]);
      if (vertex_index.contains(name))
        throw Error(ErrorKind::DuplicateName, "line " + std::to_string(line_no) + ": vertex " + name);
      vertex_index.emplace(name, vertex_names.size());
      vertex_names.push_back(std::move(name));
      marks.push_back(*genus);
    } else if (words[0] == "e") {
      if (words.size() != 4) parse_error(line_no, "expected 'e <name> <vertex> <vertex>'");
      std::string name(words[1]);
      if (edge_index.contains(name))
        throw Error(ErrorKind::DuplicateName, "line " + std::to_string(line_no) + ": edge " + name);
      edge_index.emplace(name, edge_names.size());
      edge_names.push_back(std::move(name));
      pending.push_back(PendingEdge{line_no, std::string(words[2]), std::string(words[3])});
    } else {
      parse_error(line_no, "unknown record '" + std::string(words[0]) + "'");
    }
  }

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& pe : pending) {
    auto resolve = [&](const std::string& name) {
      auto it = vertex_index.find(name);
      if (it == vertex_index.end())
        throw Error(ErrorKind::UnknownVertex, "line " + std::to_string(pe.line) + ": vertex " + name);
      return it->second;
    };
    const auto a = resolve(pe.a);
    const auto b = resolve(pe.b);
    pairs.emplace_back(a, b);
  }

  if (vertex_names.empty()) throw Error(ErrorKind::EmptyGraph, "no vertices declared");
  // A lone smooth component has no nodes; everywhere else isolated vertices are rejected.
  Multigraph graph = vertex_names.size() == 1 && pairs.empty() ? Multigraph::degenerate(1, {})
                                                               : build_graph(vertex_names.size(), pairs);
  return CurveFile{CurveDualGraph(std::move(graph), std::move(marks)), std::move(vertex_names),
                   std::move(edge_names)};
}

std::string format_curve_file(const CurveDualGraph& curve, const std::vector<std::string>& vertex_names,
                              const std::vector<std::string>& edge_names) {
  const auto& g = curve.graph();
  auto vname = [&](VertexId v) { return v < vertex_names.size() ? vertex_names[v] : "v" + std::to_string(v); };
  auto ename = [&](EdgeId e) { return e < edge_names.size() ? edge_names[e] : "n" + std::to_string(e); };
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << "v " << vname(v) << " genus=" << curve.genus_marks()[v] << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "e " << ename(e) << ' ' << vname(g.edges()[e].u) << ' ' << vname(g.edges()[e].v) << '\n';
  return out.str();
}

}  // namespace spincomb
