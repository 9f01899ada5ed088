#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spincomb/spin.hpp"

namespace spincomb {

/// A curve read from the line-oriented text format:
///
///     # comment
///     v <name> genus=<int>
///     e <name> <vertex> <vertex>
///
/// Vertices and edges are numbered in declaration order. Names are any
/// whitespace-free byte sequence (UTF-8 is fine).
struct CurveFile {
  CurveDualGraph curve;
  std::vector<std::string> vertex_names;
  std::vector<std::string> edge_names;
};

/// Throws ParseError, UnknownVertex or DuplicateName; messages carry the line number.
CurveFile parse_curve_file(std::string_view text);

/// Inverse of parse_curve_file. Unnamed items get v<i> / n<i>.
std::string format_curve_file(const CurveDualGraph& curve, const std::vector<std::string>& vertex_names = {},
                              const std::vector<std::string>& edge_names = {});

}  // namespace spincomb
