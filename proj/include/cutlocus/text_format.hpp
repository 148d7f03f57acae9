#pragma once

#include <optional>
#include <string>

#include "cutlocus/multigraph.hpp"
#include "cutlocus/scheme.hpp"

namespace cutlocus {

// Line-oriented text format, '#' starts a comment:
//
//   graph <name>
//   vertex <id>
//   edge <id> <u> <v>
//   rotation <vertex-id> <edge>.<0|1> ...   (scheme files only)
//   sign <edge-id> <0|1>                    (scheme files only)
//
// Vertex and edge ids must be dense from 0, in any order. Errors are reported
// as ParseError with the offending line.
struct GraphDocument {
  std::string name;
  Multigraph graph;
};

struct SchemeDocument {
  std::string name;
  Scheme scheme;
};

GraphDocument parse_graph(const std::string& text);
// Rotation lines are required for every vertex that has darts, sign lines for
// every edge.
SchemeDocument parse_scheme(const std::string& text);

std::string write_graph(const Multigraph& g, const std::string& name = "");
std::string write_scheme(const Scheme& s, const std::string& name = "");

std::string read_file(const std::string& path);

}  // namespace cutlocus
