#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutlocus/scheme.hpp"

namespace cutlocus {

// Shape of a cubic tree with d cyclically ordered leaves. Step k merges the
// neighbours at positions merges[k] and merges[k]+1 of the current sequence
// into a new internal vertex; after d-3 merges the last three entries meet
// at the root. An empty shape means the left comb (all merges at 0).
struct TreeShape {
  std::vector<int> merges;

  static TreeShape left_comb(int leaves);
};

struct ReductionStep {
  enum class Kind { Contract, Expand };
  Kind kind = Kind::Expand;
  // Contract: the contracted edge. Expand: the expanded vertex.
  int target = 0;
  // Expand only: leaf darts in cyclic order, the shape used, and the ids of
  // the new vertices and internal edges.
  std::vector<DartId> leaves;
  TreeShape shape;
  std::vector<VertexId> new_vertices;
  std::vector<EdgeId> new_edges;
  // New dart id for every old dart (-1 when the dart disappeared).
  std::vector<DartId> dart_map;
};

struct Contracted {
  Scheme scheme;
  ReductionStep step;
};

struct Expanded {
  Scheme scheme;
  ReductionStep step;
};

// Merges the ends of an untwisted non-loop edge. The surviving vertex is the
// smaller endpoint id; the other vertex and the edge disappear and higher ids
// shift down by one. Throws Error{LoopContraction} or Error{SwitchedContraction}.
Contracted contract_unswitched(const Scheme& s, EdgeId e);

// Replaces v (degree d > 3) by a cubic tree whose leaves carry v's darts in
// their cyclic order. The root keeps id v, other internal vertices and the
// d-3 internal edges are appended. Internal edges get sign 0.
// Throws Error{DegreeTooSmall} or Error{BadShape}.
Expanded expand_vertex(const Scheme& s, VertexId v, std::optional<TreeShape> shape = std::nullopt);

// Number of vertices of degree > 3.
int high_degree_count(const Multigraph& g);

struct Reduction {
  Scheme scheme;
  std::vector<ReductionStep> steps;
};

// Expands every vertex of degree > 3 with the left comb, lowest id first,
// until the maximum degree is 3. Requires minimum degree 2.
Reduction reduce_to_cubic(const Scheme& s);

std::string steps_to_json(const std::vector<ReductionStep>& steps);
std::vector<ReductionStep> steps_from_json(const std::string& text);

}  // namespace cutlocus
