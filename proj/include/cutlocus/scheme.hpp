#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutlocus/multigraph.hpp"

namespace cutlocus {

// Cyclic dart order per vertex.
using Rotation = std::vector<std::vector<DartId>>;
// Per-edge sign λ(e) in {0,1}; 1 means the band of e carries an odd number
// of half-twists relative to vertex disks that all face "up".
using Signs = std::vector<std::uint8_t>;

// A signed rotation system: the combinatorial form of a patch (fattened
// graph). It is a strip when its boundary is a single circle.
class Scheme {
 public:
  // Validates and normalizes: each cyclic order is rotated so its smallest
  // dart comes first. Throws Error{BadRotation} or Error{MissingSign}.
  static Scheme make(Multigraph graph, Rotation rotation, Signs signs);

  const Multigraph& graph() const { return graph_; }
  const Rotation& rotation() const { return rotation_; }
  const Signs& signs() const { return signs_; }
  int sign(EdgeId e) const { return signs_[e]; }

  DartId next_at(DartId d) const { return next_[d]; }
  DartId prev_at(DartId d) const { return prev_[d]; }

  friend bool operator==(const Scheme& a, const Scheme& b) {
    return a.graph_ == b.graph_ && a.rotation_ == b.rotation_ && a.signs_ == b.signs_;
  }

 private:
  Scheme(Multigraph graph) : graph_(std::move(graph)) {}

  Multigraph graph_;
  Rotation rotation_;
  Signs signs_;
  std::vector<DartId> next_;
  std::vector<DartId> prev_;
};

// Rotation that lists each vertex's darts in increasing id order.
Rotation default_rotation(const Multigraph& g);

struct DartSide {
  DartId dart = 0;
  int side = 0;
  friend auto operator<=>(const DartSide&, const DartSide&) = default;
};

struct BoundaryTrace {
  std::vector<std::vector<DartSide>> orbits;
  std::vector<int> reverse_orbit;  // orbit index -> index of its reversal
  int isolated_vertices = 0;
  int boundary_count = 0;
};

// Successor on dart-sides: from (h, s) cross the band of h to k = partner(h),
// pick up the band's twist s' = s xor λ(edge), then turn to the rotation
// successor of k when s' = 0 or its predecessor when s' = 1.
DartSide trace_successor(const Scheme& s, DartSide state);

BoundaryTrace boundary_trace(const Scheme& s);
// Same count as boundary_trace(s).boundary_count without storing orbits.
int boundary_count(const Scheme& s);

// Throws Error{NotCyclicPart} when the graph has degree-1 vertices.
bool is_strip(const Scheme& s);

// Independent count: glues one disk per vertex and one rectangle per edge and
// follows the unglued sides with a union-find.
int oracle_boundary_count(const Scheme& s);

// With every vertex disk facing up the companion function is λ itself.
Signs companion(const Scheme& s);
EdgeSet switched_edges(const Scheme& s);

// Turns the disk at v over: reverses its cyclic order and toggles λ on the
// non-loop edges at v. Loops keep their sign.
Scheme vertex_flip(const Scheme& s, VertexId v);

// Reverses every cyclic order, i.e. the mirror image.
Scheme mirror(const Scheme& s);

struct SurfaceType {
  int euler_patch = 0;
  int boundary = 0;
  bool orientable = true;
  int euler_closed = 0;
  // Genus if orientable, else crosscap count.
  int genus_or_crosscaps = 0;

  std::string closed_name() const;
  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

bool is_orientable(const Multigraph& g, const Signs& signs);
SurfaceType surface_type(const Scheme& s);

struct Subscheme {
  Scheme scheme;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

// Restriction to one component: foreign darts are dropped from each cyclic
// order and λ is inherited.
Subscheme component_subscheme(const Scheme& s, const Component& component);

// Restriction along an arbitrary subgraph mapping (new ids -> old ids).
Scheme restrict_scheme(const Scheme& s, const Subgraph& sub);

// True if the schemes differ only by vertex/edge renumbering and by swapping
// the two ends of edges. Mirror images are not identified.
bool isomorphic_schemes(const Scheme& a, const Scheme& b);

}  // namespace cutlocus
