#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cutlocus {

using VertexId = int;
using EdgeId = int;
// Edge e owns darts 2e (end 0, at edge.u) and 2e+1 (end 1, at edge.v).
using DartId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr DartId make_dart(EdgeId e, int end) { return 2 * e + end; }
constexpr EdgeId dart_edge(DartId d) { return d / 2; }
constexpr int dart_end(DartId d) { return d % 2; }
constexpr DartId dart_partner(DartId d) { return d ^ 1; }

// Finite connected undirected multigraph. Loops and parallel edges are
// allowed. Immutable once built.
class Multigraph {
 public:
  // Throws Error{EndpointOutOfRange} or Error{Disconnected}.
  static Multigraph build(int vertices, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(darts_at_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::pair<int, int>> edge_pairs() const;

  // Darts at v in increasing id order.
  std::span<const DartId> darts_at(VertexId v) const { return darts_at_[v]; }
  int degree(VertexId v) const { return static_cast<int>(darts_at_[v].size()); }
  VertexId dart_vertex(DartId d) const {
    const Edge& e = edges_[dart_edge(d)];
    return dart_end(d) == 0 ? e.u : e.v;
  }
  int max_degree() const;

  bool operator==(const Multigraph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

 private:
  Multigraph() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<DartId>> darts_at_;
};

// Subset of E(G), bit-vector semantics.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int edge_count) : bits_(edge_count, 0) {}
  static EdgeSet of(int edge_count, std::initializer_list<EdgeId> ids);

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(EdgeId e) const { return bits_[e] != 0; }
  void insert(EdgeId e) { bits_[e] = 1; }
  void erase(EdgeId e) { bits_[e] = 0; }
  void toggle(EdgeId e) { bits_[e] ^= 1; }
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<EdgeId> ids() const;

  EdgeSet& operator^=(const EdgeSet& other);
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Component {
  EdgeSet edges;
  std::vector<VertexId> vertices;  // sorted
};

struct Decomposition {
  std::vector<EdgeId> bridges;  // sorted
  // Ordered by smallest edge id.
  std::vector<Component> components;
};

// A graph derived from another one, with maps back to the original ids.
struct Subgraph {
  Multigraph graph;
  std::vector<VertexId> vertex_map;  // new id -> original id
  std::vector<EdgeId> edge_map;      // new id -> original id
};

// E - V + 1.
int cycle_rank(const Multigraph& g);

Decomposition bridges_and_components(const Multigraph& g);

// Iteratively strips degree-1 vertices. An acyclic graph collapses to the
// single-vertex graph on its smallest surviving (else smallest) vertex.
Subgraph cyclic_part(const Multigraph& g);

// Restriction of g to one component of its decomposition.
Subgraph component_subgraph(const Multigraph& g, const Component& component);

struct CycleLimits {
  int max_edges = 24;
};

// Edge sets of all simple cycles. Loops are length-1 cycles and a pair of
// parallel edges is a length-2 cycle. Sorted, no duplicates.
std::vector<EdgeSet> simple_cycles(const Multigraph& g, CycleLimits limits = {});

// Spanning tree grown greedily in edge-id order; one cycle per non-tree edge,
// in non-tree edge order.
std::vector<EdgeSet> fundamental_cycle_basis(const Multigraph& g);
std::vector<EdgeId> spanning_tree_edges(const Multigraph& g);

struct CanonicalForm {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // each (min,max), sorted

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  std::string to_string() const;
};

struct Automorphism {
  std::vector<VertexId> vertex_perm;  // v -> image
  std::vector<EdgeId> edge_perm;      // e -> image
};

struct IsoLimits {
  int max_vertices = 10;
};

// Brute force over vertex bijections; throws Error{TooLarge} above the cap.
CanonicalForm canonical_form(const Multigraph& g, IsoLimits limits = {});
bool isomorphic(const Multigraph& g, const Multigraph& h, IsoLimits limits = {});
std::vector<Automorphism> automorphisms(const Multigraph& g, IsoLimits limits = {});

// Graph rebuilt from its canonical form, so edge ids follow canonical order.
Multigraph canonical_graph(const Multigraph& g, IsoLimits limits = {});

}  // namespace cutlocus
