#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cutlocus/multigraph.hpp"
#include "cutlocus/scheme.hpp"

namespace cutlocus {

struct GenerationLimits {
  int max_q = 5;
};

// All connected 3-regular multigraphs (loops allowed) of cycle rank q, one per
// isomorphism class, each rebuilt from its canonical form and listed in
// canonical order. Empty for q < 2.
std::vector<Multigraph> generate_cubic_graphs(int q, GenerationLimits limits = {});

struct EnumerationLimits {
  std::uint64_t budget = 100'000'000;
  int threads = 1;
};

// Indexable space of all (rotation, signs) pairs on a graph. Cyclic orders
// are counted up to re-anchoring only: each vertex keeps its smallest dart
// first and the rest run through all permutations in lexicographic order.
// Index layout: rotation_index * 2^E + signs_mask.
class SchemeSpace {
 public:
  // Throws Error{BudgetExceeded} if the space is larger than `budget`.
  SchemeSpace(const Multigraph& g, std::uint64_t budget);

  std::uint64_t size() const { return rotation_count_ << graph_.edge_count(); }
  std::uint64_t rotation_count() const { return rotation_count_; }
  std::uint64_t sign_count() const { return std::uint64_t{1} << graph_.edge_count(); }

  Rotation rotation_at(std::uint64_t rotation_index) const;
  Signs signs_at(std::uint64_t signs_mask) const;
  Scheme at(std::uint64_t index) const;

  const Multigraph& graph() const { return graph_; }

 private:
  Multigraph graph_;
  std::vector<std::uint64_t> radix_;  // (deg(v) - 1)! per vertex
  std::uint64_t rotation_count_ = 1;
};

void for_each_scheme(const Multigraph& g, std::uint64_t budget, const std::function<void(const Scheme&)>& visit);
std::vector<Scheme> enumerate_schemes(const Multigraph& g, std::uint64_t budget = 1'000'000);

std::uint64_t signs_to_mask(const Signs& signs);
Signs mask_to_signs(std::uint64_t mask, int edge_count);

struct Realization {
  Signs signs;
  Rotation witness;  // some rotation giving a single boundary circle
};

// {λ : some rotation makes a strip}, sorted by λ. Computed per component and
// recombined; bridges take both values. Requires g to be its own cyclic part.
std::vector<Realization> realizable_signs(const Multigraph& g, const EnumerationLimits& limits = {});

// Same set by searching the whole graph's scheme space directly. The witness
// is the lowest-index rotation, so the result is independent of thread count.
std::vector<Realization> realizable_signs_whole(const Multigraph& g, const EnumerationLimits& limits = {});

struct StructureClass {
  Signs representative;                 // lexicographically least member
  std::vector<Signs> members;           // sorted
  std::vector<Rotation> witnesses;      // parallel to members
  SurfaceType surface;                  // of the representative's witness
};

// Canonical class label of λ: the least, over automorphisms φ, of λ∘φ with
// each component complemented so its lowest edge reads 0 and bridges zeroed.
Signs class_key(const Multigraph& g, const Decomposition& dec, const std::vector<Automorphism>& auts,
                const Signs& signs);

// Direct reading of the relation: some automorphism φ makes (λ∘φ)|K equal to
// λ'|K or its complement on every component K. Bridges are ignored.
bool equivalent_signs(const Multigraph& g, const Signs& a, const Signs& b);

// Realizable sign functions modulo the relation above, ordered by
// representative.
std::vector<StructureClass> equivalence_classes(const Multigraph& g, const EnumerationLimits& limits = {});

struct GraphEntry {
  Multigraph graph;  // canonical
  CanonicalForm canonical;
  std::vector<StructureClass> classes;
};

struct Catalog {
  int q = 0;
  std::vector<GraphEntry> graphs;
  int total = 0;
};

Catalog catalog(int q, const EnumerationLimits& limits = {}, GenerationLimits gen = {});
// Catalog of one graph, taken to its cyclic part and canonical labelling.
Catalog catalog_for_graph(const Multigraph& g, const EnumerationLimits& limits = {});

std::string catalog_to_json(const Catalog& c);
Catalog catalog_from_json(const std::string& text);
std::string catalog_to_table(const Catalog& c);

std::string signs_to_string(const Signs& s);
std::string dart_to_string(DartId d);

}  // namespace cutlocus
