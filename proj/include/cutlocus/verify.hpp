#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cutlocus/classify.hpp"
#include "cutlocus/reduce.hpp"
#include "cutlocus/scheme.hpp"

namespace cutlocus {

using BoundaryCounter = std::function<int(const Scheme&)>;

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first counterexample, if any
};

struct VerifyOptions {
  int max_q = 3;
  std::uint64_t seed = 1;
  int random_schemes = 10000;
  int random_max_vertices = 8;
  int round_trips = 100;
  // Extra seeded tracer/oracle sample on the q = 4 cubic graphs.
  int q4_samples = 0;
  int threads = 1;
  // The tracer under test; replaceable so a broken rule can be shown to fail.
  BoundaryCounter tracer = [](const Scheme& s) { return boundary_count(s); };
};

// Random connected multigraph on 1..max_vertices vertices with loops and
// parallel edges, random cyclic orders and random signs.
Scheme random_scheme(std::mt19937_64& rng, int max_vertices, int max_extra_edges = 6);

// Random scheme whose graph has a vertex of degree > 3 and no degree-1
// vertex.
Scheme random_high_degree_scheme(std::mt19937_64& rng, int max_vertices);

// Uniform random valid tree shape for d leaves.
TreeShape random_shape(std::mt19937_64& rng, int leaves);

// Brings a strip to a one-vertex wedge of loops: flips vertices so every
// spanning-tree edge is unswitched, then contracts the tree edges.
Scheme contract_to_wedge(const Scheme& s);

struct WedgeCoverage {
  int q = 0;
  int wedge_classes = 0;
  int reached_classes = 0;
  std::uint64_t cubic_strips = 0;
  bool all_strips_preserved = true;
};

// Which classes of the q-loop wedge are hit by contracting unswitched edges of
// cubic strips with cycle rank q.
WedgeCoverage wedge_class_coverage(int q, const EnumerationLimits& limits = {});

// The full invariant suite; one result per check.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

std::string format_report(const std::vector<CheckResult>& results);

}  // namespace cutlocus
