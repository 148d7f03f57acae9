// Acceptance run: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cutlocus/classify.hpp"
#include "cutlocus/cli.hpp"
#include "cutlocus/reduce.hpp"
#include "cutlocus/scheme.hpp"
#include "cutlocus/text_format.hpp"
#include "cutlocus/verify.hpp"
#include "oracles.hpp"

using namespace cutlocus;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str() + err.str()};
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string multiset_text(std::multiset<int> m) {
  std::string s = "{";
  for (int x : m) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + "}";
}

Outcome graph_counts() {
  Outcome o;
  for (auto [q, want] : {std::pair{2, 2}, std::pair{3, 6}}) {
    auto t = std::chrono::steady_clock::now();
    CliRun r = cli({"graphs", "--q", std::to_string(q), "--format", "json"});
    double secs = seconds_since(t);
    int got = r.code == 0 ? nlohmann::json::parse(r.out)["count"].get<int>() : -1;
    o.pass = o.pass && got == want && secs < 5;
    char buf[96];
    std::snprintf(buf, sizeof buf, "q=%d: %d graphs (want %d, %.2fs); ", q, got, want, secs);
    o.detail += buf;
  }
  return o;
}

Outcome structure_totals() {
  Outcome o;
  for (auto [q, want] : {std::pair{2, 3}, std::pair{3, 17}}) {
    auto t = std::chrono::steady_clock::now();
    CliRun r = cli({"structures", "--q", std::to_string(q), "--format", "json", "--threads", "1"});
    double secs = seconds_since(t);
    int got = r.code == 0 ? nlohmann::json::parse(r.out)["totals"].get<int>() : -1;
    o.pass = o.pass && got == want && secs < 60;
    char buf[96];
    std::snprintf(buf, sizeof buf, "q=%d: total %d (want %d, %.2fs); ", q, got, want, secs);
    o.detail += buf;
  }
  return o;
}

Outcome per_graph_counts() {
  Outcome o;
  for (auto [q, want] : {std::pair{2, std::multiset<int>{1, 2}}, std::pair{3, std::multiset<int>{1, 1, 3, 4, 4, 4}}}) {
    std::multiset<int> got;
    for (const GraphEntry& e : catalog(q).graphs) got.insert(static_cast<int>(e.classes.size()));
    o.pass = o.pass && got == want;
    o.detail += "q=" + std::to_string(q) + ": " + multiset_text(got) + " (want " + multiset_text(want) + "); ";
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  auto expect = [&](const std::string& name, int got, int want) {
    if (got != want) {
      o.pass = false;
      o.detail += name + " b=" + std::to_string(got) + " (want " + std::to_string(want) + "); ";
    }
  };
  Multigraph one_loop = Multigraph::build(1, {{0, 0}});
  expect("point", boundary_count(Scheme::make(Multigraph::build(1, {}), {{}}, {})), 1);
  expect("untwisted loop", boundary_count(Scheme::make(one_loop, {{0, 1}}, {0})), 2);
  expect("twisted loop", boundary_count(Scheme::make(one_loop, {{0, 1}}, {1})), 1);
  Scheme torus = Scheme::make(Multigraph::build(1, {{0, 0}, {0, 0}}), {{0, 2, 1, 3}}, {0, 0});
  SurfaceType t = surface_type(torus);
  expect("two-loop bouquet", t.boundary, 1);
  if (!t.orientable || t.euler_closed != 0 || t.genus_or_crosscaps != 1) {
    o.pass = false;
    o.detail += "two-loop bouquet capped to " + t.closed_name() + "; ";
  }
  if (o.pass) o.detail = "point 1, untwisted loop 2, twisted loop 1, interleaved bouquet 1 (orientable, torus)";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto t = std::chrono::steady_clock::now();
  std::uint64_t cases = 0, mismatches = 0;
  auto check = [&](const Scheme& s) {
    ++cases;
    const int b = boundary_count(s);
    if (b != oracle_boundary_count(s) || b != oracle::flag_boundary_count(s)) {
      if (mismatches++ == 0) o.detail += "mismatch on " + write_scheme(s) + "; ";
    }
  };
  // Every linear dart order per vertex, so each cyclic order is met once per
  // choice of starting dart.
  for (int q : {2, 3}) {
    for (const Multigraph& g : generate_cubic_graphs(q)) {
      oracle::for_each_raw_rotation(g, [&](const Rotation& r) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m)
          check(Scheme::make(g, r, mask_to_signs(m, g.edge_count())));
      });
    }
  }
  const std::uint64_t exhaustive = cases;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) check(random_scheme(rng, 8));
  double secs = seconds_since(t);
  o.pass = mismatches == 0 && secs < 300;
  o.detail += std::to_string(exhaustive) + " exhaustive + " + std::to_string(cases - exhaustive) +
              " random schemes, " + std::to_string(mismatches) + " mismatches, " + std::to_string(secs).substr(0, 5) + "s";
  return o;
}

Outcome invariant_suite() {
  Outcome o;
  std::uint64_t schemes = 0;
  auto fail = [&](const std::string& what, const Scheme& s) {
    if (o.pass) o.detail += what + " violated by " + write_scheme(s) + "; ";
    o.pass = false;
  };
  for (int q : {2, 3}) {
    for (const Multigraph& g : generate_cubic_graphs(q)) {
      Decomposition dec = bridges_and_components(g);
      for_each_scheme(g, 1'000'000, [&](const Scheme& s) {
        ++schemes;
        const int b = boundary_count(s);
        const bool orient = is_orientable(g, s.signs());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          Scheme f = vertex_flip(s, v);
          if (boundary_count(f) != b || is_orientable(g, f.signs()) != orient) fail("flip invariance", s);
        }
        bool all = true;
        for (const Component& c : dec.components) all = all && is_strip(component_subscheme(s, c).scheme);
        if (all != (b == 1)) fail("strip decomposition", s);
        SurfaceType t = surface_type(s);
        if (t.orientable && t.euler_closed % 2 != 0) fail("orientable implies even capped characteristic", s);
        if (b != 1) return;
        for (const Component& c : dec.components) {
          if (c.edges.size() != static_cast<int>(c.vertices.size())) continue;
          int sum = 0;
          for (EdgeId e : c.edges.ids()) sum += s.sign(e);
          if (sum % 2 == 0) fail("odd sign sum on cycle components", s);
        }
        if (q % 2 == 1 && orient) fail("odd rank strips are non-orientable", s);
      });
      for (const StructureClass& c : equivalence_classes(g)) {
        for (std::size_t i = 0; i < c.members.size(); ++i) {
          Scheme w = Scheme::make(g, c.witnesses[i], c.members[i]);
          if (boundary_count(w) != 1 || surface_type(w) != c.surface) fail("class shares one surface type", w);
        }
      }
    }
  }
  o.detail += std::to_string(schemes) + " schemes, 6 properties";
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::mt19937_64 rng(7);
  int identity = 0;
  for (int i = 0; i < 100; ++i) {
    Scheme s = random_high_degree_scheme(rng, 6);
    VertexId v = 0;
    while (s.graph().degree(v) <= 3) ++v;
    Expanded x = expand_vertex(s, v, random_shape(rng, s.graph().degree(v)));
    Scheme back = x.scheme;
    for (auto it = x.step.new_edges.rbegin(); it != x.step.new_edges.rend(); ++it)
      back = contract_unswitched(back, *it).scheme;
    identity += isomorphic_schemes(back, s) ? 1 : 0;
  }
  o.pass = identity == 100;
  o.detail = std::to_string(identity) + "/100 expand-contract identities; ";
  for (int q : {2, 3}) {
    WedgeCoverage c = wedge_class_coverage(q);
    o.pass = o.pass && c.reached_classes == c.wedge_classes && c.all_strips_preserved;
    o.detail += std::to_string(q) + "-loop wedge " + std::to_string(c.reached_classes) + "/" +
                std::to_string(c.wedge_classes) + " classes reached from " + std::to_string(c.cubic_strips) +
                " cubic strips; ";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (int q : {2, 3}) {
    std::vector<std::string> base{"structures", "--q", std::to_string(q), "--format", "json"};
    const std::string first = cli(base).out;
    if (cli(base).out != first) {
      o.pass = false;
      o.detail += "q=" + std::to_string(q) + " differs between runs; ";
    }
    for (int t = 1; t <= 8; ++t) {
      auto args = base;
      args.insert(args.end(), {"--threads", std::to_string(t)});
      if (cli(args).out != first) {
        o.pass = false;
        o.detail += "q=" + std::to_string(q) + " differs at " + std::to_string(t) + " threads; ";
      }
    }
  }
  if (o.pass) o.detail = "q=2,3 catalogs byte-identical over 2 runs and 1..8 threads";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cubic graph counts", graph_counts},
      {"structure totals", structure_totals},
      {"per-graph class counts", per_graph_counts},
      {"closed-form boundary counts", closed_forms},
      {"tracer equals gluing oracle", oracle_equivalence},
      {"invariant suite", invariant_suite},
      {"reduction round trips", round_trips},
      {"catalog determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
