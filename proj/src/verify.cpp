#include "cutlocus/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cutlocus/error.hpp"
#include "cutlocus/text_format.hpp"

namespace cutlocus {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scheme with_random_rotation_and_signs(std::mt19937_64& rng, const Multigraph& g) {
  Rotation rot = default_rotation(g);
  for (auto& cyc : rot) std::shuffle(cyc.begin(), cyc.end(), rng);
  Signs signs(g.edge_count());
  for (auto& s : signs) s = static_cast<std::uint8_t>(uniform(rng, 0, 1));
  return Scheme::make(g, std::move(rot), std::move(signs));
}

}  // namespace

Scheme random_scheme(std::mt19937_64& rng, int max_vertices, int max_extra_edges) {
  const int n = uniform(rng, 1, max_vertices);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(uniform(rng, 0, v - 1), v);
  const int extra = uniform(rng, 0, max_extra_edges);
  for (int i = 0; i < extra; ++i) edges.emplace_back(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  std::shuffle(edges.begin(), edges.end(), rng);
  return with_random_rotation_and_signs(rng, Multigraph::build(n, edges));
}

Scheme random_high_degree_scheme(std::mt19937_64& rng, int max_vertices) {
  while (true) {
    Scheme s = random_scheme(rng, max_vertices, 8);
    const Multigraph& g = s.graph();
    bool has_leaf = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) has_leaf = has_leaf || g.degree(v) == 1;
    if (!has_leaf && g.max_degree() > 3) return s;
  }
}

TreeShape random_shape(std::mt19937_64& rng, int leaves) {
  TreeShape shape;
  for (int k = 0; k + 3 < leaves; ++k) shape.merges.push_back(uniform(rng, 0, leaves - k - 2));
  return shape;
}

Scheme contract_to_wedge(const Scheme& strip) {
  const Multigraph& g = strip.graph();
  std::vector<EdgeId> tree = spanning_tree_edges(g);

  // Walk the tree from vertex 0 and flip each child whose tree edge is
  // switched; flipping a child never touches edges closer to the root.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(g.vertex_count());
  for (EdgeId e : tree) {
    adj[g.edge(e).u].emplace_back(g.edge(e).v, e);
    adj[g.edge(e).v].emplace_back(g.edge(e).u, e);
  }
  Scheme s = strip;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (s.sign(e)) s = vertex_flip(s, w);
      stack.push_back(w);
    }
  }

  while (!tree.empty()) {
    Contracted c = contract_unswitched(s, tree.back());
    tree.pop_back();
    for (EdgeId& e : tree) e = dart_edge(c.step.dart_map[make_dart(e, 0)]);
    s = std::move(c.scheme);
  }
  return s;
}

WedgeCoverage wedge_class_coverage(int q, const EnumerationLimits& limits) {
  WedgeCoverage out;
  out.q = q;
  const Multigraph wedge = Multigraph::build(1, std::vector<std::pair<int, int>>(q, {0, 0}));
  const Decomposition dec = bridges_and_components(wedge);
  const auto auts = automorphisms(wedge);
  std::set<Signs> wanted;
  for (const StructureClass& cls : equivalence_classes(wedge, limits)) {
    wanted.insert(class_key(wedge, dec, auts, cls.representative));
  }
  out.wedge_classes = static_cast<int>(wanted.size());

  std::set<Signs> reached;
  for (const Multigraph& g : generate_cubic_graphs(q)) {
    for_each_scheme(g, limits.budget, [&](const Scheme& s) {
      if (boundary_count(s) != 1) return;
      ++out.cubic_strips;
      Scheme w = contract_to_wedge(s);
      if (boundary_count(w) != 1 || oracle_boundary_count(w) != 1) out.all_strips_preserved = false;
      reached.insert(class_key(wedge, dec, auts, w.signs()));
    });
  }
  int hit = 0;
  for (const Signs& k : wanted) hit += reached.count(k) ? 1 : 0;
  out.reached_classes = hit;
  if (reached.size() != static_cast<std::size_t>(hit)) out.all_strips_preserved = false;
  return out;
}

namespace {

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what();
    }
  }
  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

std::string describe(const Scheme& s) {
  std::string text = write_scheme(s);
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

Scheme loop_scheme(int sign) {
  return Scheme::make(Multigraph::build(1, {{0, 0}}), {{0, 1}}, {static_cast<std::uint8_t>(sign)});
}

CheckResult check_closed_forms(const BoundaryCounter& tracer) {
  Check c("closed-form boundary counts (point, annulus, Moebius, torus bouquet, theta)");
  Scheme point = Scheme::make(Multigraph::build(1, {}), {{}}, {});
  c.expect(tracer(point) == 1, "point-strip should have one boundary circle");
  c.expect(tracer(loop_scheme(0)) == 2, "untwisted loop should be an annulus (b = 2)");
  c.expect(tracer(loop_scheme(1)) == 1, "twisted loop should be a Moebius band (b = 1)");
  Scheme torus = Scheme::make(Multigraph::build(1, {{0, 0}, {0, 0}}), {{0, 2, 1, 3}}, {0, 0});
  c.expect(tracer(torus) == 1, "interleaved two-loop bouquet should have b = 1");
  SurfaceType t = surface_type(torus);
  c.expect(t.orientable && t.euler_closed == 0 && t.genus_or_crosscaps == 1, "interleaved bouquet should cap to a torus");
  Scheme theta = Scheme::make(Multigraph::build(2, {{0, 1}, {0, 1}, {0, 1}}), {{0, 2, 4}, {1, 3, 5}}, {0, 0, 0});
  c.expect(tracer(theta) == 1, "theta with equal cyclic orders should have b = 1");
  return c.result();
}

std::vector<Multigraph> cubic_graphs_up_to(int max_q) {
  std::vector<Multigraph> out;
  for (int q = 2; q <= max_q; ++q)
    for (Multigraph& g : generate_cubic_graphs(q)) out.push_back(std::move(g));
  return out;
}

bool single_cycle_component(const Multigraph& g, const Component& c) {
  return static_cast<int>(c.edges.size()) == static_cast<int>(c.vertices.size()) && [&] {
    for (VertexId v : c.vertices) {
      int deg = 0;
      for (EdgeId e : c.edges.ids()) deg += (g.edge(e).u == v) + (g.edge(e).v == v);
      if (deg != 2) return false;
    }
    return true;
  }();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  results.push_back(check_closed_forms(options.tracer));

  const std::string upto = "q <= " + std::to_string(options.max_q);
  Check oracle("tracer equals polygon-gluing oracle on all schemes of cubic graphs, " + upto);
  Check pairing("dart-side successor is a permutation with perfect reversal pairing, " + upto);
  Check flips("boundary count and orientability invariant under vertex flip and mirror, " + upto);
  Check decomposition("strip iff every component restriction is a strip, " + upto);
  Check cycle_switch("every cycle component of a strip has odd sign sum, " + upto);
  Check odd_q("strips on graphs of odd cycle rank are non-orientable, " + upto);
  Check bounds("1 <= b <= E+1, closed chi <= 2, orientable => even chi; strips cap to chi = 2 - q, " + upto);

  for (const Multigraph& g : cubic_graphs_up_to(options.max_q)) {
    const Decomposition dec = bridges_and_components(g);
    const int q = cycle_rank(g);
    for_each_scheme(g, 100'000'000, [&](const Scheme& s) {
      const int b = options.tracer(s);
      oracle.expect(b == oracle_boundary_count(s), [&] { return "mismatch on " + describe(s); });

      BoundaryTrace tr = boundary_trace(s);
      std::size_t states = 0;
      bool paired = true;
      for (std::size_t i = 0; i < tr.orbits.size(); ++i) {
        states += tr.orbits[i].size();
        int r = tr.reverse_orbit[i];
        paired = paired && r != static_cast<int>(i) && tr.reverse_orbit[r] == static_cast<int>(i);
      }
      pairing.expect(paired && states == static_cast<std::size_t>(2 * g.dart_count()),
                     [&] { return "bad pairing on " + describe(s); });

      const bool orient = is_orientable(g, s.signs());
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Scheme f = vertex_flip(s, v);
        flips.expect(boundary_count(f) == b && is_orientable(g, f.signs()) == orient,
                     [&] { return "flip at " + std::to_string(v) + " changes " + describe(s); });
      }
      flips.expect(boundary_count(mirror(s)) == b, [&] { return "mirror changes " + describe(s); });

      bool parts_strips = true;
      for (const Component& k : dec.components) parts_strips = parts_strips && is_strip(component_subscheme(s, k).scheme);
      decomposition.expect(parts_strips == (b == 1), [&] { return "decomposition fails on " + describe(s); });

      SurfaceType t = surface_type(s);
      bounds.expect(b >= 1 && b <= g.edge_count() + 1 && t.euler_closed <= 2 &&
                        (!t.orientable || t.euler_closed % 2 == 0) && (b != 1 || t.euler_closed == 2 - q),
                    [&] { return "bounds fail on " + describe(s); });

      if (b != 1) return;
      for (const Component& k : dec.components) {
        if (!single_cycle_component(g, k)) continue;
        int parity = 0;
        for (EdgeId e : k.edges.ids()) parity ^= s.sign(e);
        cycle_switch.expect(parity == 1, [&] { return "unswitched cycle component in " + describe(s); });
      }
      if (q % 2 == 1) odd_q.expect(!t.orientable, [&] { return "orientable strip at odd q: " + describe(s); });
    });
  }

  std::mt19937_64 rng(options.seed);
  Check random_oracle("tracer equals oracle on " + std::to_string(options.random_schemes) +
                      " random schemes with V <= " + std::to_string(options.random_max_vertices) +
                      " (seed " + std::to_string(options.seed) + ")");
  for (int i = 0; i < options.random_schemes; ++i) {
    Scheme s = random_scheme(rng, options.random_max_vertices);
    random_oracle.expect(options.tracer(s) == oracle_boundary_count(s), [&] { return "mismatch on " + describe(s); });
    if (options.tracer(s) == 1 && cycle_rank(s.graph()) % 2 == 1) {
      random_oracle.expect(!surface_type(s).orientable, [&] { return "orientable odd-q strip " + describe(s); });
    }
  }

  Check realizable("realizable signs: per-component product equals whole-graph search, " + upto);
  Check classes("class members realizable by their witnesses and share one surface type, " + upto);
  EnumerationLimits limits;
  limits.threads = options.threads;
  for (const Multigraph& g : cubic_graphs_up_to(options.max_q)) {
    auto by_parts = realizable_signs(g, limits);
    auto whole = realizable_signs_whole(g, limits);
    bool same = by_parts.size() == whole.size();
    for (std::size_t i = 0; same && i < whole.size(); ++i) same = by_parts[i].signs == whole[i].signs;
    realizable.expect(same, [&] { return "sets differ on graph " + canonical_form(g).to_string(); });
    for (const StructureClass& cls : equivalence_classes(g, limits)) {
      for (std::size_t i = 0; i < cls.members.size(); ++i) {
        Scheme w = Scheme::make(g, cls.witnesses[i], cls.members[i]);
        SurfaceType t = surface_type(w);
        classes.expect(oracle_boundary_count(w) == 1 && t.orientable == cls.surface.orientable &&
                           t.euler_closed == cls.surface.euler_closed,
                       [&] { return "class member " + signs_to_string(cls.members[i]) + " on " +
                                    canonical_form(g).to_string(); });
        classes.expect(equivalent_signs(g, cls.members[i], cls.representative),
                       [&] { return "member not equivalent to representative: " + signs_to_string(cls.members[i]); });
      }
    }
  }

  Check round("expand then contract returns the scheme up to dart renaming (" + std::to_string(options.round_trips) +
              " seeded cases)");
  for (int i = 0; i < options.round_trips; ++i) {
    Scheme s = random_high_degree_scheme(rng, 6);
    std::vector<VertexId> high;
    for (VertexId v = 0; v < s.graph().vertex_count(); ++v)
      if (s.graph().degree(v) > 3) high.push_back(v);
    VertexId v = high[uniform(rng, 0, static_cast<int>(high.size()) - 1)];
    Expanded x = expand_vertex(s, v, random_shape(rng, s.graph().degree(v)));
    Scheme back = x.scheme;
    std::vector<EdgeId> internal = x.step.new_edges;
    while (!internal.empty()) {
      Contracted c = contract_unswitched(back, internal.back());
      internal.pop_back();
      for (EdgeId& e : internal) e = dart_edge(c.step.dart_map[make_dart(e, 0)]);
      back = std::move(c.scheme);
    }
    SurfaceType before = surface_type(s), mid = surface_type(x.scheme);
    round.expect(isomorphic_schemes(back, s) && before == mid &&
                     cycle_rank(s.graph()) == cycle_rank(x.scheme.graph()) &&
                     high_degree_count(x.scheme.graph()) == high_degree_count(s.graph()) - 1,
                 [&] { return "round trip fails on " + describe(s); });

    Reduction red = reduce_to_cubic(s);
    int expected_edges = 0;
    for (VertexId u = 0; u < s.graph().vertex_count(); ++u) expected_edges += std::max(s.graph().degree(u) - 3, 0);
    round.expect(static_cast<int>(red.steps.size()) == high_degree_count(s.graph()) &&
                     red.scheme.graph().edge_count() - s.graph().edge_count() == expected_edges &&
                     red.scheme.graph().max_degree() <= 3 && boundary_count(red.scheme) == boundary_count(s) &&
                     oracle_boundary_count(red.scheme) == boundary_count(s),
                 [&] { return "reduce_to_cubic fails on " + describe(s); });
  }

  Check wedges("every class on the 2- and 3-loop wedges is reached by contracting cubic strips");
  for (int q = 2; q <= std::min(3, std::max(options.max_q, 2)); ++q) {
    WedgeCoverage w = wedge_class_coverage(q, limits);
    wedges.expect(w.reached_classes == w.wedge_classes && w.all_strips_preserved,
                  "q = " + std::to_string(q) + ": reached " + std::to_string(w.reached_classes) + " of " +
                      std::to_string(w.wedge_classes));
  }

  results.push_back(oracle.result());
  results.push_back(pairing.result());
  results.push_back(random_oracle.result());
  results.push_back(flips.result());
  results.push_back(decomposition.result());
  results.push_back(cycle_switch.result());
  results.push_back(odd_q.result());
  results.push_back(bounds.result());
  results.push_back(realizable.result());
  results.push_back(classes.result());
  results.push_back(round.result());
  results.push_back(wedges.result());

  if (options.q4_samples > 0) {
    Check spot("tracer equals oracle on " + std::to_string(options.q4_samples) +
               " seeded schemes of q = 4 cubic graphs (seed " + std::to_string(options.seed) + ")");
    auto graphs = generate_cubic_graphs(4);
    std::mt19937_64 r4(options.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < options.q4_samples; ++i) {
      const Multigraph& g = graphs[uniform(r4, 0, static_cast<int>(graphs.size()) - 1)];
      Scheme s = with_random_rotation_and_signs(r4, g);
      const int b = options.tracer(s);
      spot.expect(b == oracle_boundary_count(s), [&] { return "mismatch on " + describe(s); });
      if (b == 1) spot.expect(surface_type(s).euler_closed == -2, [&] { return "bad strip chi on " + describe(s); });
    }
    results.push_back(spot.result());
  }
  return results;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int failed = 0;
  for (const CheckResult& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.cases << " cases)\n";
    if (!r.passed) {
      os << "       " << r.detail << "\n";
      ++failed;
    }
  }
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
  return os.str();
}

}  // namespace cutlocus
