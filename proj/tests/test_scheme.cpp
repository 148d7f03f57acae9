#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cutlocus/classify.hpp"
#include "cutlocus/error.hpp"
#include "cutlocus/scheme.hpp"
#include "cutlocus/verify.hpp"
#include "oracles.hpp"

using namespace cutlocus;

namespace {

Multigraph theta() { return Multigraph::build(2, {{0, 1}, {0, 1}, {0, 1}}); }
// Edge order: loop at 0, loop at 1, bridge.
Multigraph dumbbell() { return Multigraph::build(2, {{0, 0}, {1, 1}, {0, 1}}); }

Scheme loop(int sign) { return Scheme::make(Multigraph::build(1, {{0, 0}}), {{0, 1}}, {static_cast<std::uint8_t>(sign)}); }

Scheme torus_bouquet() {
  return Scheme::make(Multigraph::build(1, {{0, 0}, {0, 0}}), {{make_dart(0, 0), make_dart(1, 0), make_dart(0, 1), make_dart(1, 1)}},
                      {0, 0});
}

Scheme theta_scheme(Signs signs) { return Scheme::make(theta(), {{0, 2, 4}, {1, 3, 5}}, std::move(signs)); }

Scheme dumbbell_scheme(Signs signs) { return Scheme::make(dumbbell(), default_rotation(dumbbell()), std::move(signs)); }

std::vector<Multigraph> cubic_up_to_3() {
  auto out = generate_cubic_graphs(2);
  for (auto& g : generate_cubic_graphs(3)) out.push_back(g);
  return out;
}

template <class F>
void for_all_small_schemes(F&& f) {
  for (const Multigraph& g : cubic_up_to_3()) for_each_scheme(g, 1'000'000, f);
}

// Orientable iff some set of vertex flips clears every sign.
bool orientable_by_flips(const Multigraph& g, const Signs& s) {
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool clear = true;
    for (EdgeId e = 0; e < g.edge_count() && clear; ++e) {
      const Edge& ed = g.edge(e);
      int t = s[e];
      if (!ed.is_loop()) t ^= (mask >> ed.u & 1) ^ (mask >> ed.v & 1);
      clear = t == 0;
    }
    if (clear) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("make validates and normalizes") {
  Scheme point = Scheme::make(Multigraph::build(1, {}), {{}}, {});
  CHECK(point.rotation()[0].empty());

  CHECK_NOTHROW(theta_scheme({0, 0, 0}));

  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([] { Scheme::make(theta(), {{0, 2}, {1, 3, 5}}, {0, 0, 0}); }) == ErrorKind::BadRotation);
  CHECK(kind([] { Scheme::make(theta(), {{0, 2, 2}, {1, 3, 5}}, {0, 0, 0}); }) == ErrorKind::BadRotation);
  CHECK(kind([] { Scheme::make(theta(), {{0, 2, 1}, {4, 3, 5}}, {0, 0, 0}); }) == ErrorKind::BadRotation);
  CHECK(kind([] { Scheme::make(theta(), {{0, 2, 4}}, {0, 0, 0}); }) == ErrorKind::BadRotation);
  CHECK(kind([] { Scheme::make(theta(), {{0, 2, 4}, {1, 3, 5}}, {0, 0}); }) == ErrorKind::MissingSign);

  Scheme s = Scheme::make(theta(), {{4, 0, 2}, {3, 5, 1}}, {0, 0, 0});
  CHECK(s.rotation()[0] == std::vector<DartId>{0, 2, 4});
  CHECK(s.rotation()[1] == std::vector<DartId>{1, 3, 5});
  CHECK(s.next_at(4) == 0);
  CHECK(s.prev_at(0) == 4);
}

TEST_CASE("closed-form boundary counts") {
  Scheme point = Scheme::make(Multigraph::build(1, {}), {{}}, {});
  CHECK(boundary_count(point) == 1);
  CHECK(oracle::flag_boundary_count(point) == 1);

  CHECK(boundary_count(loop(0)) == 2);
  CHECK(boundary_count(loop(1)) == 1);
  CHECK(oracle_boundary_count(loop(0)) == 2);
  CHECK(oracle_boundary_count(loop(1)) == 1);
  CHECK(is_strip(loop(1)));
  CHECK_FALSE(is_strip(loop(0)));

  CHECK(oracle::flag_boundary_count(torus_bouquet()) == 1);
  CHECK(boundary_count(torus_bouquet()) == 1);

  Scheme t = theta_scheme({0, 0, 0});
  CHECK(oracle::flag_boundary_count(t) == 1);
  BoundaryTrace tr = boundary_trace(t);
  CHECK(tr.boundary_count == 1);
  REQUIRE(tr.orbits.size() == 2);
  CHECK(tr.orbits[0].size() == 6);
  CHECK(tr.orbits[1].size() == 6);
}

TEST_CASE("dumbbell with twisted loops is a strip for every rotation") {
  std::set<Rotation> rotations;
  for (const Scheme& s : enumerate_schemes(dumbbell())) rotations.insert(s.rotation());
  CHECK(rotations.size() == 4);
  for (const Rotation& r : rotations) {
    for (std::uint8_t bridge : {0, 1}) {
      Scheme s = Scheme::make(dumbbell(), r, {1, 1, bridge});
      CHECK(oracle::flag_boundary_count(s) == 1);
      CHECK(is_strip(s));
    }
  }
}

TEST_CASE("tracer agrees with both oracles on every scheme of the q <= 3 cubic graphs") {
  int cases = 0;
  for_all_small_schemes([&](const Scheme& s) {
    const int b = boundary_count(s);
    CHECK(b == oracle::flag_boundary_count(s));
    CHECK(b == oracle_boundary_count(s));
    CHECK(b == boundary_trace(s).boundary_count);
    ++cases;
  });
  CHECK(cases == 2 * 32 + 5 * 1024);
}

TEST_CASE("tracer agrees with the flag oracle on random schemes") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 3000; ++i) {
    Scheme s = random_scheme(rng, 8);
    CHECK(boundary_count(s) == oracle::flag_boundary_count(s));
    CHECK(oracle_boundary_count(s) == oracle::flag_boundary_count(s));
  }
}

TEST_CASE("orbits partition dart-sides and pair up under reversal") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 1500; ++i) {
    Scheme s = random_scheme(rng, 7);
    BoundaryTrace tr = boundary_trace(s);
    std::map<DartSide, int> where;
    for (std::size_t k = 0; k < tr.orbits.size(); ++k)
      for (const DartSide& x : tr.orbits[k]) CHECK(where.emplace(x, static_cast<int>(k)).second);
    CHECK(static_cast<int>(where.size()) == 4 * s.graph().edge_count());

    // Successor is a bijection that walks each stored orbit in order.
    std::set<DartSide> images;
    for (const auto& orbit : tr.orbits) {
      for (std::size_t j = 0; j < orbit.size(); ++j) {
        DartSide nx = trace_successor(s, orbit[j]);
        CHECK(nx == orbit[(j + 1) % orbit.size()]);
        images.insert(nx);
      }
    }
    CHECK(images.size() == where.size());

    REQUIRE(tr.reverse_orbit.size() == tr.orbits.size());
    for (std::size_t k = 0; k < tr.orbits.size(); ++k) {
      int r = tr.reverse_orbit[k];
      CHECK(r != static_cast<int>(k));
      CHECK(tr.reverse_orbit[r] == static_cast<int>(k));
      for (const DartSide& x : tr.orbits[k]) {
        DartSide rev{dart_partner(x.dart), x.side ^ s.sign(dart_edge(x.dart)) ^ 1};
        CHECK(where.at(rev) == r);
      }
    }
    int bare = 0;
    for (VertexId v = 0; v < s.graph().vertex_count(); ++v) bare += s.graph().degree(v) == 0 ? 1 : 0;
    CHECK(tr.isolated_vertices == bare);
    CHECK(tr.boundary_count == static_cast<int>(tr.orbits.size()) / 2 + bare);
  }
}

TEST_CASE("is_strip needs the cyclic part") {
  Scheme pendant = Scheme::make(Multigraph::build(2, {{0, 0}, {0, 1}}), {{0, 1, 2}, {3}}, {1, 0});
  CHECK_THROWS_AS(is_strip(pendant), Error);
}

TEST_CASE("companion and switched edges") {
  Scheme t = theta_scheme({0, 0, 0});
  CHECK(switched_edges(t).empty());
  CHECK(companion(t) == Signs{0, 0, 0});
  Scheme d = dumbbell_scheme({1, 1, 0});
  CHECK(switched_edges(d).ids() == std::vector<EdgeId>{0, 1});
}

TEST_CASE("vertex flip") {
  Scheme t = vertex_flip(theta_scheme({0, 0, 0}), 0);
  CHECK(t.signs() == Signs{1, 1, 1});
  CHECK(t.rotation()[0] == std::vector<DartId>{0, 4, 2});

  Scheme d = vertex_flip(dumbbell_scheme({1, 1, 0}), 0);
  CHECK(d.signs() == Signs{1, 1, 1});

  std::mt19937_64 rng(107);
  for (int i = 0; i < 1500; ++i) {
    Scheme s = random_scheme(rng, 6);
    VertexId v = static_cast<VertexId>(rng() % s.graph().vertex_count());
    Scheme f = vertex_flip(s, v);
    Signs a = companion(s), b = companion(f);
    for (EdgeId e = 0; e < s.graph().edge_count(); ++e) {
      const Edge& ed = s.graph().edge(e);
      bool touches = !ed.is_loop() && (ed.u == v || ed.v == v);
      CHECK((a[e] != b[e]) == touches);
    }
    CHECK(vertex_flip(f, v) == s);
  }
}

TEST_CASE("boundary count and orientability survive flips and mirroring") {
  for_all_small_schemes([&](const Scheme& s) {
    const int b = boundary_count(s);
    const bool o = is_orientable(s.graph(), s.signs());
    for (VertexId v = 0; v < s.graph().vertex_count(); ++v) {
      Scheme f = vertex_flip(s, v);
      CHECK(boundary_count(f) == b);
      CHECK(is_orientable(f.graph(), f.signs()) == o);
    }
    CHECK(boundary_count(mirror(s)) == b);
  });
}

TEST_CASE("orientability matches the flip-to-zero test") {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 1500; ++i) {
    Scheme s = random_scheme(rng, 7);
    CHECK(is_orientable(s.graph(), s.signs()) == orientable_by_flips(s.graph(), s.signs()));
  }
}

TEST_CASE("surface types") {
  SurfaceType p = surface_type(Scheme::make(Multigraph::build(1, {}), {{}}, {}));
  CHECK(p.euler_patch == 1);
  CHECK(p.boundary == 1);
  CHECK(p.orientable);
  CHECK(p.euler_closed == 2);
  CHECK(p.closed_name() == "sphere");

  SurfaceType t = surface_type(torus_bouquet());
  CHECK(t.euler_patch == -1);
  CHECK(t.boundary == 1);
  CHECK(t.orientable);
  CHECK(t.euler_closed == 0);
  CHECK(t.genus_or_crosscaps == 1);
  CHECK(t.closed_name() == "torus");

  SurfaceType k = surface_type(dumbbell_scheme({1, 1, 0}));
  CHECK(k.euler_patch == -1);
  CHECK(k.boundary == 1);
  CHECK_FALSE(k.orientable);
  CHECK(k.genus_or_crosscaps == 2);
  CHECK(k.closed_name() == "Klein bottle");

  CHECK(surface_type(loop(1)).closed_name() == "projective plane");
}

TEST_CASE("surface bounds on random schemes") {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 3000; ++i) {
    Scheme s = random_scheme(rng, 8);
    SurfaceType t = surface_type(s);
    CHECK(t.boundary >= 1);
    CHECK(t.boundary <= s.graph().edge_count() + 1);
    CHECK(t.euler_closed <= 2);
    if (t.orientable) CHECK(t.euler_closed % 2 == 0);
    if (t.boundary == 1) CHECK(t.euler_closed == 2 - cycle_rank(s.graph()));
  }
}

TEST_CASE("odd cycle rank rules out orientable strips") {
  int strips = 0;
  for (const Multigraph& g : generate_cubic_graphs(3)) {
    for_each_scheme(g, 1'000'000, [&](const Scheme& s) {
      if (boundary_count(s) != 1) return;
      ++strips;
      CHECK_FALSE(is_orientable(s.graph(), s.signs()));
    });
  }
  CHECK(strips > 0);
}

TEST_CASE("component restriction") {
  Scheme d = dumbbell_scheme({1, 1, 0});
  Decomposition dec = bridges_and_components(d.graph());
  REQUIRE(dec.components.size() == 2);
  for (const Component& c : dec.components) {
    Subscheme sub = component_subscheme(d, c);
    CHECK(sub.scheme.graph().vertex_count() == 1);
    CHECK(sub.scheme.graph().edge_count() == 1);
    CHECK(sub.scheme.signs() == Signs{1});
  }

  Scheme t = theta_scheme({0, 1, 1});
  Decomposition td = bridges_and_components(t.graph());
  REQUIRE(td.components.size() == 1);
  CHECK(component_subscheme(t, td.components[0]).scheme == t);
}

TEST_CASE("a scheme is a strip iff each component restriction is") {
  for_all_small_schemes([&](const Scheme& s) {
    bool all = true;
    for (const Component& c : bridges_and_components(s.graph()).components)
      all = all && oracle::flag_boundary_count(component_subscheme(s, c).scheme) == 1;
    CHECK(is_strip(s) == all);
  });
}

TEST_CASE("cycle components of strips carry an odd sign sum") {
  for_all_small_schemes([&](const Scheme& s) {
    if (!is_strip(s)) return;
    for (const Component& c : bridges_and_components(s.graph()).components) {
      // A component is a single cycle when its edge count equals its vertex count.
      if (c.edges.size() != static_cast<int>(c.vertices.size())) continue;
      int sum = 0;
      for (EdgeId e : c.edges.ids()) sum += s.sign(e);
      CHECK(sum % 2 == 1);
    }
  });
}

TEST_CASE("per-simple-cycle parity does not hold on the theta torus strip") {
  Scheme t = theta_scheme({0, 0, 0});
  REQUIRE(is_strip(t));
  for (const EdgeSet& c : simple_cycles(t.graph())) {
    int sum = 0;
    for (EdgeId e : c.ids()) sum += t.sign(e);
    CHECK(sum % 2 == 0);
  }
}

TEST_CASE("scheme isomorphism") {
  std::mt19937_64 rng(127);
  for (int i = 0; i < 300; ++i) {
    Scheme s = random_scheme(rng, 5, 4);
    const Multigraph& g = s.graph();
    std::vector<int> vp(g.vertex_count()), ep(g.edge_count());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ep.begin(), ep.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(ep.begin(), ep.end(), rng);
    std::vector<int> swap_end(g.edge_count());
    for (int& x : swap_end) x = static_cast<int>(rng() & 1);
    std::vector<std::pair<int, int>> edges(g.edge_count());
    Signs signs(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = std::make_pair(vp[g.edge(e).u], vp[g.edge(e).v]);
      edges[ep[e]] = swap_end[e] ? std::make_pair(v, u) : std::make_pair(u, v);
      signs[ep[e]] = s.signs()[e];
    }
    auto map_dart = [&](DartId d) { return make_dart(ep[dart_edge(d)], dart_end(d) ^ swap_end[dart_edge(d)]); };
    Rotation rot(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      for (DartId d : s.rotation()[v]) rot[vp[v]].push_back(map_dart(d));
    Scheme t = Scheme::make(Multigraph::build(g.vertex_count(), edges), rot, signs);
    CHECK(isomorphic_schemes(s, t));
    CHECK(boundary_count(t) == boundary_count(s));
  }
  CHECK_FALSE(isomorphic_schemes(theta_scheme({0, 0, 0}), theta_scheme({0, 0, 1})));
}
