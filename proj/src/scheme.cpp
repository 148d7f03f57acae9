#include "cutlocus/scheme.hpp"

#include <algorithm>
#include <numeric>

#include "cutlocus/error.hpp"

namespace cutlocus {

Scheme Scheme::make(Multigraph graph, Rotation rotation, Signs signs) {
  const int n = graph.vertex_count();
  if (static_cast<int>(rotation.size()) != n) {
    throw Error(ErrorKind::BadRotation, "rotation lists " + std::to_string(rotation.size()) + " vertices, graph has " +
                                            std::to_string(n));
  }
  if (static_cast<int>(signs.size()) != graph.edge_count()) {
    throw Error(ErrorKind::MissingSign, "signs cover " + std::to_string(signs.size()) + " of " +
                                            std::to_string(graph.edge_count()) + " edges");
  }
  for (std::size_t e = 0; e < signs.size(); ++e) {
    if (signs[e] > 1) throw Error(ErrorKind::MissingSign, "sign of edge " + std::to_string(e) + " is not 0 or 1");
  }
  for (VertexId v = 0; v < n; ++v) {
    std::vector<DartId> got = rotation[v];
    std::sort(got.begin(), got.end());
    auto want = graph.darts_at(v);
    if (!std::equal(got.begin(), got.end(), want.begin(), want.end())) {
      throw Error(ErrorKind::BadRotation,
                  "cyclic order at vertex " + std::to_string(v) + " must list each of its darts exactly once");
    }
    if (!rotation[v].empty()) {
      auto smallest = std::min_element(rotation[v].begin(), rotation[v].end());
      std::rotate(rotation[v].begin(), smallest, rotation[v].end());
    }
  }

  Scheme s(std::move(graph));
  s.rotation_ = std::move(rotation);
  s.signs_ = std::move(signs);
  s.next_.assign(s.graph_.dart_count(), -1);
  s.prev_.assign(s.graph_.dart_count(), -1);
  for (const auto& cyc : s.rotation_) {
    const std::size_t d = cyc.size();
    for (std::size_t i = 0; i < d; ++i) {
      s.next_[cyc[i]] = cyc[(i + 1) % d];
      s.prev_[cyc[i]] = cyc[(i + d - 1) % d];
    }
  }
  return s;
}

Rotation default_rotation(const Multigraph& g) {
  Rotation r(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) r[v].assign(g.darts_at(v).begin(), g.darts_at(v).end());
  return r;
}

DartSide trace_successor(const Scheme& s, DartSide state) {
  DartId k = dart_partner(state.dart);
  int side = state.side ^ s.sign(dart_edge(state.dart));
  return {side == 0 ? s.next_at(k) : s.prev_at(k), side};
}

namespace {

int state_index(DartSide x) { return 2 * x.dart + x.side; }

int isolated_vertex_count(const Multigraph& g) {
  int count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) count += g.degree(v) == 0 ? 1 : 0;
  return count;
}

}  // namespace

BoundaryTrace boundary_trace(const Scheme& s) {
  const int states = 2 * s.graph().dart_count();
  BoundaryTrace out;
  std::vector<int> orbit_of(states, -1);
  for (int start = 0; start < states; ++start) {
    if (orbit_of[start] != -1) continue;
    const int id = static_cast<int>(out.orbits.size());
    std::vector<DartSide> orbit;
    DartSide x{start / 2, start % 2};
    while (orbit_of[state_index(x)] == -1) {
      orbit_of[state_index(x)] = id;
      orbit.push_back(x);
      x = trace_successor(s, x);
    }
    out.orbits.push_back(std::move(orbit));
  }
  out.reverse_orbit.resize(out.orbits.size());
  for (std::size_t i = 0; i < out.orbits.size(); ++i) {
    DartSide x = out.orbits[i].front();
    DartSide r{dart_partner(x.dart), x.side ^ s.sign(dart_edge(x.dart)) ^ 1};
    out.reverse_orbit[i] = orbit_of[state_index(r)];
  }
  out.isolated_vertices = isolated_vertex_count(s.graph());
  out.boundary_count = static_cast<int>(out.orbits.size()) / 2 + out.isolated_vertices;
  return out;
}

int boundary_count(const Scheme& s) {
  const int states = 2 * s.graph().dart_count();
  std::vector<std::uint8_t> seen(states, 0);
  int orbits = 0;
  for (int start = 0; start < states; ++start) {
    if (seen[start]) continue;
    ++orbits;
    DartSide x{start / 2, start % 2};
    while (!seen[state_index(x)]) {
      seen[state_index(x)] = 1;
      x = trace_successor(s, x);
    }
  }
  return orbits / 2 + isolated_vertex_count(s.graph());
}

bool is_strip(const Scheme& s) {
  const Multigraph& g = s.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) {
      throw Error(ErrorKind::NotCyclicPart, "vertex " + std::to_string(v) + " has degree 1");
    }
  }
  return boundary_count(s) == 1;
}

int oracle_boundary_count(const Scheme& s) {
  const Multigraph& g = s.graph();
  // Each dart's attachment arc on its vertex disk has a start and an end
  // corner, read counterclockwise. The free boundary consists of the disk
  // arcs between consecutive attachments and the two long sides of every
  // band; every corner meets exactly one of each, so the boundary circles
  // are the connected classes of corners.
  auto start = [](DartId d) { return 2 * d; };
  auto end = [](DartId d) { return 2 * d + 1; };
  std::vector<int> parent(2 * g.dart_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };

  for (const auto& cyc : s.rotation()) {
    for (std::size_t i = 0; i < cyc.size(); ++i) join(end(cyc[i]), start(cyc[(i + 1) % cyc.size()]));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    DartId a = make_dart(e, 0), b = make_dart(e, 1);
    // An untwisted band read from its far end sees the near end's left side on
    // its right, hence the start/end swap; a half-twist undoes the swap.
    if (s.sign(e) == 0) {
      join(start(a), end(b));
      join(end(a), start(b));
    } else {
      join(start(a), start(b));
      join(end(a), end(b));
    }
  }
  int circles = 0;
  for (int c = 0; c < static_cast<int>(parent.size()); ++c) circles += find(c) == c ? 1 : 0;
  return circles + isolated_vertex_count(g);
}

Signs companion(const Scheme& s) { return s.signs(); }

EdgeSet switched_edges(const Scheme& s) {
  EdgeSet out(s.graph().edge_count());
  for (EdgeId e = 0; e < s.graph().edge_count(); ++e)
    if (s.sign(e)) out.insert(e);
  return out;
}

Scheme vertex_flip(const Scheme& s, VertexId v) {
  Rotation rot = s.rotation();
  std::reverse(rot[v].begin(), rot[v].end());
  Signs signs = s.signs();
  for (DartId d : s.graph().darts_at(v)) {
    EdgeId e = dart_edge(d);
    if (!s.graph().edge(e).is_loop()) signs[e] ^= 1;
  }
  return Scheme::make(s.graph(), std::move(rot), std::move(signs));
}

Scheme mirror(const Scheme& s) {
  Rotation rot = s.rotation();
  for (auto& cyc : rot) std::reverse(cyc.begin(), cyc.end());
  return Scheme::make(s.graph(), std::move(rot), s.signs());
}

bool is_orientable(const Multigraph& g, const Signs& signs) {
  for (const EdgeSet& cycle : fundamental_cycle_basis(g)) {
    int parity = 0;
    for (EdgeId e : cycle.ids()) parity ^= signs[e];
    if (parity) return false;
  }
  return true;
}

std::string SurfaceType::closed_name() const {
  if (orientable) {
    if (genus_or_crosscaps == 0) return "sphere";
    if (genus_or_crosscaps == 1) return "torus";
    return "orientable surface of genus " + std::to_string(genus_or_crosscaps);
  }
  if (genus_or_crosscaps == 1) return "projective plane";
  if (genus_or_crosscaps == 2) return "Klein bottle";
  return "non-orientable surface with " + std::to_string(genus_or_crosscaps) + " crosscaps";
}

SurfaceType surface_type(const Scheme& s) {
  SurfaceType t;
  t.euler_patch = s.graph().vertex_count() - s.graph().edge_count();
  t.boundary = boundary_count(s);
  t.orientable = is_orientable(s.graph(), s.signs());
  t.euler_closed = t.euler_patch + t.boundary;
  t.genus_or_crosscaps = t.orientable ? (2 - t.euler_closed) / 2 : 2 - t.euler_closed;
  return t;
}

Scheme restrict_scheme(const Scheme& s, const Subgraph& sub) {
  std::vector<int> new_edge(s.graph().edge_count(), -1);
  for (std::size_t i = 0; i < sub.edge_map.size(); ++i) new_edge[sub.edge_map[i]] = static_cast<int>(i);
  Rotation rot(sub.vertex_map.size());
  for (std::size_t v = 0; v < sub.vertex_map.size(); ++v) {
    for (DartId d : s.rotation()[sub.vertex_map[v]]) {
      int e = new_edge[dart_edge(d)];
      if (e >= 0) rot[v].push_back(make_dart(e, dart_end(d)));
    }
  }
  Signs signs(sub.edge_map.size());
  for (std::size_t i = 0; i < sub.edge_map.size(); ++i) signs[i] = s.signs()[sub.edge_map[i]];
  return Scheme::make(sub.graph, std::move(rot), std::move(signs));
}

Subscheme component_subscheme(const Scheme& s, const Component& component) {
  Subgraph sub = component_subgraph(s.graph(), component);
  Scheme restricted = restrict_scheme(s, sub);
  return {std::move(restricted), std::move(sub.vertex_map), std::move(sub.edge_map)};
}

bool isomorphic_schemes(const Scheme& a, const Scheme& b) {
  const Multigraph& ga = a.graph();
  const Multigraph& gb = b.graph();
  if (ga.vertex_count() != gb.vertex_count() || ga.edge_count() != gb.edge_count()) return false;
  if (ga.dart_count() == 0) return true;
  // A rotation system on a connected graph is pinned down by the image of a
  // single dart; try every candidate image for dart 0 and propagate.
  for (DartId target = 0; target < gb.dart_count(); ++target) {
    std::vector<DartId> image(ga.dart_count(), -1), preimage(gb.dart_count(), -1);
    std::vector<DartId> work{0};
    image[0] = target;
    preimage[target] = 0;
    bool ok = true;
    auto assign = [&](DartId x, DartId y) {
      if (image[x] == -1 && preimage[y] == -1) {
        image[x] = y;
        preimage[y] = x;
        work.push_back(x);
        return true;
      }
      return image[x] == y;
    };
    while (ok && !work.empty()) {
      DartId x = work.back();
      work.pop_back();
      DartId y = image[x];
      if (a.sign(dart_edge(x)) != b.sign(dart_edge(y))) {
        ok = false;
        break;
      }
      ok = assign(a.next_at(x), b.next_at(y)) && assign(dart_partner(x), dart_partner(y));
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace cutlocus
