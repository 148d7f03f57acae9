#pragma once

// Reference computations used only by the tests. Each one works from raw
// vertex/edge/dart data and avoids the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "cutlocus/multigraph.hpp"
#include "cutlocus/scheme.hpp"

namespace oracle {

using cutlocus::DartId;
using cutlocus::EdgeId;
using cutlocus::Multigraph;
using cutlocus::Rotation;
using cutlocus::Signs;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i ? 1 : 0;
    return c;
  }
};

// Boundary circles of the ribbon surface as orbits of two involutions on
// flags (dart, side). Corners join the right side of a dart to the left side
// of the next dart around the disk; a band joins the sides of its two darts,
// crosswise when untwisted and straight when twisted.
inline int flag_boundary_count(const Multigraph& g, const Rotation& rot, const Signs& signs) {
  const int flags = 2 * g.dart_count();
  auto flag = [](DartId d, int side) { return 2 * d + side; };
  UnionFind uf(flags);
  int bare = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& cyc = rot[v];
    if (cyc.empty()) ++bare;
    for (std::size_t i = 0; i < cyc.size(); ++i) uf.unite(flag(cyc[i], 1), flag(cyc[(i + 1) % cyc.size()], 0));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    DartId a = 2 * e, b = 2 * e + 1;
    if (signs[e]) {
      uf.unite(flag(a, 0), flag(b, 0));
      uf.unite(flag(a, 1), flag(b, 1));
    } else {
      uf.unite(flag(a, 0), flag(b, 1));
      uf.unite(flag(a, 1), flag(b, 0));
    }
  }
  return uf.classes() + bare;
}

inline int flag_boundary_count(const cutlocus::Scheme& s) {
  return flag_boundary_count(s.graph(), s.rotation(), s.signs());
}

inline bool connected_on(const Multigraph& g, const std::vector<bool>& keep_edge) {
  UnionFind uf(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (keep_edge[e]) uf.unite(g.edge(e).u, g.edge(e).v);
  return uf.classes() == 1;
}

// An edge is a bridge when deleting it disconnects the graph.
inline std::vector<bool> bridges(const Multigraph& g) {
  std::vector<bool> out(g.edge_count(), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<bool> keep(g.edge_count(), true);
    keep[e] = false;
    out[e] = !connected_on(g, keep);
  }
  return out;
}

// Component label per non-bridge edge (-1 on bridges); edges sharing a
// vertex through non-bridge edges get the same label.
inline std::vector<int> component_labels(const Multigraph& g) {
  auto br = oracle::bridges(g);
  UnionFind uf(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!br[e]) uf.unite(g.edge(e).u, g.edge(e).v);
  std::vector<int> root_label(g.vertex_count(), -1), out(g.edge_count(), -1);
  int next = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (br[e]) continue;
    int r = uf.find(g.edge(e).u);
    if (root_label[r] < 0) root_label[r] = next++;
    out[e] = root_label[r];
  }
  return out;
}

// Every edge subset that is connected with all degrees equal to 2.
inline std::set<std::vector<EdgeId>> simple_cycles(const Multigraph& g) {
  std::set<std::vector<EdgeId>> out;
  const int m = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<EdgeId> ids;
    UnionFind uf(g.vertex_count());
    for (EdgeId e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      ids.push_back(e);
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
      uf.unite(g.edge(e).u, g.edge(e).v);
    }
    bool ok = true;
    int root = -1;
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      if (deg[v] == 0) continue;
      ok = deg[v] == 2 && (root < 0 || uf.find(v) == root);
      root = uf.find(v);
    }
    if (ok) out.insert(ids);
  }
  return out;
}

struct Aut {
  std::vector<int> vertex;
  std::vector<EdgeId> edge;
};

// All vertex bijections preserving the edge multiset, each expanded into
// every compatible edge bijection.
inline std::vector<Aut> automorphisms(const Multigraph& g) {
  const int n = g.vertex_count(), m = g.edge_count();
  std::vector<Aut> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto ends = [&](EdgeId e, const std::vector<int>& q) {
    int a = q[g.edge(e).u], b = q[g.edge(e).v];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  do {
    std::vector<EdgeId> img(m, -1);
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self, EdgeId e) -> void {
      if (e == m) {
        out.push_back({p, img});
        return;
      }
      for (EdgeId f = 0; f < m; ++f) {
        if (used[f] || ends(f, id) != ends(e, p)) continue;
        used[f] = true;
        img[e] = f;
        self(self, e + 1);
        used[f] = false;
      }
    };
    rec(rec, 0);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Calls visit(rotation) for every choice of a linear dart order per vertex.
template <class Visit>
void for_each_raw_rotation(const Multigraph& g, Visit&& visit) {
  Rotation rot(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) rot[v].assign(g.darts_at(v).begin(), g.darts_at(v).end());
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.vertex_count()) {
      visit(rot);
      return;
    }
    std::sort(rot[v].begin(), rot[v].end());
    do {
      self(self, v + 1);
    } while (std::next_permutation(rot[v].begin(), rot[v].end()));
  };
  rec(rec, 0);
}

inline Signs signs_of(std::uint32_t mask, int m) {
  Signs s(m);
  for (int e = 0; e < m; ++e) s[e] = static_cast<std::uint8_t>(mask >> e & 1);
  return s;
}

// Sign functions for which some rotation gives one boundary circle.
inline std::set<Signs> realizable(const Multigraph& g) {
  const int m = g.edge_count();
  std::set<Signs> out;
  std::vector<Rotation> rotations;
  for_each_raw_rotation(g, [&](const Rotation& r) { rotations.push_back(r); });
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Signs s = signs_of(mask, m);
    for (const Rotation& r : rotations) {
      if (flag_boundary_count(g, r, s) == 1) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

// Number of classes of `members` when signs may be pulled back along an
// automorphism, complemented on any component, and changed freely on bridges.
inline int class_count(const Multigraph& g, const std::set<Signs>& members) {
  const int m = g.edge_count();
  auto label = component_labels(g);
  const int comps = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<Signs> list(members.begin(), members.end());
  auto key = [&](const Signs& s) {
    Signs k = s;
    for (int e = 0; e < m; ++e)
      if (label[e] < 0) k[e] = 0;
    return k;
  };
  UnionFind uf(static_cast<int>(list.size()));
  auto auts = oracle::automorphisms(g);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const Aut& a : auts) {
      for (std::uint32_t flip = 0; flip < (1u << comps); ++flip) {
        Signs t(m);
        for (int e = 0; e < m; ++e) {
          t[e] = list[i][a.edge[e]];
          if (label[e] >= 0 && (flip >> label[e] & 1)) t[e] ^= 1;
        }
        for (std::size_t j = 0; j < list.size(); ++j)
          if (key(list[j]) == key(t)) uf.unite(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return uf.classes();
}

}  // namespace oracle
