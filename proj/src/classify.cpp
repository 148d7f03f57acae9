#include "cutlocus/classify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "cutlocus/error.hpp"

namespace cutlocus {

namespace {

bool connected_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int parts = n;
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace

std::vector<Multigraph> generate_cubic_graphs(int q, GenerationLimits limits) {
  if (q > limits.max_q) {
    throw Error(ErrorKind::TooLarge, "cubic graph generation capped at q = " + std::to_string(limits.max_q));
  }
  if (q < 2) return {};
  const int n = 2 * (q - 1);
  const int m = 3 * (q - 1);

  // Pair up the three stubs of every vertex. The lowest vertex with a free
  // stub is always joined next, and its partners are chosen in
  // non-decreasing order, so each labelled multigraph appears once. Vertices
  // with no edge yet are interchangeable, so only the lowest of them is tried.
  std::set<CanonicalForm> seen;
  std::vector<int> free(n, 3);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  auto rec = [&](auto&& self, int floor) -> void {
    int v = 0;
    while (v < n && free[v] == 0) ++v;
    if (v == n) {
      if (connected_pairs(n, edges)) {
        seen.insert(canonical_form(Multigraph::build(n, edges), {n}));
      }
      return;
    }
    int start = std::max(floor, v);
    int fresh = 0;
    while (fresh < n && (free[fresh] != 3 || fresh == v)) ++fresh;
    for (int w = start; w < n; ++w) {
      if (w == v ? free[v] < 2 : free[w] == 0) continue;
      if (free[w] == 3 && w != v && w > fresh) break;
      free[v] -= 1;
      free[w] -= 1;
      edges.emplace_back(v, w);
      self(self, free[v] == 0 ? 0 : w);
      edges.pop_back();
      free[v] += 1;
      free[w] += 1;
    }
  };
  rec(rec, 0);

  std::vector<Multigraph> out;
  for (const CanonicalForm& c : seen) out.push_back(Multigraph::build(c.vertices, c.edges));
  return out;
}

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

bool mul_within(std::uint64_t a, std::uint64_t b, std::uint64_t cap, std::uint64_t& out) {
  if (a != 0 && b > cap / a) return false;
  out = a * b;
  return out <= cap;
}

// Lexicographic k-th permutation of `items` (sorted on entry).
std::vector<DartId> nth_permutation(std::vector<DartId> items, std::uint64_t k) {
  std::vector<DartId> out;
  out.reserve(items.size());
  while (!items.empty()) {
    std::uint64_t block = factorial(static_cast<int>(items.size()) - 1);
    std::size_t pick = static_cast<std::size_t>(k / block);
    k %= block;
    out.push_back(items[pick]);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace

SchemeSpace::SchemeSpace(const Multigraph& g, std::uint64_t budget) : graph_(g) {
  if (g.edge_count() >= 63) throw Error(ErrorKind::BudgetExceeded, "too many edges to enumerate sign functions");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t r = factorial(std::max(g.degree(v) - 1, 0));
    radix_.push_back(r);
    if (!mul_within(rotation_count_, r, budget, rotation_count_)) {
      throw Error(ErrorKind::BudgetExceeded, "scheme space exceeds budget of " + std::to_string(budget));
    }
  }
  std::uint64_t total = 0;
  if (!mul_within(rotation_count_, sign_count(), budget, total)) {
    throw Error(ErrorKind::BudgetExceeded, "scheme space exceeds budget of " + std::to_string(budget));
  }
}

Rotation SchemeSpace::rotation_at(std::uint64_t index) const {
  Rotation rot(graph_.vertex_count());
  // Vertex 0 is the most significant digit.
  for (VertexId v = graph_.vertex_count() - 1; v >= 0; --v) {
    auto darts = graph_.darts_at(v);
    std::uint64_t digit = index % radix_[v];
    index /= radix_[v];
    if (darts.empty()) continue;
    std::vector<DartId> rest(darts.begin() + 1, darts.end());
    rot[v].push_back(darts.front());
    for (DartId d : nth_permutation(std::move(rest), digit)) rot[v].push_back(d);
  }
  return rot;
}

Signs SchemeSpace::signs_at(std::uint64_t mask) const { return mask_to_signs(mask, graph_.edge_count()); }

Scheme SchemeSpace::at(std::uint64_t index) const {
  return Scheme::make(graph_, rotation_at(index >> graph_.edge_count()), signs_at(index & (sign_count() - 1)));
}

void for_each_scheme(const Multigraph& g, std::uint64_t budget, const std::function<void(const Scheme&)>& visit) {
  SchemeSpace space(g, budget);
  for (std::uint64_t r = 0; r < space.rotation_count(); ++r) {
    Rotation rot = space.rotation_at(r);
    for (std::uint64_t mask = 0; mask < space.sign_count(); ++mask) {
      visit(Scheme::make(g, rot, space.signs_at(mask)));
    }
  }
}

std::vector<Scheme> enumerate_schemes(const Multigraph& g, std::uint64_t budget) {
  std::vector<Scheme> out;
  for_each_scheme(g, budget, [&](const Scheme& s) { out.push_back(s); });
  return out;
}

std::uint64_t signs_to_mask(const Signs& signs) {
  std::uint64_t mask = 0;
  for (std::size_t e = 0; e < signs.size(); ++e)
    if (signs[e]) mask |= std::uint64_t{1} << e;
  return mask;
}

Signs mask_to_signs(std::uint64_t mask, int edge_count) {
  Signs s(edge_count);
  for (int e = 0; e < edge_count; ++e) s[e] = static_cast<std::uint8_t>(mask >> e & 1);
  return s;
}

namespace {

void require_cyclic_part(const Multigraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) throw Error(ErrorKind::NotCyclicPart, "vertex " + std::to_string(v) + " has degree 1");
  }
}

}  // namespace

std::vector<Realization> realizable_signs_whole(const Multigraph& g, const EnumerationLimits& limits) {
  SchemeSpace space(g, limits.budget);
  const std::uint64_t rotations = space.rotation_count();
  const std::uint64_t masks = space.sign_count();
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  // Each worker scans a contiguous block of rotation indices and keeps, per
  // sign mask, the lowest rotation index that yields one boundary circle.
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(limits.threads, 1, std::max<std::uint64_t>(rotations, 1)));
  std::vector<std::vector<std::uint64_t>> best(workers, std::vector<std::uint64_t>(masks, kNone));
  auto scan = [&](int w) {
    std::uint64_t lo = rotations * w / workers, hi = rotations * (w + 1) / workers;
    for (std::uint64_t r = lo; r < hi; ++r) {
      Rotation rot = space.rotation_at(r);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        if (best[w][mask] != kNone) continue;
        if (boundary_count(Scheme::make(g, rot, space.signs_at(mask))) == 1) best[w][mask] = r;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  std::vector<Realization> out;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::uint64_t r = kNone;
    for (int w = 0; w < workers; ++w) r = std::min(r, best[w][mask]);
    if (r != kNone) out.push_back({space.signs_at(mask), space.rotation_at(r)});
  }
  std::sort(out.begin(), out.end(), [](const Realization& a, const Realization& b) { return a.signs < b.signs; });
  return out;
}

std::vector<Realization> realizable_signs(const Multigraph& g, const EnumerationLimits& limits) {
  require_cyclic_part(g);
  const Decomposition dec = bridges_and_components(g);

  struct Part {
    Subgraph sub;
    std::vector<Realization> options;
  };
  std::vector<Part> parts;
  std::uint64_t combos = std::uint64_t{1} << dec.bridges.size();
  for (const Component& c : dec.components) {
    Subgraph sub = component_subgraph(g, c);
    auto options = realizable_signs_whole(sub.graph, limits);
    if (!mul_within(combos, options.size(), limits.budget, combos)) {
      throw Error(ErrorKind::BudgetExceeded, "realizable sign set exceeds budget");
    }
    parts.push_back({std::move(sub), std::move(options)});
  }

  std::vector<Realization> out;
  if (combos == 0) return out;
  // Mixed-radix walk over one option per component and one bit per bridge.
  std::vector<std::size_t> pick(parts.size(), 0);
  const std::uint64_t bridge_combos = std::uint64_t{1} << dec.bridges.size();
  while (true) {
    Signs base(g.edge_count(), 0);
    Rotation rot(g.vertex_count());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Part& p = parts[i];
      const Realization& r = p.options[pick[i]];
      for (std::size_t e = 0; e < p.sub.edge_map.size(); ++e) base[p.sub.edge_map[e]] = r.signs[e];
      for (std::size_t v = 0; v < p.sub.vertex_map.size(); ++v) {
        for (DartId d : r.witness[v]) rot[p.sub.vertex_map[v]].push_back(make_dart(p.sub.edge_map[dart_edge(d)], dart_end(d)));
      }
    }
    for (EdgeId b : dec.bridges) {
      rot[g.edge(b).u].push_back(make_dart(b, 0));
      rot[g.edge(b).v].push_back(make_dart(b, 1));
    }
    for (std::uint64_t bm = 0; bm < bridge_combos; ++bm) {
      Signs signs = base;
      for (std::size_t i = 0; i < dec.bridges.size(); ++i) signs[dec.bridges[i]] = static_cast<std::uint8_t>(bm >> i & 1);
      out.push_back({std::move(signs), rot});
    }
    std::size_t i = 0;
    while (i < parts.size() && ++pick[i] == parts[i].options.size()) pick[i++] = 0;
    if (i == parts.size()) break;
  }
  // Re-anchor each cyclic order the way Scheme::make would.
  for (Realization& r : out) r.witness = Scheme::make(g, r.witness, r.signs).rotation();
  std::sort(out.begin(), out.end(), [](const Realization& a, const Realization& b) { return a.signs < b.signs; });
  return out;
}

Signs class_key(const Multigraph& g, const Decomposition& dec, const std::vector<Automorphism>& auts,
                const Signs& signs) {
  Signs best;
  Signs moved(g.edge_count());
  for (const Automorphism& a : auts) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) moved[e] = signs[a.edge_perm[e]];
    for (const Component& c : dec.components) {
      auto ids = c.edges.ids();
      if (moved[ids.front()] == 1)
        for (EdgeId e : ids) moved[e] ^= 1;
    }
    for (EdgeId b : dec.bridges) moved[b] = 0;
    if (best.empty() || moved < best) best = moved;
  }
  return best;
}

bool equivalent_signs(const Multigraph& g, const Signs& a, const Signs& b) {
  const Decomposition dec = bridges_and_components(g);
  for (const Automorphism& phi : automorphisms(g)) {
    bool all = true;
    for (const Component& c : dec.components) {
      bool same = true, complement = true;
      for (EdgeId e : c.edges.ids()) {
        int lhs = a[phi.edge_perm[e]];
        same = same && lhs == b[e];
        complement = complement && lhs != b[e];
      }
      if (!same && !complement) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::vector<StructureClass> equivalence_classes(const Multigraph& g, const EnumerationLimits& limits) {
  const auto realizable = realizable_signs(g, limits);
  const Decomposition dec = bridges_and_components(g);
  const auto auts = automorphisms(g);

  std::map<Signs, StructureClass> by_key;
  for (const Realization& r : realizable) {
    StructureClass& cls = by_key[class_key(g, dec, auts, r.signs)];
    cls.members.push_back(r.signs);
    cls.witnesses.push_back(r.witness);
  }
  std::vector<StructureClass> out;
  for (auto& [key, cls] : by_key) {
    // `realizable` is sorted, so members already are.
    cls.representative = cls.members.front();
    cls.surface = surface_type(Scheme::make(g, cls.witnesses.front(), cls.representative));
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const StructureClass& a, const StructureClass& b) { return a.representative < b.representative; });
  return out;
}

namespace {

GraphEntry classify_graph(const Multigraph& g, const EnumerationLimits& limits) {
  GraphEntry entry{g, canonical_form(g), {}};
  entry.classes = equivalence_classes(g, limits);
  return entry;
}

}  // namespace

Catalog catalog(int q, const EnumerationLimits& limits, GenerationLimits gen) {
  Catalog c;
  c.q = q;
  for (const Multigraph& g : generate_cubic_graphs(q, gen)) {
    c.graphs.push_back(classify_graph(g, limits));
    c.total += static_cast<int>(c.graphs.back().classes.size());
  }
  return c;
}

Catalog catalog_for_graph(const Multigraph& g, const EnumerationLimits& limits) {
  Multigraph host = canonical_graph(cyclic_part(g).graph);
  Catalog c;
  c.q = cycle_rank(host);
  c.graphs.push_back(classify_graph(host, limits));
  c.total = static_cast<int>(c.graphs.back().classes.size());
  return c;
}

std::string signs_to_string(const Signs& s) {
  std::string out;
  for (auto b : s) out += b ? '1' : '0';
  return out;
}

std::string dart_to_string(DartId d) { return std::to_string(dart_edge(d)) + "." + std::to_string(dart_end(d)); }

}  // namespace cutlocus
