#include "cutlocus/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "cutlocus/error.hpp"

namespace cutlocus {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadRotation: return "BadRotation";
    case ErrorKind::MissingSign: return "MissingSign";
    case ErrorKind::NotCyclicPart: return "NotCyclicPart";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::LoopContraction: return "LoopContraction";
    case ErrorKind::SwitchedContraction: return "SwitchedContraction";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

bool is_connected(int vertices, const std::vector<Edge>& edges) {
  if (vertices <= 1) return true;
  UnionFind uf(vertices);
  int merges = 0;
  for (const Edge& e : edges) merges += uf.unite(e.u, e.v) ? 1 : 0;
  return merges == vertices - 1;
}

}  // namespace

Multigraph Multigraph::build(int vertices, const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 1) throw Error(ErrorKind::InvalidArgument, "a graph needs at least one vertex");
  Multigraph g;
  g.edges_.reserve(edges.size());
  g.darts_at_.assign(vertices, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || u >= vertices || v < 0 || v >= vertices) {
      throw Error(ErrorKind::EndpointOutOfRange,
                  "edge " + std::to_string(i) + " has endpoint outside 0.." + std::to_string(vertices - 1));
    }
    g.edges_.push_back({u, v});
    g.darts_at_[u].push_back(make_dart(static_cast<int>(i), 0));
    g.darts_at_[v].push_back(make_dart(static_cast<int>(i), 1));
  }
  if (!is_connected(vertices, g.edges_)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  return g;
}

std::vector<std::pair<int, int>> Multigraph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

int Multigraph::max_degree() const {
  int best = 0;
  for (const auto& d : darts_at_) best = std::max(best, static_cast<int>(d.size()));
  return best;
}

EdgeSet EdgeSet::of(int edge_count, std::initializer_list<EdgeId> ids) {
  EdgeSet s(edge_count);
  for (EdgeId e : ids) s.insert(e);
  return s;
}

int EdgeSet::size() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  for (int i = 0; i < universe(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  for (int i = 0; i < universe(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

int cycle_rank(const Multigraph& g) { return g.edge_count() - g.vertex_count() + 1; }

Decomposition bridges_and_components(const Multigraph& g) {
  const int n = g.vertex_count();
  // Iterative lowpoint DFS; the tree edge is skipped by id so parallel edges
  // correctly count as back edges.
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<char> is_bridge(g.edge_count(), 0);
  int counter = 0;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (order[root] != -1) continue;
    std::vector<Frame> stack{{root, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto darts = g.darts_at(f.v);
      if (f.next < darts.size()) {
        DartId d = darts[f.next++];
        EdgeId e = dart_edge(d);
        if (e == parent_edge[f.v]) continue;
        VertexId w = g.dart_vertex(dart_partner(d));
        if (order[w] == -1) {
          parent_edge[w] = e;
          order[w] = low[w] = counter++;
          stack.push_back({w, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        VertexId v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > order[p]) is_bridge[parent_edge[v]] = 1;
        }
      }
    }
  }

  Decomposition out;
  UnionFind uf(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_bridge[e]) {
      out.bridges.push_back(e);
    } else {
      uf.unite(g.edge(e).u, g.edge(e).v);
    }
  }
  std::map<int, int> slot;  // root vertex -> component index, in first-edge order
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_bridge[e]) continue;
    int root = uf.find(g.edge(e).u);
    auto [it, inserted] = slot.emplace(root, static_cast<int>(out.components.size()));
    if (inserted) out.components.push_back({EdgeSet(g.edge_count()), {}});
    out.components[it->second].edges.insert(e);
  }
  for (Component& c : out.components) {
    for (EdgeId e : c.edges.ids()) {
      c.vertices.push_back(g.edge(e).u);
      c.vertices.push_back(g.edge(e).v);
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
  }
  return out;
}

namespace {

Subgraph induced_by_edges(const Multigraph& g, const std::vector<char>& keep_vertex, const std::vector<char>& keep_edge) {
  std::vector<int> new_id(g.vertex_count(), -1);
  Subgraph out{Multigraph::build(1, {}), {}, {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (keep_vertex[v]) {
      new_id[v] = static_cast<int>(out.vertex_map.size());
      out.vertex_map.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep_edge[e]) continue;
    edges.emplace_back(new_id[g.edge(e).u], new_id[g.edge(e).v]);
    out.edge_map.push_back(e);
  }
  out.graph = Multigraph::build(static_cast<int>(out.vertex_map.size()), edges);
  return out;
}

}  // namespace

Subgraph cyclic_part(const Multigraph& g) {
  std::vector<int> degree(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);
  std::vector<char> alive_v(g.vertex_count(), 1), alive_e(g.edge_count(), 1);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (degree[v] == 1) queue.push_back(v);
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    if (!alive_v[v] || degree[v] != 1) continue;
    for (DartId d : g.darts_at(v)) {
      EdgeId e = dart_edge(d);
      if (!alive_e[e]) continue;
      alive_e[e] = 0;
      alive_v[v] = 0;
      degree[v] = 0;
      VertexId w = g.dart_vertex(dart_partner(d));
      if (--degree[w] == 1) queue.push_back(w);
    }
  }
  if (std::none_of(alive_e.begin(), alive_e.end(), [](char c) { return c != 0; })) {
    auto first = std::find(alive_v.begin(), alive_v.end(), 1);
    VertexId keep = first == alive_v.end() ? 0 : static_cast<VertexId>(first - alive_v.begin());
    return Subgraph{Multigraph::build(1, {}), {keep}, {}};
  }
  return induced_by_edges(g, alive_v, alive_e);
}

Subgraph component_subgraph(const Multigraph& g, const Component& component) {
  std::vector<char> keep_v(g.vertex_count(), 0), keep_e(g.edge_count(), 0);
  for (VertexId v : component.vertices) keep_v[v] = 1;
  for (EdgeId e : component.edges.ids()) keep_e[e] = 1;
  return induced_by_edges(g, keep_v, keep_e);
}

std::vector<EdgeId> spanning_tree_edges(const Multigraph& g) {
  UnionFind uf(g.vertex_count());
  std::vector<EdgeId> tree;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (uf.unite(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
  return tree;
}

std::vector<EdgeSet> fundamental_cycle_basis(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<EdgeId> tree = spanning_tree_edges(g);
  std::vector<char> in_tree(g.edge_count(), 0);
  for (EdgeId e : tree) in_tree[e] = 1;

  // Root the tree at 0 so that tree paths are parent walks.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e : tree) {
    adj[g.edge(e).u].emplace_back(g.edge(e).v, e);
    adj[g.edge(e).v].emplace_back(g.edge(e).u, e);
  }
  std::vector<VertexId> parent(n, -1);
  std::vector<EdgeId> via(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<VertexId> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      via[w] = e;
      depth[w] = depth[v] + 1;
      stack.push_back(w);
    }
  }

  std::vector<EdgeSet> basis;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    EdgeSet cycle(g.edge_count());
    cycle.insert(e);
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      cycle.toggle(via[a]);
      a = parent[a];
    }
    basis.push_back(std::move(cycle));
  }
  return basis;
}

namespace {

// An edge set is a simple cycle iff every touched vertex has degree exactly 2
// in it and its edges form one connected piece.
bool is_simple_cycle(const Multigraph& g, const EdgeSet& s) {
  std::vector<int> deg(g.vertex_count(), 0);
  auto ids = s.ids();
  if (ids.empty()) return false;
  for (EdgeId e : ids) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (int d : deg)
    if (d != 0 && d != 2) return false;
  UnionFind uf(g.vertex_count());
  for (EdgeId e : ids) uf.unite(g.edge(e).u, g.edge(e).v);
  int root = uf.find(g.edge(ids[0]).u);
  for (EdgeId e : ids)
    if (uf.find(g.edge(e).u) != root) return false;
  return true;
}

}  // namespace

std::vector<EdgeSet> simple_cycles(const Multigraph& g, CycleLimits limits) {
  if (g.edge_count() > limits.max_edges) {
    throw Error(ErrorKind::TooLarge, "simple cycle enumeration capped at " + std::to_string(limits.max_edges) + " edges");
  }
  // Every simple cycle lies in the cycle space, so walking all 2^q XOR
  // combinations of the fundamental basis finds each one exactly once.
  auto basis = fundamental_cycle_basis(g);
  const int q = static_cast<int>(basis.size());
  std::vector<EdgeSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
    EdgeSet s(g.edge_count());
    for (int i = 0; i < q; ++i)
      if (mask >> i & 1) s ^= basis[i];
    if (is_simple_cycle(g, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string CanonicalForm::to_string() const {
  std::ostringstream os;
  os << vertices << ':';
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << (i ? " " : "") << edges[i].first << '-' << edges[i].second;
  }
  return os.str();
}

namespace {

// Isomorphism-invariant vertex signature: degree, loop count, sorted
// multiplicities of the links to neighbours.
std::vector<int> vertex_signature(const Multigraph& g, VertexId v) {
  std::map<VertexId, int> mult;
  int loops = 0;
  for (DartId d : g.darts_at(v)) {
    VertexId w = g.dart_vertex(dart_partner(d));
    if (w == v) {
      ++loops;
    } else {
      ++mult[w];
    }
  }
  std::vector<int> sig{g.degree(v), loops / 2};
  std::vector<int> m;
  for (auto [w, c] : mult) m.push_back(c);
  std::sort(m.begin(), m.end());
  sig.insert(sig.end(), m.begin(), m.end());
  return sig;
}

// Assigns each vertex the rank of its signature among the distinct ones.
std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sigs, int& distinct) {
  std::map<std::vector<int>, int> rank;
  for (const auto& s : sigs) rank.emplace(s, 0);
  int r = 0;
  for (auto& [sig, value] : rank) value = r++;
  distinct = r;
  std::vector<int> out;
  for (const auto& s : sigs) out.push_back(rank.at(s));
  return out;
}

// Vertices grouped into colour classes by iterated neighbourhood refinement,
// classes ordered by colour. Colours are derived from isomorphism-invariant
// data only, so a labelling that respects the class order is all a
// canonical-form or automorphism search needs to try.
std::vector<std::vector<VertexId>> signature_blocks(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> sigs(n);
  for (VertexId v = 0; v < n; ++v) sigs[v] = vertex_signature(g, v);
  int distinct = 0;
  std::vector<int> colour = rank_signatures(sigs, distinct);
  while (true) {
    for (VertexId v = 0; v < n; ++v) {
      std::map<VertexId, int> mult;
      for (DartId d : g.darts_at(v)) {
        VertexId w = g.dart_vertex(dart_partner(d));
        if (w != v) ++mult[w];
      }
      std::vector<std::pair<int, int>> around;
      for (auto [w, c] : mult) around.emplace_back(colour[w], c);
      std::sort(around.begin(), around.end());
      sigs[v] = {colour[v]};
      for (auto [c, m] : around) {
        sigs[v].push_back(c);
        sigs[v].push_back(m);
      }
    }
    int refined = 0;
    std::vector<int> next = rank_signatures(sigs, refined);
    if (refined == distinct) break;
    colour = std::move(next);
    distinct = refined;
  }
  std::vector<std::vector<VertexId>> blocks(distinct);
  for (VertexId v = 0; v < n; ++v) blocks[colour[v]].push_back(v);
  return blocks;
}

// Edge multiplicities between every pair of vertices; loops on the diagonal.
std::vector<std::vector<int>> multiplicities(const Multigraph& g) {
  std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) {
    ++m[e.u][e.v];
    if (e.u != e.v) ++m[e.v][e.u];
  }
  return m;
}

// Finds the labelling whose multiplicity matrix, read column by column over
// the upper triangle, is lexicographically least. Slot k may only hold a
// vertex of the block covering k, and a branch is cut as soon as its
// completed columns exceed the best code found so far.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Multigraph& g)
      : n_(g.vertex_count()), m_(multiplicities(g)), blocks_(signature_blocks(g)),
        slot_block_(n_), at_(n_), used_(n_, false) {
    int k = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      for (std::size_t i = 0; i < blocks_[b].size(); ++i) slot_block_[k++] = static_cast<int>(b);
    code_.reserve(n_ * (n_ + 1) / 2);
    rec(0);
  }

  // best_[k] is the vertex placed in slot k.
  const std::vector<VertexId>& best() const { return best_; }

 private:
  // Compares the partial code with the same-length prefix of the best one.
  int compare_prefix() const {
    for (std::size_t i = 0; i < code_.size(); ++i) {
      if (code_[i] != best_code_[i]) return code_[i] < best_code_[i] ? -1 : 1;
    }
    return 0;
  }

  void rec(int k) {
    if (k == n_) {
      if (best_.empty() || compare_prefix() < 0) {
        best_ = at_;
        best_code_ = code_;
      }
      return;
    }
    for (VertexId v : blocks_[slot_block_[k]]) {
      if (used_[v]) continue;
      at_[k] = v;
      const std::size_t start = code_.size();
      for (int i = 0; i <= k; ++i) code_.push_back(m_[at_[i]][v]);
      if (best_.empty() || compare_prefix() <= 0) {
        used_[v] = true;
        rec(k + 1);
        used_[v] = false;
      }
      code_.resize(start);
    }
  }

  int n_;
  std::vector<std::vector<int>> m_;
  std::vector<std::vector<VertexId>> blocks_;
  std::vector<int> slot_block_;
  std::vector<VertexId> at_;
  std::vector<bool> used_;
  std::vector<int> code_;
  std::vector<VertexId> best_;
  std::vector<int> best_code_;
};

std::vector<std::pair<int, int>> relabelled_edges(const Multigraph& g, const std::vector<int>& label) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    int a = label[e.u], b = label[e.v];
    es.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(es.begin(), es.end());
  return es;
}

void check_size(const Multigraph& g, IsoLimits limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw Error(ErrorKind::TooLarge, "isomorphism search capped at " + std::to_string(limits.max_vertices) + " vertices");
  }
}

}  // namespace

CanonicalForm canonical_form(const Multigraph& g, IsoLimits limits) {
  check_size(g, limits);
  CanonicalSearch search(g);
  std::vector<int> label(g.vertex_count());
  for (int k = 0; k < g.vertex_count(); ++k) label[search.best()[k]] = k;
  return {g.vertex_count(), relabelled_edges(g, label)};
}

bool isomorphic(const Multigraph& g, const Multigraph& h, IsoLimits limits) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g, limits) == canonical_form(h, limits);
}

Multigraph canonical_graph(const Multigraph& g, IsoLimits limits) {
  CanonicalForm c = canonical_form(g, limits);
  return Multigraph::build(c.vertices, c.edges);
}

std::vector<Automorphism> automorphisms(const Multigraph& g, IsoLimits limits) {
  check_size(g, limits);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

  std::map<std::pair<int, int>, std::vector<EdgeId>> by_ends;
  for (EdgeId e = 0; e < m; ++e) by_ends[key(g.edge(e).u, g.edge(e).v)].push_back(e);

  const auto mult = multiplicities(g);
  auto blocks = signature_blocks(g);
  std::vector<int> block_of(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (VertexId v : blocks[b]) block_of[v] = static_cast<int>(b);

  std::vector<Automorphism> out;
  std::vector<int> image(n, -1);
  std::vector<bool> taken(n, false);
  // Vertices are mapped in id order onto members of their own colour block,
  // checking multiplicities against everything already mapped.
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      // Expand into every edge bijection compatible with the vertex map.
      std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> classes;
      for (auto& [ends, src] : by_ends) {
        classes.emplace_back(src, by_ends.at(key(image[ends.first], image[ends.second])));
      }
      std::vector<EdgeId> edge_perm(m, -1);
      std::function<void(std::size_t)> expand = [&](std::size_t c) {
        if (c == classes.size()) {
          out.push_back({image, edge_perm});
          return;
        }
        auto dst = classes[c].second;
        std::sort(dst.begin(), dst.end());
        do {
          for (std::size_t i = 0; i < dst.size(); ++i) edge_perm[classes[c].first[i]] = dst[i];
          expand(c + 1);
        } while (std::next_permutation(dst.begin(), dst.end()));
      };
      expand(0);
      return;
    }
    for (VertexId w : blocks[block_of[v]]) {
      if (taken[w]) continue;
      bool ok = true;
      for (VertexId u = 0; u <= v && ok; ++u) {
        VertexId iu = u == v ? w : image[u];
        ok = mult[u][v] == mult[iu][w];
      }
      if (!ok) continue;
      image[v] = w;
      taken[w] = true;
      rec(v + 1);
      taken[w] = false;
      image[v] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const Automorphism& a, const Automorphism& b) {
    return std::tie(a.vertex_perm, a.edge_perm) < std::tie(b.vertex_perm, b.edge_perm);
  });
  return out;
}

}  // namespace cutlocus
