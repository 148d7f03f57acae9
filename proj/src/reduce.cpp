#include "cutlocus/reduce.hpp"

#include <algorithm>

#include <json.hpp>

#include "cutlocus/error.hpp"

namespace cutlocus {

TreeShape TreeShape::left_comb(int leaves) { return {std::vector<int>(std::max(leaves - 3, 0), 0)}; }

Contracted contract_unswitched(const Scheme& s, EdgeId e) {
  const Multigraph& g = s.graph();
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::InvalidArgument, "no edge " + std::to_string(e));
  const Edge& ce = g.edge(e);
  if (ce.is_loop()) throw Error(ErrorKind::LoopContraction, "edge " + std::to_string(e) + " is a loop");
  if (s.sign(e) != 0) {
    throw Error(ErrorKind::SwitchedContraction,
                "edge " + std::to_string(e) + " is switched; flip one of its endpoints first");
  }

  const VertexId keep = std::min(ce.u, ce.v);
  const VertexId gone = std::max(ce.u, ce.v);
  const DartId keep_dart = make_dart(e, ce.u == keep ? 0 : 1);
  const DartId gone_dart = dart_partner(keep_dart);

  auto vertex_id = [&](VertexId x) { return x == gone ? keep : (x > gone ? x - 1 : x); };
  auto edge_id = [&](EdgeId f) { return f > e ? f - 1 : f; };

  ReductionStep step;
  step.kind = ReductionStep::Kind::Contract;
  step.target = e;
  step.dart_map.assign(g.dart_count(), -1);
  for (DartId d = 0; d < g.dart_count(); ++d) {
    if (dart_edge(d) != e) step.dart_map[d] = make_dart(edge_id(dart_edge(d)), dart_end(d));
  }

  std::vector<std::pair<int, int>> edges;
  Signs signs;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    edges.emplace_back(vertex_id(g.edge(f).u), vertex_id(g.edge(f).v));
    signs.push_back(static_cast<std::uint8_t>(s.sign(f)));
  }

  // The far disk's darts, read from just after the contracted dart, take the
  // place of the near disk's dart.
  std::vector<DartId> spliced;
  for (DartId d = s.next_at(gone_dart); d != gone_dart; d = s.next_at(d)) spliced.push_back(d);

  Rotation rot(g.vertex_count() - 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == gone) continue;
    auto& out = rot[vertex_id(v)];
    for (DartId d : s.rotation()[v]) {
      if (d == keep_dart) {
        for (DartId x : spliced) out.push_back(step.dart_map[x]);
      } else {
        out.push_back(step.dart_map[d]);
      }
    }
  }
  Multigraph merged = Multigraph::build(g.vertex_count() - 1, edges);
  return {Scheme::make(std::move(merged), std::move(rot), std::move(signs)), std::move(step)};
}

Expanded expand_vertex(const Scheme& s, VertexId v, std::optional<TreeShape> shape) {
  const Multigraph& g = s.graph();
  if (v < 0 || v >= g.vertex_count()) throw Error(ErrorKind::InvalidArgument, "no vertex " + std::to_string(v));
  const int d = g.degree(v);
  if (d <= 3) {
    throw Error(ErrorKind::DegreeTooSmall, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
  }
  TreeShape used = shape.value_or(TreeShape::left_comb(d));
  if (static_cast<int>(used.merges.size()) != d - 3) {
    throw Error(ErrorKind::BadShape, "a cubic tree on " + std::to_string(d) + " leaves needs " +
                                         std::to_string(d - 3) + " merges");
  }
  for (std::size_t k = 0; k < used.merges.size(); ++k) {
    const int len = d - static_cast<int>(k);
    if (used.merges[k] < 0 || used.merges[k] > len - 2) {
      throw Error(ErrorKind::BadShape, "merge " + std::to_string(k) + " position out of range");
    }
  }

  std::vector<std::pair<int, int>> edges = g.edge_pairs();
  Signs signs = s.signs();
  Rotation rot = s.rotation();
  const std::vector<DartId> leaves = s.rotation()[v];

  ReductionStep step;
  step.kind = ReductionStep::Kind::Expand;
  step.target = v;
  step.leaves = leaves;
  step.shape = used;
  step.dart_map.resize(g.dart_count());
  for (DartId x = 0; x < g.dart_count(); ++x) step.dart_map[x] = x;

  auto place = [&](DartId x, VertexId at) {
    auto& ends = edges[dart_edge(x)];
    (dart_end(x) == 0 ? ends.first : ends.second) = at;
  };

  // Sequence entries are darts that still hang from the (shrinking) root:
  // original leaf darts, or the parent-side dart of a finished subtree.
  std::vector<DartId> seq = leaves;
  for (int pos : used.merges) {
    const VertexId w = static_cast<VertexId>(rot.size());
    const EdgeId f = static_cast<EdgeId>(edges.size());
    edges.emplace_back(v, w);  // end 0 at the parent, fixed up when placed
    signs.push_back(0);
    const DartId a = seq[pos], b = seq[pos + 1];
    place(a, w);
    place(b, w);
    rot.push_back({make_dart(f, 1), a, b});
    step.new_vertices.push_back(w);
    step.new_edges.push_back(f);
    seq[pos] = make_dart(f, 0);
    seq.erase(seq.begin() + pos + 1);
  }
  for (DartId x : seq) place(x, v);
  rot[v] = seq;

  Multigraph expanded = Multigraph::build(static_cast<int>(rot.size()), edges);
  return {Scheme::make(std::move(expanded), std::move(rot), std::move(signs)), std::move(step)};
}

int high_degree_count(const Multigraph& g) {
  int count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) count += g.degree(v) > 3 ? 1 : 0;
  return count;
}

Reduction reduce_to_cubic(const Scheme& s) {
  for (VertexId v = 0; v < s.graph().vertex_count(); ++v) {
    if (s.graph().degree(v) == 1) {
      throw Error(ErrorKind::NotCyclicPart, "vertex " + std::to_string(v) + " has degree 1");
    }
  }
  Reduction out{s, {}};
  while (true) {
    const Multigraph& g = out.scheme.graph();
    VertexId v = 0;
    while (v < g.vertex_count() && g.degree(v) <= 3) ++v;
    if (v == g.vertex_count()) break;
    Expanded x = expand_vertex(out.scheme, v);
    out.scheme = std::move(x.scheme);
    out.steps.push_back(std::move(x.step));
  }
  return out;
}

namespace {

using nlohmann::ordered_json;

std::string dart_text(DartId d) { return std::to_string(dart_edge(d)) + "." + std::to_string(dart_end(d)); }

DartId dart_from_text(const std::string& t) {
  auto dot = t.find('.');
  if (dot == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad dart '" + t + "'");
  return make_dart(std::stoi(t.substr(0, dot)), std::stoi(t.substr(dot + 1)));
}

}  // namespace

std::string steps_to_json(const std::vector<ReductionStep>& steps) {
  ordered_json arr = ordered_json::array();
  for (const ReductionStep& st : steps) {
    ordered_json j;
    j["kind"] = st.kind == ReductionStep::Kind::Expand ? "expand" : "contract";
    j["target"] = st.target;
    if (st.kind == ReductionStep::Kind::Expand) {
      ordered_json leaves = ordered_json::array();
      for (DartId d : st.leaves) leaves.push_back(dart_text(d));
      j["leaves"] = std::move(leaves);
      j["shape"] = st.shape.merges;
      j["new_vertices"] = st.new_vertices;
      j["new_edges"] = st.new_edges;
    }
    j["dart_map"] = st.dart_map;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<ReductionStep> steps_from_json(const std::string& text) {
  std::vector<ReductionStep> out;
  try {
    for (const auto& j : ordered_json::parse(text)) {
      ReductionStep st;
      std::string kind = j.at("kind").get<std::string>();
      if (kind != "expand" && kind != "contract") throw Error(ErrorKind::InvalidArgument, "unknown step kind " + kind);
      st.kind = kind == "expand" ? ReductionStep::Kind::Expand : ReductionStep::Kind::Contract;
      st.target = j.at("target").get<int>();
      if (st.kind == ReductionStep::Kind::Expand) {
        for (const auto& d : j.at("leaves")) st.leaves.push_back(dart_from_text(d.get<std::string>()));
        st.shape.merges = j.at("shape").get<std::vector<int>>();
        st.new_vertices = j.at("new_vertices").get<std::vector<int>>();
        st.new_edges = j.at("new_edges").get<std::vector<int>>();
      }
      st.dart_map = j.at("dart_map").get<std::vector<int>>();
      out.push_back(std::move(st));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("step list JSON: ") + e.what());
  }
  return out;
}

}  // namespace cutlocus
