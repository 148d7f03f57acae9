#include "cutlocus/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "cutlocus/error.hpp"

namespace cutlocus {

namespace {

struct RawDocument {
  std::string name;
  std::map<int, int> vertex_line;                   // id -> line
  std::map<int, std::pair<int, int>> edges;         // id -> endpoints
  std::map<int, int> edge_line;
  std::map<int, std::vector<DartId>> rotations;
  std::map<int, int> rotation_line;
  std::map<int, int> signs;
};

int parse_int(const std::string& token, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + token + "'");
  }
  return value;
}

DartId parse_dart(const std::string& token, int line) {
  auto dot = token.find('.');
  if (dot == std::string::npos) throw ParseError(line, "dart '" + token + "' must look like <edge>.0 or <edge>.1");
  int e = parse_int(token.substr(0, dot), line, "edge id in dart");
  int end = parse_int(token.substr(dot + 1), line, "dart end");
  if (e < 0 || (end != 0 && end != 1)) throw ParseError(line, "dart '" + token + "' must look like <edge>.0 or <edge>.1");
  return make_dart(e, end);
}

RawDocument parse_raw(const std::string& text, bool allow_scheme) {
  RawDocument doc;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    auto arity = [&](std::size_t n) {
      if (tok.size() != n) throw ParseError(line, "'" + kw + "' takes " + std::to_string(n - 1) + " argument(s)");
    };
    if (kw == "graph") {
      arity(2);
      doc.name = tok[1];
    } else if (kw == "vertex") {
      arity(2);
      int id = parse_int(tok[1], line, "vertex id");
      if (id < 0) throw ParseError(line, "vertex id must be non-negative");
      if (!doc.vertex_line.emplace(id, line).second) throw ParseError(line, "duplicate vertex id " + tok[1]);
    } else if (kw == "edge") {
      arity(4);
      int id = parse_int(tok[1], line, "edge id");
      if (id < 0) throw ParseError(line, "edge id must be non-negative");
      int u = parse_int(tok[2], line, "endpoint");
      int v = parse_int(tok[3], line, "endpoint");
      if (!doc.edges.emplace(id, std::make_pair(u, v)).second) throw ParseError(line, "duplicate edge id " + tok[1]);
      doc.edge_line[id] = line;
    } else if (allow_scheme && kw == "rotation") {
      if (tok.size() < 2) throw ParseError(line, "'rotation' needs a vertex id");
      int v = parse_int(tok[1], line, "vertex id");
      if (doc.rotations.count(v)) throw ParseError(line, "duplicate rotation for vertex " + tok[1]);
      std::vector<DartId> cyc;
      for (std::size_t i = 2; i < tok.size(); ++i) cyc.push_back(parse_dart(tok[i], line));
      doc.rotations[v] = std::move(cyc);
      doc.rotation_line[v] = line;
    } else if (allow_scheme && kw == "sign") {
      arity(3);
      int e = parse_int(tok[1], line, "edge id");
      int s = parse_int(tok[2], line, "sign");
      if (s != 0 && s != 1) throw ParseError(line, "sign must be 0 or 1");
      if (!doc.signs.emplace(e, s).second) throw ParseError(line, "duplicate sign for edge " + tok[1]);
    } else {
      throw ParseError(line, "unknown keyword '" + kw + "'");
    }
  }
  return doc;
}

Multigraph graph_of(const RawDocument& doc) {
  const int n = static_cast<int>(doc.vertex_line.size());
  if (n == 0) throw ParseError(0, "no vertices declared");
  for (auto [id, line] : doc.vertex_line) {
    if (id >= n) throw ParseError(line, "vertex ids must be dense 0.." + std::to_string(n - 1));
  }
  std::vector<std::pair<int, int>> edges(doc.edges.size());
  for (auto [id, ends] : doc.edges) {
    int line = doc.edge_line.at(id);
    if (id >= static_cast<int>(edges.size())) {
      throw ParseError(line, "edge ids must be dense 0.." + std::to_string(edges.size() - 1));
    }
    if (ends.first < 0 || ends.first >= n || ends.second < 0 || ends.second >= n) {
      throw ParseError(line, "endpoint out of range for edge " + std::to_string(id));
    }
    edges[id] = ends;
  }
  try {
    return Multigraph::build(n, edges);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
  RawDocument doc = parse_raw(text, false);
  return {doc.name, graph_of(doc)};
}

SchemeDocument parse_scheme(const std::string& text) {
  RawDocument doc = parse_raw(text, true);
  Multigraph g = graph_of(doc);
  Rotation rot(g.vertex_count());
  for (auto& [v, cyc] : doc.rotations) {
    int line = doc.rotation_line.at(v);
    if (v < 0 || v >= g.vertex_count()) throw ParseError(line, "rotation for unknown vertex " + std::to_string(v));
    for (DartId d : cyc) {
      if (dart_edge(d) >= g.edge_count()) throw ParseError(line, "dart " + std::to_string(dart_edge(d)) + "." +
                                                                       std::to_string(dart_end(d)) + " names an unknown edge");
    }
    rot[v] = cyc;
  }
  Signs signs(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto it = doc.signs.find(e);
    if (it == doc.signs.end()) throw ParseError(doc.edge_line.at(e), "missing sign for edge " + std::to_string(e));
    signs[e] = static_cast<std::uint8_t>(it->second);
  }
  for (auto [e, s] : doc.signs) {
    if (e < 0 || e >= g.edge_count()) throw ParseError(0, "sign for unknown edge " + std::to_string(e));
  }
  try {
    return {doc.name, Scheme::make(g, rot, std::move(signs))};
  } catch (const Error& e) {
    // Point at the vertex whose cyclic order is wrong when we can.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::vector<DartId> got = rot[v];
      std::sort(got.begin(), got.end());
      auto want = g.darts_at(v);
      if (!std::equal(got.begin(), got.end(), want.begin(), want.end())) {
        int line = doc.rotation_line.count(v) ? doc.rotation_line.at(v) : doc.vertex_line.at(v);
        throw ParseError(line, e.what());
      }
    }
    throw ParseError(0, e.what());
  }
}

std::string write_graph(const Multigraph& g, const std::string& name) {
  std::ostringstream os;
  if (!name.empty()) os << "graph " << name << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "vertex " << v << "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) os << "edge " << e << " " << g.edge(e).u << " " << g.edge(e).v << "\n";
  return os.str();
}

std::string write_scheme(const Scheme& s, const std::string& name) {
  std::ostringstream os;
  os << write_graph(s.graph(), name);
  for (VertexId v = 0; v < s.graph().vertex_count(); ++v) {
    if (s.rotation()[v].empty()) continue;
    os << "rotation " << v;
    for (DartId d : s.rotation()[v]) os << " " << dart_edge(d) << "." << dart_end(d);
    os << "\n";
  }
  for (EdgeId e = 0; e < s.graph().edge_count(); ++e) os << "sign " << e << " " << s.sign(e) << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace cutlocus
