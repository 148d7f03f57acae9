#include "cutlocus/render.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace cutlocus {

namespace {

const char* mark(int sign) { return sign ? "x" : "="; }

std::string render_text(const Scheme& s, const std::string& name) {
  const Multigraph& g = s.graph();
  std::ostringstream os;
  os << "scheme " << (name.empty() ? "-" : name) << ": " << g.vertex_count() << " vertex disk"
     << (g.vertex_count() == 1 ? "" : "s") << ", " << g.edge_count() << " band" << (g.edge_count() == 1 ? "" : "s")
     << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  (" << v << ")";
    for (DartId d : s.rotation()[v]) os << " " << dart_edge(d) << "." << dart_end(d);
    os << "\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "  " << g.edge(e).u << " --" << mark(s.sign(e)) << "-- " << g.edge(e).v << "   edge " << e << "\n";
  }
  return os.str();
}

std::string render_dot(const Scheme& s, const std::string& name) {
  const Multigraph& g = s.graph();
  std::ostringstream os;
  os << "graph \"" << (name.empty() ? "scheme" : name) << "\" {\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "  v" << g.edge(e).u << " -- v" << g.edge(e).v << " [label=\"" << mark(s.sign(e)) << "\", id=\"e" << e
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_svg(const Scheme& s) {
  const Multigraph& g = s.graph();
  const int n = g.vertex_count();
  const double size = 400, centre = size / 2, radius = n == 1 ? 0.0 : 140.0, disk = 18;
  std::vector<std::pair<double, double>> at(n);
  for (int v = 0; v < n; ++v) {
    double t = 2 * std::numbers::pi * v / n - std::numbers::pi / 2;
    at[v] = {centre + radius * std::cos(t), centre + radius * std::sin(t)};
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  // Parallel edges and repeated loops fan out by their index among siblings.
  std::map<std::pair<int, int>, int> seen;
  std::vector<std::pair<double, double>> label_at(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    int k = seen[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}]++;
    auto [x1, y1] = at[ed.u];
    if (ed.is_loop()) {
      double t = std::atan2(y1 - centre, x1 - centre);
      if (n == 1) t = -std::numbers::pi / 2;
      t += 0.6 * k;
      double r = 22 + 6 * k;
      double cx = x1 + (disk + r) * std::cos(t), cy = y1 + (disk + r) * std::sin(t);
      os << "    <circle id=\"e" << e << "\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\"/>\n";
      label_at[e] = {cx + r * std::cos(t), cy + r * std::sin(t)};
      continue;
    }
    auto [x2, y2] = at[ed.v];
    double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
    double dx = x2 - x1, dy = y2 - y1, len = std::hypot(dx, dy);
    double bend = (k % 2 ? 1 : -1) * 28.0 * ((k + 1) / 2);
    double cx = mx - dy / len * bend, cy = my + dx / len * bend;
    os << "    <path id=\"e" << e << "\" d=\"M " << x1 << " " << y1 << " Q " << cx << " " << cy << " " << x2 << " "
       << y2 << "\"/>\n";
    label_at[e] = {(mx + cx) / 2, (my + cy) / 2};
  }
  os << "  </g>\n";
  for (int v = 0; v < n; ++v) {
    os << "  <circle cx=\"" << at[v].first << "\" cy=\"" << at[v].second << "\" r=\"" << disk
       << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    os << "  <text x=\"" << at[v].first << "\" y=\"" << at[v].second + 5
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << v << "</text>\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    os << "  <text class=\"mark\" x=\"" << label_at[e].first << "\" y=\"" << label_at[e].second + 6
       << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"18\" fill=\"crimson\">" << mark(s.sign(e))
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const Scheme& s, RenderFormat format, const std::string& name) {
  switch (format) {
    case RenderFormat::Text: return render_text(s, name);
    case RenderFormat::Dot: return render_dot(s, name);
    case RenderFormat::Svg: return render_svg(s);
  }
  return {};
}

}  // namespace cutlocus
