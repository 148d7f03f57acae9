#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cutlocus/classify.hpp"
#include "cutlocus/error.hpp"

namespace cutlocus {

using nlohmann::ordered_json;

namespace {

ordered_json signs_json(const Signs& s) {
  ordered_json arr = ordered_json::array();
  for (auto b : s) arr.push_back(static_cast<int>(b));
  return arr;
}

Signs signs_from(const ordered_json& j) {
  Signs s;
  for (const auto& b : j) s.push_back(static_cast<std::uint8_t>(b.get<int>()));
  return s;
}

ordered_json rotation_json(const Rotation& r) {
  ordered_json arr = ordered_json::array();
  for (const auto& cyc : r) {
    ordered_json row = ordered_json::array();
    for (DartId d : cyc) row.push_back(dart_to_string(d));
    arr.push_back(std::move(row));
  }
  return arr;
}

Rotation rotation_from(const ordered_json& j) {
  Rotation r;
  for (const auto& row : j) {
    std::vector<DartId> cyc;
    for (const auto& d : row) {
      std::string text = d.get<std::string>();
      auto dot = text.find('.');
      if (dot == std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad dart '" + text + "'");
      cyc.push_back(make_dart(std::stoi(text.substr(0, dot)), std::stoi(text.substr(dot + 1))));
    }
    r.push_back(std::move(cyc));
  }
  return r;
}

}  // namespace

std::string catalog_to_json(const Catalog& c) {
  ordered_json doc;
  doc["q"] = c.q;
  ordered_json graphs = ordered_json::array();
  for (const GraphEntry& g : c.graphs) {
    ordered_json entry;
    entry["vertices"] = g.canonical.vertices;
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.canonical.edges) edges.push_back({u, v});
    entry["canonical_edges"] = std::move(edges);
    ordered_json classes = ordered_json::array();
    for (const StructureClass& cls : g.classes) {
      ordered_json k;
      k["representative_signs"] = signs_json(cls.representative);
      ordered_json members = ordered_json::array();
      for (const Signs& m : cls.members) members.push_back(signs_json(m));
      k["members"] = std::move(members);
      k["witness_rotation"] = rotation_json(cls.witnesses.front());
      k["surface"] = {{"orientable", cls.surface.orientable},
                      {"euler_closed", cls.surface.euler_closed},
                      {"genus_or_crosscaps", cls.surface.genus_or_crosscaps}};
      classes.push_back(std::move(k));
    }
    entry["classes"] = std::move(classes);
    graphs.push_back(std::move(entry));
  }
  doc["graphs"] = std::move(graphs);
  doc["totals"] = c.total;
  return doc.dump(2) + "\n";
}

Catalog catalog_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("catalog JSON: ") + e.what());
  }
  Catalog c;
  try {
    c.q = doc.at("q").get<int>();
    for (const auto& entry : doc.at("graphs")) {
      CanonicalForm cf;
      cf.vertices = entry.at("vertices").get<int>();
      for (const auto& e : entry.at("canonical_edges")) cf.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      GraphEntry g{Multigraph::build(cf.vertices, cf.edges), cf, {}};
      for (const auto& k : entry.at("classes")) {
        StructureClass cls;
        cls.representative = signs_from(k.at("representative_signs"));
        for (const auto& m : k.at("members")) cls.members.push_back(signs_from(m));
        // Only the representative's witness is serialized.
        cls.witnesses.push_back(rotation_from(k.at("witness_rotation")));
        const auto& s = k.at("surface");
        cls.surface.orientable = s.at("orientable").get<bool>();
        cls.surface.euler_closed = s.at("euler_closed").get<int>();
        cls.surface.genus_or_crosscaps = s.at("genus_or_crosscaps").get<int>();
        cls.surface.boundary = 1;
        cls.surface.euler_patch = cls.surface.euler_closed - 1;
        g.classes.push_back(std::move(cls));
      }
      c.graphs.push_back(std::move(g));
    }
    c.total = doc.at("totals").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("catalog JSON: ") + e.what());
  }
  return c;
}

std::string catalog_to_table(const Catalog& c) {
  std::ostringstream os;
  os << "q = " << c.q << ": " << c.graphs.size() << " cubic graph" << (c.graphs.size() == 1 ? "" : "s") << ", "
     << c.total << " non-equivalent CL-structure" << (c.total == 1 ? "" : "s") << "\n";
  for (std::size_t i = 0; i < c.graphs.size(); ++i) {
    const GraphEntry& g = c.graphs[i];
    os << "\ngraph " << i << "  [" << g.canonical.to_string() << "]  classes: " << g.classes.size() << "\n";
    for (std::size_t k = 0; k < g.classes.size(); ++k) {
      const StructureClass& cls = g.classes[k];
      os << "  class " << k << "  rep " << signs_to_string(cls.representative) << "  members "
         << std::setw(3) << cls.members.size() << "  " << (cls.surface.orientable ? "orientable" : "non-orientable")
         << ", closed chi " << cls.surface.euler_closed << ", " << cls.surface.closed_name() << "\n";
    }
  }
  return os.str();
}

}  // namespace cutlocus
