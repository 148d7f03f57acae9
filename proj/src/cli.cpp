#include "cutlocus/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutlocus/classify.hpp"
#include "cutlocus/error.hpp"
#include "cutlocus/reduce.hpp"
#include "cutlocus/render.hpp"
#include "cutlocus/text_format.hpp"
#include "cutlocus/verify.hpp"

namespace cutlocus {

namespace {

struct Options {
  int q = -1;
  std::string input;
  std::string output;
  std::string format = "text";
  int threads = 1;
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 1;
  int vertex = -1;
  int edge = -1;
  std::string shape;
  std::string level = "default";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : "|") + f;
  throw UsageError("--format must be one of " + list + " for this command");
}

const std::string& require_input(const Options& o) {
  if (o.input.empty()) throw UsageError("--input <path> is required");
  return o.input;
}

EnumerationLimits limits_of(const Options& o) { return {o.budget, o.threads}; }

std::string cmd_graphs(const Options& o) {
  if (o.q < 0) throw UsageError("--q <int> is required");
  require_format(o, {"text", "json"});
  auto graphs = generate_cubic_graphs(o.q);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["q"] = o.q;
    doc["count"] = graphs.size();
    auto arr = nlohmann::ordered_json::array();
    for (const Multigraph& g : graphs) {
      nlohmann::ordered_json entry;
      entry["vertices"] = g.vertex_count();
      entry["canonical_edges"] = g.edge_pairs();
      arr.push_back(entry);
    }
    doc["graphs"] = arr;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "q = " << o.q << ": " << graphs.size() << " connected cubic multigraph" << (graphs.size() == 1 ? "" : "s")
     << "\n";
  if (graphs.empty()) {
    os << "note: a connected cubic graph with cycle rank q has 2(q-1) vertices, so q >= 2 is needed\n";
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Multigraph& g = graphs[i];
    int loops = 0;
    for (const Edge& e : g.edges()) loops += e.is_loop() ? 1 : 0;
    os << "  [" << i << "] " << canonical_form(g).to_string() << "   loops " << loops << ", bridges "
       << bridges_and_components(g).bridges.size() << "\n";
  }
  return os.str();
}

std::string cmd_structures(const Options& o) {
  require_format(o, {"text", "json"});
  Catalog c;
  if (!o.input.empty()) {
    c = catalog_for_graph(parse_graph(read_file(o.input)).graph, limits_of(o));
  } else if (o.q >= 0) {
    c = catalog(o.q, limits_of(o));
  } else {
    throw UsageError("give --q <int> or --input <graph file>");
  }
  return o.format == "json" ? catalog_to_json(c) : catalog_to_table(c);
}

std::string cmd_trace(const Options& o) {
  require_format(o, {"text", "json"});
  SchemeDocument doc = parse_scheme(read_file(require_input(o)));
  const Scheme& s = doc.scheme;
  SurfaceType t = surface_type(s);
  bool cyclic = true;
  for (VertexId v = 0; v < s.graph().vertex_count(); ++v) cyclic = cyclic && s.graph().degree(v) != 1;
  const int oracle = oracle_boundary_count(s);
  std::vector<EdgeId> switched = switched_edges(s).ids();
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["name"] = doc.name;
    j["boundary"] = t.boundary;
    j["oracle_boundary"] = oracle;
    j["is_strip"] = cyclic ? nlohmann::ordered_json(t.boundary == 1) : nlohmann::ordered_json(nullptr);
    j["switched_edges"] = switched;
    j["cycle_rank"] = cycle_rank(s.graph());
    j["euler_patch"] = t.euler_patch;
    j["euler_closed"] = t.euler_closed;
    j["orientable"] = t.orientable;
    j["genus_or_crosscaps"] = t.genus_or_crosscaps;
    j["closed_surface"] = t.closed_name();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "scheme " << (doc.name.empty() ? "-" : doc.name) << "\n";
  os << "  boundary circles b  " << t.boundary << "   (gluing oracle: " << oracle << ")\n";
  os << "  strip               " << (cyclic ? (t.boundary == 1 ? "yes" : "no") : "n/a (graph has degree-1 vertices)")
     << "\n";
  os << "  switched edges      {";
  for (std::size_t i = 0; i < switched.size(); ++i) os << (i ? "," : "") << switched[i];
  os << "}\n";
  os << "  cycle rank q        " << cycle_rank(s.graph()) << "\n";
  os << "  euler (patch)       " << t.euler_patch << "\n";
  os << "  euler (capped)      " << t.euler_closed << "\n";
  os << "  orientable          " << (t.orientable ? "yes" : "no") << "\n";
  os << "  capped surface      " << t.closed_name() << "\n";
  return os.str();
}

std::string scheme_and_steps(const Options& o, const Scheme& s, const std::string& name,
                             const std::vector<ReductionStep>& steps) {
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["scheme"] = write_scheme(s, name);
    j["steps"] = nlohmann::ordered_json::parse(steps_to_json(steps));
    return j.dump(2) + "\n";
  }
  return write_scheme(s, name);
}

std::string cmd_reduce(const Options& o) {
  require_format(o, {"text", "json"});
  SchemeDocument doc = parse_scheme(read_file(require_input(o)));
  if (o.edge >= 0) {
    Contracted c = contract_unswitched(doc.scheme, o.edge);
    return scheme_and_steps(o, c.scheme, doc.name, {c.step});
  }
  Reduction r = reduce_to_cubic(doc.scheme);
  return scheme_and_steps(o, r.scheme, doc.name, r.steps);
}

std::string cmd_expand(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.vertex < 0) throw UsageError("--vertex <id> is required");
  SchemeDocument doc = parse_scheme(read_file(require_input(o)));
  std::optional<TreeShape> shape;
  if (!o.shape.empty()) {
    TreeShape t;
    std::stringstream ss(o.shape);
    for (std::string part; std::getline(ss, part, ',');) {
      try {
        t.merges.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw UsageError("--shape must be a comma-separated list of integers");
      }
    }
    shape = t;
  }
  Expanded x = expand_vertex(doc.scheme, o.vertex, shape);
  return scheme_and_steps(o, x.scheme, doc.name, {x.step});
}

std::string cmd_render(const Options& o) {
  require_format(o, {"text", "dot", "svg"});
  SchemeDocument doc = parse_scheme(read_file(require_input(o)));
  RenderFormat f = o.format == "dot" ? RenderFormat::Dot : o.format == "svg" ? RenderFormat::Svg : RenderFormat::Text;
  return render(doc.scheme, f, doc.name);
}

std::string cmd_verify(const Options& o, bool& failed) {
  require_format(o, {"text"});
  VerifyOptions v;
  v.seed = o.seed;
  v.threads = o.threads;
  if (o.level == "quick") {
    v.max_q = 2;
    v.random_schemes = 1000;
    v.round_trips = 20;
  } else if (o.level == "default") {
    v.max_q = 3;
    v.q4_samples = 1000;
  } else if (o.level == "full") {
    v.max_q = 4;
    v.random_schemes = 100000;
    v.round_trips = 1000;
  } else {
    throw UsageError("--level must be quick, default or full");
  }
  auto start = std::chrono::steady_clock::now();
  auto results = run_verification(v);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& r : results) failed = failed || !r.passed;
  std::ostringstream os;
  os << "verification level " << o.level << ", seed " << o.seed << "\n" << format_report(results);
  os.precision(2);
  os << std::fixed << "elapsed " << secs << " s\n";
  return os.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  // Write next to the target and rename, so a failure leaves no partial file.
  std::filesystem::path target(o.output);
  std::filesystem::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write '" + tmp.string() + "'");
    f << text;
    if (!f.flush()) throw UsageError("cannot write '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cut-locus structures on multigraphs: signed rotation systems with one boundary circle"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text|json|dot|svg");
    sub->add_option("--output", o.output, "write the result to this file instead of stdout");
  };
  auto* graphs = app.add_subcommand("graphs", "list connected cubic multigraphs with cycle rank q");
  graphs->add_option("--q", o.q, "cycle rank")->required();
  add_common(graphs);

  auto* structures = app.add_subcommand("structures", "classify CL-structures for cycle rank q or one graph file");
  structures->add_option("--q", o.q, "cycle rank");
  structures->add_option("--input", o.input, "graph file");
  structures->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  structures->add_option("--budget", o.budget, "maximum schemes per enumeration")->check(CLI::PositiveNumber);
  add_common(structures);

  auto* trace = app.add_subcommand("trace", "report boundary count and surface type of a scheme file");
  trace->add_option("--input", o.input, "scheme file")->required();
  add_common(trace);

  auto* reduce = app.add_subcommand("reduce", "expand high-degree vertices until the graph is cubic");
  reduce->add_option("--input", o.input, "scheme file")->required();
  reduce->add_option("--edge", o.edge, "contract only this unswitched edge");
  add_common(reduce);

  auto* expand = app.add_subcommand("expand", "replace one vertex of degree > 3 by a cubic tree");
  expand->add_option("--input", o.input, "scheme file")->required();
  expand->add_option("--vertex", o.vertex, "vertex to expand")->required();
  expand->add_option("--shape", o.shape, "comma-separated merge positions (default: left comb)");
  add_common(expand);

  auto* rend = app.add_subcommand("render", "draw a scheme with x / = edge marks");
  rend->add_option("--input", o.input, "scheme file")->required();
  add_common(rend);

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--level", o.level, "quick|default|full");
  verify->add_option("--seed", o.seed, "seed for randomized checks");
  verify->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  add_common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    bool failed = false;
    std::string text;
    if (graphs->parsed()) text = cmd_graphs(o);
    if (structures->parsed()) text = cmd_structures(o);
    if (trace->parsed()) text = cmd_trace(o);
    if (reduce->parsed()) text = cmd_reduce(o);
    if (expand->parsed()) text = cmd_expand(o);
    if (rend->parsed()) text = cmd_render(o);
    if (verify->parsed()) text = cmd_verify(o, failed);
    emit(o, text, out);
    return failed ? kExitVerification : kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << (o.input.empty() ? "" : o.input + ": ") << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded || e.kind() == ErrorKind::TooLarge ? kExitBudget : kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cutlocus
