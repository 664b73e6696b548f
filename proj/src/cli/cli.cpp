#include "geoconv/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "geoconv/graph_io.hpp"
#include "geoconv/report.hpp"

namespace geoconv::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string input;   // graph6 file, or "-" for stdin
  std::string edges;   // inline edge list, or "-" for stdin
  bool arcs = false;   // read the edge list as directed arcs
  int budget = kDefaultEdgeBudget;
  bool symmetry = false;
  std::string format = "text";
  std::string suite = "all";
  int workers = 1;
  std::string mode;
  int order = 0;
};

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "\n" typed literally on a command line stands for a newline.
std::string unescape(std::string text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\\' && i + 1 < text.size() && text[i + 1] == 'n') {
      out.push_back('\n');
      ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return slurp(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return slurp(file);
}

std::string edge_text(const RunConfig& cfg, std::istream& in) {
  return cfg.edges == "-" ? slurp(in) : unescape(cfg.edges);
}

// Graphs named by the config: one for --edges, one per line for --input.
std::vector<std::pair<std::string, Graph>> load_graphs(const RunConfig& cfg,
                                                       std::istream& in) {
  std::vector<std::pair<std::string, Graph>> out;
  if (!cfg.edges.empty()) {
    out.emplace_back("edges", parse_edge_list(edge_text(cfg, in)));
    return out;
  }
  std::istringstream lines(read_source(cfg.input, in));
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.emplace_back(line, parse_graph6(line));
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

OrientableOptions orientable_options(const RunConfig& cfg) {
  OrientableOptions o;
  o.enumeration.edge_budget = cfg.budget;
  o.enumeration.use_reversal_symmetry = cfg.symmetry;
  o.workers = cfg.workers;
  return o;
}

std::string arcs_text(const Digraph& d) {
  std::ostringstream out;
  bool first = true;
  for (const Arc& a : d.arcs()) {
    out << (first ? "" : " ") << a.tail << "->" << a.head;
    first = false;
  }
  return out.str();
}

std::string numbers_text(const OrientableNumbers& r) {
  std::ostringstream out;
  out << "g⁻=" << r.g_min.value << " g⁺=" << r.g_max.value << " h⁻=" << r.h_min.value
      << " h⁺=" << r.h_max.value << " con⁻=" << r.con_min.value
      << " con⁺=" << r.con_max.value;
  return out.str();
}

int cmd_invariants(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  if (cfg.arcs) {
    if (cfg.edges.empty()) throw InputError("--arcs needs --edges");
    const Digraph d = parse_arc_list(edge_text(cfg, in));
    const auto inv = digraph_invariants(d);
    if (cfg.format == "json") {
      out << digraph_invariants_to_json(d, inv).dump() << '\n';
    } else if (cfg.format == "csv") {
      out << "n,g,h,con\n" << d.order() << ',' << inv.geodetic.value << ','
          << inv.hull.value << ',' << (d.order() >= 2 ? inv.convexity.value : 0) << '\n';
    } else {
      out << "g=" << inv.geodetic.value << " " << to_string(inv.geodetic.witness)
          << "\nh=" << inv.hull.value << " " << to_string(inv.hull.witness) << '\n';
      if (d.order() >= 2)
        out << "con=" << inv.convexity.value << " "
            << to_string(inv.convexity.witness) << '\n';
    }
    return kOk;
  }

  const auto graphs = load_graphs(cfg, in);
  if (cfg.format == "csv")
    out << "graph,n,m,g_minus,g_plus,h_minus,h_plus,con_minus,con_plus\n";
  for (const auto& [name, g] : graphs) {
    const auto r = orientable_numbers(g, orientable_options(cfg));
    if (cfg.format == "json") {
      json rec = {{"graph", name}, {"n", g.order()}, {"m", g.size()}};
      rec.update(numbers_to_json(g, r));
      out << rec.dump() << '\n';
    } else if (cfg.format == "csv") {
      out << name << ',' << g.order() << ',' << g.size() << ',' << r.g_min.value << ','
          << r.g_max.value << ',' << r.h_min.value << ',' << r.h_max.value << ','
          << r.con_min.value << ',' << r.con_max.value << '\n';
    } else {
      out << name << ": " << numbers_text(r) << '\n';
      const std::pair<const char*, const Extremum*> items[] = {
          {"g⁻", &r.g_min}, {"g⁺", &r.g_max},     {"h⁻", &r.h_min},
          {"h⁺", &r.h_max}, {"con⁻", &r.con_min}, {"con⁺", &r.con_max}};
      for (const auto& [label, e] : items)
        out << "  " << label << " witness: "
            << arcs_text(Digraph::orientation(g, e->mask)) << '\n';
    }
  }
  return kOk;
}

int cmd_orient(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const bool json_out = cfg.format == "json";
  auto emit = [&](const std::string& label, const Digraph& d) {
    if (!json_out) out << label << ": " << arcs_text(d) << '\n';
  };

  if (cfg.mode == "complete") {
    int n = cfg.order;
    if (!cfg.edges.empty() || !cfg.input.empty()) {
      const auto graphs = load_graphs(cfg, in);
      if (graphs.size() != 1) throw InputError("orient expects exactly one graph");
      if (!is_complete(graphs[0].second))
        throw PreconditionError("graph is not complete");
      n = graphs[0].second.order();
    }
    const auto pair = complete_graph_orientations(n);
    const auto upper = digraph_invariants(pair.max);
    const auto lower = digraph_invariants(pair.min);
    if (json_out) {
      out << json{{"mode", "complete"},
                  {"max", digraph_invariants_to_json(pair.max, upper)},
                  {"min", digraph_invariants_to_json(pair.min, lower)}}
                 .dump()
          << '\n';
    } else {
      emit("max", pair.max);
      emit("min", pair.min);
      out << "check: max g=" << upper.geodetic.value << " h=" << upper.hull.value
          << ", min g=" << lower.geodetic.value << " h=" << lower.hull.value
          << " witness " << to_string(lower.geodetic.witness) << '\n';
    }
    return kOk;
  }

  const auto graphs = load_graphs(cfg, in);
  if (graphs.size() != 1) throw InputError("orient expects exactly one graph");
  const Graph& g = graphs[0].second;

  if (cfg.mode == "extreme-free") {
    const Digraph d = extreme_free_orientation(g);
    const int extreme = extreme_vertices(d).size();
    if (json_out) {
      out << json{{"mode", "extreme-free"},
                  {"arcs", arcs_to_json(d.arcs())},
                  {"extreme_vertices", extreme}}
                 .dump()
          << '\n';
    } else {
      emit("orientation", d);
      out << "check: " << extreme << " extreme vertices\n";
    }
    return extreme == 0 ? kOk : kTheoremViolation;
  }

  if (cfg.mode == "d1d2") {
    const auto built = d2_construction(g);
    const Digraph d1 = d1_from_d2(built.d2, built.selection);
    const auto i1 = digraph_invariants(d1);
    const auto i2 = digraph_invariants(built.d2);
    const auto& sel = built.selection;
    const bool sink = built.d2.out_degree(sel.v1) == 0;
    if (json_out) {
      out << json{{"mode", "d1d2"},
                  {"selection", selection_to_json(sel)},
                  {"d2", digraph_invariants_to_json(built.d2, i2)},
                  {"d1", digraph_invariants_to_json(d1, i1)},
                  {"v1_sink_in_d2", sink}}
                 .dump()
          << '\n';
    } else {
      out << "triple: v0=" << sel.v0 << " v1=" << sel.v1 << " v2=" << sel.v2
          << " U1=" << to_string(sel.u1) << " U2=" << to_string(sel.u2)
          << " U3=" << to_string(sel.u3) << " U4=" << to_string(sel.u4)
          << " U5=" << to_string(sel.u5) << '\n';
      emit("D2", built.d2);
      emit("D1", d1);
      out << "check: v1 " << (sink ? "is" : "is NOT") << " a sink of D2; g(D1)="
          << i1.geodetic.value << " g(D2)=" << i2.geodetic.value
          << " h(D1)=" << i1.hull.value << " h(D2)=" << i2.hull.value << '\n';
    }
    const bool ok = sink && i1.geodetic.value < i2.geodetic.value &&
                    i1.hull.value < i2.hull.value;
    return ok ? kOk : kTheoremViolation;
  }
  throw InputError("unknown orient mode '" + cfg.mode +
                   "' (expected extreme-free, d1d2 or complete)");
}

CorpusResult run_corpus(const RunConfig& cfg, std::istream& in, const Suites& suites) {
  CorpusOptions options;
  options.suites = suites;
  options.orientable = orientable_options(cfg);
  options.orientable.workers = 1;
  options.workers = cfg.workers;
  if (cfg.input.empty()) throw InputError("no input corpus given");
  std::istringstream text(read_source(cfg.input, in));
  return corpus_run(text, options);
}

void write_records(const RunConfig& cfg, const CorpusResult& result, std::ostream& out) {
  if (cfg.format == "csv") {
    out << csv_header() << '\n';
    for (const auto& rec : result.records) out << csv_row(rec) << '\n';
    return;
  }
  if (cfg.format == "json") {
    for (const auto& rec : result.records) out << record_to_json(rec).dump() << '\n';
    out << summary_to_json(result.summary).dump() << '\n';
    return;
  }
  for (const auto& rec : result.records) {
    out << rec.line << ' ' << rec.graph6 << ' ';
    if (!rec.input_error.empty()) {
      out << "error: " << rec.input_error << '\n';
      continue;
    }
    if (!rec.skipped.empty()) {
      out << "skipped: " << rec.skipped << '\n';
      continue;
    }
    if (rec.numbers) out << numbers_text(*rec.numbers) << ' ';
    if (rec.tag) out << to_string(*rec.tag) << ' ';
    out << (rec.failures.empty() ? "pass" : "FAIL") << '\n';
    for (const auto& f : rec.failures) out << "  " << f.check << ": " << f.detail << '\n';
  }
}

void write_histogram(const CorpusSummary& s, std::ostream& out) {
  out << "graphs: " << s.graphs << "  input errors: " << s.input_errors
      << "  skipped: " << s.skipped << "  failed: " << s.failed_graphs << '\n';
  for (int c = 0; c < 7; ++c) {
    const auto tag = static_cast<HgCase>(c);
    if (tag == HgCase::kInconsistent && s.case_counts[c] == 0) continue;
    out << to_string(tag) << ": " << s.case_counts[c] << '\n';
  }
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const auto result = run_corpus(cfg, in, Suites::parse(cfg.suite));
  write_records(cfg, result, out);
  if (cfg.format == "text") write_histogram(result.summary, out);
  if (cfg.format == "csv") write_histogram(result.summary, err);
  return result.summary.exit_code();
}

int cmd_classify(const RunConfig& cfg, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  Suites suites;
  suites.classify = true;
  const auto result = run_corpus(cfg, in, suites);
  if (cfg.format == "text") {
    write_histogram(result.summary, out);
    for (const auto& rec : result.records)
      if (rec.tag && *rec.tag != HgCase::kHG1)
        out << "witness " << to_string(*rec.tag) << ": line " << rec.line << ' '
            << rec.graph6 << ' ' << numbers_text(*rec.numbers) << '\n';
  } else {
    write_records(cfg, result, out);
    if (cfg.format == "csv") write_histogram(result.summary, err);
  }
  return result.summary.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Geodesic convexity numbers of oriented graphs", "geoconv"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool corpus) {
    auto* input = sub->add_option("-i,--input", cfg.input,
                                  "graph6 file, one graph per line ('-' for stdin)");
    if (corpus) sub->add_option("corpus", cfg.input, "graph6 file")->excludes(input);
    if (!corpus) {
      sub->add_option("-e,--edges", cfg.edges,
                      "edge list: n, then one 'u v' per line ('-' for stdin)")
          ->excludes(input);
    }
    sub->add_option("--budget", cfg.budget, "maximum edges for orientation enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--symmetry", cfg.symmetry,
                  "enumerate one orientation per reversal pair");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* inv = app.add_subcommand("invariants", "g, h, con or the six orientable numbers");
  add_common(inv, false);
  inv->add_flag("--arcs", cfg.arcs, "read --edges as directed arcs and report g, h, con");

  auto* orient = app.add_subcommand("orient", "constructive orientations");
  orient->add_option("mode", cfg.mode, "extreme-free | d1d2 | complete")->required();
  add_common(orient, false);
  orient->add_option("-n,--order", cfg.order, "order of the complete graph (mode complete)");

  auto* verify = app.add_subcommand("verify", "run theorem suites over a graph6 corpus");
  add_common(verify, true);
  verify->add_option("--suite", cfg.suite, "all | separation | convexity | classify");

  auto* classify_cmd = app.add_subcommand("classify", "h/g case histogram of a corpus");
  add_common(classify_cmd, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    help << (e.get_exit_code() == 0 ? "" : e.what());
    err << "error: " << help.str() << '\n';
    return e.get_exit_code() == 0 ? kOk : kInputError;
  }

  if (cfg.budget > kDefaultEdgeBudget)
    err << "warning: edge budget " << cfg.budget << " allows up to 2^" << cfg.budget
        << " orientations per graph\n";

  try {
    if (*inv) {
      if (cfg.input.empty() && cfg.edges.empty())
        throw InputError("give --input or --edges");
      return cmd_invariants(cfg, in, out);
    }
    if (*orient) {
      if (cfg.mode != "complete" && cfg.input.empty() && cfg.edges.empty())
        throw InputError("give --input or --edges");
      if (cfg.mode == "complete" && cfg.input.empty() && cfg.edges.empty() &&
          cfg.order == 0)
        throw InputError("give --order, --input or --edges");
      return cmd_orient(cfg, in, out);
    }
    if (*verify) return cmd_verify(cfg, in, out, err);
    if (*classify_cmd) return cmd_classify(cfg, in, out, err);
  } catch (const PreconditionError& e) {
    err << "refused: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace geoconv::cli
