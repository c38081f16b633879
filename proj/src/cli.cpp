#include "sti/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sti/canonical.hpp"
#include "sti/families.hpp"
#include "sti/metrics.hpp"
#include "sti/search.hpp"
#include "sti/theorems.hpp"

namespace sti::cli {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> graphs;
  std::string input;
  std::string emit;
  std::string family;
  int p = 0;
  int q = 0;
  int r = 0;
  int n = 0;
  int m = 0;
  int root = 0;
  std::string operand;
  std::string operand2;
  int max_n = 7;
  int min_n = 1;
  bool bipartite_only = false;
  std::optional<std::int64_t> k;
  int jobs = 1;
  bool verify = false;
  std::string report;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument names a file when one exists at that path; otherwise it is
// read as a graph6 literal.
std::vector<Graph> graphs_from_argument(const std::string& arg, std::istream& in) {
  if (arg == "-") return ingest_graph6(in);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    if (!file) throw UsageError("cannot open " + arg);
    return ingest_graph6(file);
  }
  return {from_graph6(arg)};
}

std::vector<Graph> collect_inputs(const Options& o, std::istream& in) {
  std::vector<Graph> out;
  auto append = [&](std::vector<Graph> more) {
    for (auto& g : more) out.push_back(std::move(g));
  };
  if (!o.input.empty()) append(graphs_from_argument(o.input, in));
  for (const auto& a : o.graphs) append(graphs_from_argument(a, in));
  if (o.input.empty() && o.graphs.empty()) append(ingest_graph6(in));
  return out;
}

Graph single_graph(const std::string& arg, std::istream& in) {
  auto gs = graphs_from_argument(arg, in);
  if (gs.size() != 1) throw UsageError("expected exactly one graph in " + arg);
  return std::move(gs.front());
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s.empty() ? "-" : s;
}

std::string cell(const json& j) { return j.is_null() ? "-" : j.dump(); }

// graph6 goes last so long strings do not break the fixed-width columns.
void table_header(std::ostream& out) {
  out << std::left << std::setw(4) << "n" << std::setw(5) << "m" << std::setw(6) << "k"
      << std::setw(5) << "sti" << std::setw(5) << "bip" << std::setw(7) << "girth" << std::setw(6)
      << "diam" << std::setw(16) << "imbalances" << "graph6\n";
}

void table_row(std::ostream& out, const Graph& g, const json& v) {
  out << std::left << std::setw(4) << v["n"].dump() << std::setw(5) << v["m"].dump()
      << std::setw(6) << cell(v["k"]) << std::setw(5)
      << (v["generalized_sti"].get<bool>() ? "yes" : "no") << std::setw(5)
      << (v["bipartite"].get<bool>() ? "yes" : "no") << std::setw(7) << cell(v["girth"])
      << std::setw(6) << v["diameter"].dump() << std::setw(15)
      << join(v["imbalances"].get<std::vector<std::int64_t>>()) << ' ' << to_graph6(g) << "\n";
}

json analysis(const Graph& g) {
  json j;
  j["graph6"] = to_graph6(g);
  const json verdict = verdict_json(g);
  for (const auto& [key, value] : verdict.items()) j[key] = value;
  j["transmissions"] = transmissions(g).tr;
  return j;
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  const auto graphs = collect_inputs(o, in);
  if (o.emit == "table") table_header(out);
  for (const Graph& g : graphs) {
    if (o.emit == "graph6") {
      out << to_graph6(g) << "\n";
    } else if (o.emit == "table") {
      table_row(out, g, verdict_json(g));
    } else {
      out << analysis(g).dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_family(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(o.family);
  if (!family) throw UsageError("unknown family '" + o.family + "'");
  FamilySpec spec;
  spec.family = *family;
  spec.p = o.p;
  spec.q = o.q;
  spec.r = o.r;
  spec.n = o.n;
  spec.m = o.m;
  spec.root = o.root;
  if (!o.operand.empty()) spec.operand = single_graph(o.operand, in);
  if (!o.operand2.empty()) spec.second = single_graph(o.operand2, in);
  const Graph g = build(spec);
  const auto predicted = predicted_k(spec);
  const auto verdict = classify(g);
  const bool mismatch =
      predicted && !(verdict.generalized_sti && verdict.k && *verdict.k == *predicted);

  if (o.emit == "json" || o.emit == "verdict") {
    json j;
    j["family"] = std::string(family_name(*family));
    j["predicted_k"] = predicted ? json(*predicted) : json(nullptr);
    const json record = analysis(g);
    for (const auto& [key, value] : record.items()) j[key] = value;
    out << j.dump() << "\n";
  } else if (o.emit == "table") {
    table_header(out);
    table_row(out, g, verdict_json(g));
  } else {
    out << to_graph6(g) << "\n";
  }
  if (mismatch) {
    err << "witness: " << family_name(*family) << " member is not " << *predicted << "-STI\n";
    return kExitWitness;
  }
  return kExitOk;
}

int cmd_product(const Options& o, std::istream& in, std::ostream& out) {
  if (o.graphs.size() != 2) throw UsageError("product takes exactly two graphs");
  const Graph g = single_graph(o.graphs[0], in);
  const Graph h = single_graph(o.graphs[1], in);
  const auto v = check_product(g, h);
  const Graph gh = cartesian_product(g, h);
  if (o.emit == "graph6") {
    out << to_graph6(gh) << "\n";
  } else {
    out << to_json(v, gh).dump() << "\n";
  }
  return v.holds ? kExitOk : kExitWitness;
}

void write_report(const Options& o, const VerificationReport& report, std::ostream& out) {
  const json j = report.to_json();
  if (o.report.empty()) {
    out << json{{"report", j}}.dump() << "\n";
    return;
  }
  std::ofstream file(o.report);
  if (!file) throw UsageError("cannot write " + o.report);
  file << j.dump(2) << "\n";
}

int cmd_search(const Options& o, const std::vector<std::string>& args, std::istream& in,
               std::ostream& out) {
  SearchConfig config;
  config.max_n = o.max_n;
  config.bipartite_only = o.bipartite_only;
  config.k_filter = o.k;
  config.jobs = o.jobs;
  std::string line = "sti";
  for (const auto& a : args) {
    if (a == "--jobs" || a.starts_with("--jobs=") || a == "-j") continue;
    line += " " + a;
  }
  config.command_line = line;

  Catalog catalog;
  if (!o.input.empty()) {
    config.source = SearchConfig::Source::kGraph6Stream;
    if (o.input == "-") {
      catalog = find_generalized_sti(config, &in);
    } else {
      std::ifstream file(o.input);
      if (!file) throw UsageError("cannot open " + o.input);
      catalog = find_generalized_sti(config, &file);
    }
  } else {
    catalog = find_generalized_sti(config);
  }

  if (o.emit == "graph6") {
    for (const auto& [key, e] : catalog.entries) out << e.graph6 << "\n";
  } else if (o.emit == "table") {
    table_header(out);
    for (const auto& [key, e] : catalog.entries) {
      const Graph g = from_graph6(e.graph6);
      table_row(out, g, verdict_json(g));
    }
  } else {
    out << catalog_jsonl(catalog);
  }
  out.flush();
  if (!o.verify) return kExitOk;
  const auto report = verify_catalog(catalog, o.jobs);
  write_report(o, report, out);
  return report.clean() ? kExitOk : kExitWitness;
}

// Accepts catalog JSON lines or bare graph6 lines.
Catalog read_catalog(std::istream& in) {
  Catalog catalog;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      CatalogEntry e;
      if (line.front() == '{') {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("report")) continue;
        e = entry_from_json(j);
      } else {
        const Graph g = from_graph6(line);
        if (auto made = make_entry(g)) {
          e = std::move(*made);
        } else {
          e.graph6 = to_graph6(g);
          e.n = g.order();
          e.m = g.size();
        }
      }
      const std::string key = e.graph6;
      catalog.entries.emplace(key, std::move(e));
    } catch (const std::exception& ex) {
      throw ParseError(number, ex.what());
    }
  }
  return catalog;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  Catalog catalog;
  if (o.input.empty() || o.input == "-") {
    catalog = read_catalog(in);
  } else {
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot open " + o.input);
    catalog = read_catalog(file);
  }
  const auto report = verify_catalog(catalog, o.jobs);
  write_report(o, report, out);
  return report.clean() ? kExitOk : kExitWitness;
}

int cmd_trees(const Options& o, std::ostream& out) {
  if (o.min_n < 1 || o.max_n > kMaxTreeOrder || o.min_n > o.max_n) {
    throw UsageError("trees needs 1 <= min-n <= max-n <= " + std::to_string(kMaxTreeOrder));
  }
  bool clean = true;
  std::size_t total = 0;
  for (int n = o.min_n; n <= o.max_n; ++n) {
    const auto trees = enumerate_trees(n);
    std::size_t sti_trees = 0;
    std::vector<json> witnesses;
    for (const Graph& t : trees) {
      const auto v = check_tree(t);
      if (v.details["generalized_sti"].get<bool>()) ++sti_trees;
      if (!v.holds) witnesses.push_back(to_json(v, t));
    }
    clean = clean && witnesses.empty();
    total += trees.size();
    out << json{{"n", n}, {"trees", trees.size()}, {"generalized_sti", sti_trees},
                {"holds", witnesses.empty()}, {"witnesses", witnesses}}
               .dump()
        << "\n";
  }
  out << json{{"report", {{"min_n", o.min_n}, {"max_n", o.max_n}, {"trees", total}, {"clean", clean}}}}
             .dump()
      << "\n";
  return clean ? kExitOk : kExitWitness;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Transmission invariants and generalized STI graphs", "sti"};
  app.require_subcommand(1);

  const std::vector<std::string> emit_choices{"json", "graph6", "table"};
  const std::vector<std::string> family_emit_choices{"json", "verdict", "graph6", "table"};

  auto* analyze = app.add_subcommand("analyze", "Per-graph transmission verdicts");
  analyze->add_option("graphs", o.graphs, "graph6 literals or files");
  analyze->add_option("-i,--input", o.input, "graph6 file ('-' for stdin)");
  analyze->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember(emit_choices));

  auto* family = app.add_subcommand("family", "Build a family member");
  family->add_option("name", o.family, "Family name")->required();
  family->add_option("-p", o.p);
  family->add_option("-q", o.q);
  family->add_option("-r", o.r);
  family->add_option("-n", o.n);
  family->add_option("-m", o.m);
  family->add_option("--root", o.root, "Amalgamation root");
  family->add_option("--operand", o.operand, "Operand graph (graph6 or file)");
  family->add_option("--operand2", o.operand2, "Second product operand");
  family->add_option("--emit", o.emit, "graph6, json/verdict or table")
      ->check(CLI::IsMember(family_emit_choices));

  auto* product = app.add_subcommand("product", "Check the Cartesian product theorem");
  product->add_option("graphs", o.graphs, "Two graphs")->expected(2);
  product->add_option("--emit", o.emit, "json or graph6")->check(CLI::IsMember(emit_choices));

  auto* search = app.add_subcommand("search", "Catalogue generalized STI graphs");
  search->add_option("--max-n", o.max_n, "Largest order for built-in enumeration")
      ->check(CLI::Range(1, kMaxBuiltinOrder));
  search->add_flag("--bipartite-only", o.bipartite_only, "Only extend bipartite graphs");
  search->add_option("--k", o.k, "Keep only k-STI graphs");
  search->add_option("-j,--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  search->add_flag("--verify", o.verify, "Run theorem checks on the catalogue");
  search->add_option("-i,--input", o.input, "graph6 stream instead of built-in enumeration");
  search->add_option("--report", o.report, "Write the verification report here");
  search->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember(emit_choices));

  auto* verify = app.add_subcommand("verify", "Verify a catalogue (JSON lines or graph6)");
  verify->add_option("-i,--input", o.input, "Catalogue file ('-' for stdin)");
  verify->add_option("-j,--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--report", o.report, "Write the report here");

  auto* trees = app.add_subcommand("trees", "Exhaustive tree sweep");
  trees->add_option("--max-n", o.max_n, "Largest order");
  trees->add_option("--min-n", o.min_n, "Smallest order");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "sti: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, in, out);
    if (family->parsed()) return cmd_family(o, in, out, err);
    if (product->parsed()) return cmd_product(o, in, out);
    if (search->parsed()) return cmd_search(o, args, in, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (trees->parsed()) {
      if (trees->count("--max-n") == 0) o.max_n = 12;
      return cmd_trees(o, out);
    }
  } catch (const std::exception& e) {
    err << "sti: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace sti::cli
