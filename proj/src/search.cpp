#include "sti/search.hpp"

#include <algorithm>
#include <bit>
#include <string_view>

#include "sti/canonical.hpp"
#include "sti/metrics.hpp"
#include "sti/parallel.hpp"
#include "sti/theorems.hpp"

namespace sti {
namespace {

using json = nlohmann::ordered_json;

Row image(Row set, const std::vector<int>& gamma) {
  Row out = 0;
  for (Row r = set; r != 0; r &= r - 1) {
    out |= bit(gamma[static_cast<std::size_t>(std::countr_zero(r))]);
  }
  return out;
}

bool orbit_minimal(Row set, const std::vector<std::vector<int>>& group) {
  return std::all_of(group.begin(), group.end(),
                     [&](const std::vector<int>& gamma) { return image(set, gamma) >= set; });
}

// The canonical deletion of a connected graph is the orbit of the non-cut
// vertex of maximum degree with the largest canonical label. The child is
// kept iff its newest vertex lies in that orbit.
bool newest_is_canonical(const Graph& child) {
  const int n = child.order();
  const int newest = n - 1;
  if (n <= 2) return true;
  Row cuts = 0;
  for (int v : articulation_points(child)) cuts |= bit(v);
  const Row non_cut = child.all_vertices() & ~cuts;
  if ((non_cut & bit(newest)) == 0) return false;

  int best_degree = 0;
  for (Row r = non_cut; r != 0; r &= r - 1) best_degree = std::max(best_degree, child.degree(std::countr_zero(r)));
  if (child.degree(newest) != best_degree) return false;
  Row candidates = 0;
  for (Row r = non_cut; r != 0; r &= r - 1) {
    const int v = std::countr_zero(r);
    if (child.degree(v) == best_degree) candidates |= bit(v);
  }
  if (candidates == bit(newest)) return true;

  const auto label = canonical_labeling(child);
  int chosen = -1;
  for (Row r = candidates; r != 0; r &= r - 1) {
    const int v = std::countr_zero(r);
    if (chosen < 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(chosen)]) chosen = v;
  }
  if (chosen == newest) return true;

  std::vector<int> mark_newest(static_cast<std::size_t>(n), 1);
  std::vector<int> mark_chosen(static_cast<std::size_t>(n), 1);
  mark_newest[static_cast<std::size_t>(newest)] = 0;
  mark_chosen[static_cast<std::size_t>(chosen)] = 0;
  return canonical_graph(child, mark_newest) == canonical_graph(child, mark_chosen);
}

std::vector<Graph> children_of(const Graph& parent, bool bipartite_only) {
  const int m = parent.order();
  const auto group = automorphism_group(parent);
  Row side_a = 0;
  Row side_b = 0;
  if (bipartite_only) {
    const auto parts = bipartition(parent);
    if (!parts) return {};
    side_a = parts->side_a;
    side_b = parts->side_b;
  }
  std::vector<Graph> out;
  for (Row set = 1; set <= low_mask(m); ++set) {
    if (bipartite_only && (set & side_a) != 0 && (set & side_b) != 0) continue;
    if (!orbit_minimal(set, group)) continue;
    Graph child = parent.with_vertex(set);
    if (newest_is_canonical(child)) out.push_back(std::move(child));
  }
  return out;
}

std::vector<Graph> next_level(const std::vector<Graph>& parents, bool bipartite_only, int jobs) {
  std::vector<std::vector<Graph>> per_parent(parents.size());
  parallel_for(parents.size(), jobs, [&](std::size_t i) {
    per_parent[i] = children_of(parents[i], bipartite_only);
  });
  std::vector<Graph> out;
  for (auto& batch : per_parent) {
    for (auto& g : batch) out.push_back(std::move(g));
  }
  return out;
}

// Rooted-tree code: "(" + sorted child codes + ")".
std::string rooted_code(const std::vector<int>& level, std::size_t root, std::size_t end) {
  std::vector<std::string> children;
  std::size_t i = root + 1;
  while (i < end) {
    std::size_t j = i + 1;
    while (j < end && level[j] > level[i]) ++j;
    children.push_back(rooted_code(level, i, j));
    i = j;
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

Graph tree_from_levels(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<int> last_at(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    const auto l = static_cast<std::size_t>(level[static_cast<std::size_t>(i)]);
    edges.push_back({last_at[l - 1], i});
    last_at[l] = i;
  }
  return Graph(n, edges);
}

// Keeps the level sequence only when it is rooted at a centre and, for
// bicentral trees, the root's half has the larger code.
bool is_free_representative(const std::vector<int>& level, const Graph& tree) {
  const int n = tree.order();
  if (n <= 2) return true;
  const DistanceMatrix d(tree);
  std::vector<int> ecc(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto row = d.row(v);
    ecc[static_cast<std::size_t>(v)] = *std::max_element(row.begin(), row.end());
  }
  const int radius = *std::min_element(ecc.begin(), ecc.end());
  if (ecc[0] != radius) return false;
  int other = -1;
  for (int v = 1; v < n; ++v) {
    if (ecc[static_cast<std::size_t>(v)] == radius) other = v;
  }
  if (other < 0) return true;
  // The second centre is a child of the root; its subtree is contiguous.
  const auto start = static_cast<std::size_t>(other);
  std::size_t end = start + 1;
  while (end < level.size() && level[end] > level[start]) ++end;
  const std::string other_half = rooted_code(level, start, end);
  std::vector<int> rest(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(start));
  rest.insert(rest.end(), level.begin() + static_cast<std::ptrdiff_t>(end), level.end());
  const std::string root_half = rooted_code(rest, 0, rest.size());
  return root_half >= other_half;
}

}  // namespace

std::vector<std::vector<Graph>> enumerate_connected_levels(int max_n, bool bipartite_only, int jobs) {
  if (max_n < 1 || max_n > kMaxBuiltinOrder) {
    throw GraphError("built-in enumeration supports 1 <= n <= " + std::to_string(kMaxBuiltinOrder));
  }
  std::vector<std::vector<Graph>> levels;
  levels.push_back({Graph(1, {})});
  for (int n = 2; n <= max_n; ++n) {
    levels.push_back(next_level(levels.back(), bipartite_only, jobs));
  }
  return levels;
}

std::vector<Graph> enumerate_connected(int n, bool bipartite_only, int jobs) {
  auto levels = enumerate_connected_levels(n, bipartite_only, jobs);
  return std::move(levels.back());
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > kMaxTreeOrder) {
    throw GraphError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder));
  }
  // Rooted trees as canonical level sequences, tallest first; each step
  // produces the next smaller sequence.
  std::vector<int> level(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) level[static_cast<std::size_t>(i)] = i;
  std::vector<Graph> out;
  while (true) {
    Graph tree = tree_from_levels(level);
    if (is_free_representative(level, tree)) out.push_back(std::move(tree));
    int p = n - 1;
    while (p > 0 && level[static_cast<std::size_t>(p)] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[static_cast<std::size_t>(q)] != level[static_cast<std::size_t>(p)] - 1) --q;
    for (int i = p; i < n; ++i) {
      level[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i - (p - q))];
    }
  }
  return out;
}

void for_each_graph6(std::istream& in, const std::function<void(Graph)>& sink) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      sink(from_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw ParseError(number, e.what());
    }
  }
}

std::vector<Graph> ingest_graph6(std::istream& in) {
  std::vector<Graph> out;
  for_each_graph6(in, [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

std::optional<CatalogEntry> make_entry(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  const DistanceMatrix d(g);
  const auto sti = classify(g, transmissions(d));
  if (!sti.generalized_sti) return std::nullopt;
  CatalogEntry e;
  e.graph6 = to_graph6(canonical_graph(g));
  e.n = g.order();
  e.m = g.size();
  e.k = *sti.k;
  e.girth = girth(g);
  e.diameter = diameter(d);
  e.min_degree = g.min_degree();
  e.two_connected = is_two_connected(g);
  e.two_edge_connected = is_two_edge_connected(g);
  return e;
}

void add_if_sti(Catalog& catalog, const Graph& g, std::optional<std::int64_t> k_filter) {
  auto entry = make_entry(g);
  if (!entry || (k_filter && entry->k != *k_filter)) return;
  const std::string key = entry->graph6;
  catalog.entries.emplace(key, std::move(*entry));
}

Catalog find_generalized_sti(const SearchConfig& config, std::istream* stream) {
  Catalog catalog;
  auto& prov = catalog.provenance;
  prov["source"] = config.source == SearchConfig::Source::kBuiltin ? "builtin" : "graph6";
  if (config.source == SearchConfig::Source::kBuiltin) prov["max_n"] = config.max_n;
  prov["bipartite_only"] = config.bipartite_only;
  prov["k"] = config.k_filter ? json(*config.k_filter) : json(nullptr);
  if (!config.command_line.empty()) prov["command_line"] = config.command_line;

  std::vector<Graph> graphs;
  if (config.source == SearchConfig::Source::kBuiltin) {
    for (auto& level : enumerate_connected_levels(config.max_n, config.bipartite_only, config.jobs)) {
      for (auto& g : level) graphs.push_back(std::move(g));
    }
  } else {
    if (stream == nullptr) throw std::invalid_argument("graph6 source needs an input stream");
    graphs = ingest_graph6(*stream);
  }

  std::vector<std::optional<CatalogEntry>> found(graphs.size());
  parallel_for(graphs.size(), config.jobs, [&](std::size_t i) {
    if (config.bipartite_only && (!is_connected(graphs[i]) || !bipartition(graphs[i]))) return;
    found[i] = make_entry(graphs[i]);
  });
  for (auto& entry : found) {
    if (!entry || (config.k_filter && entry->k != *config.k_filter)) continue;
    const std::string key = entry->graph6;
    catalog.entries.emplace(key, std::move(*entry));
  }
  return catalog;
}

nlohmann::ordered_json entry_json(const CatalogEntry& e) {
  json j;
  j["graph6"] = e.graph6;
  j["n"] = e.n;
  j["m"] = e.m;
  j["k"] = e.k;
  j["girth"] = e.girth ? json(*e.girth) : json(nullptr);
  j["diameter"] = e.diameter;
  j["min_degree"] = e.min_degree;
  j["two_connected"] = e.two_connected;
  j["two_edge_connected"] = e.two_edge_connected;
  return j;
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.graph6 = j.at("graph6").get<std::string>();
  e.n = j.value("n", 0);
  e.m = j.value("m", 0);
  e.k = j.value("k", std::int64_t{0});
  if (j.contains("girth") && !j.at("girth").is_null()) e.girth = j.at("girth").get<int>();
  e.diameter = j.value("diameter", 0);
  e.min_degree = j.value("min_degree", 0);
  e.two_connected = j.value("two_connected", false);
  e.two_edge_connected = j.value("two_edge_connected", false);
  return e;
}

std::string catalog_jsonl(const Catalog& catalog) {
  std::string out;
  for (const auto& [key, entry] : catalog.entries) {
    out += entry_json(entry).dump();
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  json j;
  j["entries"] = entries;
  j["clean"] = clean();
  json theorems = json::object();
  for (const auto& [id, t] : tallies) {
    theorems[id] = {{"applicable", t.applicable}, {"held", t.held}, {"inapplicable", t.inapplicable}};
  }
  j["theorems"] = theorems;
  j["order_bound_equalities"] = order_bound_equalities;
  j["acyclic_one_sti"] = acyclic_one_sti;
  j["with_twin_pairs"] = with_twin_pairs;
  j["witness_count"] = witnesses.size();
  j["witnesses"] = witnesses;
  return j;
}

VerificationReport verify_catalog(const Catalog& catalog, int jobs) {
  std::vector<const CatalogEntry*> entries;
  for (const auto& [key, entry] : catalog.entries) entries.push_back(&entry);

  struct Outcome {
    std::optional<Graph> graph;
    std::optional<json> entry_problem;
    std::vector<TheoremVerdict> verdicts;
  };
  std::vector<Outcome> outcomes(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i) {
    const CatalogEntry& e = *entries[i];
    Outcome& out = outcomes[i];
    auto problem = [&](const std::string& why) {
      out.entry_problem = json{{"theorem_id", "catalog_entry"}, {"graph6", e.graph6},
                               {"holds", false}, {"applicable", true},
                               {"witness", why}, {"details", json::object()}};
    };
    try {
      out.graph = from_graph6(e.graph6);
    } catch (const std::exception& ex) {
      problem(std::string("undecodable graph6: ") + ex.what());
      return;
    }
    const Graph& g = *out.graph;
    if (!is_connected(g)) {
      problem("entry is disconnected");
      return;
    }
    const auto sti = classify(g);
    if (!sti.generalized_sti) {
      problem("entry is not generalized STI");
    } else if (*sti.k != e.k) {
      problem("entry records k = " + std::to_string(e.k) + " but graph is " +
              std::to_string(*sti.k) + "-STI");
    }
    if (!sti.generalized_sti) return;
    out.verdicts.push_back(check_base(g));
    out.verdicts.push_back(check_order_bound(g));
    out.verdicts.push_back(check_diameter(g));
    out.verdicts.push_back(check_girth_conjecture(g));
  });

  VerificationReport report;
  report.entries = entries.size();
  for (const char* id : {"base", "order_bound", "diameter", "girth_conjecture"}) report.tallies[id];
  for (const Outcome& out : outcomes) {
    if (out.entry_problem) report.witnesses.push_back(*out.entry_problem);
    for (const TheoremVerdict& v : out.verdicts) {
      auto& tally = report.tallies[v.theorem_id];
      if (!v.applicable) {
        ++tally.inapplicable;
        continue;
      }
      ++tally.applicable;
      if (v.holds) ++tally.held;
      if (!v.holds) report.witnesses.push_back(to_json(v, *out.graph));
      if (v.theorem_id == "order_bound" && v.details.value("equality", false)) {
        ++report.order_bound_equalities;
      }
      if (v.theorem_id == "base" && v.details.value("twin_pairs", 0) > 0) ++report.with_twin_pairs;
      if (v.theorem_id == "girth_conjecture" && v.details.value("acyclic_exception", false)) {
        ++report.acyclic_one_sti;
      }
    }
  }
  return report;
}

std::map<std::int64_t, GirthBuckets> girth_histogram(const Catalog& catalog) {
  std::map<std::int64_t, GirthBuckets> out;
  for (const auto& [key, e] : catalog.entries) {
    auto& bucket = out[e.k];
    if (e.girth) {
      ++bucket.by_girth[*e.girth];
    } else {
      ++bucket.acyclic;
    }
  }
  return out;
}

}  // namespace sti
