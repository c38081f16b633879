#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sti/graph.hpp"

namespace sti {

/// Largest order handled by the built-in connected-graph generator.
inline constexpr int kMaxBuiltinOrder = 9;
/// Largest order handled by the free-tree generator.
inline constexpr int kMaxTreeOrder = 16;

/// One representative per isomorphism class of connected graphs on n
/// vertices, by canonical vertex augmentation. With bipartite_only, graphs
/// with an odd cycle are never extended or emitted. Output order is fixed
/// and independent of `jobs`.
std::vector<Graph> enumerate_connected(int n, bool bipartite_only = false, int jobs = 1);

/// Levels 1..max_n of enumerate_connected, index i holding order i + 1.
std::vector<std::vector<Graph>> enumerate_connected_levels(int max_n, bool bipartite_only = false,
                                                           int jobs = 1);

/// One representative per free tree on n vertices.
std::vector<Graph> enumerate_trees(int n);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Calls sink on every graph6 line of `in`; blank lines are skipped.
/// Throws ParseError naming the 1-based line of the first bad record.
void for_each_graph6(std::istream& in, const std::function<void(Graph)>& sink);
std::vector<Graph> ingest_graph6(std::istream& in);

struct SearchConfig {
  enum class Source { kBuiltin, kGraph6Stream };

  int max_n = 7;
  bool bipartite_only = false;
  std::optional<std::int64_t> k_filter;
  Source source = Source::kBuiltin;
  int jobs = 1;
  std::string command_line;  // provenance only
};

struct CatalogEntry {
  std::string graph6;  // canonical
  int n = 0;
  int m = 0;
  std::int64_t k = 0;
  std::optional<int> girth;
  int diameter = 0;
  int min_degree = 0;
  bool two_connected = false;
  bool two_edge_connected = false;
};

/// Generalized STI graphs keyed by canonical graph6.
struct Catalog {
  std::map<std::string, CatalogEntry> entries;
  nlohmann::ordered_json provenance = nlohmann::ordered_json::object();
};

/// Entry for g when it is connected and generalized STI.
std::optional<CatalogEntry> make_entry(const Graph& g);

/// Adds g to the catalog when it is generalized STI (and matches k_filter);
/// isomorphic duplicates collapse onto one key.
void add_if_sti(Catalog& catalog, const Graph& g, std::optional<std::int64_t> k_filter = {});

/// Built-in source enumerates connected graphs of order 1..max_n; stream
/// source reads graph6 from `stream`.
Catalog find_generalized_sti(const SearchConfig& config, std::istream* stream = nullptr);

nlohmann::ordered_json entry_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const nlohmann::json& j);

/// Sorted JSON lines, one per entry.
std::string catalog_jsonl(const Catalog& catalog);

struct TheoremTally {
  std::size_t applicable = 0;
  std::size_t held = 0;
  std::size_t inapplicable = 0;
};

struct VerificationReport {
  std::size_t entries = 0;
  std::map<std::string, TheoremTally> tallies;
  std::size_t order_bound_equalities = 0;
  std::size_t acyclic_one_sti = 0;
  std::size_t with_twin_pairs = 0;  // non-adjacent twins, allowed
  std::vector<nlohmann::ordered_json> witnesses;

  bool clean() const { return witnesses.empty(); }
  nlohmann::ordered_json to_json() const;
};

/// Runs the base, order-bound, diameter and girth-conjecture checks on every
/// entry. Entries that do not decode to a generalized STI graph with the
/// recorded k are reported as witnesses too. Never throws on violations.
VerificationReport verify_catalog(const Catalog& catalog, int jobs = 1);

struct GirthBuckets {
  std::map<int, std::size_t> by_girth;
  std::size_t acyclic = 0;
};

/// Per-k girth counts.
std::map<std::int64_t, GirthBuckets> girth_histogram(const Catalog& catalog);

}  // namespace sti
