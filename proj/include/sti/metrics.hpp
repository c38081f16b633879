#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "sti/graph.hpp"

namespace sti {

/// tr[u] = sum of distances from u to every vertex.
struct TransmissionProfile {
  std::vector<std::int64_t> tr;

  /// Half the transmission sum.
  std::int64_t wiener_index() const;
};

struct EdgeSideCounts {
  Edge edge;
  int n_u = 0;  // strictly closer to edge.u
  int n_v = 0;  // strictly closer to edge.v
  int ties = 0;
};

struct StiVerdict {
  std::vector<std::int64_t> imbalances;  // sorted, distinct
  std::optional<std::int64_t> k;         // set iff imbalances is a singleton
  bool generalized_sti = false;          // imbalances == {k}, k >= 1
  bool transmission_regular = false;     // imbalances within {0}
};

TransmissionProfile transmissions(const Graph& g);
TransmissionProfile transmissions(const DistanceMatrix& d);

/// Throws GraphError when e is not an edge of g.
EdgeSideCounts edge_side_counts(const Graph& g, Edge e);
EdgeSideCounts edge_side_counts(const Graph& g, const DistanceMatrix& d, Edge e);

std::int64_t imbalance(const Graph& g, Edge e);

/// (Tr(u) - Tr(v)) - (n_v - n_u). Zero on every edge of a bipartite graph.
/// Throws GraphError on non-bipartite input.
std::int64_t entringer_residual(const Graph& g, Edge e);

/// Edge imbalance set and the k-STI verdict. A single vertex gives the
/// vacuous verdict (no edges, transmission regular, not generalized STI).
StiVerdict classify(const Graph& g);
StiVerdict classify(const Graph& g, const TransmissionProfile& t);

bool is_transmission_regular(const Graph& g);
bool is_transmission_irregular(const Graph& g);
bool is_interval_transmission_irregular(const Graph& g);

/// Full per-graph record: {n, m, imbalances, k, generalized_sti,
/// transmission_regular, bipartite, twin_free, girth, diameter}.
nlohmann::ordered_json verdict_json(const Graph& g);

}  // namespace sti
