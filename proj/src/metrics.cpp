#include "sti/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace sti {
namespace {

void require_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.u >= g.order() || e.v < 0 || e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw GraphError("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not an edge");
  }
}

std::vector<std::int64_t> sorted_values(const TransmissionProfile& t) {
  std::vector<std::int64_t> v(t.tr);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::int64_t TransmissionProfile::wiener_index() const {
  return std::accumulate(tr.begin(), tr.end(), std::int64_t{0}) / 2;
}

TransmissionProfile transmissions(const DistanceMatrix& d) {
  TransmissionProfile t;
  t.tr.reserve(static_cast<std::size_t>(d.order()));
  for (int u = 0; u < d.order(); ++u) {
    const auto row = d.row(u);
    t.tr.push_back(std::accumulate(row.begin(), row.end(), std::int64_t{0}));
  }
  return t;
}

TransmissionProfile transmissions(const Graph& g) { return transmissions(DistanceMatrix(g)); }

EdgeSideCounts edge_side_counts(const Graph& g, const DistanceMatrix& d, Edge e) {
  require_edge(g, e);
  EdgeSideCounts out{e, 0, 0, 0};
  const auto du = d.row(e.u);
  const auto dv = d.row(e.v);
  for (std::size_t x = 0; x < du.size(); ++x) {
    if (du[x] < dv[x]) {
      ++out.n_u;
    } else if (dv[x] < du[x]) {
      ++out.n_v;
    } else {
      ++out.ties;
    }
  }
  return out;
}

EdgeSideCounts edge_side_counts(const Graph& g, Edge e) {
  require_edge(g, e);
  return edge_side_counts(g, DistanceMatrix(g), e);
}

std::int64_t imbalance(const Graph& g, Edge e) {
  require_edge(g, e);
  const auto t = transmissions(g);
  const auto diff = t.tr[static_cast<std::size_t>(e.u)] - t.tr[static_cast<std::size_t>(e.v)];
  return diff < 0 ? -diff : diff;
}

std::int64_t entringer_residual(const Graph& g, Edge e) {
  require_edge(g, e);
  if (!bipartition(g)) throw GraphError("entringer_residual: graph is not bipartite");
  const DistanceMatrix d(g);
  const auto t = transmissions(d);
  const auto sides = edge_side_counts(g, d, e);
  const auto tr_diff = t.tr[static_cast<std::size_t>(e.u)] - t.tr[static_cast<std::size_t>(e.v)];
  return tr_diff - (static_cast<std::int64_t>(sides.n_v) - sides.n_u);
}

StiVerdict classify(const Graph& g, const TransmissionProfile& t) {
  StiVerdict v;
  for (const Edge& e : g.edges()) {
    const auto diff = t.tr[static_cast<std::size_t>(e.u)] - t.tr[static_cast<std::size_t>(e.v)];
    v.imbalances.push_back(diff < 0 ? -diff : diff);
  }
  std::sort(v.imbalances.begin(), v.imbalances.end());
  v.imbalances.erase(std::unique(v.imbalances.begin(), v.imbalances.end()), v.imbalances.end());
  if (v.imbalances.size() == 1) v.k = v.imbalances.front();
  v.generalized_sti = v.k.has_value() && *v.k >= 1;
  v.transmission_regular = v.imbalances.empty() || (v.k.has_value() && *v.k == 0);
  return v;
}

StiVerdict classify(const Graph& g) { return classify(g, transmissions(g)); }

bool is_transmission_regular(const Graph& g) {
  const auto t = transmissions(g);
  return std::adjacent_find(t.tr.begin(), t.tr.end(), std::not_equal_to<>()) == t.tr.end();
}

bool is_transmission_irregular(const Graph& g) {
  const auto v = sorted_values(transmissions(g));
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_interval_transmission_irregular(const Graph& g) {
  const auto v = sorted_values(transmissions(g));
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != v[i - 1] + 1) return false;
  }
  return true;
}

nlohmann::ordered_json verdict_json(const Graph& g) {
  const DistanceMatrix d(g);
  const auto verdict = classify(g, transmissions(d));
  const auto g_len = girth(g);
  nlohmann::ordered_json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["imbalances"] = verdict.imbalances;
  j["k"] = verdict.k ? nlohmann::ordered_json(*verdict.k) : nlohmann::ordered_json(nullptr);
  j["generalized_sti"] = verdict.generalized_sti;
  j["transmission_regular"] = verdict.transmission_regular;
  j["bipartite"] = bipartition(g).has_value();
  j["twin_free"] = twin_pairs(g).empty();
  j["girth"] = g_len ? nlohmann::ordered_json(*g_len) : nlohmann::ordered_json(nullptr);
  j["diameter"] = diameter(d);
  return j;
}

}  // namespace sti
