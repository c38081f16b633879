#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sti {

/// Vertex adjacency row. Bit j set means the vertex is adjacent to j.
using Row = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for out-of-range vertices, self-loops, non-edges and other
/// violated preconditions on graph arguments.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by distance-based operations when some pair of vertices is not
/// joined by a path.
class DisconnectedGraph : public GraphError {
 public:
  DisconnectedGraph() : GraphError("graph is disconnected") {}
};

/// Immutable simple undirected graph on vertices 0..n-1 with one 64-bit
/// adjacency row per vertex. Connectivity is not part of the type so that
/// intermediate graphs during enumeration can be represented.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  /// Builds a graph from an edge list; duplicate edges collapse.
  /// Throws GraphError on n outside [1, 64], out-of-range indices or loops.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds a graph from adjacency rows after checking symmetry,
  /// irreflexivity and that no bit points past n-1.
  static Graph from_rows(std::vector<Row> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;

  Row neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::span<const Row> rows() const { return rows_; }
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const;
  int min_degree() const;
  Row all_vertices() const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Returns the graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  /// Returns the graph with one extra vertex n adjacent to `nbrs`.
  Graph with_vertex(Row nbrs) const;

  /// Induced subgraph on the vertices of `keep`, in increasing index order.
  Graph induced(Row keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<Row> rows) : rows_(std::move(rows)) {}

  std::vector<Row> rows_;
};

inline constexpr Row bit(int v) { return Row{1} << v; }

inline Row low_mask(int n) { return n >= 64 ? ~Row{0} : (Row{1} << n) - 1; }

struct Bipartition {
  Row side_a = 0;  // contains vertex 0
  Row side_b = 0;
};

bool is_connected(const Graph& g);

/// The unique 2-colouring with vertex 0 on side A, or nullopt when the graph
/// has an odd cycle. Throws DisconnectedGraph.
std::optional<Bipartition> bipartition(const Graph& g);

/// Unordered pairs {u, v} with N(u) \ {v} == N(v) \ {u}. Adjacency between
/// u and v is ignored.
std::vector<Edge> twin_pairs(const Graph& g);

/// Bridges as (u < v) pairs, sorted. Throws DisconnectedGraph.
std::vector<Edge> bridges(const Graph& g);

/// Cut vertices, sorted. Throws DisconnectedGraph.
std::vector<int> articulation_points(const Graph& g);

bool is_two_edge_connected(const Graph& g);
bool is_two_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph& g);

/// All-pairs hop distances. Built only for connected graphs.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  int operator()(int u, int v) const {
    return d_[static_cast<std::size_t>(u * n_ + v)];
  }
  std::span<const int> row(int u) const {
    return std::span<const int>(d_).subspan(static_cast<std::size_t>(u * n_),
                                            static_cast<std::size_t>(n_));
  }

 private:
  int n_;
  std::vector<int> d_;
};

inline DistanceMatrix distance_matrix(const Graph& g) {
  return DistanceMatrix(g);
}

int eccentricity(const Graph& g, int u);
int diameter(const Graph& g);
int diameter(const DistanceMatrix& d);

/// Vertex (x, u) of the product is x * n(h) + u.
Graph cartesian_product(const Graph& g, const Graph& h);

/// graph6 text (no header, no trailing newline).
std::string to_graph6(const Graph& g);

class Graph6Error : public std::invalid_argument {
 public:
  enum class Kind { kMalformedHeader, kTrailingBits, kCharOutOfRange, kLength, kSparse6 };

  Graph6Error(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses one graph6 line. Accepts an optional ">>graph6<<" header, the
/// short and long order forms, and a trailing newline / CR.
Graph from_graph6(std::string_view text);

}  // namespace sti
