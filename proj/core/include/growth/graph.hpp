#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace growth {

using Vertex = std::int32_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Packs an edge into a single 64-bit key for hashing.
inline std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted, so `has_edge` is a binary search and
/// iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, deduplicating edges. Throws GraphError on a self-loop or
  /// an endpoint outside 0..n-1.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_pairs(int n, std::span<const std::pair<int, int>> pairs);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  /// Subgraph induced by `keep`, relabelled 0..|keep|-1 in the given order.
  Graph induced(std::span<const Vertex> keep) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Hop distance between u and v, or kUnreachable.
int distance(const Graph& g, Vertex u, Vertex v);

/// Hop distances from `source` to every vertex (kUnreachable if none).
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Longest shortest path, in edges. Requires a connected graph.
int diameter(const Graph& g);

struct DegeneracyResult {
  std::vector<Vertex> ordering;  // removal order, min residual degree first
  int k = 0;
};

/// Repeated minimum-degree removal; ties go to the smallest identifier.
DegeneracyResult degeneracy_ordering(const Graph& g);

struct Coloring {
  std::vector<int> colors;  // colors[v] in 0..num_colors-1
  int num_colors = 0;

  std::vector<std::vector<Vertex>> classes() const;
};

/// Colors vertices in `order`, each with the smallest color unused by its
/// already-colored neighbors. Throws GraphError if `order` is not a
/// permutation of the vertices.
Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order);

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Edge-list text: "n m" header, then m lines "u v".
Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);
std::string emit_dot(const Graph& g);

// Family generators used across the library, tools and tests.
Graph path_graph(int n);
Graph star_graph(int n);  // center 0
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);
Graph petersen_graph();
/// Uniform labeled tree from a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace growth
