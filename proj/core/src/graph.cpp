#include "growth/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace growth {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has endpoint out of range 0.." +
                       std::to_string(n - 1));
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.adj_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  return g;
}

Graph Graph::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return from_edges(n, edges);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adj_) best = std::max(best, static_cast<int>(row.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& row = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  Vertex other = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(row.begin(), row.end(), other);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  return from_edges(static_cast<int>(keep.size()), edges);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw GraphError("vertex out of range");
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 &&
         g.num_edges() == static_cast<std::size_t>(g.num_vertices() - 1) && is_connected(g);
}

int distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) {
    throw GraphError("distance query on vertex out of range");
  }
  return bfs_distances(g, u)[v];
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d == kUnreachable) throw GraphError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> residual(n);
  std::set<std::pair<int, Vertex>> heap;
  for (Vertex v = 0; v < n; ++v) {
    residual[v] = g.degree(v);
    heap.emplace(residual[v], v);
  }
  std::vector<char> removed(n, 0);
  DegeneracyResult out;
  out.ordering.reserve(n);
  while (!heap.empty()) {
    auto [deg, v] = *heap.begin();
    heap.erase(heap.begin());
    removed[v] = 1;
    out.ordering.push_back(v);
    out.k = std::max(out.k, deg);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      heap.erase({residual[w], w});
      --residual[w];
      heap.emplace(residual[w], w);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(num_colors);
  for (std::size_t v = 0; v < colors.size(); ++v) out[colors[v]].push_back(static_cast<Vertex>(v));
  return out;
}

Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) {
    throw GraphError("coloring order is not a permutation of the vertices");
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (!g.contains(v) || seen[v]) {
      throw GraphError("coloring order is not a permutation of the vertices");
    }
    seen[v] = 1;
  }
  Coloring c;
  c.colors.assign(n, -1);
  std::vector<int> mark(n + 1, -1);
  for (Vertex v : order) {
    for (Vertex w : g.neighbors(v)) {
      if (c.colors[w] >= 0) mark[c.colors[w]] = v;
    }
    int color = 0;
    while (mark[color] == v) ++color;
    c.colors[v] = color;
    c.num_colors = std::max(c.num_colors, color + 1);
  }
  return c;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.num_vertices()) return false;
  for (int color : c.colors) {
    if (color < 0 || color >= c.num_colors) return false;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return c.colors[e.u] != c.colors[e.v]; });
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw GraphError("line " + std::to_string(line) + ": " + what);
}

bool read_exact_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  if (!(in >> a >> b)) return false;
  std::string rest;
  return !(in >> rest);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) parse_fail(line_no + 1, "missing \"n m\" header");
  long long n = 0, m = 0;
  if (!read_exact_ints(line, n, m) || n < 0 || m < 0) {
    parse_fail(line_no, "malformed header, expected \"n m\"");
  }
  if (n > (1LL << 26)) parse_fail(line_no, "vertex count too large");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min(m, 1LL << 20)));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) parse_fail(line_no + 1, "expected " + std::to_string(m) + " edge lines");
    long long a = 0, b = 0;
    if (!read_exact_ints(line, a, b)) parse_fail(line_no, "malformed edge line");
    if (a < 0 || b < 0 || a >= n || b >= n) parse_fail(line_no, "endpoint out of range");
    if (a == b) parse_fail(line_no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (next_line(line)) parse_fail(line_no, "trailing content after edge list");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string emit_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph grid_graph(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n <= 1) return Graph::from_edges(std::max(n, 0), {});
  if (n == 2) {
    Edge e(0, 1);
    return Graph::from_edges(2, std::span<const Edge>(&e, 1));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : prufer) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

}  // namespace growth
