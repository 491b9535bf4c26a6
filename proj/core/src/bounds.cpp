#include "growth/bounds.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "growth/zero_excess.hpp"

namespace growth {

namespace {

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  return adj;
}

int exact_clique(const Graph& g) {
  const auto adj = masks(g);
  int best = 0;
  std::function<void(int, std::uint32_t)> grow = [&](int size, std::uint32_t cand) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    while (cand != 0) {
      if (size + std::popcount(cand) <= best) return;
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      grow(size + 1, cand & adj[v]);
    }
  };
  const int n = g.num_vertices();
  grow(0, n == 32 ? ~0u : (1u << n) - 1);
  return best;
}

int greedy_clique(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int best = n > 0 ? 1 : 0;
  for (Vertex seed : order) {
    if (g.degree(seed) + 1 <= best) break;
    std::vector<Vertex> clique{seed};
    std::vector<Vertex> nbrs(g.neighbors(seed).begin(), g.neighbors(seed).end());
    std::stable_sort(nbrs.begin(), nbrs.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex w : nbrs)
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return g.has_edge(c, w); }))
        clique.push_back(w);
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

bool colorable(const Graph& g, int k) {
  const int n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(n, -1);
  std::function<bool(int, int)> place = [&](int i, int used) -> bool {
    if (i == n) return true;
    const Vertex v = order[i];
    // A fresh color is only tried once (symmetry breaking).
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool free = true;
      for (Vertex w : g.neighbors(v))
        if (color[w] == c) free = false;
      if (!free) continue;
      color[v] = c;
      if (place(i + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return place(0, 0);
}

}  // namespace

CliqueResult clique_number(const Graph& g, int cap) {
  if (g.num_vertices() <= std::min(cap, 32)) return {exact_clique(g), true};
  return {greedy_clique(g), false};
}

ChromaticResult chromatic_number(const Graph& g, int cap) {
  const CliqueResult omega = clique_number(g);
  if (g.num_vertices() > cap) return {omega.value, false};
  int k = omega.value;
  while (!colorable(g, k)) ++k;
  return {k, true};
}

SlotBound slot_lower_bound_details(const Graph& target, int d) {
  if (d < 1) throw GraphError("edge-activation distance must be at least 1");
  if (target.num_vertices() < 1 || !is_connected(target))
    throw GraphError("target graph must be connected and non-empty");
  SlotBound b;
  b.log_term = ceil_log2(target.num_vertices());
  if (d == 1) {
    b.diameter_term = (diameter(target) + 2) / 2;
    b.degree_term = target.max_degree();
    b.value = std::max({b.log_term, b.diameter_term, b.degree_term});
    if (target.num_vertices() == 1) b.value = 0;
    return b;
  }
  const CliqueResult omega = clique_number(target);
  const ChromaticResult chi = chromatic_number(target);
  b.clique_term = omega.value - 1;
  b.chromatic_term = chi.value - 1;
  b.exact = omega.exact && chi.exact;
  b.value = std::max({b.log_term, b.clique_term, b.chromatic_term});
  return b;
}

int slot_lower_bound(const Graph& target, int d) { return slot_lower_bound_details(target, d).value; }

Graph binomial_tree(int delta) {
  if (delta < 0 || delta > 30) throw GraphError("binomial tree level count out of range");
  const int n = 1 << delta;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - std::bit_floor(static_cast<unsigned>(v)), v);
  return Graph::from_edges(n, edges);
}

int edge_difference(const Graph& target, const std::vector<Vertex>& bijection) {
  const int n = target.num_vertices();
  if (static_cast<int>(bijection.size()) != n || !std::has_single_bit(static_cast<unsigned>(n)))
    throw GraphError("bijection size must equal a power-of-two vertex count");
  int missing = 0;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex p = v - static_cast<Vertex>(std::bit_floor(static_cast<unsigned>(v)));
    if (!target.has_edge(bijection[p], bijection[v])) ++missing;
  }
  return missing;
}

EdgeDifferenceResult min_edge_difference(const Graph& target, int restarts, std::uint64_t seed) {
  const int n = target.num_vertices();
  if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw UnsupportedSize("UNSUPPORTED_SIZE: edge difference needs a power-of-two vertex count, got " +
                          std::to_string(n));
  auto parent = [](Vertex v) { return v - static_cast<Vertex>(std::bit_floor(static_cast<unsigned>(v))); };

  EdgeDifferenceResult out;
  if (n <= kExactEdgeDifferenceCap) {
    out.value = n;  // above any real cost
    std::vector<Vertex> image(n, -1);
    std::vector<char> used(n, 0);
    std::function<void(int, int)> place = [&](Vertex v, int cost) {
      if (cost >= out.value) return;
      if (v == n) {
        out.value = cost;
        out.witness = image;
        return;
      }
      for (Vertex x = 0; x < n; ++x) {
        if (used[x]) continue;
        used[x] = 1;
        image[v] = x;
        place(v + 1, cost + (v > 0 && !target.has_edge(image[parent(v)], x)));
        used[x] = 0;
      }
    };
    place(0, 0);
    out.exact = true;
    return out;
  }

  // Local search over pair swaps. Tree neighbors of each binomial vertex.
  std::vector<std::vector<Vertex>> tree(n);
  for (Vertex v = 1; v < n; ++v) {
    tree[v].push_back(parent(v));
    tree[parent(v)].push_back(v);
  }
  auto local_cost = [&](const std::vector<Vertex>& img, Vertex x, Vertex y) {
    int c = 0;
    for (Vertex z : tree[x]) c += !target.has_edge(img[x], img[z]);
    for (Vertex z : tree[y])
      if (z != x) c += !target.has_edge(img[y], img[z]);
    return c;
  };
  std::mt19937_64 rng(seed);
  out.exact = false;
  out.value = n;
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    std::vector<Vertex> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    int cost = edge_difference(target, img);
    for (;;) {
      int best_gain = 0;
      Vertex bx = -1, by = -1;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
          const int before = local_cost(img, x, y);
          std::swap(img[x], img[y]);
          const int gain = before - local_cost(img, x, y);
          std::swap(img[x], img[y]);
          if (gain > best_gain) {
            best_gain = gain;
            bx = x;
            by = y;
          }
        }
      if (bx < 0) break;
      std::swap(img[bx], img[by]);
      cost -= best_gain;
    }
    if (cost < out.value) {
      out.value = cost;
      out.witness = img;
    }
  }
  return out;
}

Graph g_full(int delta) {
  if (delta < 0 || delta > 20) throw GraphError("g_full level count out of range");
  const int n = 1 << delta;
  std::vector<std::set<Vertex>> adj(n);
  int existing = 1;
  for (int t = 1; t <= delta; ++t) {
    std::vector<std::pair<Vertex, Vertex>> added;
    for (Vertex u = 0; u < existing; ++u) {
      const Vertex child = u + existing;
      added.emplace_back(child, u);
      for (Vertex w : adj[u]) added.emplace_back(child, w);
    }
    for (auto [a, b] : added) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
    existing *= 2;
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : adj[v])
      if (v < w) edges.emplace_back(v, w);
  return Graph::from_edges(n, edges);
}

std::uint64_t g_full_degree_sum(int delta) {
  std::uint64_t f = 0, x = 1;
  for (int t = 1; t <= delta; ++t) {
    f = t == 1 ? 2 : 3 * f + 2 * x;
    x *= 2;
  }
  return f;
}

Graph g_bipart(int delta) {
  if (delta < 1) throw GraphError("g_bipart needs delta >= 1");
  const Graph base = g_full(delta - 1);
  const int half = base.num_vertices();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < half; ++i) edges.emplace_back(i, half + i);
  for (const Edge& e : base.edges()) {
    edges.emplace_back(e.u, half + e.v);
    edges.emplace_back(e.v, half + e.u);
  }
  return Graph::from_edges(2 * half, edges);
}

Graph hardness_gadget(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex a = n; a < 2 * n; ++a) {
    for (Vertex b = a + 1; b < 2 * n; ++b) edges.emplace_back(a, b);
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, a);
  }
  return Graph::from_edges(2 * n, edges);
}

}  // namespace growth
