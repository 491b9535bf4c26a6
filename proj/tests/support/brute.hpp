#pragma once

// Independent brute-force references used as test oracles. Deliberately
// naive: none of this shares code with the library under test.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "growth/graph.hpp"
#include "growth/kernels.hpp"

namespace brute {

using growth::Graph;
using growth::Vertex;

/// Largest matching by exhaustive recursion on the smallest free vertex.
inline int max_matching_size(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> used(n, 0);
  std::function<int(int)> go = [&](int v) -> int {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = 1;
    int best = go(v + 1);  // leave v unmatched
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      best = std::max(best, 1 + go(v + 1));
      used[w] = 0;
    }
    used[v] = 0;
    return best;
  };
  return go(0);
}

/// Truth-table satisfiability.
inline bool satisfiable(const growth::TwoSatFormula& f) {
  for (unsigned long long a = 0; a < (1ull << f.num_vars); ++a) {
    std::vector<bool> assign(f.num_vars);
    for (int v = 0; v < f.num_vars; ++v) assign[v] = a >> v & 1;
    if (f.satisfied_by(assign)) return true;
  }
  return false;
}

/// Telephone broadcast time of a tree from `root`: each informed vertex
/// calls one neighbor per round. Equals the fewest d = 1 growth slots when
/// the initiator is `root`.
inline int broadcast_time(const Graph& tree, Vertex root) {
  std::function<int(Vertex, Vertex)> time = [&](Vertex v, Vertex from) {
    std::vector<int> child;
    for (Vertex w : tree.neighbors(v))
      if (w != from) child.push_back(time(w, v));
    std::sort(child.rbegin(), child.rend());
    int best = 0;
    for (std::size_t i = 0; i < child.size(); ++i) best = std::max(best, static_cast<int>(i) + 1 + child[i]);
    return best;
  };
  return time(root, -1);
}

inline int min_broadcast_time(const Graph& tree) {
  int best = tree.num_vertices();
  for (Vertex r = 0; r < tree.num_vertices(); ++r) best = std::min(best, broadcast_time(tree, r));
  return best;
}

/// Fewest d = 1 slots by backward search over vertex subsets: each step
/// deletes a set of leaves of the current tree whose neighbors are distinct
/// and survive.
inline int d1_min_slots_subsets(const Graph& tree) {
  const int n = tree.num_vertices();
  std::map<unsigned, int> memo;
  std::function<int(unsigned)> go = [&](unsigned s) -> int {
    if (__builtin_popcount(s) == 1) return 0;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    // Leaves of T[s] and their unique neighbor.
    std::vector<std::pair<int, int>> leaves;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      int deg = 0, nb = -1;
      for (Vertex w : tree.neighbors(v))
        if (s >> w & 1) ++deg, nb = w;
      if (deg == 1) leaves.emplace_back(v, nb);
    }
    int best = 1 << 20;
    const int m = static_cast<int>(leaves.size());
    for (unsigned pick = 1; pick < (1u << m); ++pick) {
      unsigned gone = 0, anchors = 0;
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        if (!(pick >> i & 1)) continue;
        gone |= 1u << leaves[i].first;
        if (anchors >> leaves[i].second & 1) ok = false;
        anchors |= 1u << leaves[i].second;
      }
      if (!ok || (gone & anchors)) continue;
      best = std::min(best, 1 + go(s & ~gone));
    }
    return memo[s] = best;
  };
  return go((1u << n) - 1);
}

/// Calls fn on every labeled tree with n vertices (Pruefer sequences).
template <typename Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
  if (n == 1) {
    fn(Graph::from_edges(1, {}));
    return;
  }
  if (n == 2) {
    std::vector<growth::Edge> e{{0, 1}};
    fn(Graph::from_edges(2, e));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  for (;;) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<growth::Edge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (a < 0) a = v;
        else edges.emplace_back(a, v);
      }
    }
    fn(Graph::from_edges(n, edges));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

inline std::vector<Graph> all_labeled_trees(int n) {
  std::vector<Graph> out;
  for_each_labeled_tree(n, [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

/// Does g have an ordering in which each vertex is dominated (closed
/// neighborhood inclusion) inside the subgraph of itself and later vertices?
/// Exhaustive over removal subsets.
inline bool has_elimination_ordering(const Graph& g) {
  const int n = g.num_vertices();
  std::map<unsigned, bool> memo;
  std::function<bool(unsigned)> go = [&](unsigned s) -> bool {
    if (__builtin_popcount(s) <= 1) return true;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    bool ok = false;
    for (int v = 0; v < n && !ok; ++v) {
      if (!(s >> v & 1)) continue;
      for (int w = 0; w < n && !ok; ++w) {
        if (w == v || !(s >> w & 1) || !g.has_edge(v, w)) continue;
        bool dominated = true;
        for (Vertex x : g.neighbors(v))
          if ((s >> x & 1) && x != w && !g.has_edge(x, w)) dominated = false;
        if (dominated) ok = go(s & ~(1u << v));
      }
    }
    return memo[s] = ok;
  };
  return go((1u << n) - 1);
}

/// Minimum edge difference against the binomial tree over all n! bijections.
inline int min_edge_difference(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> img(n);
  std::iota(img.begin(), img.end(), 0);
  int best = n;
  do {
    int miss = 0;
    for (int v = 1; v < n; ++v) {
      int top = 1;
      while (top * 2 <= v) top *= 2;
      if (!g.has_edge(img[v - top], img[v])) ++miss;
    }
    best = std::min(best, miss);
  } while (std::next_permutation(img.begin(), img.end()));
  return best;
}

/// Smallest k admitting a proper k-coloring, by trying all k^n assignments.
inline int chromatic_number(const Graph& g) {
  const int n = g.num_vertices();
  for (int k = 1;; ++k) {
    std::vector<int> c(n, 0);
    for (;;) {
      bool ok = true;
      for (const auto& e : g.edges())
        if (c[e.u] == c[e.v]) ok = false;
      if (ok) return n == 0 ? 0 : k;
      int i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
}

/// Largest clique by checking every vertex subset.
inline int clique_number(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (unsigned s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if ((s >> a & 1) && (s >> b & 1) && !g.has_edge(a, b)) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace brute
