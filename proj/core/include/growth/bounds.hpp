#pragma once

#include <cstdint>
#include <vector>

#include "growth/graph.hpp"
#include "growth/schedule.hpp"

namespace growth {

inline constexpr int kExactCliqueCap = 20;
inline constexpr int kExactChromaticCap = 12;

/// Clique number; exact (branch and bound) when n <= cap, else the size of
/// a greedily grown clique, which only bounds it from below.
struct CliqueResult {
  int value = 0;
  bool exact = true;
};
CliqueResult clique_number(const Graph& g, int cap = kExactCliqueCap);

/// Chromatic number; exact when n <= cap, else the clique estimate (a lower
/// bound).
struct ChromaticResult {
  int value = 0;
  bool exact = true;
};
ChromaticResult chromatic_number(const Graph& g, int cap = kExactChromaticCap);

struct SlotBound {
  int value = 0;
  int log_term = 0;       // ceil(log2 n)
  int clique_term = 0;    // omega - 1 (d >= 2)
  int chromatic_term = 0; // chi - 1 (d >= 2)
  int diameter_term = 0;  // ceil((diam + 1) / 2) (d = 1)
  int degree_term = 0;    // max degree (d = 1)
  bool exact = true;      // every ingredient computed exactly
};

/// Lower bound on the slots of any schedule growing `target`.
/// d >= 2: max(ceil(log2 n), omega - 1, chi - 1).
/// d = 1: max(ceil(log2 n), ceil((diam + 1) / 2), max degree).
/// Throws GraphError on a disconnected target or d < 1.
SlotBound slot_lower_bound_details(const Graph& target, int d);
int slot_lower_bound(const Graph& target, int d);

/// Graph grown in `delta` slots when every vertex spawns each slot with only
/// its parent edge: the child of i in slot t is i + 2^(t-1).
Graph binomial_tree(int delta);

struct EdgeDifferenceResult {
  int value = 0;
  std::vector<Vertex> witness;  // witness[u] = image of binomial-tree vertex u
  bool exact = true;            // false: heuristic upper bound only
};

/// Edges of binomial_tree(log2 n) whose images under `bijection` are not
/// edges of `target`.
int edge_difference(const Graph& target, const std::vector<Vertex>& bijection);

inline constexpr int kExactEdgeDifferenceCap = 8;

/// Minimum edge difference over bijections. Exact branch and bound for
/// n <= 8 (first optimum in lexicographic order). Larger n: steepest-descent
/// pair swaps from `restarts` random bijections, seeded; the value is then an
/// upper bound only. Throws UnsupportedSize unless n is a power of two.
EdgeDifferenceResult min_edge_difference(const Graph& target, int restarts = 32,
                                         std::uint64_t seed = 0);

/// Graph grown from K_1 in `delta` slots where every vertex spawns each slot
/// and the child wires to its parent and all of the parent's neighbors.
Graph g_full(int delta);

/// Degree sum of g_full(delta) from f(1) = 0, f(2) = 2, f(2x) = 3 f(x) + 2x.
std::uint64_t g_full_degree_sum(int delta);

/// Bipartite graph on parts a_i = i and b_i = N + i, N = 2^(delta - 1), with
/// a_i b_j present iff i = j or ij is an edge of g_full(delta - 1).
/// Throws GraphError when delta < 1.
Graph g_bipart(int delta);

/// g on vertices 0..n-1 joined completely to a clique on n..2n-1.
Graph hardness_gadget(const Graph& g);

}  // namespace growth
