#pragma once

#include <optional>
#include <vector>

#include "growth/graph.hpp"

namespace growth {

struct Matching {
  std::vector<Edge> pairs;   // sorted
  std::vector<Vertex> mate;  // mate[v], or -1 if unmatched

  std::size_t size() const { return pairs.size(); }
  bool is_perfect() const { return 2 * pairs.size() == mate.size(); }
};

/// Maximum-cardinality matching in a general graph (Edmonds blossom
/// contraction). Seeds greedily in ascending edge order, so the result is
/// deterministic.
Matching max_matching(const Graph& g);

/// Maximum matching of a bipartite graph given as left -> right adjacency.
/// Returns match_left[i] = right partner or -1. Deterministic (Kuhn).
std::vector<int> bipartite_matching(int left, int right,
                                    const std::vector<std::vector<int>>& adj);

struct Literal {
  int var = 0;
  bool negated = false;

  static Literal pos(int v) { return {v, false}; }
  static Literal neg(int v) { return {v, true}; }
  Literal operator!() const { return {var, !negated}; }
  bool operator==(const Literal&) const = default;
};

struct TwoSatFormula {
  int num_vars = 0;
  std::vector<std::pair<Literal, Literal>> clauses;

  void add_clause(Literal a, Literal b) { clauses.emplace_back(a, b); }
  void add_unit(Literal a) { clauses.emplace_back(a, a); }
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// Satisfying assignment or nullopt (UNSAT). Implication graph plus
/// Tarjan SCC; each variable takes the value whose literal's component comes
/// later in topological order. Throws std::invalid_argument on a literal
/// outside 0..num_vars-1.
std::optional<std::vector<bool>> two_sat(const TwoSatFormula& f);

}  // namespace growth
