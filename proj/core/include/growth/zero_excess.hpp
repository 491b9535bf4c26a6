#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "growth/graph.hpp"
#include "growth/schedule.hpp"

namespace growth {

/// Thrown by algorithms that only accept particular instance sizes.
class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CandidateInfo {
  Vertex vertex = 0;
  std::vector<Vertex> parents;  // every w != v with N[v] subset of N[w], ascending

  bool operator==(const CandidateInfo&) const = default;
};

/// N[v] is a subset of N[w] (closed neighborhoods).
bool closed_subset(const Graph& g, Vertex v, Vertex w);

/// All candidate vertices of g, ascending, with their candidate parents.
std::vector<CandidateInfo> candidate_set(const Graph& g);

/// Zero-excess schedule of n-1 slots built backwards by repeatedly removing
/// the smallest candidate (parent: its smallest candidate parent), or nullopt
/// if the graph has no candidate elimination ordering. Throws GraphError on a
/// disconnected target.
std::optional<Schedule> elimination_schedule(const Graph& target);

inline constexpr int kDefaultExcessCap = 3;

/// Tries added-edge sets of size 0, 1, ..., ell in lexicographic order and
/// returns the first supergraph that has an elimination schedule; the added
/// edges are deleted in the final slot. Throws std::invalid_argument if
/// ell > cap, GraphError on a disconnected target.
std::optional<Schedule> constant_excess_schedule(const Graph& target, int ell,
                                                 int cap = kDefaultExcessCap);

/// Zero-excess schedule of log2(n) slots, or nullopt. Each backward level
/// takes a perfect matching, solves the 2-SAT selection formula, and assigns
/// parents by a perfect matching on closed-neighborhood inclusion. If that
/// parent matching fails, the level is re-solved with each vertex allowed
/// into L only when its mate can serve as its parent.
/// Throws UnsupportedSize unless n is a power of two.
std::optional<Schedule> fast_growth(const Graph& target);

}  // namespace growth
