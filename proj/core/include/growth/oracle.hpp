#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "growth/graph.hpp"
#include "growth/schedule.hpp"

namespace growth {

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kOracleDefaultCap = 8;
/// Hard ceiling for any cap override (bitmask state space).
inline constexpr int kOracleHardCap = 16;

struct OracleResult {
  int slots = 0;
  std::size_t excess = 0;
  Schedule witness;  // validates against the target with these metrics
};

/// Fewest slots of any zero-excess schedule with edge-activation distance d,
/// or nullopt if none exists. Exhaustive backward search over vertex subsets;
/// each move peels an independent set whose members get distinct parents.
/// Throws CapExceeded when n > cap.
std::optional<OracleResult> min_slots_zero_excess(const Graph& target, int d = 2,
                                                  int cap = kOracleDefaultCap);

/// Fewest excess edges over schedules of at most k slots, or nullopt if no
/// schedule fits in k slots. Supports d = 1 and d = 2 (std::invalid_argument
/// otherwise). The search peels levels backwards while tracking which edges
/// later relays still need, memoized on (vertices, needed edges, levels).
/// Throws CapExceeded when n > cap or k > cap.
std::optional<OracleResult> min_excess_with_budget(const Graph& target, int k, int d = 2,
                                                   int cap = kOracleDefaultCap);

/// Canonical adjacency code: the lexicographically smallest upper-triangle
/// bit string over relabellings consistent with color refinement. Equal codes
/// iff isomorphic. n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Graph whose canonical code is `code`.
Graph graph_from_code(int n, std::uint64_t code);

inline constexpr int kEnumerationCap = 8;

/// One representative per isomorphism class, ascending canonical code.
/// Throws CapExceeded when n > cap (default kEnumerationCap).
std::vector<Graph> connected_graphs(int n, int cap = kEnumerationCap);
/// Same, including disconnected graphs.
std::vector<Graph> all_graphs(int n, int cap = kEnumerationCap);

}  // namespace growth
