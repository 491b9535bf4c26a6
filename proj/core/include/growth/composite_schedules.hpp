#pragma once

#include <vector>

#include "growth/graph.hpp"
#include "growth/schedule.hpp"

namespace growth {

enum class PhaseKind { kPathCut, kLeafCut };

/// A maximal chain of degree-2 vertices replaced by the edge (a, b).
/// `internal` runs from a's side to b's side.
struct PathRemoval {
  Vertex a = 0;
  Vertex b = 0;
  std::vector<Vertex> internal;

  bool operator==(const PathRemoval&) const = default;
};

/// Leaves hanging off one surviving vertex, ascending.
struct LeafGroup {
  Vertex parent = 0;
  std::vector<Vertex> leaves;

  bool operator==(const LeafGroup&) const = default;
};

struct Phase {
  PhaseKind kind = PhaseKind::kPathCut;
  std::vector<PathRemoval> paths;  // kPathCut only
  std::vector<LeafGroup> groups;   // kLeafCut only

  /// Vertices removed by this phase.
  std::size_t removed() const;
};

/// Shrinks a tree to one vertex. Each round first contracts every maximal
/// degree-2 chain into a shortcut edge, then removes every leaf (on K_2 only
/// the larger identifier goes). Rounds with nothing to contract skip the
/// path-cut, so empty phases never appear. Throws GraphError on a non-tree.
std::vector<Phase> tree_decompose(const Graph& target);

/// Slot budget constant for tree_schedule: slots <= kTreeSlotConstant *
/// ceil(log2 n)^2 for n >= 2.
inline constexpr int kTreeSlotConstant = 1;
/// Excess constant for tree_schedule: excess <= kTreeExcessConstant * n.
inline constexpr int kTreeExcessConstant = 2;

/// d = 2 schedule for a tree, replaying tree_decompose backwards. A path-cut
/// is undone by splitting gaps from one endpoint, wiring each new vertex to
/// both sides of its gap and dropping the spanned edge at once. The splitting
/// endpoint is the one farther from a fixed root, so no vertex serves two
/// chains. A leaf-cut is undone by one star schedule per group. Sub-schedules
/// of a phase share slots.
Schedule tree_schedule(const Graph& target);

/// d = 2 schedule driven by a proper coloring. Classes run one after another
/// in descending size (ties by color index). Each class is grown by a star
/// schedule centered on the initiator, the smallest vertex of the first
/// class, members in ascending order. A new vertex u is also wired to every
/// earlier-class vertex adjacent to u or to a descendant of u inside its own
/// class tree. Non-target edges are then retimed by normalize_deletions.
/// Throws GraphError on an improper coloring or a disconnected target.
Schedule colored_schedule(const Graph& target, const Coloring& coloring);

/// Greedy coloring in reverse degeneracy order (at most k + 1 colors for a
/// k-degenerate graph), then colored_schedule. Throws GraphError on a
/// disconnected target.
Schedule planar_schedule(const Graph& target);

/// The coloring planar_schedule uses.
Coloring degeneracy_coloring(const Graph& g);

}  // namespace growth
