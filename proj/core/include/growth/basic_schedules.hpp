#pragma once

#include "growth/graph.hpp"
#include "growth/schedule.hpp"

namespace growth {

/// Grows K_n from vertex 0 one vertex per slot, then deletes every non-target
/// edge in the final slot. Throws GraphError on a disconnected target.
Schedule clique_schedule(const Graph& target);

/// Like clique_schedule but rooted at a maximum-degree vertex (smallest id),
/// and each child only wires to the root and its own target neighbors:
/// exactly n - 1 - maxdeg excess edges.
Schedule improved_clique_schedule(const Graph& target);

/// Labeled path 0-1-...-(n-1) in ceil(log2 n) slots. Every existing vertex p
/// splits the gap to the next existing vertex q (or to n past the end) by
/// spawning p + ceil((q - p) / 2), wired to p and q; the p-q shortcut is
/// deleted in the same slot.
Schedule path_schedule(int n);

/// Star centered at 0 in ceil(log2 n) slots. Every vertex spawns each slot
/// (the center first, then leaves ascending, when the last slot is partial).
/// A leaf's child is wired to the leaf and the center; the leaf edge is
/// deleted one slot later.
Schedule star_schedule(int n);

/// d = 1 schedule for a tree with the fewest slots. Built backwards: each
/// round scans leaves ascending and removes a leaf when its neighbor is not
/// yet the parent of another removed leaf in this round. Throws GraphError
/// if the target is not a tree.
Schedule trimming_schedule(const Graph& target);

/// d = 4 schedule keeping a spanning star at a maximum-degree vertex. Slots
/// come from peeling target-independent sets of at most half the remaining
/// vertices, so the count is ceil(log2 n) whenever such sets exist.
Schedule star_spanning_schedule(const Graph& target);

/// d = 3 schedule where each child wires to every existing vertex, so the
/// instance stays complete multipartite over slot classes. Same slot
/// assignment as star_spanning_schedule.
Schedule clique_maintaining_schedule(const Graph& target);

}  // namespace growth
