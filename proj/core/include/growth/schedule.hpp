#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "growth/graph.hpp"

namespace growth {

/// One vertex generation: `parent` gives birth to `child`, and the edges
/// (child, w) for every w in `activated` are switched on. `activated` always
/// contains the parent.
struct Generation {
  Vertex parent = 0;
  Vertex child = 0;
  std::vector<Vertex> activated;

  bool operator==(const Generation&) const = default;
};

/// Generations happen simultaneously against the pre-slot instance; the
/// deletions run afterwards, in ascending edge order.
struct Slot {
  std::vector<Generation> generations;
  std::vector<Edge> deletions;

  bool operator==(const Slot&) const = default;
};

struct Schedule {
  int d = 2;
  Vertex initiator = 0;
  std::vector<Slot> slots;

  int num_slots() const { return static_cast<int>(slots.size()); }
  /// Initiator plus every generated vertex.
  int num_vertices() const;
  std::size_t num_deletions() const;

  bool operator==(const Schedule&) const = default;
};

struct Metrics {
  int slots = 0;
  std::size_t excess_edges = 0;
  int max_excess_lifetime = 0;

  bool operator==(const Metrics&) const = default;
};

enum class ScheduleErrorCode {
  kMalformed,
  kUnknownParent,
  kDuplicateParent,
  kDuplicateChild,
  kMissingParentEdge,
  kIllegalActivation,
  kUnknownEdgeDeletion,
  kDisconnectingDeletion,
  kTargetMismatch,
};

const char* to_string(ScheduleErrorCode code);

class ScheduleError : public std::runtime_error {
 public:
  ScheduleError(ScheduleErrorCode code, int slot, const std::string& detail);

  ScheduleErrorCode code() const { return code_; }
  /// 1-based slot index, or 0 when the error is not tied to a slot.
  int slot() const { return slot_; }

 private:
  ScheduleErrorCode code_;
  int slot_;
};

/// Every instance G_0..G_k of a simulated schedule. Instances are graphs over
/// the schedule's whole identifier space; a vertex is present in G_t iff
/// birth_slot[v] is in 0..t (unborn identifiers stay isolated).
struct Trace {
  Schedule schedule;
  std::vector<int> birth_slot;  // -1 for identifiers never born
  std::vector<Graph> instances;

  bool present(Vertex v, int t) const {
    return birth_slot[v] >= 0 && birth_slot[v] <= t;
  }
};

/// Runs the growth process and records every instance. Throws ScheduleError.
Trace simulate(const Schedule& s);

/// Simulates `s` without storing instances and checks that the final
/// instance equals `target` (labeled equality). Throws ScheduleError.
Metrics validate(const Schedule& s, const Graph& target);

/// Same schedule with every deletion moved to the last slot.
Schedule defer_deletions(const Schedule& s);

/// Retimes deletions. An excess edge activated in slot a and last used as a
/// relay in slot r is deleted at the end of slot max(a + 1, r), capped by the
/// final slot and never later than where `s` already deletes it. A deletion
/// that would disconnect the instance at that point slides to the next slot.
/// Generations and the set of deleted edges are unchanged.
Schedule normalize_deletions(const Schedule& s, const Graph& target);

struct PropertyReport {
  bool independent_slots = true;
  bool distance_monotone = true;
  bool birth_path_exclusion = true;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the structural consequences of d = 2 growth on a trace:
///  (a) the children of every slot are pairwise non-adjacent in `target`;
///  (b) no pairwise distance ever shrinks once both vertices exist;
///  (c) if w is born in slot t without an edge to an earlier-or-same-slot
///      vertex u, and neither is an ancestor of the other, then nothing in
///      {u} plus the lines of u started after slot t is adjacent in `target`
///      to anything in {w} plus its progeny.
/// Reports only; a violation means the simulator is wrong.
PropertyReport check_properties(const Trace& trace, const Graph& target);

}  // namespace growth
