#include "growth/schedule.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "live_graph.hpp"

namespace growth {

using detail::LiveGraph;

int Schedule::num_vertices() const {
  int n = 1;
  for (const Slot& slot : slots) n += static_cast<int>(slot.generations.size());
  return n;
}

std::size_t Schedule::num_deletions() const {
  std::size_t total = 0;
  for (const Slot& slot : slots) total += slot.deletions.size();
  return total;
}

const char* to_string(ScheduleErrorCode code) {
  switch (code) {
    case ScheduleErrorCode::kMalformed: return "MALFORMED";
    case ScheduleErrorCode::kUnknownParent: return "UNKNOWN_PARENT";
    case ScheduleErrorCode::kDuplicateParent: return "DUPLICATE_PARENT";
    case ScheduleErrorCode::kDuplicateChild: return "DUPLICATE_CHILD";
    case ScheduleErrorCode::kMissingParentEdge: return "MISSING_PARENT_EDGE";
    case ScheduleErrorCode::kIllegalActivation: return "ILLEGAL_ACTIVATION";
    case ScheduleErrorCode::kUnknownEdgeDeletion: return "UNKNOWN_EDGE_DELETION";
    case ScheduleErrorCode::kDisconnectingDeletion: return "DISCONNECTING_DELETION";
    case ScheduleErrorCode::kTargetMismatch: return "TARGET_MISMATCH";
  }
  return "UNKNOWN";
}

namespace {

std::string describe(ScheduleErrorCode code, int slot, const std::string& detail) {
  std::string out = to_string(code);
  if (slot > 0) out += " at slot " + std::to_string(slot);
  return out + ": " + detail;
}

std::string gen_text(const Generation& g) {
  return "(" + std::to_string(g.parent) + " -> " + std::to_string(g.child) + ")";
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

/// Identifier space: one past the largest initiator or child id.
int id_space(const Schedule& s) {
  if (s.d < 1) throw ScheduleError(ScheduleErrorCode::kMalformed, 0, "d must be at least 1");
  if (s.initiator < 0) throw ScheduleError(ScheduleErrorCode::kMalformed, 0, "negative initiator");
  Vertex top = s.initiator;
  for (int t = 0; t < s.num_slots(); ++t) {
    for (const Generation& g : s.slots[t].generations) {
      if (g.child < 0) {
        throw ScheduleError(ScheduleErrorCode::kMalformed, t + 1,
                            "negative child id in " + gen_text(g));
      }
      top = std::max(top, g.child);
    }
  }
  return top + 1;
}

class Simulator {
 public:
  explicit Simulator(const Schedule& s)
      : s_(s), live_(id_space(s)), birth_(live_.id_space(), -1),
        parent_mark_(live_.id_space(), 0), child_mark_(live_.id_space(), 0) {
    live_.add_vertex(s.initiator);
    birth_[s.initiator] = 0;
  }

  void run_slot(int t) {
    const Slot& slot = s_.slots[t - 1];
    for (const Generation& g : slot.generations) check_generation(t, g);
    for (const Generation& g : slot.generations) {
      live_.add_vertex(g.child);
      birth_[g.child] = t;
      for (Vertex w : g.activated) live_.add_edge(g.child, w, t);
    }
    std::vector<Edge> dels = slot.deletions;
    std::sort(dels.begin(), dels.end());
    if (!delete_batch(t, dels))
      for (const Edge& e : dels) delete_edge(t, e);
    metrics_.slots = t;
  }

  LiveGraph& live() { return live_; }
  const std::vector<int>& birth() const { return birth_; }
  const Metrics& metrics() const { return metrics_; }

 private:
  bool in_range(Vertex v) const { return v >= 0 && v < live_.id_space(); }

  void check_generation(int t, const Generation& g) {
    using C = ScheduleErrorCode;
    if (!in_range(g.parent) || !live_.present(g.parent)) {
      throw ScheduleError(C::kUnknownParent, t, "parent does not exist in " + gen_text(g));
    }
    if (parent_mark_[g.parent] == t) {
      throw ScheduleError(C::kDuplicateParent, t,
                          "vertex " + std::to_string(g.parent) + " gives birth twice");
    }
    parent_mark_[g.parent] = t;
    if (live_.present(g.child) || child_mark_[g.child] == t) {
      throw ScheduleError(C::kDuplicateChild, t,
                          "child id " + std::to_string(g.child) + " already used");
    }
    child_mark_[g.child] = t;
    if (std::find(g.activated.begin(), g.activated.end(), g.parent) == g.activated.end()) {
      throw ScheduleError(C::kMissingParentEdge, t, "activated set lacks parent in " + gen_text(g));
    }
    bool ball_ready = false;
    for (Vertex w : g.activated) {
      if (w == g.parent) continue;
      bool ok = false;
      if (in_range(w) && live_.present(w)) {
        if (s_.d == 2) {
          ok = live_.has_edge(g.parent, w);
        } else if (s_.d >= 3) {
          if (!ball_ready) {
            live_.mark_ball(g.parent, s_.d - 1);
            ball_ready = true;
          }
          ok = live_.in_ball(w);
        }
      }
      if (!ok) {
        throw ScheduleError(C::kIllegalActivation, t,
                            "edge to " + std::to_string(w) + " in " + gen_text(g) +
                                " is absent or farther than d-1 from the parent");
      }
    }
  }

  // Fast path: if the instance survives losing the whole slot's deletions
  // at once, every sequential prefix does too.
  bool delete_batch(int t, const std::vector<Edge>& dels) {
    if (dels.size() < 2 || std::adjacent_find(dels.begin(), dels.end()) != dels.end()) return false;
    std::vector<int> born;
    born.reserve(dels.size());
    for (const Edge& e : dels) {
      if (!in_range(e.u) || !in_range(e.v) || !live_.has_edge(e.u, e.v)) return false;
      born.push_back(live_.activation_slot(e.u, e.v));
    }
    if (!live_.remove_all_if_connected(dels)) return false;
    for (int b : born) metrics_.max_excess_lifetime = std::max(metrics_.max_excess_lifetime, t - b);
    metrics_.excess_edges += dels.size();
    return true;
  }

  void delete_edge(int t, const Edge& e) {
    using C = ScheduleErrorCode;
    if (!in_range(e.u) || !in_range(e.v) || !live_.has_edge(e.u, e.v)) {
      throw ScheduleError(C::kUnknownEdgeDeletion, t, "edge " + edge_text(e) + " is not present");
    }
    if (!live_.connected_without(e.u, e.v)) {
      throw ScheduleError(C::kDisconnectingDeletion, t,
                          "deleting " + edge_text(e) + " disconnects the instance");
    }
    metrics_.max_excess_lifetime =
        std::max(metrics_.max_excess_lifetime, t - live_.activation_slot(e.u, e.v));
    ++metrics_.excess_edges;
    live_.remove_edge(e.u, e.v);
  }

  const Schedule& s_;
  LiveGraph live_;
  std::vector<int> birth_;
  std::vector<int> parent_mark_;
  std::vector<int> child_mark_;
  Metrics metrics_;
};

}  // namespace

ScheduleError::ScheduleError(ScheduleErrorCode code, int slot, const std::string& detail)
    : std::runtime_error(describe(code, slot, detail)), code_(code), slot_(slot) {}

Trace simulate(const Schedule& s) {
  Simulator sim(s);
  Trace trace;
  trace.schedule = s;
  trace.instances.push_back(sim.live().snapshot());
  for (int t = 1; t <= s.num_slots(); ++t) {
    sim.run_slot(t);
    trace.instances.push_back(sim.live().snapshot());
  }
  trace.birth_slot = sim.birth();
  return trace;
}

Metrics validate(const Schedule& s, const Graph& target) {
  Simulator sim(s);
  for (int t = 1; t <= s.num_slots(); ++t) sim.run_slot(t);
  const int n = target.num_vertices();
  const auto& birth = sim.birth();
  int born = static_cast<int>(std::count_if(birth.begin(), birth.end(), [](int b) { return b >= 0; }));
  if (static_cast<int>(birth.size()) > n || born != n) {
    throw ScheduleError(ScheduleErrorCode::kTargetMismatch, 0,
                        "grown vertex set has " + std::to_string(born) +
                            " vertices over ids 0.." + std::to_string(birth.size() - 1) +
                            ", target has " + std::to_string(n));
  }
  auto grown = sim.live().sorted_edges();
  const auto& want = target.edges();
  if (grown != want) {
    std::vector<Edge> extra, missing;
    std::set_difference(grown.begin(), grown.end(), want.begin(), want.end(),
                        std::back_inserter(extra));
    std::set_difference(want.begin(), want.end(), grown.begin(), grown.end(),
                        std::back_inserter(missing));
    std::ostringstream msg;
    auto list = [&](const char* label, const std::vector<Edge>& edges) {
      msg << label << " [";
      for (std::size_t i = 0; i < edges.size() && i < 10; ++i) msg << (i ? " " : "") << edge_text(edges[i]);
      if (edges.size() > 10) msg << " ... +" << edges.size() - 10;
      msg << "]";
    };
    list("extra", extra);
    msg << ' ';
    list("missing", missing);
    throw ScheduleError(ScheduleErrorCode::kTargetMismatch, 0, msg.str());
  }
  return sim.metrics();
}

Schedule defer_deletions(const Schedule& s) {
  Schedule out = s;
  if (out.slots.empty()) return out;
  std::vector<Edge> all;
  for (Slot& slot : out.slots) {
    all.insert(all.end(), slot.deletions.begin(), slot.deletions.end());
    slot.deletions.clear();
  }
  std::sort(all.begin(), all.end());
  out.slots.back().deletions = std::move(all);
  return out;
}

namespace {

void apply_generations(LiveGraph& live, const Slot& slot, int t) {
  for (const Generation& g : slot.generations) {
    live.add_vertex(g.child);
    for (Vertex w : g.activated) live.add_edge(g.child, w, t);
  }
}

/// Records slot t as a use of every edge on a shortest parent-w path.
void mark_relays(LiveGraph& live, Vertex from, Vertex to, int radius, int t,
                 std::unordered_map<std::uint64_t, int>& last_use) {
  auto ball = [&](Vertex src) {
    std::unordered_map<Vertex, int> dist{{src, 0}};
    std::vector<Vertex> frontier{src};
    for (int depth = 1; depth <= radius; ++depth) {
      std::vector<Vertex> next;
      for (Vertex x : frontier)
        for (Vertex y : live.neighbors(x))
          if (dist.emplace(y, depth).second) next.push_back(y);
      frontier = std::move(next);
    }
    return dist;
  };
  auto from_dist = ball(from);
  auto to_dist = ball(to);
  auto it = from_dist.find(to);
  if (it == from_dist.end()) return;
  const int length = it->second;
  for (const auto& [x, dx] : from_dist) {
    for (Vertex y : live.neighbors(x)) {
      auto jt = to_dist.find(y);
      if (jt != to_dist.end() && dx + 1 + jt->second == length) last_use[edge_key(x, y)] = t;
    }
  }
}

}  // namespace

Schedule normalize_deletions(const Schedule& s, const Graph& target) {
  validate(defer_deletions(s), target);
  const int k = s.num_slots();
  if (k == 0) return s;

  std::unordered_map<std::uint64_t, int> original;
  for (int t = 1; t <= k; ++t)
    for (const Edge& e : s.slots[t - 1].deletions) original[edge_key(e.u, e.v)] = t;

  LiveGraph live(id_space(s));
  live.add_vertex(s.initiator);
  std::unordered_map<std::uint64_t, int> last_use;
  for (int t = 1; t <= k; ++t) {
    const Slot& slot = s.slots[t - 1];
    for (const Generation& g : slot.generations) {
      for (Vertex w : g.activated) {
        if (w == g.parent) continue;
        if (s.d == 2) {
          last_use[edge_key(g.parent, w)] = t;
        } else if (s.d >= 3) {
          mark_relays(live, g.parent, w, s.d - 1, t, last_use);
        }
      }
    }
    apply_generations(live, slot, t);
  }

  std::vector<std::vector<Edge>> due(k + 1);
  for (const auto& [key, orig] : original) {
    Edge e(static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu));
    const int born = live.activation_slot(e.u, e.v);
    auto use = last_use.find(key);
    const int relay = use == last_use.end() ? 0 : use->second;
    const int earliest = std::min(std::max(born + 1, relay), k);
    due[std::max({relay, born, std::min(earliest, orig)})].push_back(e);
  }

  Schedule out = s;
  LiveGraph replay(id_space(s));
  replay.add_vertex(s.initiator);
  std::vector<Edge> pending;
  for (int t = 1; t <= k; ++t) {
    Slot& slot = out.slots[t - 1];
    apply_generations(replay, slot, t);
    pending.insert(pending.end(), due[t].begin(), due[t].end());
    std::sort(pending.begin(), pending.end());
    std::vector<Edge> later;
    slot.deletions.clear();
    if (pending.size() > 1 && replay.remove_all_if_connected(pending)) {
      slot.deletions = std::move(pending);
      pending.clear();
      continue;
    }
    for (const Edge& e : pending) {
      if (replay.connected_without(e.u, e.v)) {
        replay.remove_edge(e.u, e.v);
        slot.deletions.push_back(e);
      } else {
        later.push_back(e);
      }
    }
    pending = std::move(later);
  }
  if (!pending.empty()) {
    throw ScheduleError(ScheduleErrorCode::kDisconnectingDeletion, k,
                        "retimed deletion of " + edge_text(pending.front()) +
                            " disconnects the final instance");
  }
  return out;
}

namespace {

// Exact local form of distance monotonicity: every pair of pre-slot
// neighbors of a newborn must already be within two hops.
void check_distance_local(const Trace& tr, PropertyReport& report) {
  const Schedule& s = tr.schedule;
  for (int t = 1; t <= s.num_slots(); ++t) {
    const Graph& before = tr.instances[t - 1];
    const Graph& after = tr.instances[t];
    for (const Generation& g : s.slots[t - 1].generations) {
      std::vector<Vertex> old;
      for (Vertex w : after.neighbors(g.child))
        if (tr.present(w, t - 1)) old.push_back(w);
      for (std::size_t i = 0; i < old.size(); ++i) {
        for (std::size_t j = i + 1; j < old.size(); ++j) {
          Vertex a = old[i], b = old[j];
          if (before.has_edge(a, b)) continue;
          auto na = before.neighbors(a);
          auto nb = before.neighbors(b);
          std::vector<Vertex> common;
          std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                                std::back_inserter(common));
          if (common.empty()) {
            report.distance_monotone = false;
            report.violations.push_back("slot " + std::to_string(t) + ": child " +
                                        std::to_string(g.child) + " shortens dist(" +
                                        std::to_string(a) + "," + std::to_string(b) + ")");
          }
        }
      }
    }
  }
}

void check_distance_direct(const Trace& tr, PropertyReport& report) {
  const int k = tr.schedule.num_slots();
  const int ids = static_cast<int>(tr.birth_slot.size());
  for (int t = 1; t <= k; ++t) {
    for (Vertex x = 0; x < ids; ++x) {
      if (!tr.present(x, t - 1)) continue;
      auto before = bfs_distances(tr.instances[t - 1], x);
      auto after = bfs_distances(tr.instances[t], x);
      for (Vertex y = x + 1; y < ids; ++y) {
        if (tr.present(y, t - 1) && after[y] < before[y]) {
          report.distance_monotone = false;
          report.violations.push_back("slot " + std::to_string(t) + ": dist(" +
                                      std::to_string(x) + "," + std::to_string(y) +
                                      ") dropped from " + std::to_string(before[y]) + " to " +
                                      std::to_string(after[y]));
        }
      }
    }
  }
}

}  // namespace

PropertyReport check_properties(const Trace& tr, const Graph& target) {
  PropertyReport report;
  const Schedule& s = tr.schedule;
  const int ids = static_cast<int>(tr.birth_slot.size());
  auto in_target = [&](Vertex v) { return v < target.num_vertices(); };

  // (a) independent children per slot.
  for (int t = 1; t <= s.num_slots(); ++t) {
    for (const Generation& g : s.slots[t - 1].generations) {
      if (!in_target(g.child)) continue;
      for (Vertex w : target.neighbors(g.child)) {
        if (w > g.child && w < ids && tr.birth_slot[w] == t) {
          report.independent_slots = false;
          report.violations.push_back("slot " + std::to_string(t) + ": children " +
                                      std::to_string(g.child) + " and " + std::to_string(w) +
                                      " are adjacent in the target");
        }
      }
    }
  }

  // (b) distance monotonicity.
  if (ids <= 64) {
    check_distance_direct(tr, report);
  } else {
    check_distance_local(tr, report);
  }

  // (c) birth-path exclusion.
  std::vector<Vertex> parent(ids, -1);
  std::vector<const std::vector<Vertex>*> act(ids, nullptr);
  for (const Slot& slot : s.slots) {
    for (const Generation& g : slot.generations) {
      parent[g.child] = g.parent;
      act[g.child] = &g.activated;
    }
  }
  // Lineage from v up to the initiator, v first.
  auto lineage = [&](Vertex v) {
    std::vector<Vertex> line;
    for (Vertex x = v; x >= 0; x = parent[x]) line.push_back(x);
    return line;
  };
  auto activated_at_birth = [&](Vertex young, Vertex old) {
    const auto* a = act[young];
    return a && std::find(a->begin(), a->end(), old) != a->end();
  };
  // x in {u} plus lines of u started after slot `after`: the step out of u
  // on the lineage of x (u sits at index iu of line_x) was born later.
  auto late_line = [&](const std::vector<Vertex>& line_x, std::size_t iu, int after) {
    return iu == 0 || tr.birth_slot[line_x[iu - 1]] > after;
  };
  for (const Edge& e : target.edges()) {
    if (e.v >= ids || tr.birth_slot[e.u] < 0 || tr.birth_slot[e.v] < 0) continue;
    auto lx = lineage(e.u);
    auto ly = lineage(e.v);
    for (std::size_t iu = 0; iu < lx.size(); ++iu) {
      Vertex u = lx[iu];
      if (std::find(ly.begin(), ly.end(), u) != ly.end()) break;  // common ancestor
      for (std::size_t iw = 0; iw < ly.size(); ++iw) {
        Vertex w = ly[iw];
        if (std::find(lx.begin(), lx.end(), w) != lx.end()) break;
        const int bu = tr.birth_slot[u];
        const int bw = tr.birth_slot[w];
        bool hit = false;
        if (bu <= bw && !activated_at_birth(w, u) && late_line(lx, iu, bw)) hit = true;
        if (bw <= bu && !activated_at_birth(u, w) && late_line(ly, iw, bu)) hit = true;
        if (hit) {
          report.birth_path_exclusion = false;
          report.violations.push_back("target edge " + std::to_string(e.u) + "-" +
                                      std::to_string(e.v) + " joins progeny of " +
                                      std::to_string(u) + " and " + std::to_string(w) +
                                      " which were never linked");
        }
      }
    }
  }
  return report;
}

}  // namespace growth
