#include "growth/composite_schedules.hpp"

#include <algorithm>
#include <set>

#include "growth/basic_schedules.hpp"

namespace growth {

std::size_t Phase::removed() const {
  std::size_t total = 0;
  for (const PathRemoval& p : paths) total += p.internal.size();
  for (const LeafGroup& g : groups) total += g.leaves.size();
  return total;
}

namespace {

using AdjSets = std::vector<std::set<Vertex>>;

// Contracts every maximal degree-2 chain of the live tree.
std::vector<PathRemoval> cut_paths(AdjSets& adj, std::vector<char>& alive) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  std::vector<PathRemoval> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v] || seen[v] || adj[v].size() != 2) continue;
    // Walk to each end of the chain through v.
    auto walk = [&](Vertex from, Vertex next, std::vector<Vertex>& chain) {
      while (adj[next].size() == 2) {
        seen[next] = 1;
        chain.push_back(next);
        Vertex after = *adj[next].begin() == from ? *adj[next].rbegin() : *adj[next].begin();
        from = next;
        next = after;
      }
      return next;
    };
    seen[v] = 1;
    std::vector<Vertex> left, right;
    const Vertex a = walk(v, *adj[v].begin(), left);
    const Vertex b = walk(v, *adj[v].rbegin(), right);
    PathRemoval p{a, b, {}};
    p.internal.assign(left.rbegin(), left.rend());
    p.internal.push_back(v);
    p.internal.insert(p.internal.end(), right.begin(), right.end());
    if (p.a > p.b) {
      std::swap(p.a, p.b);
      std::reverse(p.internal.begin(), p.internal.end());
    }
    out.push_back(std::move(p));
  }
  for (const PathRemoval& p : out) {
    adj[p.a].erase(p.internal.front());
    adj[p.b].erase(p.internal.back());
    for (Vertex x : p.internal) {
      adj[x].clear();
      alive[x] = 0;
    }
    adj[p.a].insert(p.b);
    adj[p.b].insert(p.a);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  return out;
}

std::vector<LeafGroup> cut_leaves(AdjSets& adj, std::vector<char>& alive, int left) {
  const int n = static_cast<int>(adj.size());
  std::vector<LeafGroup> groups;
  std::vector<int> slot_of(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v] || adj[v].size() != 1) continue;
    const Vertex p = *adj[v].begin();
    if (left == 2 && v < p) continue;  // K_2 keeps its smaller end
    if (slot_of[p] < 0) {
      slot_of[p] = static_cast<int>(groups.size());
      groups.push_back(LeafGroup{p, {}});
    }
    groups[slot_of[p]].leaves.push_back(v);
  }
  for (const LeafGroup& g : groups)
    for (Vertex v : g.leaves) {
      adj[g.parent].erase(v);
      adj[v].clear();
      alive[v] = 0;
    }
  std::sort(groups.begin(), groups.end(),
            [](const auto& x, const auto& y) { return x.parent < y.parent; });
  return groups;
}

}  // namespace

std::vector<Phase> tree_decompose(const Graph& target) {
  if (!is_tree(target)) throw GraphError("tree decomposition needs a tree");
  const int n = target.num_vertices();
  AdjSets adj(n);
  for (const Edge& e : target.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> alive(n, 1);
  int left = n;
  std::vector<Phase> phases;
  while (left > 1) {
    Phase path{PhaseKind::kPathCut, cut_paths(adj, alive), {}};
    if (!path.paths.empty()) {
      left -= static_cast<int>(path.removed());
      phases.push_back(std::move(path));
    }
    Phase leaf{PhaseKind::kLeafCut, {}, cut_leaves(adj, alive, left)};
    left -= static_cast<int>(leaf.removed());
    phases.push_back(std::move(leaf));
  }
  return phases;
}

namespace {

// Slots needed to undo one phase, appended to `out`.
void undo_path_cut(const Phase& phase, const std::vector<int>& depth, std::vector<Slot>& out) {
  struct Chain {
    std::vector<Vertex> line;       // anchor first, far endpoint last
    std::set<int> existing;         // positions already present
  };
  std::vector<Chain> chains;
  for (const PathRemoval& p : phase.paths) {
    Chain c;
    const bool a_anchor = depth[p.a] > depth[p.b];
    c.line.push_back(a_anchor ? p.a : p.b);
    if (a_anchor) c.line.insert(c.line.end(), p.internal.begin(), p.internal.end());
    else c.line.insert(c.line.end(), p.internal.rbegin(), p.internal.rend());
    c.line.push_back(a_anchor ? p.b : p.a);
    c.existing = {0, static_cast<int>(c.line.size()) - 1};
    chains.push_back(std::move(c));
  }
  for (bool more = true; more;) {
    more = false;
    Slot slot;
    for (Chain& c : chains) {
      std::vector<int> born;
      for (auto it = c.existing.begin(); std::next(it) != c.existing.end(); ++it) {
        const int p = *it, q = *std::next(it);
        if (q - p < 2) continue;
        const int mid = p + (q - p + 1) / 2;
        slot.generations.push_back(Generation{c.line[p], c.line[mid], {c.line[p], c.line[q]}});
        slot.deletions.emplace_back(c.line[p], c.line[q]);
        born.push_back(mid);
      }
      c.existing.insert(born.begin(), born.end());
      if (static_cast<int>(c.existing.size()) < static_cast<int>(c.line.size())) more = true;
    }
    if (slot.generations.empty()) break;
    std::sort(slot.deletions.begin(), slot.deletions.end());
    out.push_back(std::move(slot));
  }
}

void undo_leaf_cut(const Phase& phase, std::vector<Slot>& out) {
  const std::size_t base = out.size();
  for (const LeafGroup& g : phase.groups) {
    const Schedule star = star_schedule(static_cast<int>(g.leaves.size()) + 1);
    auto label = [&](Vertex v) { return v == 0 ? g.parent : g.leaves[v - 1]; };
    if (out.size() < base + star.slots.size()) out.resize(base + star.slots.size());
    for (std::size_t t = 0; t < star.slots.size(); ++t) {
      Slot& slot = out[base + t];
      for (const Generation& gen : star.slots[t].generations) {
        Generation mapped{label(gen.parent), label(gen.child), {}};
        for (Vertex w : gen.activated) mapped.activated.push_back(label(w));
        std::sort(mapped.activated.begin(), mapped.activated.end());
        slot.generations.push_back(std::move(mapped));
      }
      for (const Edge& e : star.slots[t].deletions) slot.deletions.emplace_back(label(e.u), label(e.v));
    }
  }
  for (std::size_t t = base; t < out.size(); ++t)
    std::sort(out[t].deletions.begin(), out[t].deletions.end());
}

}  // namespace

Schedule tree_schedule(const Graph& target) {
  const std::vector<Phase> phases = tree_decompose(target);
  const int n = target.num_vertices();

  // Replay the decomposition forwards to find the survivor and, for every
  // path-cut, the depth of each endpoint in the contracted tree.
  std::vector<char> removed(n, 0);
  for (const Phase& ph : phases) {
    for (const PathRemoval& p : ph.paths)
      for (Vertex x : p.internal) removed[x] = 1;
    for (const LeafGroup& g : ph.groups)
      for (Vertex x : g.leaves) removed[x] = 1;
  }
  Schedule s;
  s.initiator = static_cast<Vertex>(std::find(removed.begin(), removed.end(), 0) - removed.begin());

  // Undo phases last to first. The tree after each path-cut is rebuilt from
  // its endpoints: the root-distance in the current instance decides anchors.
  AdjSets adj(n);
  std::vector<char> present(n, 0);
  present[s.initiator] = 1;
  std::vector<int> depth(n, -1);
  for (auto ph = phases.rbegin(); ph != phases.rend(); ++ph) {
    if (ph->kind == PhaseKind::kLeafCut) {
      undo_leaf_cut(*ph, s.slots);
      for (const LeafGroup& g : ph->groups)
        for (Vertex x : g.leaves) {
          adj[g.parent].insert(x);
          adj[x].insert(g.parent);
          present[x] = 1;
        }
      continue;
    }
    // Depths from the initiator in the current (contracted) tree.
    std::fill(depth.begin(), depth.end(), -1);
    std::vector<Vertex> queue{s.initiator};
    depth[s.initiator] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : adj[queue[head]])
        if (depth[w] < 0) {
          depth[w] = depth[queue[head]] + 1;
          queue.push_back(w);
        }
    undo_path_cut(*ph, depth, s.slots);
    for (const PathRemoval& p : ph->paths) {
      adj[p.a].erase(p.b);
      adj[p.b].erase(p.a);
      Vertex prev = p.a;
      for (Vertex x : p.internal) {
        adj[prev].insert(x);
        adj[x].insert(prev);
        present[x] = 1;
        prev = x;
      }
      adj[prev].insert(p.b);
      adj[p.b].insert(prev);
    }
  }
  return s;
}

Schedule colored_schedule(const Graph& target, const Coloring& coloring) {
  const int n = target.num_vertices();
  if (static_cast<int>(coloring.colors.size()) != n || !is_proper_coloring(target, coloring))
    throw GraphError("coloring is not proper for the target");
  if (n < 1 || !is_connected(target)) throw GraphError("target graph must be connected and non-empty");

  auto classes = coloring.classes();
  std::erase_if(classes, [](const auto& c) { return c.empty(); });
  std::stable_sort(classes.begin(), classes.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  for (auto& c : classes) std::sort(c.begin(), c.end());

  Schedule s;
  s.initiator = classes.front().front();
  const Vertex root = s.initiator;
  std::vector<int> rank(n, -1);  // class position, root included in class 0
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex v : classes[i]) rank[v] = static_cast<int>(i);

  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::vector<Vertex> members;
    for (Vertex v : classes[i])
      if (v != root) members.push_back(v);
    if (members.empty()) continue;
    const Schedule star = star_schedule(static_cast<int>(members.size()) + 1);
    auto label = [&](Vertex v) { return v == 0 ? root : members[v - 1]; };

    // Star-local parent links, to climb from a member to its class ancestors.
    std::vector<Vertex> up(members.size() + 1, -1);
    for (const Slot& slot : star.slots)
      for (const Generation& g : slot.generations) up[g.child] = g.parent;
    // Earlier-class vertices each member must reach: its own target
    // neighbors plus those of its descendants.
    std::vector<std::set<Vertex>> reach(members.size() + 1);
    for (Vertex local = 1; local <= static_cast<Vertex>(members.size()); ++local)
      for (Vertex w : target.neighbors(label(local))) {
        if (rank[w] >= static_cast<int>(i) || w == root) continue;
        for (Vertex a = local; a > 0; a = up[a]) reach[a].insert(w);
      }

    for (const Slot& star_slot : star.slots) {
      Slot slot;
      for (const Generation& g : star_slot.generations) {
        std::set<Vertex> act;
        for (Vertex w : g.activated) act.insert(label(w));
        act.insert(reach[g.child].begin(), reach[g.child].end());
        slot.generations.push_back(Generation{label(g.parent), label(g.child), {act.begin(), act.end()}});
      }
      s.slots.push_back(std::move(slot));
    }
  }

  if (!s.slots.empty()) {
    std::vector<Edge> excess;
    for (const Slot& slot : s.slots)
      for (const Generation& g : slot.generations)
        for (Vertex w : g.activated)
          if (!target.has_edge(g.child, w)) excess.emplace_back(g.child, w);
    std::sort(excess.begin(), excess.end());
    s.slots.back().deletions = std::move(excess);
  }
  return normalize_deletions(s, target);
}

Coloring degeneracy_coloring(const Graph& g) {
  auto order = degeneracy_ordering(g).ordering;
  std::reverse(order.begin(), order.end());
  return greedy_coloring(g, order);
}

Schedule planar_schedule(const Graph& target) {
  if (target.num_vertices() < 1 || !is_connected(target))
    throw GraphError("target graph must be connected and non-empty");
  return colored_schedule(target, degeneracy_coloring(target));
}

}  // namespace growth
