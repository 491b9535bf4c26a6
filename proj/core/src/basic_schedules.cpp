#include "growth/basic_schedules.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "growth/kernels.hpp"

namespace growth {

namespace {

void require_connected(const Graph& g) {
  if (g.num_vertices() < 1 || !is_connected(g)) {
    throw GraphError("target graph must be connected and non-empty");
  }
}

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

Vertex max_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.num_vertices(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

/// Every activated edge missing from the target, deleted in the final slot.
void delete_excess_at_end(Schedule& s, const Graph& target) {
  if (s.slots.empty()) return;
  std::vector<Edge> excess;
  for (const Slot& slot : s.slots)
    for (const Generation& g : slot.generations)
      for (Vertex w : g.activated)
        if (!target.has_edge(g.child, w)) excess.emplace_back(g.child, w);
  std::sort(excess.begin(), excess.end());
  s.slots.back().deletions = std::move(excess);
}

}  // namespace

Schedule clique_schedule(const Graph& target) {
  require_connected(target);
  Schedule s;
  for (Vertex c = 1; c < target.num_vertices(); ++c) {
    Generation g{0, c, {}};
    for (Vertex w = 0; w < c; ++w) g.activated.push_back(w);
    s.slots.push_back(Slot{{std::move(g)}, {}});
  }
  delete_excess_at_end(s, target);
  return s;
}

Schedule improved_clique_schedule(const Graph& target) {
  require_connected(target);
  const Vertex root = max_degree_vertex(target);
  Schedule s;
  s.initiator = root;
  std::vector<char> born(target.num_vertices(), 0);
  born[root] = 1;
  for (Vertex c = 0; c < target.num_vertices(); ++c) {
    if (c == root) continue;
    Generation g{root, c, {root}};
    for (Vertex w : target.neighbors(c))
      if (born[w] && w != root) g.activated.push_back(w);
    born[c] = 1;
    s.slots.push_back(Slot{{std::move(g)}, {}});
  }
  delete_excess_at_end(s, target);
  return s;
}

Schedule path_schedule(int n) {
  if (n < 1) throw GraphError("path needs at least one vertex");
  Schedule s;
  std::set<Vertex> existing{0};
  while (static_cast<int>(existing.size()) < n) {
    Slot slot;
    std::vector<Vertex> born;
    for (auto it = existing.begin(); it != existing.end(); ++it) {
      const Vertex p = *it;
      auto next = std::next(it);
      const Vertex q = next == existing.end() ? n : *next;
      if (q - p < 2) continue;
      const Vertex c = p + (q - p + 1) / 2;
      Generation g{p, c, {p}};
      if (q < n) {
        g.activated.push_back(q);
        slot.deletions.emplace_back(p, q);  // the shortcut is spent
      }
      slot.generations.push_back(std::move(g));
      born.push_back(c);
    }
    existing.insert(born.begin(), born.end());
    std::sort(slot.deletions.begin(), slot.deletions.end());
    s.slots.push_back(std::move(slot));
  }
  return s;
}

Schedule star_schedule(int n) {
  if (n < 1) throw GraphError("star needs at least one vertex");
  Schedule s;
  const int k = ceil_log2(n);
  std::vector<Edge> pending;  // leaf edges due next slot
  Vertex next_id = 1;
  for (int t = 1; t <= k; ++t) {
    Slot slot;
    slot.deletions = std::move(pending);
    pending.clear();
    const Vertex existing = next_id;
    for (Vertex p = 0; p < existing && next_id < n; ++p) {
      const Vertex c = next_id++;
      if (p == 0) {
        slot.generations.push_back(Generation{0, c, {0}});
      } else {
        slot.generations.push_back(Generation{p, c, {0, p}});
        pending.emplace_back(p, c);
      }
    }
    s.slots.push_back(std::move(slot));
  }
  if (!s.slots.empty()) {
    auto& last = s.slots.back().deletions;
    last.insert(last.end(), pending.begin(), pending.end());
    std::sort(last.begin(), last.end());
  }
  return s;
}

Schedule trimming_schedule(const Graph& target) {
  if (!is_tree(target)) throw GraphError("trimming needs a tree");
  const int n = target.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = target.degree(v);
  std::vector<Slot> rounds;
  int left = n;
  while (left > 1) {
    Slot slot;
    std::vector<char> marked(n, 0), removed(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v] || degree[v] != 1 || marked[v]) continue;
      Vertex u = -1;
      for (Vertex w : target.neighbors(v))
        if (alive[w] && !removed[w]) u = w;
      if (u < 0 || marked[u]) continue;
      marked[u] = 1;
      removed[v] = 1;
      slot.generations.push_back(Generation{u, v, {u}});
    }
    for (const Generation& g : slot.generations) {
      alive[g.child] = 0;
      --degree[g.parent];
      --left;
    }
    rounds.push_back(std::move(slot));
  }
  Schedule s;
  s.d = 1;
  s.initiator = static_cast<Vertex>(std::find(alive.begin(), alive.end(), 1) - alive.begin());
  s.slots.assign(rounds.rbegin(), rounds.rend());
  return s;
}

namespace {

struct Level {
  std::vector<std::pair<Vertex, Vertex>> parent_child;
};

// Backward peel: each level removes a target-independent set of at most half
// the remaining vertices (minimum residual degree first), never the root.
// Parents come from a matching on target edges, topped up arbitrarily.
std::vector<Level> peel_independent(const Graph& target, Vertex root) {
  const int n = target.num_vertices();
  std::vector<char> alive(n, 1);
  int left = n;
  std::vector<Level> levels;
  while (left > 1) {
    std::vector<int> deg(n, 0);
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      for (Vertex w : target.neighbors(v)) deg[v] += alive[w];
      if (v != root) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return deg[a] < deg[b]; });
    const std::size_t cap = static_cast<std::size_t>(left / 2);
    // Candidate sets: greedy independent set by residual degree, and every
    // class of a degeneracy coloring of the remaining graph.
    std::vector<Vertex> peel;
    std::vector<char> blocked(n, 0);
    for (Vertex v : order) {
      if (peel.size() == cap) break;
      if (blocked[v]) continue;
      peel.push_back(v);
      for (Vertex w : target.neighbors(v)) blocked[w] = 1;
    }
    std::vector<Vertex> alive_list;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v]) alive_list.push_back(v);
    const Graph sub = target.induced(alive_list);
    auto ord = degeneracy_ordering(sub).ordering;
    std::reverse(ord.begin(), ord.end());
    const Coloring coloring = greedy_coloring(sub, ord);
    std::vector<int> rank(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    for (auto& cls : coloring.classes()) {
      std::vector<Vertex> cand;
      for (Vertex local : cls)
        if (alive_list[local] != root) cand.push_back(alive_list[local]);
      std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
      if (cand.size() > cap) cand.resize(cap);
      if (cand.size() > peel.size()) peel = std::move(cand);
    }
    std::vector<char> taken(n, 0);
    for (Vertex v : peel) taken[v] = 1;
    std::vector<Vertex> rest;
    std::vector<int> index(n, -1);
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && !taken[v]) {
        index[v] = static_cast<int>(rest.size());
        rest.push_back(v);
      }
    std::vector<std::vector<int>> adj(peel.size());
    for (std::size_t i = 0; i < peel.size(); ++i)
      for (Vertex w : target.neighbors(peel[i]))
        if (index[w] >= 0) adj[i].push_back(index[w]);
    auto match = bipartite_matching(static_cast<int>(peel.size()), static_cast<int>(rest.size()), adj);
    std::vector<char> used(rest.size(), 0);
    for (int m : match)
      if (m >= 0) used[m] = 1;
    std::size_t spare = 0;
    Level level;
    for (std::size_t i = 0; i < peel.size(); ++i) {
      if (match[i] < 0) {
        while (used[spare]) ++spare;
        match[i] = static_cast<int>(spare);
        used[spare] = 1;
      }
      level.parent_child.emplace_back(rest[match[i]], peel[i]);
      alive[peel[i]] = 0;
    }
    left -= static_cast<int>(peel.size());
    levels.push_back(std::move(level));
  }
  std::reverse(levels.begin(), levels.end());
  return levels;
}

}  // namespace

Schedule star_spanning_schedule(const Graph& target) {
  require_connected(target);
  const Vertex root = max_degree_vertex(target);
  Schedule s;
  s.d = 4;
  s.initiator = root;
  std::vector<char> born(target.num_vertices(), 0);
  born[root] = 1;
  for (const Level& level : peel_independent(target, root)) {
    Slot slot;
    for (auto [p, c] : level.parent_child) {
      std::set<Vertex> act{p, root};
      for (Vertex w : target.neighbors(c))
        if (born[w]) act.insert(w);
      slot.generations.push_back(Generation{p, c, {act.begin(), act.end()}});
    }
    for (const Generation& g : slot.generations) born[g.child] = 1;
    s.slots.push_back(std::move(slot));
  }
  delete_excess_at_end(s, target);
  return s;
}

Schedule clique_maintaining_schedule(const Graph& target) {
  require_connected(target);
  const Vertex root = max_degree_vertex(target);
  Schedule s;
  s.d = 3;
  s.initiator = root;
  std::vector<Vertex> existing{root};
  for (const Level& level : peel_independent(target, root)) {
    Slot slot;
    for (auto [p, c] : level.parent_child) {
      auto act = existing;
      std::sort(act.begin(), act.end());
      slot.generations.push_back(Generation{p, c, std::move(act)});
    }
    for (const Generation& g : slot.generations) existing.push_back(g.child);
    s.slots.push_back(std::move(slot));
  }
  delete_excess_at_end(s, target);
  return s;
}

}  // namespace growth
