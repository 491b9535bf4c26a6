#include "growth/zero_excess.hpp"

#include <algorithm>
#include <bit>

#include "growth/kernels.hpp"

namespace growth {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw GraphError("target graph must be connected");
}

// N[v] subset of N[w] among vertices with alive[x] set.
bool closed_subset_alive(const Graph& g, Vertex v, Vertex w, const std::vector<char>& alive) {
  if (!g.has_edge(v, w)) return false;
  for (Vertex x : g.neighbors(v)) {
    if (x != w && alive[x] && !g.has_edge(x, w)) return false;
  }
  return true;
}

}  // namespace

bool closed_subset(const Graph& g, Vertex v, Vertex w) {
  std::vector<char> alive(g.num_vertices(), 1);
  return v != w && closed_subset_alive(g, v, w, alive);
}

std::vector<CandidateInfo> candidate_set(const Graph& g) {
  std::vector<char> alive(g.num_vertices(), 1);
  std::vector<CandidateInfo> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    CandidateInfo info{v, {}};
    for (Vertex w : g.neighbors(v)) {
      if (closed_subset_alive(g, v, w, alive)) info.parents.push_back(w);
    }
    if (!info.parents.empty()) out.push_back(std::move(info));
  }
  return out;
}

std::optional<Schedule> elimination_schedule(const Graph& target) {
  require_connected(target);
  const int n = target.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<Generation> peeled;  // removal order
  for (int left = n; left > 1; --left) {
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v) {
      if (!alive[v]) continue;
      for (Vertex w : target.neighbors(v)) {
        if (!alive[w] || !closed_subset_alive(target, v, w, alive)) continue;
        Generation g{w, v, {}};
        for (Vertex x : target.neighbors(v))
          if (alive[x]) g.activated.push_back(x);
        peeled.push_back(std::move(g));
        alive[v] = 0;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  Schedule s;
  s.initiator = static_cast<Vertex>(std::find(alive.begin(), alive.end(), 1) - alive.begin());
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    s.slots.push_back(Slot{{std::move(*it)}, {}});
  }
  return s;
}

std::optional<Schedule> constant_excess_schedule(const Graph& target, int ell, int cap) {
  if (ell < 0 || ell > cap) {
    throw std::invalid_argument("ell = " + std::to_string(ell) + " outside 0.." +
                                std::to_string(cap));
  }
  require_connected(target);
  const int n = target.num_vertices();
  std::vector<Edge> non_edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!target.has_edge(a, b)) non_edges.emplace_back(a, b);

  const int m = static_cast<int>(non_edges.size());
  for (int size = 0; size <= std::min(ell, m); ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      std::vector<Edge> edges = target.edges();
      std::vector<Edge> added;
      for (int i : pick) added.push_back(non_edges[i]);
      edges.insert(edges.end(), added.begin(), added.end());
      if (auto s = elimination_schedule(Graph::from_edges(n, edges))) {
        if (!added.empty()) s->slots.back().deletions = added;
        return s;
      }
      // Next combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

struct Peel {
  std::vector<Vertex> left, right;
  std::vector<int> parent_of;  // index into right
};

// One backward level of fast growth. With `partner_only`, a vertex may join L
// only when its own mate can be its parent, so the matching doubles as the
// parent assignment.
std::optional<Peel> peel_level(const Graph& h, const Matching& m, bool partner_only) {
  const int size = h.num_vertices();
  const int vars = static_cast<int>(m.pairs.size());
  std::vector<int> var_of(size);
  std::vector<bool> is_v(size);  // true for the side chosen when x_i holds
  TwoSatFormula f;
  f.num_vars = vars;
  std::vector<char> cand(size, 0);
  for (Vertex x = 0; x < size; ++x) {
    if (partner_only) {
      cand[x] = closed_subset(h, x, m.mate[x]);
      continue;
    }
    for (Vertex w : h.neighbors(x)) {
      if (closed_subset(h, x, w)) {
        cand[x] = 1;
        break;
      }
    }
  }
  for (int i = 0; i < vars; ++i) {
    auto [u, v] = m.pairs[i];
    var_of[u] = var_of[v] = i;
    is_v[v] = true;
    if (!cand[u] && !cand[v]) return std::nullopt;
    if (!cand[v]) f.add_unit(Literal::neg(i));
    if (!cand[u]) f.add_unit(Literal::pos(i));
  }
  // A vertex x is in L exactly when this literal holds.
  auto in_l = [&](Vertex x) {
    return is_v[x] ? Literal::pos(var_of[x]) : Literal::neg(var_of[x]);
  };
  for (const Edge& e : h.edges()) {
    if (m.mate[e.u] == e.v) continue;
    f.add_clause(!in_l(e.u), !in_l(e.v));
  }
  auto sat = two_sat(f);
  if (!sat) return std::nullopt;

  Peel p;
  std::vector<int> side(size, -1);
  for (Vertex x = 0; x < size; ++x) {
    bool chosen = (*sat)[var_of[x]] == is_v[x];
    side[x] = static_cast<int>(chosen ? p.left.size() : p.right.size());
    (chosen ? p.left : p.right).push_back(x);
  }
  std::vector<std::vector<int>> adj(p.left.size());
  for (std::size_t i = 0; i < p.left.size(); ++i) {
    for (Vertex w : h.neighbors(p.left[i])) {
      if (closed_subset(h, p.left[i], w)) adj[i].push_back(side[w]);
    }
  }
  p.parent_of = bipartite_matching(static_cast<int>(p.left.size()),
                                   static_cast<int>(p.right.size()), adj);
  if (std::count(p.parent_of.begin(), p.parent_of.end(), -1) > 0) return std::nullopt;
  return p;
}

}  // namespace

std::optional<Schedule> fast_growth(const Graph& target) {
  const int n = target.num_vertices();
  if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n))) {
    throw UnsupportedSize("UNSUPPORTED_SIZE: fast growth needs n = 2^k, got " +
                          std::to_string(n));
  }
  if (!is_connected(target)) return std::nullopt;

  std::vector<Vertex> current(n);
  for (Vertex v = 0; v < n; ++v) current[v] = v;
  std::vector<Slot> levels;  // last slot first
  while (current.size() > 1) {
    const Graph h = target.induced(current);
    Matching m = max_matching(h);
    if (!m.is_perfect()) return std::nullopt;

    // The 2-SAT formula cannot express the parent matching, so a satisfying
    // L may lack one. Retry with partner-relative candidacy before giving up.
    auto peel = peel_level(h, m, false);
    if (!peel) peel = peel_level(h, m, true);
    if (!peel) return std::nullopt;

    Slot slot;
    for (std::size_t i = 0; i < peel->left.size(); ++i) {
      Vertex child = peel->left[i];
      Generation g{current[peel->right[peel->parent_of[i]]], current[child], {}};
      for (Vertex w : h.neighbors(child)) g.activated.push_back(current[w]);
      slot.generations.push_back(std::move(g));
    }
    levels.push_back(std::move(slot));
    std::vector<Vertex> next;
    for (Vertex x : peel->right) next.push_back(current[x]);
    current = std::move(next);
  }
  Schedule s;
  s.initiator = current.front();
  s.slots.assign(levels.rbegin(), levels.rend());
  return s;
}

}  // namespace growth
