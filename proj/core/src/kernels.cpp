#include "growth/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace growth {

namespace {

// Classic O(V^3) Edmonds search: BFS from a free root over an alternating
// forest, contracting odd cycles by relabelling their base.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.num_vertices()), mate_(n_, -1), link_(n_), base_(n_), used_(n_),
        blossom_(n_) {}

  std::vector<Vertex> run() {
    for (const Edge& e : g_.edges()) {
      if (mate_[e.u] < 0 && mate_[e.v] < 0) {
        mate_[e.u] = e.v;
        mate_[e.v] = e.u;
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] >= 0) continue;
      Vertex end = find_path(root);
      while (end >= 0) {
        Vertex pv = link_[end];
        Vertex next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return mate_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = link_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = link_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      link_[v] = child;
      child = mate_[v];
      v = link_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(link_.begin(), link_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && link_[mate_[to]] >= 0)) {
          Vertex b = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (link_[to] < 0) {
          link_[to] = v;
          if (mate_[to] < 0) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> link_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) {
  Matching m;
  m.mate = Blossom(g).run();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (m.mate[v] > v) m.pairs.emplace_back(v, m.mate[v]);
  }
  return m;
}

std::vector<int> bipartite_matching(int left, int right,
                                    const std::vector<std::vector<int>>& adj) {
  std::vector<int> match_left(left, -1);
  std::vector<int> match_right(right, -1);
  std::vector<int> visited(right, -1);
  // Iterative augmenting DFS; frames hold (left vertex, next edge index).
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root = 0; root < left; ++root) {
    stack.assign(1, {root, 0});
    bool found = false;
    while (!stack.empty() && !found) {
      auto& [x, idx] = stack.back();
      if (idx == adj[x].size()) {
        stack.pop_back();
        continue;
      }
      int y = adj[x][idx++];
      if (visited[y] == root) continue;
      visited[y] = root;
      if (match_right[y] < 0) {
        // Flip the alternating path recorded on the stack.
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
          int lx = it->first;
          int ly = adj[lx][it->second - 1];
          match_left[lx] = ly;
          match_right[ly] = lx;
        }
        found = true;
      } else {
        stack.push_back({match_right[y], 0});
      }
    }
  }
  return match_left;
}

bool TwoSatFormula::satisfied_by(const std::vector<bool>& assignment) const {
  auto value = [&](Literal l) { return assignment[l.var] != l.negated; };
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const auto& c) { return value(c.first) || value(c.second); });
}

std::optional<std::vector<bool>> two_sat(const TwoSatFormula& f) {
  const int n = f.num_vars;
  auto node = [&](Literal l) {
    if (l.var < 0 || l.var >= n) throw std::invalid_argument("literal variable out of range");
    return 2 * l.var + (l.negated ? 0 : 1);
  };
  std::vector<std::vector<int>> out(2 * n);
  for (const auto& [a, b] : f.clauses) {
    out[node(!a)].push_back(node(b));
    out[node(!b)].push_back(node(a));
  }

  // Iterative Tarjan; components are numbered in reverse topological order.
  const int total = 2 * n;
  std::vector<int> index(total, -1), low(total, 0), comp(total, -1);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> frames;
  int counter = 0, components = 0;
  for (int s = 0; s < total; ++s) {
    if (index[s] >= 0) continue;
    frames.push_back({s, 0});
    while (!frames.empty()) {
      auto& [v, i] = frames.back();
      if (i == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
      }
      if (i < out[v].size()) {
        int w = out[v][i++];
        if (index[w] < 0) {
          frames.push_back({w, 0});
        } else if (comp[w] < 0) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      int done = v;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }

  std::vector<bool> assignment(n);
  for (int x = 0; x < n; ++x) {
    const int yes = 2 * x + 1, no = 2 * x;
    if (comp[yes] == comp[no]) return std::nullopt;
    assignment[x] = comp[yes] < comp[no];
  }
  return assignment;
}

}  // namespace growth
