#include "growth/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <set>
#include <unordered_map>

namespace growth {

namespace {

using Mask = std::uint32_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

void check_cap(int n, int cap, const char* what) {
  if (cap > kOracleHardCap) throw CapExceeded(std::string(what) + ": cap above hard limit");
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
}

int ceil_log2(int x) { return x <= 1 ? 0 : std::bit_width(static_cast<unsigned>(x - 1)); }

/// Injective choice from per-child option masks (small bipartite search).
bool assign(const std::vector<int>& kids, const std::vector<Mask>& options, std::size_t i,
            Mask used, std::vector<int>& choice) {
  if (i == kids.size()) return true;
  for (Mask o = options[i] & ~used; o; o &= o - 1) {
    int p = std::countr_zero(o);
    choice[i] = p;
    if (assign(kids, options, i + 1, used | bit(p), choice)) return true;
  }
  return false;
}

struct Move {
  Mask peeled = 0;
  std::vector<std::pair<int, int>> parent_child;
};

class ZeroSearch {
 public:
  ZeroSearch(const Graph& g, int d) : n_(g.num_vertices()), d_(d), adj_(adjacency_masks(g)),
      memo_(std::size_t{1} << n_, kUnknown), moves_(std::size_t{1} << n_) {}

  int solve(Mask s) {
    int& slot = memo_[s];
    if (slot != kUnknown) return slot;
    const int size = std::popcount(s);
    if (size == 1) return slot = 0;
    int best = kNone;
    const int floor = ceil_log2(size) - 1;
    std::vector<int> kids;
    std::vector<Mask> options;
    std::vector<int> choice;
    for (Mask l = s; l && best > floor + 1; l = (l - 1) & s) {
      if (2 * std::popcount(l) > size) continue;
      const Mask r = s & ~l;
      kids.clear();
      options.clear();
      bool ok = true;
      for (Mask it = l; it && ok; it &= it - 1) {
        int c = std::countr_zero(it);
        if (adj_[c] & l) ok = false;
        kids.push_back(c);
        options.push_back(parents_of(c, s, r));
        if (!options.back()) ok = false;
      }
      if (!ok) continue;
      choice.assign(kids.size(), -1);
      if (!assign(kids, options, 0, 0, choice)) continue;
      int rest = solve(r);
      if (rest == kNone || rest + 1 >= best) continue;
      best = rest + 1;
      Move m{l, {}};
      for (std::size_t i = 0; i < kids.size(); ++i) m.parent_child.emplace_back(choice[i], kids[i]);
      moves_[s] = std::move(m);
    }
    return memo_[s] = best;
  }

  Schedule witness(Mask full) const {
    Schedule sch;
    sch.d = d_;
    std::vector<Slot> backwards;
    Mask s = full;
    while (std::popcount(s) > 1) {
      const Move& m = moves_[s];
      Slot slot;
      for (auto [p, c] : m.parent_child) {
        Generation g{p, c, {}};
        for (Mask it = adj_[c] & s; it; it &= it - 1) g.activated.push_back(std::countr_zero(it));
        slot.generations.push_back(std::move(g));
      }
      backwards.push_back(std::move(slot));
      s &= ~m.peeled;
    }
    sch.initiator = std::countr_zero(s);
    sch.slots.assign(backwards.rbegin(), backwards.rend());
    return sch;
  }

  static constexpr int kUnknown = -2;
  static constexpr int kNone = INT_MAX;

 private:
  // Parents p in r for child c: adjacent, and every pre-existing neighbor of
  // c within d-1 hops of p inside G[r].
  Mask parents_of(int c, Mask s, Mask r) const {
    Mask out = 0;
    const Mask need = adj_[c] & s;
    for (Mask it = adj_[c] & r; it; it &= it - 1) {
      int p = std::countr_zero(it);
      Mask ball = bit(p);
      for (int step = 0; step < d_ - 1; ++step) {
        Mask grow = ball;
        for (Mask b = ball; b; b &= b - 1) grow |= adj_[std::countr_zero(b)] & r;
        if (grow == ball) break;
        ball = grow;
      }
      if ((need & ~ball) == 0) out |= bit(p);
    }
    return out;
  }

  int n_;
  int d_;
  std::vector<Mask> adj_;
  std::vector<int> memo_;
  std::vector<Move> moves_;
};

// Min-excess search for d = 2. D holds the edges that must exist at the end
// of the current level: target edges plus relays used by later slots.
class ExcessSearch {
 public:
  explicit ExcessSearch(const Graph& g) : n_(g.num_vertices()) {}

  int solve(Mask s, const std::vector<Mask>& dem, int levels) {
    const int size = std::popcount(s);
    if (size == 1) return 0;
    if (levels == 0 || size > (1 << std::min(levels, 20))) return kNone;
    const Key key = make_key(s, dem, levels);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.cost;

    const int min_l = std::max(1, size - (1 << std::min(levels - 1, 20)));
    const int max_l = size / 2;
    Entry entry{kNone, {}};
    std::vector<int> kids, parent;
    for (Mask l = s; l; l = (l - 1) & s) {
      const int pl = std::popcount(l);
      if (pl < min_l || pl > max_l) continue;
      bool independent = true;
      kids.clear();
      for (Mask it = l; it; it &= it - 1) {
        int c = std::countr_zero(it);
        if (dem[c] & l) independent = false;
        kids.push_back(c);
      }
      if (!independent) continue;
      const Mask r = s & ~l;
      parent.assign(kids.size(), -1);
      explore(r, l, dem, levels, kids, parent, 0, 0, 0, entry);
    }
    memo_.emplace(key, entry);
    return entry.cost;
  }

  Schedule witness(Mask full, std::vector<Mask> dem, int levels) const {
    Schedule sch;
    std::vector<Slot> backwards;
    Mask s = full;
    while (std::popcount(s) > 1) {
      const Entry& e = memo_.at(make_key(s, dem, levels));
      Slot slot;
      std::vector<Mask> next(n_, 0);
      for (auto [p, c] : e.move.parent_child) {
        Generation g{p, c, {}};
        Mask act = (dem[c] & s) | bit(p);
        for (Mask it = act; it; it &= it - 1) g.activated.push_back(std::countr_zero(it));
        slot.generations.push_back(std::move(g));
      }
      const Mask r = s & ~e.move.peeled;
      advance(r, dem, e.move, next);
      backwards.push_back(std::move(slot));
      dem = std::move(next);
      s = r;
      --levels;
    }
    sch.initiator = std::countr_zero(s);
    sch.slots.assign(backwards.rbegin(), backwards.rend());
    return sch;
  }

  static constexpr int kNone = INT_MAX;

 private:
  struct Key {
    Mask s;
    int levels;
    std::uint64_t edges;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.edges * 0x9e3779b97f4a7c15ULL ^ (std::uint64_t{k.s} << 8) ^
                                        static_cast<std::uint64_t>(k.levels));
    }
  };
  struct Entry {
    int cost;
    Move move;
  };

  Key make_key(Mask s, const std::vector<Mask>& dem, int levels) const {
    std::uint64_t edges = 0;
    int idx = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++idx)
        if ((s >> i & 1) && (s >> j & 1) && (dem[i] >> j & 1)) edges |= std::uint64_t{1} << idx;
    return {s, levels, edges};
  }

  // Demand set for the level below: surviving demands plus parent relays.
  void advance(Mask r, const std::vector<Mask>& dem, const Move& m, std::vector<Mask>& next) const {
    for (int v = 0; v < n_; ++v) next[v] = (r >> v & 1) ? dem[v] & r : 0;
    for (auto [p, c] : m.parent_child) {
      Mask need = dem[c] & r & ~bit(p);
      next[p] |= need;
      for (Mask it = need; it; it &= it - 1) next[std::countr_zero(it)] |= bit(p);
    }
  }

  void explore(Mask r, Mask l, const std::vector<Mask>& dem, int levels,
               const std::vector<int>& kids, std::vector<int>& parent, std::size_t i, Mask used,
               int cost, Entry& entry) {
    if (cost >= entry.cost) return;
    if (i == kids.size()) {
      Move m{l, {}};
      for (std::size_t j = 0; j < kids.size(); ++j) m.parent_child.emplace_back(parent[j], kids[j]);
      std::vector<Mask> next(n_);
      advance(r, dem, m, next);
      int added = 0;
      for (int v = 0; v < n_; ++v) added += std::popcount(next[v] & ~dem[v]);
      added /= 2;
      if (cost + added >= entry.cost) return;
      int rest = solve(r, next, levels - 1);
      if (rest == kNone || cost + added + rest >= entry.cost) return;
      entry.cost = cost + added + rest;
      entry.move = std::move(m);
      return;
    }
    const int c = kids[i];
    for (Mask it = r & ~used; it; it &= it - 1) {
      int p = std::countr_zero(it);
      parent[i] = p;
      int extra = (dem[c] >> p & 1) ? 0 : 1;
      explore(r, l, dem, levels, kids, parent, i + 1, used | bit(p), cost + extra, entry);
    }
  }

  int n_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
};

}  // namespace

std::optional<OracleResult> min_slots_zero_excess(const Graph& target, int d, int cap) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  const int n = target.num_vertices();
  check_cap(n, cap, "min_slots_zero_excess");
  if (n == 0) throw GraphError("empty target");
  ZeroSearch search(target, d);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  int k = search.solve(full);
  if (k == ZeroSearch::kNone) return std::nullopt;
  return OracleResult{k, 0, search.witness(full)};
}

std::optional<OracleResult> min_excess_with_budget(const Graph& target, int k, int d, int cap) {
  const int n = target.num_vertices();
  check_cap(n, std::min(cap, 11), "min_excess_with_budget");
  if (k > cap) throw CapExceeded("min_excess_with_budget: k exceeds cap");
  if (n == 0) throw GraphError("empty target");
  if (k < 0) return std::nullopt;
  if (d == 1) {
    // Every d = 1 instance is a tree, so no edge is ever deletable.
    auto zero = min_slots_zero_excess(target, 1, cap);
    if (!zero || zero->slots > k) return std::nullopt;
    return zero;
  }
  if (d != 2) throw std::invalid_argument("min_excess_with_budget supports d = 1 and d = 2");
  if (!is_connected(target)) return std::nullopt;
  ExcessSearch search(target);
  const Mask full = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  auto dem = adjacency_masks(target);
  int best = search.solve(full, dem, k);
  if (best == ExcessSearch::kNone) return std::nullopt;
  Schedule w = search.witness(full, dem, k);
  if (!w.slots.empty()) {
    std::set<Edge> excess;
    for (const Slot& slot : w.slots)
      for (const Generation& g : slot.generations)
        for (Vertex x : g.activated)
          if (!target.has_edge(g.child, x)) excess.insert(Edge(g.child, x));
    w.slots.back().deletions.assign(excess.begin(), excess.end());
  }
  return OracleResult{w.num_slots(), static_cast<std::size_t>(best), std::move(w)};
}

namespace {

std::vector<int> refine_colors(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, 0);
  int classes = 1;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> rank;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for (Mask it = adj[v]; it; it &= it - 1) around.push_back(color[std::countr_zero(it)]);
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
      rank.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, value] : rank) value = next++;
    for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (next == classes) return color;
    classes = next;
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : adj_(adjacency_masks(g)), n_(g.num_vertices()) {
    pairs_ = n_ * (n_ - 1) / 2;
    auto color = refine_colors(adj_);
    cell_of_position_.resize(n_);
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    for (int pos = 0; pos < n_; ++pos) cell_of_position_[pos] = color[order[pos]];
    color_ = std::move(color);
    best_ = pairs_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pairs_) - 1;
    placed_.assign(n_, -1);
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(int pos, std::uint64_t code, int bits) {
    if (pos == n_) {
      best_ = std::min(best_, code);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_ >> v & 1 || color_[v] != cell_of_position_[pos]) continue;
      std::uint64_t next = code;
      for (int i = 0; i < pos; ++i) next = (next << 1) | (adj_[placed_[i]] >> v & 1);
      const int nbits = bits + pos;
      if (next > (best_ >> (pairs_ - nbits))) continue;
      placed_[pos] = v;
      used_ |= bit(v);
      search(pos + 1, next, nbits);
      used_ &= ~bit(v);
    }
  }

  std::vector<Mask> adj_;
  int n_;
  int pairs_ = 0;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  std::vector<int> placed_;
  Mask used_ = 0;
  std::uint64_t best_ = 0;
};

std::vector<Graph> enumerate(int n, int cap, bool connected_only) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > cap || cap > 11) {
    throw CapExceeded("graph enumeration: n = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(std::min(cap, 11)));
  }
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::set<std::uint64_t> codes;
    for (const Graph& g : level) {
      for (Mask sub = connected_only ? 1 : 0; sub < bit(size - 1); ++sub) {
        std::vector<Edge> edges = g.edges();
        for (Mask it = sub; it; it &= it - 1) edges.emplace_back(std::countr_zero(it), size - 1);
        codes.insert(canonical_code(Graph::from_edges(size, edges)));
      }
    }
    level.clear();
    for (std::uint64_t code : codes) level.push_back(graph_from_code(size, code));
  }
  return level;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.num_vertices() > 11) throw CapExceeded("canonical_code: n > 11");
  return Canonizer(g).run();
}

Graph graph_from_code(int n, std::uint64_t code) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Edge> edges;
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (code >> (pairs - 1 - idx) & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

std::vector<Graph> connected_graphs(int n, int cap) { return enumerate(n, cap, true); }

std::vector<Graph> all_graphs(int n, int cap) { return enumerate(n, cap, false); }

}  // namespace growth
