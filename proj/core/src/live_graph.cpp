#include "live_graph.hpp"

#include <algorithm>

namespace growth::detail {

LiveGraph::LiveGraph(int id_space)
    : adj_(id_space), present_(id_space, 0), stamp_a_(id_space, 0), stamp_b_(id_space, 0) {}

bool LiveGraph::has_edge(Vertex a, Vertex b) const {
  return edges_.find(edge_key(a, b)) != edges_.end();
}

int LiveGraph::activation_slot(Vertex a, Vertex b) const {
  auto it = edges_.find(edge_key(a, b));
  return it == edges_.end() ? -1 : it->second.slot;
}

void LiveGraph::add_edge(Vertex a, Vertex b, int slot) {
  if (a > b) std::swap(a, b);
  EdgeInfo info{slot, static_cast<int>(adj_[a].size()), static_cast<int>(adj_[b].size())};
  if (edges_.emplace(edge_key(a, b), info).second) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
}

void LiveGraph::drop(Vertex owner, int pos) {
  auto& row = adj_[owner];
  const Vertex moved = row.back();
  row[pos] = moved;
  row.pop_back();
  if (moved == owner || pos == static_cast<int>(row.size())) return;
  EdgeInfo& info = edges_.find(edge_key(owner, moved))->second;
  (owner < moved ? info.pos_lo : info.pos_hi) = pos;
}

void LiveGraph::remove_edge(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  auto it = edges_.find(edge_key(a, b));
  if (it == edges_.end()) return;
  const EdgeInfo info = it->second;
  edges_.erase(it);
  drop(a, info.pos_lo);
  drop(b, info.pos_hi);
}

bool LiveGraph::connected() {
  Vertex start = 0;
  while (start < id_space() && !present_[start]) ++start;
  if (start == id_space()) return true;
  next_epoch();
  queue_a_.assign(1, start);
  stamp_a_[start] = epoch_;
  for (std::size_t head = 0; head < queue_a_.size(); ++head)
    for (Vertex w : adj_[queue_a_[head]])
      if (stamp_a_[w] != epoch_) {
        stamp_a_[w] = epoch_;
        queue_a_.push_back(w);
      }
  return static_cast<int>(queue_a_.size()) == num_present_;
}

bool LiveGraph::remove_all_if_connected(const std::vector<Edge>& batch) {
  std::vector<int> slots;
  slots.reserve(batch.size());
  for (const Edge& e : batch) {
    slots.push_back(activation_slot(e.u, e.v));
    remove_edge(e.u, e.v);
  }
  if (connected()) return true;
  for (std::size_t i = 0; i < batch.size(); ++i) add_edge(batch[i].u, batch[i].v, slots[i]);
  return false;
}

void LiveGraph::next_epoch() {
  if (++epoch_ == 0) {
    std::fill(stamp_a_.begin(), stamp_a_.end(), 0);
    std::fill(stamp_b_.begin(), stamp_b_.end(), 0);
    epoch_ = 1;
  }
}

void LiveGraph::mark_ball(Vertex from, int radius) {
  next_epoch();
  queue_a_.clear();
  queue_a_.push_back(from);
  stamp_a_[from] = epoch_;
  std::size_t head = 0;
  for (int depth = 0; depth < radius; ++depth) {
    std::size_t end = queue_a_.size();
    for (; head < end; ++head) {
      for (Vertex w : adj_[queue_a_[head]]) {
        if (stamp_a_[w] != epoch_) {
          stamp_a_[w] = epoch_;
          queue_a_.push_back(w);
        }
      }
    }
  }
}

bool LiveGraph::connected_without(Vertex a, Vertex b) {
  if (adj_[a].size() > adj_[b].size()) std::swap(a, b);
  // Two-hop shortcut through a common neighbor covers the usual relay case.
  for (Vertex y : adj_[a]) {
    if (y != b && has_edge(y, b)) return true;
  }
  next_epoch();
  queue_a_.assign(1, a);
  queue_b_.assign(1, b);
  stamp_a_[a] = epoch_;
  stamp_b_[b] = epoch_;
  std::size_t head_a = 0;
  std::size_t head_b = 0;
  while (head_a < queue_a_.size() && head_b < queue_b_.size()) {
    bool expand_a = queue_a_.size() - head_a <= queue_b_.size() - head_b;
    auto& queue = expand_a ? queue_a_ : queue_b_;
    auto& mine = expand_a ? stamp_a_ : stamp_b_;
    auto& theirs = expand_a ? stamp_b_ : stamp_a_;
    std::size_t& head = expand_a ? head_a : head_b;
    Vertex x = queue[head++];
    for (Vertex y : adj_[x]) {
      if ((x == a && y == b) || (x == b && y == a)) continue;
      if (theirs[y] == epoch_) return true;
      if (mine[y] != epoch_) {
        mine[y] = epoch_;
        queue.push_back(y);
      }
    }
  }
  return false;
}

std::vector<Edge> LiveGraph::sorted_edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, info] : edges_) {
    out.emplace_back(static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph LiveGraph::snapshot() const {
  auto edges = sorted_edges();
  return Graph::from_edges(id_space(), edges);
}

}  // namespace growth::detail
