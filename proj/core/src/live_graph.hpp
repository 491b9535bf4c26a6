#pragma once

// Mutable graph over a fixed identifier space, used while simulating.

#include <unordered_map>
#include <vector>

#include "growth/graph.hpp"

namespace growth::detail {

class LiveGraph {
 public:
  explicit LiveGraph(int id_space);

  int id_space() const { return static_cast<int>(adj_.size()); }
  bool present(Vertex v) const { return present_[v] != 0; }
  void add_vertex(Vertex v) {
    if (!present_[v]) ++num_present_;
    present_[v] = 1;
  }

  bool has_edge(Vertex a, Vertex b) const;
  /// Slot in which the live edge (a, b) was activated; -1 if absent.
  int activation_slot(Vertex a, Vertex b) const;
  void add_edge(Vertex a, Vertex b, int slot);
  void remove_edge(Vertex a, Vertex b);
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Marks every vertex within `radius` hops of `from`; query with in_ball.
  void mark_ball(Vertex from, int radius);
  bool in_ball(Vertex v) const { return stamp_a_[v] == epoch_; }

  /// True iff a and b stay connected once the live edge (a, b) is removed.
  bool connected_without(Vertex a, Vertex b);

  /// Removes every edge in `batch` if the instance stays connected with all
  /// of them gone; otherwise leaves the graph untouched and returns false.
  /// Every edge must be live and listed once.
  bool remove_all_if_connected(const std::vector<Edge>& batch);

  std::vector<Edge> sorted_edges() const;
  Graph snapshot() const;

 private:
  void next_epoch();

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> present_;
  // Activation slot plus the edge's index in each endpoint's adjacency row.
  struct EdgeInfo {
    int slot;
    int pos_lo;  // index of the larger endpoint in adj_[smaller]
    int pos_hi;
  };
  void drop(Vertex owner, int pos);
  bool connected();

  std::unordered_map<std::uint64_t, EdgeInfo> edges_;
  int num_present_ = 0;
  std::vector<unsigned> stamp_a_;
  std::vector<unsigned> stamp_b_;
  unsigned epoch_ = 0;
  std::vector<Vertex> queue_a_;
  std::vector<Vertex> queue_b_;
};

}  // namespace growth::detail
