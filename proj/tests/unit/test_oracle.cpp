#include <doctest.h>

#include "brute.hpp"
#include "growth/oracle.hpp"

using namespace growth;

TEST_CASE("connected_graphs counts match the known sequence") {
  const std::vector<std::size_t> want{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto graphs = connected_graphs(n);
    CHECK(graphs.size() == want[n - 1]);
    for (const Graph& g : graphs) REQUIRE(is_connected(g));
  }
  CHECK(connected_graphs(3)[0].num_edges() == 2);
  CHECK(connected_graphs(3)[1].num_edges() == 3);
  CHECK_THROWS_AS(connected_graphs(9), CapExceeded);
}

TEST_CASE("all_graphs counts") {
  const std::vector<std::size_t> want{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(all_graphs(n).size() == want[n - 1]);
}

TEST_CASE("canonical_code is a labeling invariant") {
  Graph p = petersen_graph();
  std::vector<Vertex> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
  std::vector<Edge> moved;
  for (const Edge& e : p.edges()) moved.emplace_back(perm[e.u], perm[e.v]);
  CHECK(canonical_code(p) == canonical_code(Graph::from_edges(10, moved)));
  CHECK(canonical_code(cycle_graph(6)) != canonical_code(path_graph(6)));
  CHECK(canonical_code(graph_from_code(6, canonical_code(cycle_graph(6)))) ==
        canonical_code(cycle_graph(6)));
}

TEST_CASE("min_slots_zero_excess examples") {
  auto p4 = min_slots_zero_excess(path_graph(4));
  REQUIRE(p4);
  CHECK(p4->slots == 2);
  CHECK(validate(p4->witness, path_graph(4)) == Metrics{2, 0, 0});
  CHECK_FALSE(min_slots_zero_excess(cycle_graph(4)));
  auto k4 = min_slots_zero_excess(complete_graph(4));
  REQUIRE(k4);
  CHECK(k4->slots == 3);
  CHECK_THROWS_AS(min_slots_zero_excess(path_graph(9)), CapExceeded);
  CHECK(min_slots_zero_excess(path_graph(9), 2, 9)->slots == 5);  // no relays without excess
}

TEST_CASE("d = 1 oracle matches two independent references on all labeled trees n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& t : brute::all_labeled_trees(n)) {
      auto r = min_slots_zero_excess(t, 1);
      REQUIRE(r);
      REQUIRE(r->slots == brute::min_broadcast_time(t));
      REQUIRE(r->slots == brute::d1_min_slots_subsets(t));
      REQUIRE(validate(r->witness, t).slots == r->slots);
    }
  }
}

TEST_CASE("min_excess_with_budget examples and monotonicity") {
  auto c4 = min_excess_with_budget(cycle_graph(4), 3);
  REQUIRE(c4);
  CHECK(c4->excess == 1);
  CHECK(validate(c4->witness, cycle_graph(4)).excess_edges == 1);
  std::vector<Edge> k2e{{0, 1}};
  auto k2 = min_excess_with_budget(Graph::from_edges(2, k2e), 1);
  REQUIRE(k2);
  CHECK(k2->excess == 0);
  CHECK_FALSE(min_excess_with_budget(path_graph(5), 2));

  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      auto zero = min_slots_zero_excess(g);
      std::optional<std::size_t> previous;
      for (int k = 0; k <= n - 1; ++k) {
        auto r = min_excess_with_budget(g, k);
        if (!r) {
          REQUIRE_FALSE(previous);
          continue;
        }
        auto m = validate(r->witness, g);
        REQUIRE(m.excess_edges == r->excess);
        REQUIRE(m.slots <= k);
        if (previous) REQUIRE(r->excess <= *previous);
        previous = r->excess;
        REQUIRE((r->excess == 0) == (zero && zero->slots <= k));
      }
    }
  }
}

TEST_CASE("min_excess on paths and stars at log n slots") {
  auto p8 = min_excess_with_budget(path_graph(8), 3);
  REQUIRE(p8);
  CHECK(validate(p8->witness, path_graph(8)).excess_edges == p8->excess);
  CHECK(p8->excess >= 1);
  auto s8 = min_excess_with_budget(star_graph(8), 3);
  REQUIRE(s8);
  CHECK(s8->excess == 4);
  CHECK_THROWS_AS(min_excess_with_budget(path_graph(4), 3, 3), std::invalid_argument);
}
