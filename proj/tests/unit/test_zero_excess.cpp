#include <doctest.h>

#include "brute.hpp"
#include "growth/oracle.hpp"
#include "growth/zero_excess.hpp"

using namespace growth;

namespace {

// Replays a zero-excess schedule and checks each peel level: the children
// are independent and each one is dominated by its parent.
void check_peel_levels(const Schedule& s, const Graph& target) {
  auto tr = simulate(s);
  for (int t = 1; t <= s.num_slots(); ++t) {
    const Graph& g = tr.instances[t];
    for (const Generation& gen : s.slots[t - 1].generations) {
      for (const Generation& other : s.slots[t - 1].generations) {
        CHECK_FALSE(g.has_edge(gen.child, other.child));
      }
      for (Vertex x : g.neighbors(gen.child)) {
        CHECK((x == gen.parent || g.has_edge(x, gen.parent)));
      }
    }
  }
  CHECK(check_properties(tr, target).ok());
}

}  // namespace

TEST_CASE("candidate_set examples") {
  auto p3 = candidate_set(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == CandidateInfo{0, {1}});
  CHECK(p3[1] == CandidateInfo{2, {1}});
  CHECK(candidate_set(cycle_graph(4)).empty());
  auto k4 = candidate_set(complete_graph(4));
  REQUIRE(k4.size() == 4);
  CHECK(k4[2].parents == std::vector<Vertex>{0, 1, 3});
}

TEST_CASE("elimination_schedule examples") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& t : brute::all_labeled_trees(n)) {
      auto s = elimination_schedule(t);
      REQUIRE(s);
      auto m = validate(*s, t);
      CHECK(m.slots == n - 1);
      CHECK(m.excess_edges == 0);
    }
  }
  CHECK_FALSE(elimination_schedule(cycle_graph(4)));
  auto k4 = elimination_schedule(complete_graph(4));
  REQUIRE(k4);
  CHECK(validate(*k4, complete_graph(4)) == Metrics{3, 0, 0});
  std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(elimination_schedule(Graph::from_edges(4, split)), GraphError);
}

TEST_CASE("elimination_schedule agrees with the ordering oracle for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      auto s = elimination_schedule(g);
      REQUIRE(s.has_value() == brute::has_elimination_ordering(g));
      if (s) CHECK(validate(*s, g).excess_edges == 0);
    }
  }
}

TEST_CASE("constant_excess_schedule") {
  auto c4 = constant_excess_schedule(cycle_graph(4), 1);
  REQUIRE(c4);
  auto c4m = validate(*c4, cycle_graph(4));
  CHECK(c4m.slots == 3);
  CHECK(c4m.excess_edges == 1);
  CHECK(c4->slots.back().deletions == std::vector<Edge>{{0, 2}});
  Graph tree = random_tree(9, 3);
  CHECK(constant_excess_schedule(tree, 0) == elimination_schedule(tree));
  auto c6 = constant_excess_schedule(cycle_graph(6), 1);
  auto c6_oracle = min_excess_with_budget(cycle_graph(6), 5);
  REQUIRE(c6_oracle);
  CHECK(c6.has_value() == (c6_oracle->excess <= 1));
  if (c6) CHECK(validate(*c6, cycle_graph(6)).excess_edges <= 1);
  CHECK_THROWS_AS(constant_excess_schedule(cycle_graph(4), 4), std::invalid_argument);
  CHECK(constant_excess_schedule(cycle_graph(4), 4, 4).has_value());
}

TEST_CASE("fast_growth examples") {
  auto p4 = fast_growth(path_graph(4));
  REQUIRE(p4);
  CHECK(validate(*p4, path_graph(4)) == Metrics{2, 0, 0});
  check_peel_levels(*p4, path_graph(4));
  CHECK_FALSE(fast_growth(cycle_graph(4)));
  CHECK_FALSE(fast_growth(complete_graph(4)));
  CHECK_FALSE(fast_growth(star_graph(4)));
  CHECK_THROWS_AS(fast_growth(path_graph(6)), UnsupportedSize);
  auto k1 = fast_growth(Graph::from_edges(1, {}));
  REQUIRE(k1);
  CHECK(k1->num_slots() == 0);
  std::vector<Edge> k2e{{0, 1}};
  Graph k2 = Graph::from_edges(2, k2e);
  CHECK(validate(*fast_growth(k2), k2) == Metrics{1, 0, 0});
}

TEST_CASE("fast_growth on larger known-positive instances") {
  // The binomial tree on 2^k vertices is grown by one child per vertex per slot.
  for (int delta = 1; delta <= 9; ++delta) {
    const int n = 1 << delta;
    std::vector<Edge> edges;
    for (int t = 1; t <= delta; ++t)
      for (int i = 0; i < (1 << (t - 1)); ++i) edges.emplace_back(i, i + (1 << (t - 1)));
    Graph g = Graph::from_edges(n, edges);
    auto s = fast_growth(g);
    REQUIRE(s);
    CHECK(validate(*s, g) == Metrics{delta, 0, 0});
    if (n <= 64) check_peel_levels(*s, g);
  }
}

TEST_CASE("fast_growth recovers when the 2-SAT choice has no parent matching") {
  // The formula admits L = {0,1,2,4}, but 1 and 4 both need parent 6.
  // Only L = {0,1,2,3} works.
  std::vector<Edge> e{{0, 7}, {1, 6}, {2, 5}, {2, 7}, {3, 4}, {3, 6},
                      {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
  Graph g = Graph::from_edges(8, e);
  auto s = fast_growth(g);
  REQUIRE(s);
  CHECK(validate(*s, g) == Metrics{3, 0, 0});
  check_peel_levels(*s, g);
}
