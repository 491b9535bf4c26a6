#include <doctest.h>

#include <bit>

#include "brute.hpp"
#include "growth/basic_schedules.hpp"
#include "growth/oracle.hpp"

using namespace growth;

namespace {

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

Metrics checked(const Schedule& s, const Graph& target) {
  Metrics m = validate(s, target);
  if (s.d == 2) {
    auto rep = check_properties(simulate(s), target);
    CHECK_MESSAGE(rep.ok(), (rep.violations.empty() ? "" : rep.violations.front()));
  }
  return m;
}

}  // namespace

TEST_CASE("clique_schedule") {
  CHECK(checked(clique_schedule(complete_graph(4)), complete_graph(4)) == Metrics{3, 0, 0});
  auto p4 = checked(clique_schedule(path_graph(4)), path_graph(4));
  CHECK(p4.slots == 3);
  CHECK(p4.excess_edges == 3);
  CHECK(checked(clique_schedule(Graph::from_edges(1, {})), Graph::from_edges(1, {})).slots == 0);
  CHECK_THROWS_AS(clique_schedule(Graph::from_edges(2, {})), GraphError);
}

TEST_CASE("improved_clique_schedule") {
  auto star = checked(improved_clique_schedule(star_graph(8)), star_graph(8));
  CHECK(star.slots == 7);
  CHECK(star.excess_edges == 0);
  auto p4 = checked(improved_clique_schedule(path_graph(4)), path_graph(4));
  CHECK(p4.slots == 3);
  CHECK(p4.excess_edges == 1);
  CHECK(checked(improved_clique_schedule(complete_graph(4)), complete_graph(4)).excess_edges == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph t = random_tree(30, seed);
    CHECK(checked(improved_clique_schedule(t), t).excess_edges ==
          static_cast<std::size_t>(29 - t.max_degree()));
  }
  CHECK(improved_clique_schedule(petersen_graph()).initiator == 0);
}

TEST_CASE("path_schedule") {
  auto p8 = path_schedule(8);
  CHECK(checked(p8, path_graph(8)) == Metrics{3, 4, 1});
  CHECK(p8.slots[0].deletions.size() == 0);
  CHECK(p8.slots[1].deletions.size() == 1);
  CHECK(p8.slots[2].deletions.size() == 3);
  CHECK(checked(path_schedule(2), path_graph(2)) == Metrics{1, 0, 0});
  CHECK(path_schedule(1).num_slots() == 0);
  for (int n = 1; n <= 64; ++n) {
    auto m = checked(path_schedule(n), path_graph(n));
    CHECK(m.slots == ceil_log2(n));
    CHECK(m.excess_edges <= static_cast<std::size_t>(std::max(0, n - 2)));
  }
}

TEST_CASE("star_schedule") {
  auto s16 = star_schedule(16);
  auto m = checked(s16, star_graph(16));
  CHECK(m.slots == 4);
  CHECK(m.excess_edges == 11);
  for (int t = 1; t <= 4; ++t) {
    std::size_t leaf_children = 0;
    for (const Generation& g : s16.slots[t - 1].generations) leaf_children += g.parent != 0;
    CHECK(leaf_children == (1u << (t - 1)) - 1);
  }
  CHECK(checked(star_schedule(2), star_graph(2)) == Metrics{1, 0, 0});
  for (int n = 1; n <= 64; ++n) {
    auto mm = checked(star_schedule(n), star_graph(n));
    CHECK(mm.slots == ceil_log2(n));
    CHECK(mm.excess_edges <= static_cast<std::size_t>(n - ceil_log2(n)));
    CHECK(mm.max_excess_lifetime <= 1);
  }
}

TEST_CASE("trimming_schedule") {
  CHECK(validate(trimming_schedule(path_graph(5)), path_graph(5)).slots == 3);
  CHECK(validate(trimming_schedule(star_graph(5)), star_graph(5)).slots == 4);
  std::vector<Edge> k2{{0, 1}};
  CHECK(validate(trimming_schedule(Graph::from_edges(2, k2)), Graph::from_edges(2, k2)).slots == 1);
  CHECK_THROWS_AS(trimming_schedule(cycle_graph(4)), GraphError);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& t : brute::all_labeled_trees(n)) {
      auto s = trimming_schedule(t);
      REQUIRE(s.d == 1);
      REQUIRE(validate(s, t).slots == brute::min_broadcast_time(t));
    }
  }
}

TEST_CASE("star_spanning_schedule (d = 4)") {
  auto p8 = validate(star_spanning_schedule(path_graph(8)), path_graph(8));
  CHECK(p8.slots == 3);
  CHECK(p8.excess_edges <= 15);
  // Same-slot children can never be adjacent, so K4 needs three slots.
  CHECK(validate(star_spanning_schedule(complete_graph(4)), complete_graph(4)).slots == 3);
  CHECK(star_spanning_schedule(Graph::from_edges(1, {})).num_slots() == 0);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph t = random_tree(40 + static_cast<int>(seed), seed);
    auto m = validate(star_spanning_schedule(t), t);
    CHECK(m.slots == ceil_log2(t.num_vertices()));
    CHECK(m.excess_edges <= static_cast<std::size_t>(2 * t.num_vertices() - 1));
  }
  auto grid = validate(star_spanning_schedule(grid_graph(8, 8)), grid_graph(8, 8));
  CHECK(grid.slots == 6);
}

TEST_CASE("clique_maintaining_schedule (d = 3)") {
  auto p4 = validate(clique_maintaining_schedule(path_graph(4)), path_graph(4));
  CHECK(p4.slots == 2);
  CHECK(p4.excess_edges == 2);
  CHECK(validate(clique_maintaining_schedule(complete_graph(4)), complete_graph(4)) ==
        Metrics{3, 0, 0});
  auto p8 = validate(clique_maintaining_schedule(path_graph(8)), path_graph(8));
  CHECK(p8.slots == 3);
  CHECK(p8.excess_edges == 14);
  for (int n = 2; n <= 40; ++n) {
    Graph t = random_tree(n, static_cast<std::uint64_t>(n));
    auto m = validate(clique_maintaining_schedule(t), t);
    CHECK(m.slots == ceil_log2(n));
    CHECK(m.excess_edges <= static_cast<std::size_t>(n * (n - 1) / 2));
  }
}
