#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "growth/bounds.hpp"
#include "growth/oracle.hpp"
#include "growth/zero_excess.hpp"

using namespace growth;

TEST_CASE("clique and chromatic numbers match brute force") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : all_graphs(n)) {
      CHECK(clique_number(g).value == brute::clique_number(g));
      CHECK(chromatic_number(g).value == brute::chromatic_number(g));
    }
  CHECK(chromatic_number(petersen_graph()).value == 3);
  CHECK(clique_number(petersen_graph()).value == 2);
  auto big = chromatic_number(grid_graph(5, 5));
  CHECK_FALSE(big.exact);
  CHECK(big.value == 2);
}

TEST_CASE("slot_lower_bound") {
  CHECK(slot_lower_bound(complete_graph(4), 2) == 3);
  CHECK(slot_lower_bound(Graph::from_edges(1, {}), 2) == 0);
  CHECK(slot_lower_bound(Graph::from_edges(1, {}), 1) == 0);
  for (int n = 2; n <= 20; ++n) CHECK(slot_lower_bound(path_graph(n), 1) == (n + 1) / 2);
  CHECK(slot_lower_bound(star_graph(5), 1) == 4);
  CHECK(slot_lower_bound(path_graph(9), 2) == 4);
  CHECK_FALSE(slot_lower_bound_details(grid_graph(5, 5), 2).exact);
  CHECK_THROWS_AS(slot_lower_bound(Graph::from_edges(3, {}), 2), GraphError);
}

TEST_CASE("slot_lower_bound never exceeds the oracle") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : connected_graphs(n)) {
      auto r = min_excess_with_budget(g, n - 1);
      REQUIRE(r.has_value());
      // The oracle finds the fewest slots at the smallest budget that works.
      int fewest = n - 1;
      while (fewest > 0 && min_excess_with_budget(g, fewest - 1).has_value()) --fewest;
      CHECK(slot_lower_bound(g, 2) <= fewest);
    }
}

TEST_CASE("binomial_tree") {
  CHECK(binomial_tree(0).num_vertices() == 1);
  CHECK(binomial_tree(1) == path_graph(2));
  Graph b3 = binomial_tree(3);
  CHECK(b3.num_vertices() == 8);
  CHECK(b3.num_edges() == 7);
  CHECK(b3.degree(0) == 3);
  CHECK(is_tree(binomial_tree(10)));
}

TEST_CASE("min_edge_difference") {
  CHECK(min_edge_difference(binomial_tree(3)).value == 0);
  auto star = min_edge_difference(star_graph(8));
  CHECK(star.exact);
  CHECK(star.value == 4);
  CHECK(edge_difference(star_graph(8), star.witness) == 4);
  auto p8 = min_edge_difference(path_graph(8));
  CHECK(p8.value == brute::min_edge_difference(path_graph(8)));
  CHECK(p8.value >= 1);
  for (int n : {1, 2, 4, 8})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Graph t = random_tree(n, seed);
      auto r = min_edge_difference(t);
      CHECK(r.value == brute::min_edge_difference(t));
      CHECK(edge_difference(t, r.witness) == r.value);
    }
  auto heur = min_edge_difference(star_graph(32), 4);
  CHECK_FALSE(heur.exact);
  CHECK(edge_difference(star_graph(32), heur.witness) == heur.value);
  CHECK(heur.value >= 32 - 1 - 5);
  // Only an upper bound: it must beat a random bijection, not reach 0.
  Graph b5 = binomial_tree(5);
  auto h5 = min_edge_difference(b5);
  CHECK(edge_difference(b5, h5.witness) == h5.value);
  std::vector<Vertex> shuffled(32);
  std::iota(shuffled.begin(), shuffled.end(), 0);
  std::mt19937_64 rng(7);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(h5.value < edge_difference(b5, shuffled));
  CHECK_THROWS_AS(min_edge_difference(path_graph(6)), UnsupportedSize);
}

TEST_CASE("g_full") {
  CHECK(g_full(0).num_vertices() == 1);
  CHECK(g_full(1) == path_graph(2));
  CHECK(g_full(2).num_edges() == 5);
  CHECK(g_full(3).num_edges() == 19);
  for (int delta = 0; delta <= 12; ++delta)
    CHECK(2 * g_full(delta).num_edges() == g_full_degree_sum(delta));
  CHECK(g_full_degree_sum(4) == 130);
  // n log n <= f always; f <= 2 n log n only up to n = 8.
  for (int delta = 1; delta <= 12; ++delta) {
    const std::uint64_t n = 1ull << delta, f = g_full_degree_sum(delta);
    CHECK(f >= n * delta);
    CHECK((f <= 2 * n * delta) == (delta <= 3));
  }
}

TEST_CASE("g_bipart") {
  CHECK(g_bipart(1) == path_graph(2));
  Graph b2 = g_bipart(2);
  CHECK(b2.num_edges() == 4);
  CHECK(b2.has_edge(0, 2));
  CHECK(b2.has_edge(1, 3));
  CHECK(b2.has_edge(0, 3));
  CHECK(b2.has_edge(1, 2));
  Graph b3 = g_bipart(3);
  CHECK(b3.num_vertices() == 8);
  CHECK(b3.num_edges() == 2 * 5 + 4);
  CHECK(chromatic_number(b3).value == 2);
  CHECK_THROWS_AS(g_bipart(0), GraphError);
}

TEST_CASE("hardness_gadget") {
  CHECK(hardness_gadget(Graph::from_edges(1, {})) == path_graph(2));
  CHECK(hardness_gadget(path_graph(2)) == complete_graph(4));
  Graph c5 = hardness_gadget(cycle_graph(5));
  CHECK(c5.num_vertices() == 10);
  for (Vertex v = 5; v < 10; ++v) CHECK(c5.degree(v) == 9);
  CHECK(c5.num_edges() == 5 + 10 + 25);
}
