#include <doctest.h>

#include <algorithm>
#include <vector>

#include "growth/graph.hpp"

using namespace growth;

namespace {

// Degeneracy by definition: max over all vertex subsets of the minimum
// degree inside the induced subgraph.
int brute_degeneracy(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int min_deg = n;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      int deg = 0;
      for (Vertex w : g.neighbors(v)) deg += mask >> w & 1;
      min_deg = std::min(min_deg, deg);
    }
    best = std::max(best, min_deg);
  }
  return best;
}

Graph graph_from_mask(int n, unsigned long long mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("make_graph normalizes and rejects bad input") {
  CHECK(Graph::from_edges(1, {}).num_edges() == 0);
  std::vector<Edge> p4{{0, 1}, {1, 2}, {2, 3}, {1, 0}};
  Graph g = Graph::from_edges(4, p4);
  CHECK(g.num_edges() == 3);
  CHECK(g == path_graph(4));
  std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::from_edges(4, loop), GraphError);
  std::vector<Edge> far{{0, 4}};
  CHECK_THROWS_AS(Graph::from_edges(4, far), GraphError);
}

TEST_CASE("connectivity and distance") {
  CHECK(is_connected(path_graph(4)));
  CHECK_FALSE(is_connected(Graph::from_edges(2, {})));
  CHECK(is_connected(Graph::from_edges(1, {})));
  CHECK(distance(path_graph(3), 0, 2) == 2);
  CHECK(distance(petersen_graph(), 4, 4) == 0);
  std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK(distance(Graph::from_edges(4, two), 0, 3) == kUnreachable);
  CHECK_THROWS_AS(distance(path_graph(3), 0, 3), GraphError);
  CHECK(diameter(petersen_graph()) == 2);
}

TEST_CASE("degeneracy examples") {
  CHECK(degeneracy_ordering(random_tree(30, 4)).k == 1);
  CHECK(degeneracy_ordering(cycle_graph(4)).k == 2);
  CHECK(degeneracy_ordering(complete_graph(4)).k == 3);
  CHECK(degeneracy_ordering(grid_graph(8, 8)).k == 2);
}

TEST_CASE("degeneracy matches brute force on every graph with n <= 5, sampled n = 6, 7") {
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ull << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      auto res = degeneracy_ordering(g);
      REQUIRE(res.k == brute_degeneracy(g));
    }
  }
  for (int n : {6, 7}) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ull << pairs); mask += 997) {
      Graph g = graph_from_mask(n, mask);
      auto res = degeneracy_ordering(g);
      REQUIRE(res.k == brute_degeneracy(g));
      // Every removal step respects the bound.
      std::vector<char> gone(n, 0);
      for (Vertex v : res.ordering) {
        int residual = 0;
        for (Vertex w : g.neighbors(v)) residual += !gone[w];
        CHECK(residual <= res.k);
        gone[v] = 1;
      }
    }
  }
}

TEST_CASE("greedy coloring on reverse degeneracy order") {
  auto reverse_order = [](const Graph& g) {
    auto ord = degeneracy_ordering(g).ordering;
    std::reverse(ord.begin(), ord.end());
    return ord;
  };
  Graph tree = random_tree(50, 9);
  auto ct = greedy_coloring(tree, reverse_order(tree));
  CHECK(is_proper_coloring(tree, ct));
  CHECK(ct.num_colors <= 2);
  Graph k4 = complete_graph(4);
  CHECK(greedy_coloring(k4, reverse_order(k4)).num_colors == 4);
  Graph c5 = cycle_graph(5);
  auto c = greedy_coloring(c5, reverse_order(c5));
  CHECK(is_proper_coloring(c5, c));
  CHECK(c.num_colors == 3);
  std::vector<Vertex> bad{0, 1, 1, 2, 3};
  CHECK_THROWS_AS(greedy_coloring(c5, bad), GraphError);
  for (unsigned long long mask = 0; mask < (1ull << 21); mask += 4099) {
    Graph g = graph_from_mask(7, mask);
    auto col = greedy_coloring(g, reverse_order(g));
    CHECK(is_proper_coloring(g, col));
    CHECK(col.num_colors <= degeneracy_ordering(g).k + 1);
  }
}

TEST_CASE("edge-list text round trip and errors") {
  Graph k2 = parse_graph("2 1\n0 1");
  CHECK(k2 == complete_graph(2));
  CHECK(parse_graph("4 4\r\n1 0\n\n2 1\n3 2\n0 1\n").num_edges() == 3);
  Graph p = petersen_graph();
  CHECK(parse_graph(emit_graph(p)) == p);
  CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 2"), "line 2: endpoint out of range", GraphError);
  CHECK_THROWS_WITH_AS(parse_graph(""), "line 1: missing \"n m\" header", GraphError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1"), GraphError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 1 2"), GraphError);
  CHECK_THROWS_AS(parse_graph("3 1\n1 1"), GraphError);
  CHECK_THROWS_AS(parse_graph("2 1\n0 1\n0 1"), GraphError);
  CHECK(emit_dot(complete_graph(2)) == "graph {\n  0;\n  1;\n  0 -- 1;\n}\n");
}

TEST_CASE("generators") {
  CHECK(star_graph(8).degree(0) == 7);
  CHECK(grid_graph(3, 4).num_edges() == 17);
  CHECK(petersen_graph().num_edges() == 15);
  for (int n : {1, 2, 3, 17, 200}) CHECK(is_tree(random_tree(n, 123)));
  CHECK(random_tree(40, 5) == random_tree(40, 5));
}
