#include <doctest.h>

#include <bit>
#include <cmath>

#include "growth/basic_schedules.hpp"
#include "growth/composite_schedules.hpp"

using namespace growth;

namespace {

int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

Metrics checked(const Schedule& s, const Graph& target) {
  Metrics m = validate(s, target);
  auto rep = check_properties(simulate(s), target);
  CHECK_MESSAGE(rep.ok(), (rep.violations.empty() ? "" : rep.violations.front()));
  return m;
}

}  // namespace

TEST_CASE("tree_decompose examples") {
  auto p8 = tree_decompose(path_graph(8));
  REQUIRE(p8.size() == 2);
  CHECK(p8[0].kind == PhaseKind::kPathCut);
  REQUIRE(p8[0].paths.size() == 1);
  CHECK(p8[0].paths[0] == PathRemoval{0, 7, {1, 2, 3, 4, 5, 6}});
  CHECK(p8[1].kind == PhaseKind::kLeafCut);
  CHECK(p8[1].groups == std::vector<LeafGroup>{{0, {7}}});

  auto star = tree_decompose(star_graph(8));
  REQUIRE(star.size() == 1);
  CHECK(star[0].groups == std::vector<LeafGroup>{{0, {1, 2, 3, 4, 5, 6, 7}}});

  CHECK(tree_decompose(Graph::from_edges(1, {})).empty());
  CHECK_THROWS_AS(tree_decompose(cycle_graph(4)), GraphError);
}

TEST_CASE("tree_decompose invariants on random trees") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed * 37 % 500);
    Graph t = random_tree(n, seed);
    std::size_t left = n, removed = 0;
    const auto phases = tree_decompose(t);
    for (std::size_t i = 0; i < phases.size(); ++i) {
      const Phase& ph = phases[i];
      if (i > 0) CHECK((ph.kind == PhaseKind::kLeafCut || phases[i - 1].kind == PhaseKind::kLeafCut));
      if (ph.kind == PhaseKind::kLeafCut) CHECK(2 * (left - ph.removed()) <= left);
      left -= ph.removed();
      removed += ph.removed();
    }
    CHECK(left == 1);
    CHECK(removed + 1 == static_cast<std::size_t>(n));
    CHECK(phases.size() <= static_cast<std::size_t>(2 * ceil_log2(n) + 2));
  }
}

TEST_CASE("tree_schedule") {
  auto p8 = checked(tree_schedule(path_graph(8)), path_graph(8));
  CHECK(p8.slots <= 2 * 3 + 1);
  auto star = checked(tree_schedule(star_graph(8)), star_graph(8));
  CHECK(star == validate(star_schedule(8), star_graph(8)));
  CHECK(checked(tree_schedule(Graph::from_edges(1, {})), Graph::from_edges(1, {})).slots == 0);
  CHECK_THROWS_AS(tree_schedule(cycle_graph(5)), GraphError);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed * 53 % 700);
    Graph t = random_tree(n, seed);
    auto m = checked(tree_schedule(t), t);
    const int lg = ceil_log2(n);
    CHECK(m.slots <= kTreeSlotConstant * lg * lg);
    CHECK(m.excess_edges <= static_cast<std::size_t>(kTreeExcessConstant * n));
  }
}

TEST_CASE("colored_schedule") {
  Graph k4 = complete_graph(4);
  Coloring c4{{0, 1, 2, 3}, 4};
  CHECK(checked(colored_schedule(k4, c4), k4).slots == 3);

  Graph p4 = path_graph(4);
  auto m = checked(colored_schedule(p4, Coloring{{0, 1, 0, 1}, 2}), p4);
  CHECK(m.slots <= 2 * ceil_log2(3) + 1);

  Graph star = star_graph(8);
  Coloring sc{{0, 1, 1, 1, 1, 1, 1, 1}, 2};
  auto sm = checked(colored_schedule(star, sc), star);
  CHECK(sm.slots <= ceil_log2(8) + 1);

  CHECK_THROWS_AS(colored_schedule(p4, Coloring{{0, 0, 1, 1}, 2}), GraphError);
  CHECK_THROWS_AS(colored_schedule(p4, Coloring{{0, 1}, 2}), GraphError);
}

TEST_CASE("colored_schedule slot sum") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = grid_graph(3 + static_cast<int>(seed % 5), 4 + static_cast<int>(seed % 3));
    const Coloring c = degeneracy_coloring(g);
    int bound = 0;
    for (auto& cls : c.classes()) bound += ceil_log2(static_cast<int>(cls.size()) + 1);
    CHECK(checked(colored_schedule(g, c), g).slots <= bound);
  }
}

TEST_CASE("planar_schedule") {
  Graph grid = grid_graph(8, 8);
  CHECK(degeneracy_coloring(grid).num_colors <= 3);
  auto m = checked(planar_schedule(grid), grid);
  CHECK(m.slots <= 3 * 6 + 5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph t = random_tree(50 + static_cast<int>(seed), seed);
    CHECK(degeneracy_coloring(t).num_colors <= 2);
    checked(planar_schedule(t), t);
  }
  Graph k4 = complete_graph(4);
  CHECK(degeneracy_coloring(k4).num_colors == 4);
  checked(planar_schedule(k4), k4);
  checked(planar_schedule(petersen_graph()), petersen_graph());
  CHECK_THROWS_AS(planar_schedule(Graph::from_edges(3, {})), GraphError);
}
