#include <random>

#include "doctest.h"
#include "fourmap/error.hpp"
#include "fourmap/generators.hpp"
#include "fourmap/graph.hpp"
#include "support.hpp"

using namespace fourmap;

TEST_CASE("build_map: base map with D and E apart") {
  std::vector<std::pair<std::string, std::string>> pairs{{"A", "B"}, {"A", "C"}, {"A", "D"}, {"A", "E"}, {"B", "C"},
                                                         {"B", "D"}, {"B", "E"}, {"C", "D"}, {"C", "E"}};
  auto m = MapGraph::build({"A", "B", "C", "D", "E"}, pairs);
  CHECK(m.face_count() == 5);
  CHECK(m.edge_count() == 9);
  CHECK(m.adjacent("A", "B"));
  CHECK_FALSE(m.adjacent("D", "E"));
  CHECK_FALSE(m.adjacent("A", "A"));
}

TEST_CASE("build_map: singleton and symmetric duplicates") {
  auto one = MapGraph::build({"A"}, {});
  CHECK(one.face_count() == 1);
  CHECK(one.edge_count() == 0);

  auto two = MapGraph::build({"A", "B"}, {{"A", "B"}, {"B", "A"}});
  CHECK(two.edge_count() == 1);
  CHECK(two.adjacent("B", "A"));
}

TEST_CASE("build_map: construction errors") {
  CHECK_THROWS_AS(MapGraph::build({"A", "A"}, {}), Error);
  CHECK_THROWS_AS(MapGraph::build({"A", "B"}, {{"A", "A"}}), Error);
  CHECK_THROWS_AS(MapGraph::build({"A", "B"}, {{"A", "Z"}}), Error);
  CHECK_THROWS_AS(MapGraph::build({}, {}), Error);
  try {
    MapGraph::build({"A", "B"}, {{"A", "A"}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("adjacent: unknown face is an error") {
  auto m = base_map_5().map;
  CHECK_THROWS_AS((void)m.adjacent("A", "Q"), Error);
  CHECK_THROWS_AS((void)m.adjacent(FaceId{0}, FaceId{9}), Error);
}

TEST_CASE("property: adjacency symmetric and irreflexive; rebuild is identical") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = 1 + rng() % 12;
    auto g = testing::random_graph(n, 0.4, rng);
    for (std::uint32_t f = 0; f < n; ++f) {
      CHECK_FALSE(g.adjacent(FaceId{f}, FaceId{f}));
      for (std::uint32_t h = 0; h < n; ++h) CHECK(g.adjacent(FaceId{f}, FaceId{h}) == g.adjacent(FaceId{h}, FaceId{f}));
    }
    CHECK(MapGraph::build(g.labels(), g.label_pairs()) == g);
  }
}

TEST_CASE("induced subgraph keeps requested order") {
  auto m = base_map_5().map;
  std::vector<FaceId> keep{m.id("E"), m.id("D"), m.id("A")};
  auto sub = m.induced(keep);
  CHECK(sub.labels() == std::vector<std::string>{"E", "D", "A"});
  CHECK(sub.edge_count() == 2);
  CHECK_FALSE(sub.adjacent("E", "D"));
}

TEST_CASE("coloring: palette bounds and totals") {
  Coloring c(3, 4);
  CHECK_FALSE(c.total());
  c.assign(FaceId{0}, Color{3});
  CHECK_THROWS_AS(c.assign(FaceId{1}, Color{4}), Error);
  CHECK_THROWS_AS(Coloring(2, 0), Error);
  c.assign(FaceId{1}, Color{3});
  c.assign(FaceId{2}, Color{0});
  CHECK(c.total());
  CHECK(c.colors_used() == 2);
  CHECK(color_name(Color{0}) == "a");
  CHECK(color_name(Color{3}) == "d");
}

TEST_CASE("bfs order: components in order of their lowest face") {
  auto g = testing::make_graph(5, {{3, 4}, {0, 2}});
  auto order = bfs_order(g);
  REQUIRE(order.size() == 5);
  CHECK(order[0].value == 0);
  CHECK(order[1].value == 2);
  CHECK(order[2].value == 1);
  CHECK(order[3].value == 3);
}
