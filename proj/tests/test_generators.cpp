#include <set>

#include "doctest.h"
#include "fourmap/coloring.hpp"
#include "fourmap/error.hpp"
#include "fourmap/generators.hpp"
#include "fourmap/planarity.hpp"
#include "support.hpp"

using namespace fourmap;

TEST_CASE("figure1 fixture") {
  auto fx = build_figure1();
  CHECK(fx.face_names == std::vector<std::string>{"AEGHD", "BFGHC", "ABCD", "ABFE", "CDH"});
  CHECK(fx.removed_face == "EGF");
  CHECK(count_vef(fx.embedding) == VefCounts{8, 12, 5});

  auto traced = fx.embedding.trace_faces();
  for (const auto& cycle : fx.face_cycles) {
    bool found = false;
    for (const auto& t : traced) {
      std::vector<std::string> names;
      for (auto v : t) names.push_back(fx.embedding.label(v));
      found = found || same_cycle(names, cycle);
    }
    CHECK(found);
  }

  auto d = fx.dual();
  CHECK(d.face_count() == 5);
  CHECK(d.edge_count() == 9);
  CHECK_FALSE(d.adjacent("CDH", "ABFE"));
  CHECK(d.adjacent("AEGHD", "BFGHC"));
}

TEST_CASE("add_edge_mn") {
  auto fx = build_figure1();
  auto mn = add_edge_mn(fx);
  CHECK(count_vef(mn.structure) == VefCounts{10, 13, 5});
  CHECK(mn.separated_faces == std::pair<std::string, std::string>{"CDH", "ABFE"});
  CHECK(mn.dual.edge_count() == 10);
  CHECK(mn.dual.adjacent("CDH", "ABFE"));
  CHECK_FALSE(is_planar(mn.dual));
}

TEST_CASE("base_map_5") {
  auto [map, col] = base_map_5();
  CHECK(map.labels() == std::vector<std::string>{"A", "B", "C", "D", "E"});
  CHECK(map.edge_count() == 9);
  CHECK_FALSE(map.adjacent("D", "E"));
  CHECK(verify_coloring(map, col));
  CHECK(col.total());
  CHECK(col.raw()[3] == 3);
  CHECK(col.raw()[4] == 3);
}

TEST_CASE("complete_multipartite") {
  auto m = complete_multipartite(1, 1, 1, 2);
  CHECK(m.labels() == std::vector<std::string>{"A1", "B1", "C1", "D1", "D2"});
  CHECK(m.edge_count() == 9);
  CHECK_FALSE(m.adjacent("D1", "D2"));

  auto empty_class = complete_multipartite(2, 0, 3, 0);
  CHECK(empty_class.face_count() == 5);
  CHECK(empty_class.edge_count() == 6);

  CHECK_THROWS_AS(complete_multipartite(-1, 1, 1, 1), Error);
  CHECK_THROWS_AS(complete_multipartite(0, 0, 0, 0), Error);
}

TEST_CASE("property: letter classes color every multipartite map") {
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
          if (i + j + k + l == 0) continue;
          auto m = complete_multipartite(i, j, k, l);
          auto col = letter_class_coloring(m);
          CHECK(col.total());
          CHECK(verify_coloring(m, col));
          int classes = (i > 0) + (j > 0) + (k > 0) + (l > 0);
          CHECK(col.colors_used() == classes);
          CHECK(m.edge_count() ==
                static_cast<std::size_t>(i * j + i * k + i * l + j * k + j * l + k * l));
        }
}

TEST_CASE("random_planar_map") {
  auto a = random_planar_map(20, 5);
  auto b = random_planar_map(20, 5);
  CHECK(a == b);
  CHECK(a.face_count() == 20);
  CHECK(a.edge_count() == 3 * 20 - 6);
  CHECK(a.labels().front() == "F0");
  CHECK(is_planar(a));
  CHECK_FALSE(random_planar_map(20, 6) == a);

  CHECK(random_planar_map(4, 0).edge_count() == 6);
  CHECK_THROWS_AS(random_planar_map(3, 0), Error);
  CHECK_THROWS_AS(random_planar_map(0, 0), Error);
}

TEST_CASE("property: random planar maps are maximal planar") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 4 + static_cast<int>(seed % 40);
    auto m = random_planar_map(n, seed);
    CHECK(m.edge_count() == static_cast<std::size_t>(3 * n - 6));
    CHECK(is_planar(m));
    CHECK(bfs_order_components(m).size() == 1);
  }
}

TEST_CASE("flower counterexample") {
  auto fl = flower_counterexample();
  CHECK(fl.map.face_count() == 7);
  for (const char* p : {"P1", "P2", "P3", "P4", "P5"}) {
    CHECK(fl.map.adjacent("C", p));
    CHECK(fl.map.adjacent("O", p));
  }
  CHECK(fl.map.adjacent("C", "O"));
  CHECK(is_planar(fl.map));
  CHECK(fl.sub.size() == 6);
  CHECK(verify_coloring(fl.map, fl.precoloring));
  CHECK(fl.precoloring.colors_used() == 4);
  CHECK_FALSE(fl.precoloring.assigned(fl.map.id("C")));
  // whole map is 4-colorable; the precoloring alone blocks C
  CHECK(exact_chromatic(fl.map, 4).chi.value_or(0) <= 4);
  CHECK(greedy_extend(fl.map, fl.precoloring, fl.map.id("C")).blocked());
}

TEST_CASE("splitmix64 streams") {
  std::uint64_t s1 = 0, s2 = 0;
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    auto x = splitmix64(s1);
    CHECK(x == splitmix64(s2));
    seen.insert(x);
  }
  CHECK(seen.size() == 1000);
  std::uint64_t s = 0;
  CHECK(splitmix64(s) == 0xe220a8397b1dcdafULL);
}
