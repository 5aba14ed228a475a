#include <cstdlib>

#include "doctest.h"
#include "fourmap/error.hpp"
#include "fourmap/hyperdim.hpp"
#include "support.hpp"

using namespace fourmap;

namespace {

// Adjacency straight from coordinates, all voxel pairs compared.
bool regions_touch(const std::vector<Voxel>& a, const std::vector<Voxel>& b) {
  for (const auto& p : a)
    for (const auto& q : b) {
      int d = std::abs(p.x - q.x) + std::abs(p.y - q.y) + std::abs(p.z - q.z);
      if (d == 1) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("curve_map") {
  auto p = curve_map(4, false);
  CHECK(p.labels() == std::vector<std::string>{"S1", "S2", "S3", "S4"});
  CHECK(p.edge_count() == 3);
  auto c = curve_map(4, true);
  CHECK(c.edge_count() == 4);
  CHECK(c.adjacent("S4", "S1"));
  CHECK(curve_map(1, false).edge_count() == 0);
  CHECK_THROWS_AS(curve_map(0, false), Error);
  CHECK_THROWS_AS(curve_map(2, true), Error);
}

TEST_CASE("curve chromatic numbers agree with the naive oracle") {
  for (int n = 1; n <= 10; ++n) {
    auto p = curve_map(n, false);
    auto r = test_conjecture(1, p, "P" + std::to_string(n));
    CHECK(r.chi == testing::naive_chromatic(p));
    CHECK(r.chi == (n == 1 ? 1 : 2));
    CHECK(r.bound == 3);
    CHECK(r.verdict == ConjectureVerdict::Consistent);
    if (n >= 3) {
      auto c = curve_map(n, true);
      auto rc = test_conjecture(1, c);
      CHECK(rc.chi == testing::naive_chromatic(c));
      CHECK(rc.chi == (n % 2 ? 3 : 2));
      CHECK(rc.verdict == ConjectureVerdict::Consistent);
    }
  }
}

TEST_CASE("neighborly_boxes tower layout") {
  const int m = 5;
  auto cx = neighborly_boxes(m);
  CHECK(cx.grid() == std::array<int, 3>{m, 2, m});
  REQUIRE(cx.regions().size() == static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const auto& [name, cells] = cx.regions()[i - 1];
    CHECK(name == "R" + std::to_string(i));
    for (int z = i; z < m; ++z) CHECK(std::binary_search(cells.begin(), cells.end(), Voxel{i - 1, 0, z}));
    CHECK(std::binary_search(cells.begin(), cells.end(), Voxel{m - 1, 1, i - 1}));
    CHECK(face_connected(cells));
  }
}

TEST_CASE("property: neighborly_boxes realizes K_m") {
  for (int m = 2; m <= 32; ++m) {
    auto cx = neighborly_boxes(m);
    auto g = adjacency_graph(cx);
    CHECK(g.face_count() == static_cast<std::size_t>(m));
    CHECK(g.edge_count() == static_cast<std::size_t>(m * (m - 1) / 2));
    if (m <= 10) {
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          CHECK(regions_touch(cx.regions()[a].second, cx.regions()[b].second));
    }
  }
  CHECK_THROWS_AS(neighborly_boxes(1), Error);
  CHECK_THROWS_AS(neighborly_boxes(33), Error);
}

TEST_CASE("neighborly boxes exceed the five-color bound from m = 6") {
  for (int m = 2; m <= 8; ++m) {
    auto r = test_conjecture(3, adjacency_graph(neighborly_boxes(m)), "boxes");
    CHECK(r.chi == m);
    CHECK(r.bound == 5);
    CHECK((r.verdict == ConjectureVerdict::Falsified) == (m >= 6));
  }
}

TEST_CASE("VoxelComplex::build rejects bad regions") {
  using R = VoxelComplex::Region;
  CHECK_THROWS_AS(VoxelComplex::build({2, 2, 2}, {R{"a", {{0, 0, 0}}}, R{"b", {{0, 0, 0}}}}), Error);
  CHECK_THROWS_AS(VoxelComplex::build({2, 2, 2}, {R{"a", {{2, 0, 0}}}}), Error);
  CHECK_THROWS_AS(VoxelComplex::build({2, 2, 2}, {R{"a", {}}}), Error);
  CHECK_THROWS_AS(VoxelComplex::build({2, 2, 2}, {R{"a", {{0, 0, 0}}}, R{"a", {{1, 0, 0}}}}), Error);
  CHECK_THROWS_AS(VoxelComplex::build({2, 2, 2}, {R{"a", {{0, 0, 0}, {1, 1, 0}}}}), Error);
  CHECK_THROWS_AS(VoxelComplex::build({0, 2, 2}, {}), Error);

  auto ok = VoxelComplex::build({2, 1, 1}, {R{"a", {{0, 0, 0}}}, R{"b", {{1, 0, 0}}}});
  CHECK(adjacency_graph(ok).adjacent("a", "b"));
  // edge contact only
  auto diag = VoxelComplex::build({2, 2, 1}, {R{"a", {{0, 0, 0}}}, R{"b", {{1, 1, 0}}}});
  CHECK(adjacency_graph(diag).edge_count() == 0);
}

TEST_CASE("test_conjecture errors") {
  CHECK_THROWS_AS(test_conjecture(0, curve_map(2, false)), Error);
  CHECK_THROWS_AS(test_conjecture(4, curve_map(2, false)), Error);
}
