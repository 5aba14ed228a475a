#include <chrono>
#include <random>

#include "doctest.h"
#include "fourmap/error.hpp"
#include "fourmap/generators.hpp"
#include "fourmap/planarity.hpp"
#include "support.hpp"

using namespace fourmap;

TEST_CASE("euler_check examples") {
  auto fx = build_figure1();
  auto r = euler_check(fx.embedding);
  CHECK(r.counts == VefCounts{8, 12, 5});
  CHECK(r.characteristic == 1);
  CHECK(r.expected == 1);
  CHECK(r.consistent);

  auto mn = euler_check(add_edge_mn(fx).structure);
  CHECK(mn.counts == VefCounts{10, 13, 5});
  CHECK(mn.characteristic == 2);
  CHECK_FALSE(mn.consistent);

  auto tet = euler_check(PlanarEmbedding::build(testing::tetrahedron_rotation(), false));
  CHECK(tet.counts == VefCounts{4, 6, 4});
  CHECK(tet.characteristic == 2);
  CHECK(tet.consistent);
}

TEST_CASE("edge_bound_filter") {
  CHECK_FALSE(edge_bound_filter(testing::complete_graph(5)));
  CHECK(edge_bound_filter(testing::complete_graph(4)));
  auto k2222 = complete_multipartite(2, 2, 2, 2);
  CHECK(k2222.edge_count() == 24);
  CHECK_FALSE(edge_bound_filter(k2222));
  CHECK_THROWS_AS(edge_bound_filter(testing::complete_graph(2)), Error);
}

TEST_CASE("find_kuratowski on named graphs") {
  auto k5 = testing::complete_graph(5);
  auto w = find_kuratowski(k5);
  REQUIRE(w);
  CHECK(w->kind == KuratowskiKind::K5);
  CHECK(w->branch.size() == 5);
  for (const auto& path : w->paths) CHECK(path.size() == 2);
  CHECK_FALSE(validate_witness(k5, *w));

  auto k33 = testing::complete_bipartite(3, 3);
  auto w33 = find_kuratowski(k33);
  REQUIRE(w33);
  CHECK(w33->kind == KuratowskiKind::K33);
  CHECK_FALSE(validate_witness(k33, *w33));

  auto pet = testing::petersen();
  auto wp = find_kuratowski(pet);
  REQUIRE(wp);
  CHECK(wp->kind == KuratowskiKind::K33);
  CHECK_FALSE(validate_witness(pet, *wp));
  CHECK_FALSE(find_subdivision(pet, KuratowskiKind::K5));

  CHECK_FALSE(find_kuratowski(testing::complete_graph(4)));
  CHECK_FALSE(find_kuratowski(base_map_5().map));
}

TEST_CASE("is_planar examples") {
  CHECK(is_planar(base_map_5().map));
  CHECK_FALSE(is_planar(testing::complete_graph(5)));
  CHECK_FALSE(is_planar(testing::complete_bipartite(3, 3)));
  CHECK(is_planar(testing::complete_graph(1)));
  CHECK(is_planar(testing::complete_bipartite(2, 7)));
}

TEST_CASE("validate_witness rejects broken witnesses") {
  auto k5 = testing::complete_graph(5);
  auto w = *find_kuratowski(k5);

  auto short_paths = w;
  short_paths.paths.pop_back();
  CHECK(validate_witness(k5, short_paths));

  auto missing_edge = w;
  auto k5_minus = testing::make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK(validate_witness(k5_minus, missing_edge));

  // Subdivide one edge of K5 and route two paths through the same vertex.
  auto sub = testing::make_graph(6, {{0, 5}, {5, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                                     {2, 4}, {3, 4}, {2, 5}});
  KuratowskiWitness shared;
  shared.kind = KuratowskiKind::K5;
  for (std::uint32_t i = 0; i < 5; ++i) shared.branch.push_back(FaceId{i});
  for (std::uint32_t i = 0; i < 5; ++i) {
    for (std::uint32_t j = i + 1; j < 5; ++j) {
      if (i == 0 && j == 1) {
        shared.paths.push_back({FaceId{0}, FaceId{5}, FaceId{1}});
      } else if (i == 0 && j == 2) {
        shared.paths.push_back({FaceId{0}, FaceId{5}, FaceId{2}});
      } else {
        shared.paths.push_back({FaceId{i}, FaceId{j}});
      }
    }
  }
  auto err = validate_witness(sub, shared);
  REQUIRE(err);
  CHECK(err->find("share") != std::string::npos);

  auto branch_repeat = w;
  branch_repeat.branch[1] = branch_repeat.branch[0];
  CHECK(validate_witness(k5, branch_repeat));
}

TEST_CASE("property: witnesses agree with the brute-force minor oracle on small graphs") {
  std::mt19937_64 rng(2024);
  int nonplanar = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 5 + rng() % 3;  // 5..7
    double p = 0.45 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
    auto g = testing::random_graph(n, p, rng);
    bool oracle_nonplanar = testing::has_kuratowski_minor(g);
    auto w = find_kuratowski(g);
    CHECK(w.has_value() == oracle_nonplanar);
    CHECK(is_planar(g) == !oracle_nonplanar);
    if (w) {
      ++nonplanar;
      CHECK_FALSE(validate_witness(g, *w));
    }
    if (is_planar(g)) CHECK(edge_bound_filter(g));
  }
  CHECK(nonplanar > 20);
}

TEST_CASE("witness extraction above the direct-search size uses the reduction path") {
  // K3,3 with every edge subdivided twice: 6 + 18 = 24 vertices.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  std::uint32_t next = 6;
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 3; b < 6; ++b) {
      e.emplace_back(a, next);
      e.emplace_back(next, next + 1);
      e.emplace_back(next + 1, b);
      next += 2;
    }
  }
  auto g = testing::make_graph(next, e);
  auto w = find_kuratowski(g);
  REQUIRE(w);
  CHECK(w->kind == KuratowskiKind::K33);
  CHECK_FALSE(validate_witness(g, *w));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto dense = testing::random_graph(16, 0.5, rng);
    auto wd = find_kuratowski(dense);
    CHECK(wd.has_value() == !is_planar(dense));
    if (wd) CHECK_FALSE(validate_witness(dense, *wd));
  }
}

TEST_CASE("direct search on every non-planar graph up to 12 vertices stays fast") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 8 + rng() % 5;
    auto g = testing::random_graph(n, 0.35 + 0.1 * (trial % 4), rng);
    auto start = std::chrono::steady_clock::now();
    auto w = find_kuratowski(g);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 1.0);
    if (w) CHECK_FALSE(validate_witness(g, *w));
  }
}

TEST_CASE("five-face exhaustive report") {
  auto r = verify_theorem_3_2();
  CHECK(r.graphs_examined == 1024);
  // Frozen from an independent k^n enumeration over the 1024 labeled graphs.
  CHECK(r.chromatic_counts[1] == 1);
  CHECK(r.chromatic_counts[2] == 375);
  CHECK(r.chromatic_counts[3] == 582);
  CHECK(r.chromatic_counts[4] == 65);
  CHECK(r.chromatic_counts[5] == 1);
  CHECK(r.planar_count == 1023);
  CHECK(r.five_chromatic == 1);
  CHECK(r.planar_five_chromatic == 0);
  CHECK(r.five_chromatic_is_k5);
  CHECK_FALSE(r.k5_planar);
  CHECK(r.holds());
}
