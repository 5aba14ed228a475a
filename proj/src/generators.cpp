#include "fourmap/generators.hpp"

#include <array>
#include <limits>
#include <random>

#include "fourmap/error.hpp"

namespace fourmap {

namespace {

std::vector<std::string> letters(const std::string& word) {
  std::vector<std::string> out;
  for (char c : word) out.emplace_back(1, c);
  return out;
}

// Unbiased draw from [0, bound) by rejection.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Figure1Fixture build_figure1() {
  // Clockwise-consistent rotation of the cut-open polyhedron; the mirror
  // image traces the same faces, this one is the alphabetically first.
  const RotationSpec rotation{
      {"A", {"B", "E", "D"}}, {"B", {"A", "C", "F"}}, {"C", {"B", "D", "H"}}, {"D", {"A", "H", "C"}},
      {"E", {"A", "F", "G"}}, {"F", {"B", "G", "E"}}, {"G", {"E", "F", "H"}}, {"H", {"C", "D", "G"}},
  };
  Figure1Fixture fx{PlanarEmbedding::build(rotation, true), {"AEGHD", "BFGHC", "ABCD", "ABFE", "CDH"}, {}, "EGF"};
  for (const auto& name : fx.face_names) fx.face_cycles.push_back(letters(name));

  // The traced faces must be the five named ones plus the removed one.
  auto traced = fx.embedding.trace_faces();
  auto all = fx.face_cycles;
  all.push_back(letters(fx.removed_face));
  if (traced.size() != all.size()) fail(ErrorCode::Precondition, "fixture rotation traces the wrong face count");
  for (const auto& cycle : traced) {
    std::vector<std::string> names;
    for (auto v : cycle) names.push_back(fx.embedding.label(v));
    bool known = false;
    for (const auto& expected : all) known = known || same_cycle(names, expected);
    if (!known) fail(ErrorCode::Precondition, "fixture rotation traces an unexpected face");
  }
  return fx;
}

MapGraph Figure1Fixture::dual() const {
  MapGraph traced = embedding.dual();
  auto cycles = embedding.trace_faces();
  std::vector<std::int64_t> named(cycles.size(), -1);
  for (std::size_t t = 0; t < cycles.size(); ++t) {
    std::vector<std::string> names;
    for (auto v : cycles[t]) names.push_back(embedding.label(v));
    for (std::size_t k = 0; k < face_cycles.size(); ++k) {
      if (same_cycle(names, face_cycles[k])) named[t] = static_cast<std::int64_t>(k);
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (auto [a, b] : traced.edges()) {
    if (named[a] >= 0 && named[b] >= 0) {
      pairs.emplace_back(static_cast<std::uint32_t>(named[a]), static_cast<std::uint32_t>(named[b]));
    }
  }
  return MapGraph::build_indexed(face_names, pairs);
}

MnConstruction add_edge_mn(const Figure1Fixture& fixture) {
  MnConstruction out{{fixture.embedding, {{"M", "N"}}}, {"CDH", "ABFE"}, fixture.dual()};
  validate(out.structure);
  auto pairs = out.dual.label_pairs();
  pairs.push_back(out.separated_faces);
  out.dual = MapGraph::build(out.dual.labels(), pairs);
  return out;
}

ColoredMap base_map_5() {
  const std::vector<std::string> faces{"A", "B", "C", "D", "E"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j = i + 1; j < faces.size(); ++j)
      if (!(faces[i] == "D" && faces[j] == "E")) pairs.emplace_back(faces[i], faces[j]);
  ColoredMap out{MapGraph::build(faces, pairs), Coloring(faces.size(), 4)};
  const int colors[] = {0, 1, 2, 3, 3};
  for (std::uint32_t f = 0; f < faces.size(); ++f) out.coloring.assign(FaceId{f}, Color{colors[f]});
  return out;
}

MapGraph complete_multipartite(int i, int j, int k, int l) {
  const std::array<int, 4> parts{i, j, k, l};
  for (int p : parts) {
    if (p < 0) fail(ErrorCode::InvalidArgument, "part sizes must be non-negative");
  }
  if (i + j + k + l < 1) fail(ErrorCode::InvalidArgument, "at least one part must be non-empty");
  std::vector<std::string> faces;
  std::vector<int> part_of;
  for (int p = 0; p < 4; ++p) {
    for (int n = 1; n <= parts[p]; ++n) {
      faces.push_back(std::string(1, static_cast<char>('A' + p)) + std::to_string(n));
      part_of.push_back(p);
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < faces.size(); ++a)
    for (std::uint32_t b = a + 1; b < faces.size(); ++b)
      if (part_of[a] != part_of[b]) pairs.emplace_back(a, b);
  return MapGraph::build_indexed(std::move(faces), pairs);
}

Coloring letter_class_coloring(const MapGraph& multipartite) {
  Coloring col(multipartite.face_count(), 4);
  for (std::uint32_t f = 0; f < multipartite.face_count(); ++f) {
    const auto& label = multipartite.label(FaceId{f});
    if (label.empty() || label[0] < 'A' || label[0] > 'D') {
      fail(ErrorCode::InvalidArgument, "face '" + label + "' is not a letter-class face");
    }
    col.assign(FaceId{f}, Color{label[0] - 'A'});
  }
  return col;
}

MapGraph random_planar_map(int n_faces, std::uint64_t seed) {
  if (n_faces < 4) fail(ErrorCode::InvalidArgument, "random planar map needs at least 4 faces");
  std::mt19937_64 rng(seed);
  std::vector<std::array<std::uint32_t, 3>> triangles{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (std::uint32_t v = 4; v < static_cast<std::uint32_t>(n_faces); ++v) {
    auto t = static_cast<std::size_t>(draw_below(rng, triangles.size()));
    auto [a, b, c] = triangles[t];
    triangles[t] = {a, b, v};
    triangles.push_back({b, c, v});
    triangles.push_back({a, c, v});
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
  }
  std::vector<std::string> faces;
  for (int f = 0; f < n_faces; ++f) faces.push_back("F" + std::to_string(f));
  return MapGraph::build_indexed(std::move(faces), edges);
}

FlowerCounterexample flower_counterexample() {
  const std::vector<std::string> faces{"C", "P1", "P2", "P3", "P4", "P5", "O"};
  std::vector<std::pair<std::string, std::string>> pairs{{"C", "O"}};
  for (int p = 1; p <= 5; ++p) {
    pairs.emplace_back("C", "P" + std::to_string(p));
    pairs.emplace_back("P" + std::to_string(p), "O");
  }
  FlowerCounterexample out{MapGraph::build(faces, pairs), {}, Coloring(faces.size(), 4)};
  const std::pair<const char*, int> precol[] = {{"O", 0}, {"P1", 1}, {"P2", 2}, {"P3", 3}, {"P4", 1}, {"P5", 2}};
  for (auto [name, color] : precol) {
    out.sub.push_back(out.map.id(name));
    out.precoloring.assign(out.map.id(name), Color{color});
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace fourmap
