#include "fourmap/hyperdim.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "fourmap/coloring.hpp"
#include "fourmap/error.hpp"

namespace fourmap {

MapGraph curve_map(int n_segments, bool closed) {
  if (n_segments < 1) fail(ErrorCode::InvalidArgument, "a curve needs at least one segment");
  if (closed && n_segments < 3) fail(ErrorCode::InvalidArgument, "a closed curve needs at least three segments");
  std::vector<std::string> faces;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (int s = 0; s < n_segments; ++s) {
    faces.push_back("S" + std::to_string(s + 1));
    if (s > 0) pairs.emplace_back(s - 1, s);
  }
  if (closed) pairs.emplace_back(n_segments - 1, 0);
  return MapGraph::build_indexed(std::move(faces), pairs);
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kFaceSteps{
    {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}};

Voxel step(const Voxel& v, const std::array<int, 3>& d) { return {v.x + d[0], v.y + d[1], v.z + d[2]}; }

}  // namespace

bool face_connected(const std::vector<Voxel>& voxels) {
  if (voxels.empty()) return true;
  std::set<Voxel> remaining(voxels.begin(), voxels.end());
  std::deque<Voxel> queue{*remaining.begin()};
  remaining.erase(remaining.begin());
  while (!queue.empty()) {
    Voxel v = queue.front();
    queue.pop_front();
    for (const auto& d : kFaceSteps) {
      auto it = remaining.find(step(v, d));
      if (it == remaining.end()) continue;
      queue.push_back(*it);
      remaining.erase(it);
    }
  }
  return remaining.empty();
}

VoxelComplex VoxelComplex::build(std::array<int, 3> grid, std::vector<Region> regions) {
  for (int g : grid) {
    if (g < 1) fail(ErrorCode::InvalidArgument, "grid extents must be positive");
  }
  std::set<std::string> names;
  std::set<Voxel> occupied;
  for (auto& [name, voxels] : regions) {
    if (name.empty() || !names.insert(name).second) fail(ErrorCode::InvalidArgument, "region names must be unique");
    if (voxels.empty()) fail(ErrorCode::InvalidArgument, "region '" + name + "' is empty");
    for (const auto& v : voxels) {
      if (v.x < 0 || v.y < 0 || v.z < 0 || v.x >= grid[0] || v.y >= grid[1] || v.z >= grid[2]) {
        fail(ErrorCode::InvalidArgument, "region '" + name + "' leaves the grid");
      }
      if (!occupied.insert(v).second) {
        fail(ErrorCode::InvalidArgument, "overlapping voxel (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                                             "," + std::to_string(v.z) + ") in region '" + name + "'");
      }
    }
    if (!face_connected(voxels)) fail(ErrorCode::InvalidArgument, "region '" + name + "' is not face-connected");
    std::sort(voxels.begin(), voxels.end());
  }
  VoxelComplex cx;
  cx.grid_ = grid;
  cx.regions_ = std::move(regions);
  return cx;
}

VoxelComplex neighborly_boxes(int m) {
  if (m < 2 || m > 32) fail(ErrorCode::InvalidArgument, "neighborly_boxes needs 2 <= m <= 32");
  std::vector<VoxelComplex::Region> regions;
  for (int i = 1; i <= m; ++i) {
    std::vector<Voxel> cells;
    const int z = i - 1;
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < 2; ++y) {
        // Towers of lower regions pass through (x, 0, z) for x < i - 1.
        if (y == 0 && x < i - 1) continue;
        cells.push_back({x, y, z});
      }
    }
    for (int up = i; up < m; ++up) cells.push_back({i - 1, 0, up});
    regions.emplace_back("R" + std::to_string(i), std::move(cells));
  }
  return VoxelComplex::build({m, 2, m}, std::move(regions));
}

MapGraph adjacency_graph(const VoxelComplex& cx) {
  const auto& regions = cx.regions();
  auto key = [&](const Voxel& v) {
    return (static_cast<std::int64_t>(v.x) * cx.grid()[1] + v.y) * cx.grid()[2] + v.z;
  };
  std::unordered_map<std::int64_t, std::uint32_t> owner;
  for (std::uint32_t r = 0; r < regions.size(); ++r) {
    for (const auto& v : regions[r].second) {
      if (!owner.emplace(key(v), r).second) fail(ErrorCode::InvalidArgument, "regions overlap");
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t r = 0; r < regions.size(); ++r) {
    for (const auto& v : regions[r].second) {
      for (std::size_t d = 0; d < kFaceSteps.size(); d += 2) {  // +x, +y, +z
        Voxel w = step(v, kFaceSteps[d]);
        if (w.x >= cx.grid()[0] || w.y >= cx.grid()[1] || w.z >= cx.grid()[2]) continue;
        auto it = owner.find(key(w));
        if (it != owner.end() && it->second != r) pairs.emplace_back(r, it->second);
      }
    }
  }
  std::vector<std::string> names;
  for (const auto& region : regions) names.push_back(region.first);
  return MapGraph::build_indexed(std::move(names), pairs);
}

std::string to_string(ConjectureVerdict v) { return v == ConjectureVerdict::Consistent ? "Consistent" : "Falsified"; }

ConjectureReport test_conjecture(int dimension, const MapGraph& map, std::string instance) {
  if (dimension < 1 || dimension > 3) fail(ErrorCode::InvalidArgument, "dimension must be 1, 2 or 3");
  ConjectureReport r;
  r.dimension = dimension;
  r.instance = std::move(instance);
  r.chi = *exact_chromatic(map, static_cast<int>(map.face_count())).chi;
  r.bound = dimension + 2;
  r.verdict = r.chi > r.bound ? ConjectureVerdict::Falsified : ConjectureVerdict::Consistent;
  return r;
}

}  // namespace fourmap
