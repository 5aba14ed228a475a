#pragma once

// Empirical checks of the (n+2)-color bound for curves (n = 1) and voxel
// region complexes (n = 3).

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "fourmap/graph.hpp"

namespace fourmap {

MapGraph curve_map(int n_segments, bool closed);

struct Voxel {
  int x = 0;
  int y = 0;
  int z = 0;
  friend auto operator<=>(const Voxel&, const Voxel&) = default;
};

/// Named regions of unit voxels inside [0,grid) on each axis.
class VoxelComplex {
 public:
  using Region = std::pair<std::string, std::vector<Voxel>>;

  /// Throws Error(InvalidArgument) when regions overlap, leave the grid, are
  /// empty, share a name, or are not face-connected.
  static VoxelComplex build(std::array<int, 3> grid, std::vector<Region> regions);

  const std::array<int, 3>& grid() const { return grid_; }
  const std::vector<Region>& regions() const { return regions_; }

 private:
  VoxelComplex() = default;

  std::array<int, 3> grid_{};
  std::vector<Region> regions_;
};

/// Face-connectivity of a voxel set under the 6-neighborhood.
bool face_connected(const std::vector<Voxel>& voxels);

/// m stacked slabs, each with a tower column reaching through every slab above
/// it, so that every two regions share a voxel face. 2 <= m <= 32.
VoxelComplex neighborly_boxes(int m);

/// One face per region; adjacency iff two regions share a unit voxel face.
MapGraph adjacency_graph(const VoxelComplex& cx);

enum class ConjectureVerdict { Consistent, Falsified };

struct ConjectureReport {
  int dimension = 0;
  std::string instance;
  int chi = 0;
  int bound = 0;
  ConjectureVerdict verdict = ConjectureVerdict::Consistent;
};

std::string to_string(ConjectureVerdict v);

/// Exact chromatic number against the bound dimension + 2. dimension in 1..3.
ConjectureReport test_conjecture(int dimension, const MapGraph& map, std::string instance = {});

}  // namespace fourmap
