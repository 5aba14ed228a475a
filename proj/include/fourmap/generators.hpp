#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fourmap/embedding.hpp"
#include "fourmap/graph.hpp"

namespace fourmap {

/// The cut-open polyhedron on vertices A..H: five faces AEGHD, BFGHC, ABCD,
/// ABFE and CDH, with the undersurface EGF removed.
struct Figure1Fixture {
  PlanarEmbedding embedding;
  std::vector<std::string> face_names;               // as listed above
  std::vector<std::vector<std::string>> face_cycles;  // vertex cycles, same order
  std::string removed_face;                            // "EGF"

  /// Dual over the five named faces.
  MapGraph dual() const;
};

Figure1Fixture build_figure1();

/// The fixture plus a new boundary line MN declared to separate the triangle CDH
/// from the tetragon ABFE.
struct MnConstruction {
  AugmentedEmbedding structure;
  std::pair<std::string, std::string> separated_faces;
  /// Fixture dual plus the declared adjacency.
  MapGraph dual;
};

MnConstruction add_edge_mn(const Figure1Fixture& fixture);

struct ColoredMap {
  MapGraph map;
  Coloring coloring;
};

/// Faces A..E, all pairs adjacent except D and E, colored a, b, c, d, d.
ColoredMap base_map_5();

/// Faces A1..Ai, B1..Bj, C1..Ck, D1..Dl; faces with different letters are
/// adjacent, faces with the same letter are not.
MapGraph complete_multipartite(int i, int j, int k, int l);

/// The coloring that gives every face the color of its letter class.
Coloring letter_class_coloring(const MapGraph& multipartite);

/// Stacked triangulation on n_faces nodes: starts from K4 and repeatedly
/// inserts a node into a uniformly chosen triangle, using mt19937_64 seeded
/// with `seed`.
MapGraph random_planar_map(int n_faces, std::uint64_t seed);

struct FlowerCounterexample {
  MapGraph map;
  std::vector<FaceId> sub;
  Coloring precoloring;
};

/// Center C, petals P1..P5 around it, outer face O touching every petal and C.
/// The bundled precoloring of O and the petals puts all four colors around C.
FlowerCounterexample flower_counterexample();

/// 64-bit mixer used to split one master seed into independent stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace fourmap
