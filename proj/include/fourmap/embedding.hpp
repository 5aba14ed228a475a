#pragma once

// Combinatorial embeddings given by rotation systems, face tracing and
// vertex/edge/face counts.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourmap/graph.hpp"

namespace fourmap {

/// Per-vertex rotation: the cyclic order of neighbors around a vertex, given by
/// label. Order of the outer vector is the vertex order.
using RotationSpec = std::vector<std::pair<std::string, std::vector<std::string>>>;

struct VefCounts {
  int v = 0;
  int e = 0;
  int f = 0;
  friend bool operator==(const VefCounts&, const VefCounts&) = default;
};

/// A connected simple graph with a rotation system. `outer_face_removed`
/// models a polyhedral surface with one face cut away before unfolding.
class PlanarEmbedding {
 public:
  /// Throws Error(InvalidArgument) for dangling references, one-sided edges,
  /// loops, parallel edges and disconnected graphs.
  static PlanarEmbedding build(const RotationSpec& rotation, bool outer_face_removed);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool outer_face_removed() const { return outer_face_removed_; }

  const std::string& label(std::uint32_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint32_t>& rotation(std::uint32_t v) const { return rotation_.at(v); }
  RotationSpec rotation_spec() const;

  /// Every face of the rotation system as its cyclic vertex sequence. Each
  /// face starts at its lowest-indexed vertex. Faces are sorted.
  std::vector<std::vector<std::uint32_t>> trace_faces() const;

  /// Name of a traced face: vertex labels in traversal order, joined directly
  /// when every label is one character and with '-' otherwise.
  std::string face_name(const std::vector<std::uint32_t>& cycle) const;

  /// Dual graph over all traced faces (the removed outer face included), named
  /// by face_name. Faces meeting only at a vertex, or only across a bridge
  /// with themselves, are not adjacent.
  MapGraph dual() const;

  friend bool operator==(const PlanarEmbedding&, const PlanarEmbedding&) = default;

 private:
  PlanarEmbedding() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint32_t>> rotation_;
  std::size_t edge_count_ = 0;
  bool outer_face_removed_ = false;
};

/// v, e, and traced faces (minus one if the outer face is removed).
VefCounts count_vef(const PlanarEmbedding& emb);

/// True when `a` and `b` describe the same cycle up to rotation and reversal.
bool same_cycle(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// A plane embedding with extra free boundary segments drawn inside its
/// faces. A free segment has two new endpoints and touches nothing else, so it
/// adds two vertices and one edge and splits no face. The result is no longer
/// connected, which is exactly where the connected Euler identity stops
/// holding.
struct FreeSegment {
  std::string from;
  std::string to;
  friend bool operator==(const FreeSegment&, const FreeSegment&) = default;
};

struct AugmentedEmbedding {
  PlanarEmbedding base;
  std::vector<FreeSegment> segments;
};

/// Counts the base embedding plus 2 vertices and 1 edge per free segment.
/// Face count is that of the base.
VefCounts count_vef(const AugmentedEmbedding& emb);

/// Throws if a segment endpoint collides with a base vertex or another
/// segment endpoint, or a segment is degenerate.
void validate(const AugmentedEmbedding& emb);

}  // namespace fourmap
