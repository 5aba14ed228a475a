#pragma once

// Dual view of a map: one node per face, one link per pair of faces that share
// a boundary edge. Faces are labelled by strings externally and by dense
// indices internally.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fourmap {

struct FaceId {
  std::uint32_t value = 0;
  friend auto operator<=>(FaceId, FaceId) = default;
};

struct Color {
  int index = 0;
  friend auto operator<=>(Color, Color) = default;
};

/// Display name of a color: a, b, c, ... for the first 26, then c26, c27, ...
std::string color_name(Color c);

class MapGraph {
 public:
  /// Normalizes pair order and duplicates. Throws on duplicate faces, self
  /// pairs or unknown faces in a pair.
  static MapGraph build(std::vector<std::string> faces,
                        const std::vector<std::pair<std::string, std::string>>& adjacent_pairs);
  /// Same, by dense index.
  static MapGraph build_indexed(std::vector<std::string> faces,
                                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& adjacent_pairs);

  std::size_t face_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::string& label(FaceId f) const { return labels_.at(f.value); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<FaceId> find(std::string_view label) const;
  /// Throws Error(InvalidArgument) for unknown labels.
  FaceId id(std::string_view label) const;

  bool adjacent(FaceId f, FaceId g) const;
  bool adjacent(std::string_view f, std::string_view g) const { return adjacent(id(f), id(g)); }

  /// Sorted neighbor indices.
  std::span<const std::uint32_t> neighbors(FaceId f) const { return neighbors_.at(f.value); }
  std::size_t degree(FaceId f) const { return neighbors_.at(f.value).size(); }

  /// Unordered pairs (i < j), lexicographically sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  /// Same pairs, by label.
  std::vector<std::pair<std::string, std::string>> label_pairs() const;

  /// Subgraph induced on `keep`, in the given order.
  MapGraph induced(std::span<const FaceId> keep) const;

  friend bool operator==(const MapGraph& a, const MapGraph& b) {
    return a.labels_ == b.labels_ && a.neighbors_ == b.neighbors_;
  }

 private:
  MapGraph() = default;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> neighbors_;
  std::vector<std::uint8_t> matrix_;  // row-major face_count x face_count
  std::size_t edge_count_ = 0;
};

/// Partial assignment of faces to colors in [0, palette_size).
class Coloring {
 public:
  Coloring(std::size_t face_count, int palette_size);

  int palette_size() const { return palette_; }
  std::size_t face_count() const { return colors_.size(); }

  std::optional<Color> at(FaceId f) const;
  bool assigned(FaceId f) const { return colors_.at(f.value) >= 0; }
  /// Throws Error(InvalidArgument) if the color is outside the palette.
  void assign(FaceId f, Color c);
  void clear(FaceId f) { colors_.at(f.value) = -1; }

  bool total() const;
  std::size_t assigned_count() const;
  /// Number of distinct colors in use.
  int colors_used() const;
  /// Raw view: -1 for unassigned.
  std::span<const int> raw() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int palette_;
  std::vector<int> colors_;
};

/// Components of the map, each as a list of face indices in BFS order from its
/// lowest-indexed face. Components are ordered by their lowest face.
std::vector<std::vector<FaceId>> bfs_order_components(const MapGraph& map);
std::vector<FaceId> bfs_order(const MapGraph& map);

}  // namespace fourmap
