#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fourmap/graph.hpp"
#include "fourmap/planarity.hpp"

namespace fourmap {

/// Adjacent assigned faces never share a color. Throws if the coloring does not
/// fit the map or carries a color outside its palette.
bool verify_coloring(const MapGraph& map, const Coloring& col);

struct ExtensionOutcome {
  std::optional<Color> color;  // empty when blocked
  /// For each palette color, the assigned neighbors carrying it.
  std::vector<std::vector<FaceId>> census;
  /// Set only when blocked and a K5 subdivision sits among the new face and
  /// its assigned neighbors.
  std::optional<KuratowskiWitness> witness;

  bool blocked() const { return !color.has_value(); }
};

/// Lowest palette color missing from the assigned neighbors of `face`.
ExtensionOutcome greedy_extend(const MapGraph& map, const Coloring& col, FaceId face);

/// Colors faces in `order` (default: breadth first from the lowest face) with
/// greedy_extend, backtracking chronologically when a face is blocked.
std::optional<Coloring> induction_color(const MapGraph& map,
                                        std::optional<std::span<const FaceId>> order = std::nullopt,
                                        int palette = 4);

struct ChromaticResult {
  std::optional<int> chi;  // empty: exceeds k_max
  std::optional<Coloring> witness;
};

ChromaticResult exact_chromatic(const MapGraph& map, int k_max);

/// Whether `map` has a proper coloring with at most k colors; the witness if so.
std::optional<Coloring> k_coloring(const MapGraph& map, int k);

struct Extendable {
  Coloring coloring;
};
struct NotExtendable {};
using ExtensionVerdict = std::variant<Extendable, NotExtendable>;

/// Exhaustive completion of `precol` (which assigns exactly the faces of
/// `sub`) with colors from its palette. `order` fixes the order the free faces
/// are searched in; the verdict never depends on it.
ExtensionVerdict check_precoloring_extension(const MapGraph& map, std::span<const FaceId> sub,
                                             const Coloring& precol,
                                             std::optional<std::span<const FaceId>> order = std::nullopt);

}  // namespace fourmap
