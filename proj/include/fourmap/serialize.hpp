#pragma once

// JSON formats for every value that crosses the CLI or C API, plus DOT export.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fourmap/claims.hpp"
#include "fourmap/coloring.hpp"
#include "fourmap/embedding.hpp"
#include "fourmap/generators.hpp"
#include "fourmap/graph.hpp"
#include "fourmap/hyperdim.hpp"
#include "fourmap/planarity.hpp"

namespace fourmap {

using Json = nlohmann::ordered_json;

/// Parses text, rethrowing syntax errors as Error(Parse).
Json parse_json(const std::string& text);

// {"faces": [...], "adjacent": [[f, g], ...]}
Json to_json(const MapGraph& map);
MapGraph map_from_json(const Json& j);

// {"rotation": {"A": ["B", "E", "D"], ...}, "outer_face_removed": bool}
Json to_json(const PlanarEmbedding& emb);
PlanarEmbedding embedding_from_json(const Json& j);

// Embedding format plus "free_segments": [["M", "N"], ...]
Json to_json(const AugmentedEmbedding& emb);
/// Accepts both embedding forms; no "free_segments" key means none.
AugmentedEmbedding augmented_from_json(const Json& j);

// {"palette": k, "assignment": {"A": 0, ...}}, unassigned faces omitted
Json to_json(const MapGraph& map, const Coloring& col);
Coloring coloring_from_json(const MapGraph& map, const Json& j);

// {"kind": "K5" | "K33", "branch": [...], "paths": [[...], ...]}
Json to_json(const MapGraph& map, const KuratowskiWitness& w);
KuratowskiWitness witness_from_json(const MapGraph& map, const Json& j);

// {"v", "e", "f", "characteristic", "expected", "consistent"}
Json to_json(const EulerReport& r);
Json to_json(const Theorem32Report& r);

// {"result": "colored", "color": i, "name": "a"} or
// {"result": "blocked", "census": {...}, "witness": {...} | null}
Json to_json(const MapGraph& map, const ExtensionOutcome& out);

// {"result": "extendable", "coloring": {...}} or {"result": "not_extendable"}
Json to_json(const MapGraph& map, const ExtensionVerdict& v);

// {"grid": [mx, my, mz], "regions": {"R1": [[x, y, z], ...], ...}}
Json to_json(const VoxelComplex& cx);
VoxelComplex voxels_from_json(const Json& j);

Json to_json(const ConjectureReport& r);
Json to_json(const ClaimStatus& s);

/// Solid edges for adjacency; dashed edges for non-adjacent pairs when
/// show_dotted; node fill per color when a coloring is supplied.
std::string export_dot(const MapGraph& map, const Coloring* col = nullptr, bool show_dotted = false);

}  // namespace fourmap
