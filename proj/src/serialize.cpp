#include "fourmap/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "fourmap/error.hpp"

namespace fourmap {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) fail(ErrorCode::Parse, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::Parse, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(ErrorCode::Parse, std::string(what) + " must be a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::Parse, std::string(what) + " must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail(ErrorCode::Parse, std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array");
  return j;
}

Json labels(const MapGraph& map, const std::vector<FaceId>& faces) {
  Json out = Json::array();
  for (auto f : faces) out.push_back(map.label(f));
  return out;
}

std::vector<FaceId> face_list(const MapGraph& map, const Json& j, const char* what) {
  std::vector<FaceId> out;
  for (const auto& item : as_array(j, what)) out.push_back(map.id(as_string(item, what)));
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string fill_color(int index) {
  static const char* kFills[] = {"#e41a1c", "#377eb8", "#4daf4a", "#ff7f00",
                                 "#984ea3", "#ffff33", "#a65628", "#f781bf"};
  if (index < 8) return kFills[index];
  std::ostringstream hsv;
  hsv << std::fixed << std::setprecision(3) << std::fmod(index * 0.618033988749895, 1.0) << " 0.55 0.95";
  return hsv.str();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const MapGraph& map) {
  Json adjacent = Json::array();
  for (const auto& [f, g] : map.label_pairs()) adjacent.push_back(Json::array({f, g}));
  return Json{{"faces", map.labels()}, {"adjacent", std::move(adjacent)}};
}

MapGraph map_from_json(const Json& j) {
  std::vector<std::string> faces;
  for (const auto& f : as_array(member(j, "faces"), "faces")) faces.push_back(as_string(f, "face id"));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : as_array(member(j, "adjacent"), "adjacent")) {
    if (!p.is_array() || p.size() != 2) fail(ErrorCode::Parse, "adjacency entries must be [face, face]");
    pairs.emplace_back(as_string(p[0], "face id"), as_string(p[1], "face id"));
  }
  return MapGraph::build(std::move(faces), pairs);
}

Json to_json(const PlanarEmbedding& emb) {
  Json rotation = Json::object();
  for (const auto& [v, around] : emb.rotation_spec()) rotation[v] = around;
  return Json{{"rotation", std::move(rotation)}, {"outer_face_removed", emb.outer_face_removed()}};
}

PlanarEmbedding embedding_from_json(const Json& j) {
  const Json& rot = member(j, "rotation");
  if (!rot.is_object()) fail(ErrorCode::Parse, "rotation must be an object");
  RotationSpec spec;
  for (const auto& [v, around] : rot.items()) {
    std::vector<std::string> names;
    for (const auto& w : as_array(around, "rotation list")) names.push_back(as_string(w, "vertex id"));
    spec.emplace_back(v, std::move(names));
  }
  bool removed = false;
  if (auto it = j.find("outer_face_removed"); it != j.end()) {
    if (!it->is_boolean()) fail(ErrorCode::Parse, "outer_face_removed must be a boolean");
    removed = it->get<bool>();
  }
  return PlanarEmbedding::build(spec, removed);
}

Json to_json(const AugmentedEmbedding& emb) {
  Json out = to_json(emb.base);
  Json segments = Json::array();
  for (const auto& s : emb.segments) segments.push_back(Json::array({s.from, s.to}));
  out["free_segments"] = std::move(segments);
  return out;
}

AugmentedEmbedding augmented_from_json(const Json& j) {
  AugmentedEmbedding out{embedding_from_json(j), {}};
  if (auto it = j.find("free_segments"); it != j.end()) {
    for (const auto& s : as_array(*it, "free_segments")) {
      if (!s.is_array() || s.size() != 2) fail(ErrorCode::Parse, "free segments must be [from, to]");
      out.segments.push_back({as_string(s[0], "vertex id"), as_string(s[1], "vertex id")});
    }
  }
  validate(out);
  return out;
}

Json to_json(const MapGraph& map, const Coloring& col) {
  Json assignment = Json::object();
  for (std::uint32_t f = 0; f < map.face_count(); ++f) {
    if (auto c = col.at(FaceId{f})) assignment[map.label(FaceId{f})] = c->index;
  }
  return Json{{"palette", col.palette_size()}, {"assignment", std::move(assignment)}};
}

Coloring coloring_from_json(const MapGraph& map, const Json& j) {
  int palette = as_int(member(j, "palette"), "palette");
  if (palette < 1) fail(ErrorCode::InvalidArgument, "palette must be at least 1");
  Coloring col(map.face_count(), palette);
  const Json& assignment = member(j, "assignment");
  if (!assignment.is_object()) fail(ErrorCode::Parse, "assignment must be an object");
  for (const auto& [face, color] : assignment.items()) col.assign(map.id(face), Color{as_int(color, "color")});
  return col;
}

Json to_json(const MapGraph& map, const KuratowskiWitness& w) {
  Json paths = Json::array();
  for (const auto& p : w.paths) paths.push_back(labels(map, p));
  return Json{{"kind", to_string(w.kind)}, {"branch", labels(map, w.branch)}, {"paths", std::move(paths)}};
}

KuratowskiWitness witness_from_json(const MapGraph& map, const Json& j) {
  KuratowskiWitness w;
  auto kind = as_string(member(j, "kind"), "kind");
  if (kind == "K5") {
    w.kind = KuratowskiKind::K5;
  } else if (kind == "K33") {
    w.kind = KuratowskiKind::K33;
  } else {
    fail(ErrorCode::Parse, "kind must be K5 or K33");
  }
  w.branch = face_list(map, member(j, "branch"), "branch");
  for (const auto& p : as_array(member(j, "paths"), "paths")) w.paths.push_back(face_list(map, p, "path"));
  return w;
}

Json to_json(const EulerReport& r) {
  return Json{{"v", r.counts.v},
              {"e", r.counts.e},
              {"f", r.counts.f},
              {"characteristic", r.characteristic},
              {"expected", r.expected},
              {"consistent", r.consistent}};
}

Json to_json(const Theorem32Report& r) {
  Json counts = Json::object();
  for (int chi = 1; chi <= 5; ++chi) counts[std::to_string(chi)] = r.chromatic_counts[chi];
  return Json{{"graphs_examined", r.graphs_examined},
              {"chromatic_counts", std::move(counts)},
              {"planar", r.planar_count},
              {"five_chromatic", r.five_chromatic},
              {"planar_five_chromatic", r.planar_five_chromatic},
              {"five_chromatic_is_k5", r.five_chromatic_is_k5},
              {"k5_planar", r.k5_planar},
              {"holds", r.holds()}};
}

Json to_json(const MapGraph& map, const ExtensionOutcome& out) {
  if (out.color) return Json{{"result", "colored"}, {"color", out.color->index}, {"name", color_name(*out.color)}};
  Json census = Json::object();
  for (std::size_t c = 0; c < out.census.size(); ++c) {
    census[color_name(Color{static_cast<int>(c)})] = labels(map, out.census[c]);
  }
  return Json{{"result", "blocked"},
              {"census", std::move(census)},
              {"witness", out.witness ? to_json(map, *out.witness) : Json(nullptr)}};
}

Json to_json(const MapGraph& map, const ExtensionVerdict& v) {
  if (const auto* ok = std::get_if<Extendable>(&v)) {
    return Json{{"result", "extendable"}, {"coloring", to_json(map, ok->coloring)}};
  }
  return Json{{"result", "not_extendable"}};
}

Json to_json(const VoxelComplex& cx) {
  Json regions = Json::object();
  for (const auto& [name, voxels] : cx.regions()) {
    Json cells = Json::array();
    for (const auto& v : voxels) cells.push_back(Json::array({v.x, v.y, v.z}));
    regions[name] = std::move(cells);
  }
  return Json{{"grid", cx.grid()}, {"regions", std::move(regions)}};
}

VoxelComplex voxels_from_json(const Json& j) {
  const Json& grid = as_array(member(j, "grid"), "grid");
  if (grid.size() != 3) fail(ErrorCode::Parse, "grid must be [mx, my, mz]");
  std::array<int, 3> dims{as_int(grid[0], "grid"), as_int(grid[1], "grid"), as_int(grid[2], "grid")};
  const Json& regions = member(j, "regions");
  if (!regions.is_object()) fail(ErrorCode::Parse, "regions must be an object");
  std::vector<VoxelComplex::Region> out;
  for (const auto& [name, cells] : regions.items()) {
    std::vector<Voxel> voxels;
    for (const auto& c : as_array(cells, "region")) {
      if (!c.is_array() || c.size() != 3) fail(ErrorCode::Parse, "voxels must be [x, y, z]");
      voxels.push_back({as_int(c[0], "x"), as_int(c[1], "y"), as_int(c[2], "z")});
    }
    out.emplace_back(name, std::move(voxels));
  }
  return VoxelComplex::build(dims, std::move(out));
}

Json to_json(const ConjectureReport& r) {
  return Json{{"dimension", r.dimension},
              {"instance", r.instance},
              {"chi", r.chi},
              {"bound", r.bound},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const ClaimStatus& s) {
  return Json{{"claim", to_string(s.id)},
              {"verdict", to_string(s.verdict)},
              {"expected", to_string(s.expected)},
              {"replay_ok", s.replay_ok},
              {"evidence", s.evidence}};
}

std::string export_dot(const MapGraph& map, const Coloring* col, bool show_dotted) {
  if (col && col->face_count() != map.face_count()) fail(ErrorCode::InvalidArgument, "coloring does not fit the map");
  std::ostringstream out;
  out << "graph map {\n";
  for (std::uint32_t f = 0; f < map.face_count(); ++f) {
    out << "  " << quote(map.label(FaceId{f}));
    if (col) {
      if (auto c = col->at(FaceId{f})) {
        out << " [style=filled, fillcolor=" << quote(fill_color(c->index)) << ", xlabel=" << quote(color_name(*c))
            << "]";
      }
    }
    out << ";\n";
  }
  for (std::uint32_t f = 0; f < map.face_count(); ++f) {
    for (std::uint32_t g = f + 1; g < map.face_count(); ++g) {
      bool adj = map.adjacent(FaceId{f}, FaceId{g});
      if (!adj && !show_dotted) continue;
      out << "  " << quote(map.label(FaceId{f})) << " -- " << quote(map.label(FaceId{g}));
      if (!adj) out << " [style=dashed]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fourmap
