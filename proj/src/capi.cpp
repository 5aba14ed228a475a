#include "fourmap/fourmap.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "fourmap/claims.hpp"
#include "fourmap/coloring.hpp"
#include "fourmap/error.hpp"
#include "fourmap/generators.hpp"
#include "fourmap/hyperdim.hpp"
#include "fourmap/planarity.hpp"
#include "fourmap/serialize.hpp"

struct fm_map {
  fourmap::MapGraph value;
};
struct fm_coloring {
  fourmap::Coloring value;
};
struct fm_embedding {
  fourmap::AugmentedEmbedding value;
};
struct fm_voxels {
  fourmap::VoxelComplex value;
};

namespace {

thread_local std::string g_last_error;

struct NullArgument {
  const char* name;
};

template <class T>
T& deref(T* p, const char* name) {
  if (!p) throw NullArgument{name};
  return *p;
}

const char* text_arg(const char* p, const char* name) {
  if (!p) throw NullArgument{name};
  return p;
}

template <class Fn>
fm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FM_OK;
  } catch (const NullArgument& e) {
    g_last_error = std::string("null argument: ") + e.name;
    return FM_ERR_NULL;
  } catch (const fourmap::Error& e) {
    g_last_error = e.what();
    switch (e.code()) {
      case fourmap::ErrorCode::InvalidArgument: return FM_ERR_INVALID_ARGUMENT;
      case fourmap::ErrorCode::Parse: return FM_ERR_PARSE;
      case fourmap::ErrorCode::Precondition: return FM_ERR_PRECONDITION;
    }
    return FM_ERR_INTERNAL;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return FM_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FM_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump(const fourmap::Json& j) { return copy_string(j.dump()); }

fourmap::Json parse(const char* text) { return fourmap::parse_json(text_arg(text, "json")); }

const fourmap::Coloring& fitted(const fm_map& map, const fm_coloring& col) {
  if (col.value.face_count() != map.value.face_count()) {
    fourmap::fail(fourmap::ErrorCode::InvalidArgument, "coloring belongs to a map of a different size");
  }
  return col.value;
}

}  // namespace

extern "C" {

const char* fm_last_error(void) { return g_last_error.c_str(); }

const char* fm_status_name(fm_status status) {
  switch (status) {
    case FM_OK: return "ok";
    case FM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FM_ERR_PARSE: return "parse error";
    case FM_ERR_PRECONDITION: return "precondition violated";
    case FM_ERR_NULL: return "null argument";
    case FM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void fm_string_free(char* s) { std::free(s); }

fm_status fm_map_from_json(const char* json, fm_map** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_map{fourmap::map_from_json(parse(json))};
  });
}

fm_status fm_map_to_json(const fm_map* map, char** out) {
  return guarded([&] { deref(out, "out") = dump(fourmap::to_json(deref(map, "map").value)); });
}

fm_status fm_map_to_dot(const fm_map* map, const fm_coloring* col, int show_dotted, char** out) {
  return guarded([&] {
    const auto& m = deref(map, "map");
    const fourmap::Coloring* c = col ? &fitted(m, *col) : nullptr;
    deref(out, "out") = copy_string(fourmap::export_dot(m.value, c, show_dotted != 0));
  });
}

fm_status fm_map_face_count(const fm_map* map, size_t* out) {
  return guarded([&] { deref(out, "out") = deref(map, "map").value.face_count(); });
}

fm_status fm_map_edge_count(const fm_map* map, size_t* out) {
  return guarded([&] { deref(out, "out") = deref(map, "map").value.edge_count(); });
}

fm_status fm_map_adjacent(const fm_map* map, const char* f, const char* g, int* out) {
  return guarded([&] {
    deref(out, "out") = deref(map, "map").value.adjacent(text_arg(f, "f"), text_arg(g, "g")) ? 1 : 0;
  });
}

void fm_map_free(fm_map* map) { delete map; }

fm_status fm_coloring_from_json(const fm_map* map, const char* json, fm_coloring** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_coloring{fourmap::coloring_from_json(deref(map, "map").value, parse(json))};
  });
}

fm_status fm_coloring_to_json(const fm_map* map, const fm_coloring* col, char** out) {
  return guarded([&] {
    const auto& m = deref(map, "map");
    deref(out, "out") = dump(fourmap::to_json(m.value, fitted(m, deref(col, "col"))));
  });
}

void fm_coloring_free(fm_coloring* col) { delete col; }

fm_status fm_verify_coloring(const fm_map* map, const fm_coloring* col, int* ok) {
  return guarded([&] {
    const auto& m = deref(map, "map");
    deref(ok, "ok") = fourmap::verify_coloring(m.value, fitted(m, deref(col, "col"))) ? 1 : 0;
  });
}

fm_status fm_color_exact(const fm_map* map, int k_max, int* chi, fm_coloring** out) {
  return guarded([&] {
    auto& chi_slot = deref(chi, "chi");
    auto r = fourmap::exact_chromatic(deref(map, "map").value, k_max);
    chi_slot = r.chi.value_or(0);
    if (out) *out = r.witness ? new fm_coloring{std::move(*r.witness)} : nullptr;
  });
}

fm_status fm_color_induction(const fm_map* map, int palette, fm_coloring** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    auto col = fourmap::induction_color(deref(map, "map").value, std::nullopt, palette);
    slot = col ? new fm_coloring{std::move(*col)} : nullptr;
  });
}

fm_status fm_greedy_extend(const fm_map* map, const fm_coloring* col, const char* face, char** out) {
  return guarded([&] {
    const auto& m = deref(map, "map");
    auto outcome = fourmap::greedy_extend(m.value, fitted(m, deref(col, "col")), m.value.id(text_arg(face, "face")));
    deref(out, "out") = dump(fourmap::to_json(m.value, outcome));
  });
}

fm_status fm_precoloring_extension(const fm_map* map, const fm_coloring* precol, char** out) {
  return guarded([&] {
    const auto& m = deref(map, "map");
    const auto& c = fitted(m, deref(precol, "precol"));
    std::vector<fourmap::FaceId> sub;
    for (std::uint32_t f = 0; f < m.value.face_count(); ++f)
      if (c.assigned(fourmap::FaceId{f})) sub.push_back(fourmap::FaceId{f});
    auto verdict = fourmap::check_precoloring_extension(m.value, sub, c);
    deref(out, "out") = dump(fourmap::to_json(m.value, verdict));
  });
}

fm_status fm_is_planar(const fm_map* map, int* out) {
  return guarded([&] { deref(out, "out") = fourmap::is_planar(deref(map, "map").value) ? 1 : 0; });
}

fm_status fm_edge_bound_filter(const fm_map* map, int* out) {
  return guarded([&] { deref(out, "out") = fourmap::edge_bound_filter(deref(map, "map").value) ? 1 : 0; });
}

fm_status fm_find_kuratowski(const fm_map* map, char** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    const auto& m = deref(map, "map");
    auto w = fourmap::find_kuratowski(m.value);
    slot = w ? dump(fourmap::to_json(m.value, *w)) : nullptr;
  });
}

fm_status fm_validate_witness(const fm_map* map, const char* witness_json, int* ok) {
  return guarded([&] {
    auto& slot = deref(ok, "ok");
    const auto& m = deref(map, "map");
    auto w = fourmap::witness_from_json(m.value, parse(witness_json));
    auto err = fourmap::validate_witness(m.value, w);
    slot = err ? 0 : 1;
  });
}

fm_status fm_verify_theorem_3_2(char** out) {
  return guarded([&] { deref(out, "out") = dump(fourmap::to_json(fourmap::verify_theorem_3_2())); });
}

fm_status fm_embedding_from_json(const char* json, fm_embedding** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_embedding{fourmap::augmented_from_json(parse(json))};
  });
}

fm_status fm_embedding_to_json(const fm_embedding* emb, char** out) {
  return guarded([&] {
    const auto& e = deref(emb, "emb").value;
    deref(out, "out") = dump(e.segments.empty() ? fourmap::to_json(e.base) : fourmap::to_json(e));
  });
}

fm_status fm_embedding_counts(const fm_embedding* emb, int* v, int* e, int* f) {
  return guarded([&] {
    auto c = fourmap::count_vef(deref(emb, "emb").value);
    deref(v, "v") = c.v;
    deref(e, "e") = c.e;
    deref(f, "f") = c.f;
  });
}

fm_status fm_euler_check(const fm_embedding* emb, char** out, int* consistent) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    auto r = fourmap::euler_check(deref(emb, "emb").value);
    if (consistent) *consistent = r.consistent ? 1 : 0;
    slot = dump(fourmap::to_json(r));
  });
}

fm_status fm_embedding_dual(const fm_embedding* emb, fm_map** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_map{deref(emb, "emb").value.base.dual()};
  });
}

void fm_embedding_free(fm_embedding* emb) { delete emb; }

fm_status fm_generate_figure1(fm_embedding** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_embedding{{fourmap::build_figure1().embedding, {}}};
  });
}

fm_status fm_generate_figure1_mn(fm_embedding** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_embedding{fourmap::add_edge_mn(fourmap::build_figure1()).structure};
  });
}

fm_status fm_generate_base5(fm_map** map, fm_coloring** coloring) {
  return guarded([&] {
    auto& slot = deref(map, "map");
    auto base = fourmap::base_map_5();
    slot = new fm_map{base.map};
    if (coloring) *coloring = new fm_coloring{base.coloring};
  });
}

fm_status fm_generate_multipartite(int i, int j, int k, int l, fm_map** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_map{fourmap::complete_multipartite(i, j, k, l)};
  });
}

fm_status fm_generate_random(int n_faces, uint64_t seed, fm_map** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_map{fourmap::random_planar_map(n_faces, seed)};
  });
}

fm_status fm_generate_flower(fm_map** map, fm_coloring** precoloring) {
  return guarded([&] {
    auto& slot = deref(map, "map");
    auto flower = fourmap::flower_counterexample();
    slot = new fm_map{flower.map};
    if (precoloring) *precoloring = new fm_coloring{flower.precoloring};
  });
}

fm_status fm_generate_curve(int n_segments, int closed, fm_map** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_map{fourmap::curve_map(n_segments, closed != 0)};
  });
}

fm_status fm_generate_boxes(int m, fm_voxels** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_voxels{fourmap::neighborly_boxes(m)};
  });
}

fm_status fm_voxels_from_json(const char* json, fm_voxels** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_voxels{fourmap::voxels_from_json(parse(json))};
  });
}

fm_status fm_voxels_to_json(const fm_voxels* cx, char** out) {
  return guarded([&] { deref(out, "out") = dump(fourmap::to_json(deref(cx, "cx").value)); });
}

fm_status fm_voxels_adjacency(const fm_voxels* cx, fm_map** out) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    slot = new fm_map{fourmap::adjacency_graph(deref(cx, "cx").value)};
  });
}

void fm_voxels_free(fm_voxels* cx) { delete cx; }

fm_status fm_test_conjecture(int dimension, const fm_map* map, const char* instance, char** out, int* falsified) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    auto r = fourmap::test_conjecture(dimension, deref(map, "map").value, instance ? instance : "");
    if (falsified) *falsified = r.verdict == fourmap::ConjectureVerdict::Falsified ? 1 : 0;
    slot = dump(fourmap::to_json(r));
  });
}

void fm_claim_config_default(fm_claim_config* config) {
  if (!config) return;
  fourmap::ClaimConfig d;
  *config = {d.seed, d.corpus_size, d.min_faces, d.max_faces, d.curve_max, d.boxes_m, d.precolorings_per_map};
}

fm_status fm_run_claim(const char* claim_id, const fm_claim_config* config, char** out, int* ok) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    auto& ok_slot = deref(ok, "ok");
    auto id = fourmap::parse_claim_id(text_arg(claim_id, "claim_id"));
    if (!id) fourmap::fail(fourmap::ErrorCode::InvalidArgument, std::string("unknown claim id '") + claim_id + "'");
    fourmap::ClaimConfig c;
    if (config) {
      c = {config->seed,      config->corpus_size, config->min_faces,           config->max_faces,
           config->curve_max, config->boxes_m,     config->precolorings_per_map};
    }
    auto status = fourmap::run_claim(*id, c);
    ok_slot = fourmap::claims_ok(std::vector<fourmap::ClaimStatus>{status}) ? 1 : 0;
    slot = dump(fourmap::to_json(status));
  });
}

fm_status fm_run_all(uint64_t seed, char** out, int* ok) {
  return guarded([&] {
    auto& slot = deref(out, "out");
    auto& ok_slot = deref(ok, "ok");
    auto statuses = fourmap::run_all(seed);
    fourmap::Json arr = fourmap::Json::array();
    for (const auto& s : statuses) arr.push_back(fourmap::to_json(s));
    ok_slot = fourmap::claims_ok(statuses) ? 1 : 0;
    slot = dump(arr);
  });
}

}  // extern "C"
