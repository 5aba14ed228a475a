#include "fourmap/claims.hpp"

#include <algorithm>
#include <future>
#include <random>

#include "fourmap/coloring.hpp"
#include "fourmap/error.hpp"
#include "fourmap/generators.hpp"
#include "fourmap/hyperdim.hpp"
#include "fourmap/planarity.hpp"
#include "fourmap/serialize.hpp"

namespace fourmap {

std::string to_string(ClaimId id) {
  switch (id) {
    case ClaimId::Thm3_2: return "Thm3_2";
    case ClaimId::Claim4_1: return "Claim4_1";
    case ClaimId::Claim4_2: return "Claim4_2";
    case ClaimId::Conclusion5_1: return "Conclusion5_1";
    case ClaimId::Conjecture6_1_n1: return "Conjecture6_1_n1";
    case ClaimId::Conjecture6_1_n3: return "Conjecture6_1_n3";
  }
  return "unknown";
}

std::string to_string(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::Verified: return "Verified";
    case ClaimVerdict::Falsified: return "Falsified";
    case ClaimVerdict::HoldsOnCorpus: return "HoldsOnCorpus";
  }
  return "unknown";
}

std::optional<ClaimId> parse_claim_id(std::string_view s) {
  for (auto id : kAllClaims) {
    if (to_string(id) == s) return id;
  }
  return std::nullopt;
}

ClaimVerdict expected_verdict(ClaimId id) {
  switch (id) {
    case ClaimId::Thm3_2:
    case ClaimId::Conjecture6_1_n1: return ClaimVerdict::Verified;
    case ClaimId::Claim4_2:
    case ClaimId::Conjecture6_1_n3: return ClaimVerdict::Falsified;
    case ClaimId::Claim4_1:
    case ClaimId::Conclusion5_1: return ClaimVerdict::HoldsOnCorpus;
  }
  return ClaimVerdict::Verified;
}

void validate(const ClaimConfig& c) {
  auto require = [](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidArgument, std::string("claim config: ") + what);
  };
  require(c.corpus_size >= 1 && c.corpus_size <= 100000, "corpus_size must be in [1, 100000]");
  require(c.min_faces >= 4 && c.min_faces <= c.max_faces, "need 4 <= min_faces <= max_faces");
  require(c.max_faces <= 200, "max_faces must be at most 200");
  require(c.curve_max >= 1 && c.curve_max <= 64, "curve_max must be in [1, 64]");
  require(c.boxes_m >= 2 && c.boxes_m <= 32, "boxes_m must be in [2, 32]");
  require(c.precolorings_per_map >= 1 && c.precolorings_per_map <= 64, "precolorings_per_map must be in [1, 64]");
}

std::vector<CorpusEntry> corpus_plan(const ClaimConfig& config) {
  std::uint64_t state = config.seed;
  const auto span = static_cast<std::uint64_t>(config.max_faces - config.min_faces + 1);
  std::vector<CorpusEntry> plan;
  for (int i = 0; i < config.corpus_size; ++i) {
    int faces = config.min_faces + static_cast<int>(splitmix64(state) % span);
    plan.push_back({faces, splitmix64(state)});
  }
  return plan;
}

namespace {

Json corpus_params(const ClaimConfig& c) {
  return Json{{"seed", c.seed}, {"maps", c.corpus_size}, {"min_faces", c.min_faces}, {"max_faces", c.max_faces}};
}

ClaimStatus make_status(ClaimId id) {
  ClaimStatus s;
  s.id = id;
  s.expected = expected_verdict(id);
  return s;
}

ClaimStatus five_face_exhaustion() {
  auto s = make_status(ClaimId::Thm3_2);
  auto r = verify_theorem_3_2();
  s.verdict = r.holds() ? ClaimVerdict::Verified : ClaimVerdict::Falsified;
  s.evidence = to_json(r);
  s.evidence["method"] = "exhaustive over all labeled simple graphs on 5 faces";
  return s;
}

// (k+1)-face maps whose k-face submaps are all 4-colorable must be 4-colorable.
ClaimStatus submap_colorability(const ClaimConfig& config) {
  auto s = make_status(ClaimId::Claim4_1);
  int implications = 0;
  int max_chi = 0;
  std::optional<Json> counterexample;
  for (const auto& entry : corpus_plan(config)) {
    MapGraph map = random_planar_map(entry.faces, entry.seed);
    bool subs_colorable = true;
    for (std::uint32_t x = 0; x < map.face_count(); ++x) {
      std::vector<FaceId> rest;
      for (std::uint32_t f = 0; f < map.face_count(); ++f)
        if (f != x) rest.push_back(FaceId{f});
      subs_colorable = subs_colorable && k_coloring(map.induced(rest), 4).has_value();
      ++implications;
    }
    auto chi = exact_chromatic(map, 4).chi;
    if (chi) max_chi = std::max(max_chi, *chi);
    if (subs_colorable && !chi && !counterexample) {
      counterexample = Json{{"map", to_json(map)}, {"faces", entry.faces}, {"seed", entry.seed}};
    }
  }
  if (counterexample) {
    // Replay: the stored map must still fail 4-coloring.
    s.replay_ok = !k_coloring(map_from_json((*counterexample)["map"]), 4).has_value();
    s.verdict = ClaimVerdict::Falsified;
    s.evidence["counterexample"] = *counterexample;
  } else {
    s.verdict = ClaimVerdict::HoldsOnCorpus;
  }
  s.evidence["corpus"] = corpus_params(config);
  s.evidence["implications_checked"] = implications;
  s.evidence["max_chi"] = max_chi;
  s.evidence["note"] = "unconditional consequence tested: every corpus map and each one-face-deleted submap is 4-colorable";
  return s;
}

// A proper coloring drawn by backtracking with shuffled color preferences.
std::optional<Coloring> random_coloring(const MapGraph& map, int palette, std::mt19937_64& rng) {
  auto order = bfs_order(map);
  std::vector<int> colors(map.face_count(), -1);
  std::vector<std::vector<int>> prefs(order.size());
  for (auto& p : prefs) {
    p.resize(static_cast<std::size_t>(palette));
    for (int c = 0; c < palette; ++c) p[c] = c;
    std::shuffle(p.begin(), p.end(), rng);
  }
  auto solve = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    auto f = order[i];
    for (int c : prefs[i]) {
      bool clash = false;
      for (auto g : map.neighbors(f)) clash = clash || colors[g] == c;
      if (clash) continue;
      colors[f.value] = c;
      if (self(self, i + 1)) return true;
    }
    colors[f.value] = -1;
    return false;
  };
  if (!solve(solve, 0)) return std::nullopt;
  Coloring col(map.face_count(), palette);
  for (std::uint32_t f = 0; f < colors.size(); ++f) col.assign(FaceId{f}, Color{colors[f]});
  return col;
}

Json extension_instance(const MapGraph& map, const std::vector<FaceId>& sub, const Coloring& precol) {
  Json subset = Json::array();
  for (auto f : sub) subset.push_back(map.label(f));
  return Json{{"map", to_json(map)}, {"sub", std::move(subset)}, {"precoloring", to_json(map, precol)}};
}

bool replays_not_extendable(const Json& instance) {
  MapGraph map = map_from_json(instance["map"]);
  std::vector<FaceId> sub;
  for (const auto& f : instance["sub"]) sub.push_back(map.id(f.get<std::string>()));
  Coloring precol = coloring_from_json(map, instance["precoloring"]);
  // Exhaustiveness: the verdict must survive a different search order.
  std::vector<FaceId> free;
  for (std::uint32_t f = 0; f < map.face_count(); ++f)
    if (!precol.assigned(FaceId{f})) free.push_back(FaceId{f});
  std::reverse(free.begin(), free.end());
  bool forward = std::holds_alternative<NotExtendable>(check_precoloring_extension(map, sub, precol));
  bool backward =
      std::holds_alternative<NotExtendable>(check_precoloring_extension(map, sub, precol, std::span(free)));
  return forward && backward;
}

// Strict reading: a fixed coloring of a k-face submap must extend.
ClaimStatus fixed_coloring_extension(const ClaimConfig& config) {
  auto s = make_status(ClaimId::Claim4_2);
  auto flower = flower_counterexample();
  Json fixture = extension_instance(flower.map, flower.sub, flower.precoloring);
  bool flower_blocked = replays_not_extendable(fixture);
  bool flower_colorable = exact_chromatic(flower.map, 4).chi.has_value();
  bool flower_planar = is_planar(flower.map);

  std::mt19937_64 rng(config.seed ^ 0x4a2c1d0e5f3b7a69ULL);
  int instances = 0;
  int not_extendable = 0;
  std::optional<Json> corpus_example;
  for (const auto& entry : corpus_plan(config)) {
    MapGraph map = random_planar_map(entry.faces, entry.seed);
    // Drop the face with the most neighbors; it is the hardest to extend to.
    std::uint32_t x = 0;
    for (std::uint32_t f = 1; f < map.face_count(); ++f)
      if (map.degree(FaceId{f}) > map.degree(FaceId{x})) x = f;
    std::vector<FaceId> sub;
    for (std::uint32_t f = 0; f < map.face_count(); ++f)
      if (f != x) sub.push_back(FaceId{f});
    MapGraph rest = map.induced(sub);
    for (int trial = 0; trial < config.precolorings_per_map; ++trial) {
      auto local = random_coloring(rest, 4, rng);
      if (!local) continue;
      Coloring precol(map.face_count(), 4);
      for (std::uint32_t i = 0; i < sub.size(); ++i) precol.assign(sub[i], *local->at(FaceId{i}));
      ++instances;
      if (std::holds_alternative<NotExtendable>(check_precoloring_extension(map, sub, precol))) {
        ++not_extendable;
        if (!corpus_example) corpus_example = extension_instance(map, sub, precol);
      }
    }
  }

  s.replay_ok = flower_blocked && flower_colorable && flower_planar;
  if (corpus_example) s.replay_ok = s.replay_ok && replays_not_extendable(*corpus_example);
  s.verdict = flower_blocked ? ClaimVerdict::Falsified
              : not_extendable ? ClaimVerdict::Falsified
                               : ClaimVerdict::HoldsOnCorpus;
  s.evidence["reading"] = "strict: the fixed coloring of the k-face submap must extend unchanged";
  s.evidence["note"] = "the loose reading (recolor everything) is plain 4-colorability, covered by Claim4_1";
  s.evidence["counterexample"] = fixture;
  s.evidence["counterexample_planar"] = flower_planar;
  s.evidence["counterexample_map_4_colorable"] = flower_colorable;
  s.evidence["corpus"] = corpus_params(config);
  s.evidence["corpus_instances"] = instances;
  s.evidence["corpus_not_extendable"] = not_extendable;
  s.evidence["corpus_counterexample"] = corpus_example ? *corpus_example : Json(nullptr);
  return s;
}

ClaimStatus induction_corpus(const ClaimConfig& config) {
  auto s = make_status(ClaimId::Conclusion5_1);
  int colored = 0;
  int max_chi = 0;
  std::optional<Json> counterexample;
  for (const auto& entry : corpus_plan(config)) {
    MapGraph map = random_planar_map(entry.faces, entry.seed);
    auto col = induction_color(map);
    auto chi = exact_chromatic(map, 4).chi;
    bool ok = col && col->total() && verify_coloring(map, *col) && chi;
    if (chi) max_chi = std::max(max_chi, *chi);
    if (ok) {
      ++colored;
    } else if (!counterexample) {
      counterexample = Json{{"map", to_json(map)}, {"faces", entry.faces}, {"seed", entry.seed}};
    }
  }
  if (counterexample) {
    s.verdict = ClaimVerdict::Falsified;
    s.replay_ok = !induction_color(map_from_json((*counterexample)["map"])).has_value();
    s.evidence["counterexample"] = *counterexample;
  } else {
    s.verdict = ClaimVerdict::HoldsOnCorpus;
  }
  s.evidence["corpus"] = corpus_params(config);
  s.evidence["colored"] = colored;
  s.evidence["max_chi"] = max_chi;
  return s;
}

ClaimStatus conjecture_n1(const ClaimConfig& config) {
  auto s = make_status(ClaimId::Conjecture6_1_n1);
  Json instances = Json::array();
  bool all_consistent = true;
  for (int n = 1; n <= config.curve_max; ++n) {
    for (bool closed : {false, true}) {
      if (closed && n < 3) continue;
      auto r = test_conjecture(1, curve_map(n, closed), (closed ? "C" : "P") + std::to_string(n));
      all_consistent = all_consistent && r.verdict == ConjectureVerdict::Consistent;
      instances.push_back(to_json(r));
    }
  }
  s.verdict = all_consistent ? ClaimVerdict::Verified : ClaimVerdict::Falsified;
  s.evidence["method"] = "exhaustive over every open and closed curve with at most curve_max segments";
  s.evidence["curve_max"] = config.curve_max;
  s.evidence["instances"] = std::move(instances);
  return s;
}

ClaimStatus conjecture_n3(const ClaimConfig& config) {
  auto s = make_status(ClaimId::Conjecture6_1_n3);
  VoxelComplex cx = neighborly_boxes(config.boxes_m);
  MapGraph adj = adjacency_graph(cx);
  auto r = test_conjecture(3, adj, "neighborly_boxes(" + std::to_string(config.boxes_m) + ")");
  s.evidence["report"] = to_json(r);
  s.evidence["complete"] = adj.edge_count() == adj.face_count() * (adj.face_count() - 1) / 2;
  if (r.verdict == ConjectureVerdict::Falsified) {
    s.verdict = ClaimVerdict::Falsified;
    Json payload = to_json(cx);
    // Replay from the serialized complex, not the in-memory one.
    auto replay = test_conjecture(3, adjacency_graph(voxels_from_json(payload)));
    s.replay_ok = replay.verdict == ConjectureVerdict::Falsified && replay.chi == r.chi;
    s.evidence["counterexample"] = std::move(payload);
  } else {
    s.verdict = ClaimVerdict::HoldsOnCorpus;
  }
  return s;
}

}  // namespace

ClaimStatus run_claim(ClaimId id, const ClaimConfig& config) {
  validate(config);
  switch (id) {
    case ClaimId::Thm3_2: return five_face_exhaustion();
    case ClaimId::Claim4_1: return submap_colorability(config);
    case ClaimId::Claim4_2: return fixed_coloring_extension(config);
    case ClaimId::Conclusion5_1: return induction_corpus(config);
    case ClaimId::Conjecture6_1_n1: return conjecture_n1(config);
    case ClaimId::Conjecture6_1_n3: return conjecture_n3(config);
  }
  fail(ErrorCode::InvalidArgument, "unknown claim id");
}

std::vector<ClaimStatus> run_all(std::uint64_t seed) {
  ClaimConfig config;
  config.seed = seed;
  std::vector<std::future<ClaimStatus>> jobs;
  for (auto id : kAllClaims) jobs.push_back(std::async(std::launch::async, [id, config] { return run_claim(id, config); }));
  std::vector<ClaimStatus> out;
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

bool claims_ok(const std::vector<ClaimStatus>& statuses) {
  return std::all_of(statuses.begin(), statuses.end(), [](const ClaimStatus& s) {
    if (!s.replay_ok) return false;
    return s.expected != ClaimVerdict::Verified || s.verdict == ClaimVerdict::Verified;
  });
}

}  // namespace fourmap
