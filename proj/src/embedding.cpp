#include "fourmap/embedding.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "fourmap/error.hpp"

namespace fourmap {

PlanarEmbedding PlanarEmbedding::build(const RotationSpec& rotation, bool outer_face_removed) {
  if (rotation.empty()) fail(ErrorCode::InvalidArgument, "embedding has no vertices");
  PlanarEmbedding emb;
  emb.outer_face_removed_ = outer_face_removed;
  std::unordered_map<std::string, std::uint32_t> index;
  for (const auto& [label, _] : rotation) {
    if (label.empty()) fail(ErrorCode::InvalidArgument, "empty vertex id");
    if (!index.emplace(label, static_cast<std::uint32_t>(emb.labels_.size())).second) {
      fail(ErrorCode::InvalidArgument, "duplicate vertex '" + label + "'");
    }
    emb.labels_.push_back(label);
  }
  const std::size_t n = emb.labels_.size();
  emb.rotation_.assign(n, {});
  std::size_t darts = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    std::set<std::uint32_t> seen;
    for (const auto& name : rotation[u].second) {
      auto it = index.find(name);
      if (it == index.end()) {
        fail(ErrorCode::InvalidArgument, "dangling edge reference '" + emb.labels_[u] + "'-'" + name + "'");
      }
      if (it->second == u) fail(ErrorCode::InvalidArgument, "loop at vertex '" + name + "'");
      if (!seen.insert(it->second).second) {
        fail(ErrorCode::InvalidArgument, "parallel edge '" + emb.labels_[u] + "'-'" + name + "'");
      }
      emb.rotation_[u].push_back(it->second);
    }
    darts += emb.rotation_[u].size();
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    for (auto v : emb.rotation_[u]) {
      const auto& back = emb.rotation_[v];
      if (std::find(back.begin(), back.end(), u) == back.end()) {
        fail(ErrorCode::InvalidArgument,
             "edge '" + emb.labels_[u] + "'-'" + emb.labels_[v] + "' is listed only at '" + emb.labels_[u] + "'");
      }
    }
  }
  emb.edge_count_ = darts / 2;

  std::vector<bool> reached(n, false);
  std::deque<std::uint32_t> queue{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : emb.rotation_[u]) {
      if (!reached[v]) {
        reached[v] = true;
        ++count;
        queue.push_back(v);
      }
    }
  }
  if (count != n) fail(ErrorCode::InvalidArgument, "embedding graph is disconnected");
  return emb;
}

RotationSpec PlanarEmbedding::rotation_spec() const {
  RotationSpec spec;
  for (std::uint32_t u = 0; u < labels_.size(); ++u) {
    std::vector<std::string> names;
    for (auto v : rotation_[u]) names.push_back(labels_[v]);
    spec.emplace_back(labels_[u], std::move(names));
  }
  return spec;
}

namespace {

struct DartTable {
  // dart id = offset[u] + position of v in rotation[u]
  std::vector<std::size_t> offset;
  std::vector<std::uint32_t> tail;
  std::vector<std::uint32_t> head;
  std::vector<std::size_t> reverse;
};

DartTable dart_table(const std::vector<std::vector<std::uint32_t>>& rotation) {
  DartTable t;
  t.offset.resize(rotation.size() + 1, 0);
  for (std::size_t u = 0; u < rotation.size(); ++u) t.offset[u + 1] = t.offset[u] + rotation[u].size();
  t.tail.resize(t.offset.back());
  t.head.resize(t.offset.back());
  t.reverse.resize(t.offset.back());
  for (std::uint32_t u = 0; u < rotation.size(); ++u) {
    for (std::size_t i = 0; i < rotation[u].size(); ++i) {
      auto v = rotation[u][i];
      const auto& back = rotation[v];
      auto j = static_cast<std::size_t>(std::find(back.begin(), back.end(), u) - back.begin());
      t.tail[t.offset[u] + i] = u;
      t.head[t.offset[u] + i] = v;
      t.reverse[t.offset[u] + i] = t.offset[v] + j;
    }
  }
  return t;
}

// Face of each dart, plus the dart cycles.
std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> trace(
    const std::vector<std::vector<std::uint32_t>>& rotation, const DartTable& t) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> face_of(t.tail.size(), none);
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t d0 = 0; d0 < t.tail.size(); ++d0) {
    if (face_of[d0] != none) continue;
    auto& cycle = cycles.emplace_back();
    std::size_t d = d0;
    do {
      face_of[d] = cycles.size() - 1;
      cycle.push_back(d);
      // Arriving at v along u->v, leave along the successor of u around v.
      std::size_t back = t.reverse[d];
      std::uint32_t v = t.tail[back];
      std::size_t pos = back - t.offset[v];
      d = t.offset[v] + (pos + 1) % rotation[v].size();
    } while (d != d0);
  }
  return {std::move(face_of), std::move(cycles)};
}

}  // namespace

std::vector<std::vector<std::uint32_t>> PlanarEmbedding::trace_faces() const {
  if (edge_count_ == 0) return {{0}};
  auto table = dart_table(rotation_);
  auto [_, cycles] = trace(rotation_, table);
  std::vector<std::vector<std::uint32_t>> faces;
  for (const auto& cycle : cycles) {
    std::vector<std::uint32_t> verts;
    for (auto d : cycle) verts.push_back(table.tail[d]);
    std::rotate(verts.begin(), std::min_element(verts.begin(), verts.end()), verts.end());
    faces.push_back(std::move(verts));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::string PlanarEmbedding::face_name(const std::vector<std::uint32_t>& cycle) const {
  bool short_labels = std::all_of(cycle.begin(), cycle.end(), [&](auto v) { return labels_.at(v).size() == 1; });
  std::string name;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0 && !short_labels) name += '-';
    name += labels_.at(cycle[i]);
  }
  return name;
}

MapGraph PlanarEmbedding::dual() const {
  auto faces = trace_faces();
  std::vector<std::string> names;
  std::set<std::string> used;
  for (const auto& f : faces) {
    std::string name = face_name(f);
    std::string unique = name;
    for (int k = 2; !used.insert(unique).second; ++k) unique = name + "#" + std::to_string(k);
    names.push_back(unique);
  }
  if (edge_count_ == 0) return MapGraph::build_indexed(std::move(names), {});

  auto table = dart_table(rotation_);
  auto [face_of, cycles] = trace(rotation_, table);
  // trace_faces sorted the cycles; map raw cycle ids onto sorted positions.
  std::vector<std::uint32_t> sorted_pos(cycles.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    std::vector<std::uint32_t> verts;
    for (auto d : cycles[c]) verts.push_back(table.tail[d]);
    std::rotate(verts.begin(), std::min_element(verts.begin(), verts.end()), verts.end());
    sorted_pos[c] = static_cast<std::uint32_t>(std::lower_bound(faces.begin(), faces.end(), verts) - faces.begin());
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t d = 0; d < table.tail.size(); ++d) {
    auto a = sorted_pos[face_of[d]];
    auto b = sorted_pos[face_of[table.reverse[d]]];
    if (a < b) pairs.emplace_back(a, b);
  }
  return MapGraph::build_indexed(std::move(names), pairs);
}

VefCounts count_vef(const PlanarEmbedding& emb) {
  int faces = static_cast<int>(emb.trace_faces().size());
  if (emb.outer_face_removed()) --faces;
  return {static_cast<int>(emb.vertex_count()), static_cast<int>(emb.edge_count()), faces};
}

bool same_cycle(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i) {
        std::size_t j = dir == 0 ? (shift + i) % n : (shift + n - i) % n;
        match = a[i] == b[j];
      }
      if (match) return true;
    }
  }
  return false;
}

VefCounts count_vef(const AugmentedEmbedding& emb) {
  VefCounts c = count_vef(emb.base);
  c.v += 2 * static_cast<int>(emb.segments.size());
  c.e += static_cast<int>(emb.segments.size());
  return c;
}

void validate(const AugmentedEmbedding& emb) {
  std::set<std::string> names(emb.base.labels().begin(), emb.base.labels().end());
  for (const auto& s : emb.segments) {
    if (s.from.empty() || s.to.empty()) fail(ErrorCode::InvalidArgument, "free segment with empty endpoint");
    if (s.from == s.to) fail(ErrorCode::InvalidArgument, "free segment '" + s.from + "' is degenerate");
    for (const auto* end : {&s.from, &s.to}) {
      if (!names.insert(*end).second) {
        fail(ErrorCode::InvalidArgument, "free segment endpoint '" + *end + "' is already a vertex");
      }
    }
  }
}

}  // namespace fourmap
