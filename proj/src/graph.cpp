#include "fourmap/graph.hpp"

#include <algorithm>
#include <deque>

#include "fourmap/error.hpp"

namespace fourmap {

std::string color_name(Color c) {
  if (c.index >= 0 && c.index < 26) return std::string(1, static_cast<char>('a' + c.index));
  return "c" + std::to_string(c.index);
}

MapGraph MapGraph::build(std::vector<std::string> faces,
                         const std::vector<std::pair<std::string, std::string>>& adjacent_pairs) {
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < faces.size(); ++i) {
    if (!index.emplace(faces[i], i).second) fail(ErrorCode::InvalidArgument, "duplicate face id '" + faces[i] + "'");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> indexed;
  indexed.reserve(adjacent_pairs.size());
  for (const auto& [f, g] : adjacent_pairs) {
    auto fi = index.find(f);
    auto gi = index.find(g);
    if (fi == index.end()) fail(ErrorCode::InvalidArgument, "unknown face '" + f + "' in adjacency pair");
    if (gi == index.end()) fail(ErrorCode::InvalidArgument, "unknown face '" + g + "' in adjacency pair");
    indexed.emplace_back(fi->second, gi->second);
  }
  return build_indexed(std::move(faces), indexed);
}

MapGraph MapGraph::build_indexed(std::vector<std::string> faces,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& adjacent_pairs) {
  if (faces.empty()) fail(ErrorCode::InvalidArgument, "a map needs at least one face");
  MapGraph m;
  m.labels_ = std::move(faces);
  const std::size_t n = m.labels_.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (m.labels_[i].empty()) fail(ErrorCode::InvalidArgument, "empty face id");
    if (!m.index_.emplace(m.labels_[i], i).second) {
      fail(ErrorCode::InvalidArgument, "duplicate face id '" + m.labels_[i] + "'");
    }
  }
  m.neighbors_.assign(n, {});
  m.matrix_.assign(n * n, 0);
  for (auto [f, g] : adjacent_pairs) {
    if (f >= n || g >= n) fail(ErrorCode::InvalidArgument, "face index out of range in adjacency pair");
    if (f == g) fail(ErrorCode::InvalidArgument, "face '" + m.labels_[f] + "' cannot be adjacent to itself");
    if (m.matrix_[f * n + g]) continue;
    m.matrix_[f * n + g] = m.matrix_[g * n + f] = 1;
    m.neighbors_[f].push_back(g);
    m.neighbors_[g].push_back(f);
    ++m.edge_count_;
  }
  for (auto& list : m.neighbors_) std::sort(list.begin(), list.end());
  return m;
}

std::optional<FaceId> MapGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return FaceId{it->second};
}

FaceId MapGraph::id(std::string_view label) const {
  auto f = find(label);
  if (!f) fail(ErrorCode::InvalidArgument, "unknown face '" + std::string(label) + "'");
  return *f;
}

bool MapGraph::adjacent(FaceId f, FaceId g) const {
  const std::size_t n = labels_.size();
  if (f.value >= n || g.value >= n) fail(ErrorCode::InvalidArgument, "face index out of range");
  return matrix_[f.value * n + g.value] != 0;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> MapGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count_);
  for (std::uint32_t f = 0; f < neighbors_.size(); ++f) {
    for (auto g : neighbors_[f]) {
      if (f < g) out.emplace_back(f, g);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> MapGraph::label_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [f, g] : edges()) out.emplace_back(labels_[f], labels_[g]);
  return out;
}

MapGraph MapGraph::induced(std::span<const FaceId> keep) const {
  std::vector<std::string> names;
  std::vector<std::int64_t> remap(labels_.size(), -1);
  for (std::uint32_t i = 0; i < keep.size(); ++i) {
    if (keep[i].value >= labels_.size()) fail(ErrorCode::InvalidArgument, "face index out of range");
    if (remap[keep[i].value] >= 0) fail(ErrorCode::InvalidArgument, "duplicate face in induced set");
    remap[keep[i].value] = i;
    names.push_back(labels_[keep[i].value]);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (auto [f, g] : edges()) {
    if (remap[f] >= 0 && remap[g] >= 0) {
      pairs.emplace_back(static_cast<std::uint32_t>(remap[f]), static_cast<std::uint32_t>(remap[g]));
    }
  }
  return build_indexed(std::move(names), pairs);
}

Coloring::Coloring(std::size_t face_count, int palette_size) : palette_(palette_size), colors_(face_count, -1) {
  if (palette_size < 1) fail(ErrorCode::InvalidArgument, "palette size must be at least 1");
}

std::optional<Color> Coloring::at(FaceId f) const {
  int c = colors_.at(f.value);
  if (c < 0) return std::nullopt;
  return Color{c};
}

void Coloring::assign(FaceId f, Color c) {
  if (c.index < 0 || c.index >= palette_) {
    fail(ErrorCode::InvalidArgument,
         "color " + std::to_string(c.index) + " outside palette of size " + std::to_string(palette_));
  }
  colors_.at(f.value) = c.index;
}

bool Coloring::total() const {
  return std::all_of(colors_.begin(), colors_.end(), [](int c) { return c >= 0; });
}

std::size_t Coloring::assigned_count() const {
  return static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(), [](int c) { return c >= 0; }));
}

int Coloring::colors_used() const {
  std::vector<bool> seen(static_cast<std::size_t>(palette_), false);
  int used = 0;
  for (int c : colors_) {
    if (c >= 0 && c < palette_ && !seen[c]) {
      seen[c] = true;
      ++used;
    }
  }
  return used;
}

std::vector<std::vector<FaceId>> bfs_order_components(const MapGraph& map) {
  std::vector<std::vector<FaceId>> comps;
  std::vector<bool> seen(map.face_count(), false);
  for (std::uint32_t start = 0; start < map.face_count(); ++start) {
    if (seen[start]) continue;
    auto& comp = comps.emplace_back();
    std::deque<std::uint32_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      auto f = queue.front();
      queue.pop_front();
      comp.push_back(FaceId{f});
      for (auto g : map.neighbors(FaceId{f})) {
        if (!seen[g]) {
          seen[g] = true;
          queue.push_back(g);
        }
      }
    }
  }
  return comps;
}

std::vector<FaceId> bfs_order(const MapGraph& map) {
  std::vector<FaceId> out;
  for (auto& comp : bfs_order_components(map)) out.insert(out.end(), comp.begin(), comp.end());
  return out;
}

}  // namespace fourmap
