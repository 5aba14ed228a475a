#include "fourmap/coloring.hpp"

#include <algorithm>

#include "fourmap/error.hpp"

namespace fourmap {

namespace {

void require_fit(const MapGraph& map, const Coloring& col) {
  if (col.face_count() != map.face_count()) {
    fail(ErrorCode::InvalidArgument, "coloring covers " + std::to_string(col.face_count()) + " faces, map has " +
                                         std::to_string(map.face_count()));
  }
}

// Colors among the assigned neighbors of f, as a flag per palette entry.
std::vector<std::uint8_t> neighbor_colors(const MapGraph& map, std::span<const int> colors, int palette,
                                          std::uint32_t f) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(palette), 0);
  for (auto g : map.neighbors(FaceId{f})) {
    int c = colors[g];
    if (c >= 0 && c < palette) seen[c] = 1;
  }
  return seen;
}

std::vector<FaceId> checked_order(const MapGraph& map, std::optional<std::span<const FaceId>> order) {
  if (!order) return bfs_order(map);
  std::vector<bool> seen(map.face_count(), false);
  if (order->size() != map.face_count()) fail(ErrorCode::InvalidArgument, "order is not a permutation of the faces");
  for (auto f : *order) {
    if (f.value >= map.face_count() || seen[f.value]) {
      fail(ErrorCode::InvalidArgument, "order is not a permutation of the faces");
    }
    seen[f.value] = true;
  }
  return {order->begin(), order->end()};
}

std::optional<KuratowskiWitness> blocking_k5(const MapGraph& map, FaceId face,
                                             const std::vector<std::vector<FaceId>>& census) {
  // One neighbor per color, pairwise adjacent: with the new face that is K5
  // outright, every path a single edge.
  if (census.size() == 4) {
    std::vector<FaceId> pick(4);
    auto clique = [&](auto&& self, std::size_t c) -> bool {
      if (c == 4) return true;
      for (auto f : census[c]) {
        bool ok = true;
        for (std::size_t p = 0; p < c && ok; ++p) ok = map.adjacent(pick[p], f);
        if (!ok) continue;
        pick[c] = f;
        if (self(self, c + 1)) return true;
      }
      return false;
    };
    if (clique(clique, 0)) {
      KuratowskiWitness w;
      w.kind = KuratowskiKind::K5;
      w.branch = pick;
      w.branch.push_back(face);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) w.paths.push_back({w.branch[i], w.branch[j]});
      return w;
    }
  }
  std::vector<FaceId> local{face};
  for (const auto& group : census) local.insert(local.end(), group.begin(), group.end());
  if (local.size() > 12) return std::nullopt;
  MapGraph sub = map.induced(local);
  if (is_planar(sub)) return std::nullopt;
  auto w = find_subdivision(sub, KuratowskiKind::K5);
  if (!w) return std::nullopt;
  for (auto& b : w->branch) b = local[b.value];
  for (auto& path : w->paths)
    for (auto& v : path) v = local[v.value];
  return w;
}

}  // namespace

bool verify_coloring(const MapGraph& map, const Coloring& col) {
  require_fit(map, col);
  auto colors = col.raw();
  for (int c : colors) {
    if (c >= col.palette_size()) fail(ErrorCode::InvalidArgument, "color index outside palette");
  }
  for (auto [f, g] : map.edges()) {
    if (colors[f] >= 0 && colors[f] == colors[g]) return false;
  }
  return true;
}

ExtensionOutcome greedy_extend(const MapGraph& map, const Coloring& col, FaceId face) {
  require_fit(map, col);
  if (face.value >= map.face_count()) fail(ErrorCode::InvalidArgument, "unknown face");
  if (col.assigned(face)) fail(ErrorCode::InvalidArgument, "face '" + map.label(face) + "' is already colored");

  ExtensionOutcome out;
  out.census.assign(static_cast<std::size_t>(col.palette_size()), {});
  for (auto g : map.neighbors(face)) {
    if (auto c = col.at(FaceId{g})) out.census[c->index].push_back(FaceId{g});
  }
  for (int c = 0; c < col.palette_size(); ++c) {
    if (out.census[c].empty()) {
      out.color = Color{c};
      return out;
    }
  }
  out.witness = blocking_k5(map, face, out.census);
  return out;
}

std::optional<Coloring> induction_color(const MapGraph& map, std::optional<std::span<const FaceId>> order,
                                        int palette) {
  const auto seq = checked_order(map, order);
  Coloring col(map.face_count(), palette);
  std::vector<int> colors(map.face_count(), -1);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(seq.size());
  std::ptrdiff_t i = 0;
  int start = 0;
  while (i >= 0 && i < n) {
    auto f = seq[i].value;
    auto taken = neighbor_colors(map, colors, palette, f);
    int c = start;
    while (c < palette && taken[c]) ++c;
    if (c < palette) {
      colors[f] = c;
      ++i;
      start = 0;
    } else {
      // Blocked: undo this face and move the previous one to its next color.
      colors[f] = -1;
      --i;
      if (i >= 0) {
        start = colors[seq[i].value] + 1;
        colors[seq[i].value] = -1;
      }
    }
  }
  if (i < 0) return std::nullopt;
  for (std::uint32_t f = 0; f < colors.size(); ++f) col.assign(FaceId{f}, Color{colors[f]});
  return col;
}

namespace {

// Order for exact search: components breadth first, each rooted at its
// highest-degree face.
std::vector<std::uint32_t> search_order(const MapGraph& map) {
  const std::size_t n = map.face_count();
  std::vector<std::uint32_t> by_degree(n);
  for (std::uint32_t f = 0; f < n; ++f) by_degree[f] = f;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](auto a, auto b) { return map.degree(FaceId{a}) > map.degree(FaceId{b}); });
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> order;
  for (auto root : by_degree) {
    if (seen[root]) continue;
    seen[root] = true;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      auto f = order[head++];
      for (auto g : map.neighbors(FaceId{f})) {
        if (!seen[g]) {
          seen[g] = true;
          order.push_back(g);
        }
      }
    }
  }
  return order;
}

class KColorer {
 public:
  KColorer(const MapGraph& map, int k) : map_(map), k_(k), order_(search_order(map)), colors_(map.face_count(), -1) {}

  std::optional<Coloring> run() {
    if (!step(0, -1)) return std::nullopt;
    Coloring col(map_.face_count(), k_);
    for (std::uint32_t f = 0; f < colors_.size(); ++f) col.assign(FaceId{f}, Color{colors_[f]});
    return col;
  }

 private:
  // New colors are opened in increasing order only, which fixes the first
  // face to color 0 and removes palette permutations.
  bool step(std::size_t i, int max_used) {
    if (i == order_.size()) return true;
    auto f = order_[i];
    auto taken = neighbor_colors(map_, colors_, k_, f);
    int limit = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (taken[c]) continue;
      colors_[f] = c;
      if (step(i + 1, std::max(max_used, c))) return true;
    }
    colors_[f] = -1;
    return false;
  }

  const MapGraph& map_;
  int k_;
  std::vector<std::uint32_t> order_;
  std::vector<int> colors_;
};

}  // namespace

std::optional<Coloring> k_coloring(const MapGraph& map, int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  return KColorer(map, k).run();
}

ChromaticResult exact_chromatic(const MapGraph& map, int k_max) {
  if (k_max < 1) fail(ErrorCode::InvalidArgument, "k_max must be at least 1");
  for (int k = 1; k <= k_max; ++k) {
    if (auto col = k_coloring(map, k)) return {k, std::move(col)};
  }
  return {};
}

ExtensionVerdict check_precoloring_extension(const MapGraph& map, std::span<const FaceId> sub,
                                             const Coloring& precol,
                                             std::optional<std::span<const FaceId>> order) {
  require_fit(map, precol);
  std::vector<bool> in_sub(map.face_count(), false);
  for (auto f : sub) {
    if (f.value >= map.face_count()) fail(ErrorCode::InvalidArgument, "unknown face in subset");
    in_sub[f.value] = true;
  }
  for (std::uint32_t f = 0; f < map.face_count(); ++f) {
    if (in_sub[f] != precol.assigned(FaceId{f})) {
      fail(ErrorCode::InvalidArgument, "precoloring must assign exactly the subset faces (face '" +
                                           map.label(FaceId{f}) + "')");
    }
  }
  if (!verify_coloring(map, precol)) fail(ErrorCode::InvalidArgument, "precoloring is improper on the subset");

  std::vector<FaceId> free;
  if (order) {
    std::vector<bool> seen(map.face_count(), false);
    for (auto f : *order) {
      if (f.value >= map.face_count() || in_sub[f.value] || seen[f.value]) {
        fail(ErrorCode::InvalidArgument, "order must list each free face once");
      }
      seen[f.value] = true;
      free.push_back(f);
    }
    if (free.size() + sub.size() != map.face_count()) fail(ErrorCode::InvalidArgument, "order misses free faces");
  } else {
    for (auto f : bfs_order(map)) {
      if (!in_sub[f.value]) free.push_back(f);
    }
  }

  const int palette = precol.palette_size();
  std::vector<int> colors(precol.raw().begin(), precol.raw().end());
  auto solve = [&](auto&& self, std::size_t i) -> bool {
    if (i == free.size()) return true;
    auto f = free[i].value;
    auto taken = neighbor_colors(map, colors, palette, f);
    for (int c = 0; c < palette; ++c) {
      if (taken[c]) continue;
      colors[f] = c;
      if (self(self, i + 1)) return true;
    }
    colors[f] = -1;
    return false;
  };
  if (!solve(solve, 0)) return NotExtendable{};
  Coloring full(map.face_count(), palette);
  for (std::uint32_t f = 0; f < colors.size(); ++f) full.assign(FaceId{f}, Color{colors[f]});
  return Extendable{std::move(full)};
}

}  // namespace fourmap
