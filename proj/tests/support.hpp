#pragma once

// Test-only oracles and fixtures. Nothing here calls into the search code it
// is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fourmap/embedding.hpp"
#include "fourmap/graph.hpp"

namespace fourmap::testing {

inline MapGraph make_graph(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return MapGraph::build_indexed(std::move(names), edges);
}

inline MapGraph complete_graph(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

inline MapGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < a; ++i)
    for (std::uint32_t j = 0; j < b; ++j) e.emplace_back(i, static_cast<std::uint32_t>(a + j));
  return make_graph(a + b, e);
}

inline MapGraph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
  return make_graph(n, e);
}

inline MapGraph petersen() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return make_graph(10, e);
}

inline MapGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return make_graph(n, e);
}

/// Chromatic number by trying every one of the k^n assignments for k = 1, 2, ...
inline int naive_chromatic(const MapGraph& g) {
  const std::size_t n = g.face_count();
  const auto edges = g.edges();
  for (int k = 1;; ++k) {
    std::vector<int> a(n, 0);
    while (true) {
      bool proper = std::all_of(edges.begin(), edges.end(), [&](auto e) { return a[e.first] != a[e.second]; });
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++a[i] == k) a[i++] = 0;
      if (i == n) break;
    }
  }
}

/// Whether g has a K5 or K3,3 minor (Wagner), by enumerating assignments of
/// vertices to branch sets. Exponential; intended for n <= 8.
inline bool has_kuratowski_minor(const MapGraph& g) {
  const std::size_t n = g.face_count();
  const auto edges = g.edges();
  std::vector<int> block(n, -1);

  auto connected_blocks = [&](int count) {
    for (int b = 0; b < count; ++b) {
      std::vector<std::uint32_t> members;
      for (std::uint32_t v = 0; v < n; ++v)
        if (block[v] == b) members.push_back(v);
      if (members.empty()) return false;
      std::vector<bool> seen(n, false);
      std::vector<std::uint32_t> stack{members[0]};
      seen[members[0]] = true;
      std::size_t reached = 1;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(FaceId{u})) {
          if (!seen[w] && block[w] == b) {
            seen[w] = true;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      if (reached != members.size()) return false;
    }
    return true;
  };
  auto linked = [&](int count) {
    std::vector<std::vector<bool>> link(count, std::vector<bool>(count, false));
    for (auto [u, w] : edges) {
      if (block[u] >= 0 && block[w] >= 0 && block[u] != block[w]) link[block[u]][block[w]] = link[block[w]][block[u]] = true;
    }
    return link;
  };
  auto check = [&](int count) {
    if (!connected_blocks(count)) return false;
    auto link = linked(count);
    if (count == 5) {
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
          if (!link[a][b]) return false;
      return true;
    }
    // Any split of the six blocks into two sides of three.
    for (int mask = 0; mask < 64; ++mask) {
      if (__builtin_popcount(mask) != 3 || !(mask & 1)) continue;
      bool ok = true;
      for (int a = 0; a < 6 && ok; ++a)
        for (int b = 0; b < 6 && ok; ++b)
          if ((mask >> a & 1) && !(mask >> b & 1)) ok = link[a][b];
      if (ok) return true;
    }
    return false;
  };
  // Restricted-growth labelling: -1 drops the vertex, otherwise a block id no
  // larger than one past the largest used so far.
  std::function<bool(std::size_t, int, int)> rec = [&](std::size_t v, int used, int target) -> bool {
    if (v == n) return used == target && check(target);
    if (used + static_cast<int>(n - v) < target) return false;
    for (int b = -1; b <= std::min(used, target - 1); ++b) {
      block[v] = b;
      if (rec(v + 1, std::max(used, b + 1), target)) return true;
    }
    block[v] = -1;
    return false;
  };
  return (n >= 5 && rec(0, 0, 5)) || (n >= 6 && rec(0, 0, 6));
}

inline RotationSpec tetrahedron_rotation() {
  return {{"1", {"2", "3", "4"}}, {"2", {"1", "4", "3"}}, {"3", {"1", "2", "4"}}, {"4", {"1", "3", "2"}}};
}

inline RotationSpec cube_rotation() {
  // Bottom square 1234, top square 5678, vertical edges i -- i+4.
  return {{"1", {"2", "5", "4"}}, {"2", {"3", "6", "1"}}, {"3", {"4", "7", "2"}}, {"4", {"1", "8", "3"}},
          {"5", {"8", "1", "6"}}, {"6", {"5", "2", "7"}}, {"7", {"6", "3", "8"}}, {"8", {"7", "4", "5"}}};
}

/// Stacked triangulation with a genus-0 rotation system, grown by inserting a
/// vertex into a random face of the tetrahedron.
inline RotationSpec random_stacked_rotation(int n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> rot{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  // Faces as oriented triples (a, b, c): dart a->b is followed by b->c.
  auto succ = [&](int at, int from) {
    auto& r = rot[at];
    auto it = std::find(r.begin(), r.end(), from);
    return r[static_cast<std::size_t>((it - r.begin() + 1) % static_cast<long>(r.size()))];
  };
  std::vector<std::array<int, 3>> faces;
  for (int a = 0; a < 4; ++a) {
    for (int b : rot[a]) {
      int c = succ(b, a);
      if (a < b && a < c) faces.push_back({a, b, c});
    }
  }
  auto insert_after = [&](int at, int after, int v) {
    auto& r = rot[at];
    r.insert(std::find(r.begin(), r.end(), after) + 1, v);
  };
  for (int v = 4; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    auto t = pick(rng);
    auto [a, b, c] = faces[t];
    insert_after(b, a, v);
    insert_after(c, b, v);
    insert_after(a, c, v);
    rot.push_back({a, c, b});
    faces[t] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  RotationSpec spec;
  for (std::size_t u = 0; u < rot.size(); ++u) {
    std::vector<std::string> names;
    for (int w : rot[u]) names.push_back("v" + std::to_string(w));
    spec.emplace_back("v" + std::to_string(u), std::move(names));
  }
  return spec;
}

/// Random tree with random rotations (always genus 0).
inline RotationSpec random_tree_rotation(int n, std::mt19937_64& rng) {
  std::vector<std::vector<std::string>> nbr(static_cast<std::size_t>(n));
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    int p = parent(rng);
    nbr[p].push_back("t" + std::to_string(v));
    nbr[v].push_back("t" + std::to_string(p));
  }
  RotationSpec spec;
  for (int v = 0; v < n; ++v) {
    std::shuffle(nbr[v].begin(), nbr[v].end(), rng);
    spec.emplace_back("t" + std::to_string(v), nbr[v]);
  }
  return spec;
}

}  // namespace fourmap::testing
