#include "fourmap/planarity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "fourmap/coloring.hpp"
#include "fourmap/error.hpp"

namespace fourmap {

namespace {

EulerReport make_report(VefCounts counts, bool outer_removed) {
  EulerReport r;
  r.counts = counts;
  r.characteristic = counts.v - counts.e + counts.f;
  r.expected = outer_removed ? 1 : 2;
  r.consistent = r.characteristic == r.expected;
  return r;
}

}  // namespace

EulerReport euler_check(const PlanarEmbedding& emb) { return make_report(count_vef(emb), emb.outer_face_removed()); }

EulerReport euler_check(const AugmentedEmbedding& emb) {
  validate(emb);
  return make_report(count_vef(emb), emb.base.outer_face_removed());
}

bool edge_bound_filter(const MapGraph& g) {
  const auto v = g.face_count();
  if (v < 3) fail(ErrorCode::Precondition, "edge bound needs at least 3 faces");
  return g.edge_count() <= 3 * v - 6;
}

std::string to_string(KuratowskiKind kind) { return kind == KuratowskiKind::K5 ? "K5" : "K33"; }

bool is_planar(const MapGraph& g) {
  if (g.face_count() < 5) return true;
  if (!edge_bound_filter(g)) return false;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(g.face_count());
  for (auto [f, h] : g.edges()) boost::add_edge(f, h, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

namespace {

// Branch slot pairs for each kind, in witness path order.
std::vector<std::pair<int, int>> slot_pairs(KuratowskiKind kind) {
  std::vector<std::pair<int, int>> pairs;
  if (kind == KuratowskiKind::K5) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

struct Adjacency {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> nbr;
  std::vector<std::uint8_t> matrix;

  explicit Adjacency(const MapGraph& g) : n(g.face_count()), nbr(n), matrix(n * n, 0) {
    for (std::uint32_t f = 0; f < n; ++f) {
      auto span = g.neighbors(FaceId{f});
      nbr[f].assign(span.begin(), span.end());
      for (auto h : span) matrix[f * n + h] = 1;
    }
  }
  bool edge(std::uint32_t a, std::uint32_t b) const { return matrix[a * n + b] != 0; }
};

// Backtracking embedding of the branch pairs as internally disjoint paths.
class PathRouter {
 public:
  PathRouter(const Adjacency& adj, std::vector<std::uint32_t> branch, KuratowskiKind kind)
      : adj_(adj), branch_(std::move(branch)), pairs_(slot_pairs(kind)), used_(adj.n, 0) {
    for (auto b : branch_) used_[b] = 1;
  }

  std::optional<std::vector<std::vector<std::uint32_t>>> route() {
    paths_.assign(pairs_.size(), {});
    if (solve(0)) return paths_;
    return std::nullopt;
  }

 private:
  // BFS distances to `target` through unused vertices (target itself allowed).
  std::vector<int> distances_to(std::uint32_t target) const {
    std::vector<int> dist(adj_.n, -1);
    dist[target] = 0;
    std::deque<std::uint32_t> queue{target};
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto w : adj_.nbr[u]) {
        if (dist[w] >= 0 || used_[w]) continue;
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
    return dist;
  }

  // Shortest free route length between the endpoints of pair p, or -1.
  int free_distance(std::size_t p) const {
    auto a = branch_[pairs_[p].first];
    auto b = branch_[pairs_[p].second];
    if (adj_.edge(a, b)) return 1;
    auto dist = distances_to(b);
    int best = -1;
    for (auto w : adj_.nbr[a]) {
      if (!used_[w] && dist[w] >= 0 && (best < 0 || dist[w] + 1 < best)) best = dist[w] + 1;
    }
    return best;
  }

  bool feasible(std::size_t from) const {
    for (std::size_t p = from; p < pairs_.size(); ++p) {
      if (free_distance(p) < 0) return false;
    }
    // Each branch vertex needs one distinct free exit per pending pair.
    for (std::size_t s = 0; s < branch_.size(); ++s) {
      int pending = 0;
      int exits = 0;
      for (std::size_t p = from; p < pairs_.size(); ++p) {
        if (static_cast<std::size_t>(pairs_[p].first) == s || static_cast<std::size_t>(pairs_[p].second) == s) {
          ++pending;
        }
      }
      if (pending == 0) continue;
      for (auto w : adj_.nbr[branch_[s]]) {
        if (!used_[w]) {
          ++exits;
          continue;
        }
        for (std::size_t p = from; p < pairs_.size(); ++p) {
          auto [i, j] = pairs_[p];
          std::size_t other = static_cast<std::size_t>(i) == s ? j : static_cast<std::size_t>(j) == s ? i : s;
          if (other != s && branch_[other] == w) {
            ++exits;
            break;
          }
        }
      }
      if (exits < pending) return false;
    }
    return true;
  }

  bool solve(std::size_t p) {
    if (p == pairs_.size()) return true;
    if (!feasible(p)) return false;
    auto a = branch_[pairs_[p].first];
    auto b = branch_[pairs_[p].second];
    int shortest = free_distance(p);
    std::size_t free_count = static_cast<std::size_t>(std::count(used_.begin(), used_.end(), 0));
    for (std::size_t len = static_cast<std::size_t>(shortest); len <= free_count + 1; ++len) {
      std::vector<std::uint32_t> path{a};
      if (extend(p, path, b, len)) return true;
    }
    return false;
  }

  // Enumerates free paths of exactly `len` edges ending at b, recursing into
  // the next pair for each.
  bool extend(std::size_t p, std::vector<std::uint32_t>& path, std::uint32_t b, std::size_t len) {
    std::size_t depth = path.size() - 1;
    auto u = path.back();
    if (depth + 1 == len) {
      if (!adj_.edge(u, b)) return false;
      path.push_back(b);
      paths_[p] = path;
      if (solve(p + 1)) return true;
      path.pop_back();
      return false;
    }
    auto dist = distances_to(b);
    for (auto w : adj_.nbr[u]) {
      if (used_[w] || dist[w] < 0) continue;
      if (depth + 1 + static_cast<std::size_t>(dist[w]) > len) continue;
      used_[w] = 1;
      path.push_back(w);
      if (extend(p, path, b, len)) return true;
      path.pop_back();
      used_[w] = 0;
    }
    return false;
  }

  const Adjacency& adj_;
  std::vector<std::uint32_t> branch_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::uint8_t> used_;
  std::vector<std::vector<std::uint32_t>> paths_;
};

template <class Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

KuratowskiWitness to_witness(KuratowskiKind kind, const std::vector<std::uint32_t>& branch,
                             const std::vector<std::vector<std::uint32_t>>& paths) {
  KuratowskiWitness w;
  w.kind = kind;
  for (auto b : branch) w.branch.push_back(FaceId{b});
  for (const auto& path : paths) {
    auto& out = w.paths.emplace_back();
    for (auto v : path) out.push_back(FaceId{v});
  }
  return w;
}

std::optional<KuratowskiWitness> search(const MapGraph& g, KuratowskiKind kind) {
  const Adjacency adj(g);
  const std::size_t min_degree = kind == KuratowskiKind::K5 ? 4 : 3;
  const std::size_t needed = kind == KuratowskiKind::K5 ? 5 : 6;
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t v = 0; v < adj.n; ++v) {
    if (adj.nbr[v].size() >= min_degree) candidates.push_back(v);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](auto a, auto b) { return adj.nbr[a].size() > adj.nbr[b].size(); });
  if (candidates.size() < needed) return std::nullopt;

  std::optional<KuratowskiWitness> found;
  for_each_combination(candidates.size(), needed, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::uint32_t> chosen;
    for (auto i : pick) chosen.push_back(candidates[i]);
    if (kind == KuratowskiKind::K5) {
      PathRouter router(adj, chosen, kind);
      if (auto paths = router.route()) {
        found = to_witness(kind, chosen, *paths);
        return true;
      }
      return false;
    }
    // Side A holds chosen[0] plus two of the other five.
    return for_each_combination(5, 2, [&](const std::vector<std::size_t>& side) {
      std::vector<std::uint32_t> a{chosen[0], chosen[1 + side[0]], chosen[1 + side[1]]};
      std::vector<std::uint32_t> b;
      for (std::size_t i = 1; i < 6; ++i) {
        if (i != 1 + side[0] && i != 1 + side[1]) b.push_back(chosen[i]);
      }
      std::vector<std::uint32_t> branch = a;
      branch.insert(branch.end(), b.begin(), b.end());
      PathRouter router(adj, branch, kind);
      if (auto paths = router.route()) {
        found = to_witness(kind, branch, *paths);
        return true;
      }
      return false;
    });
  });
  return found;
}

// Edge-minimal non-planar subgraph of a non-planar graph, on the same faces.
MapGraph minimal_nonplanar(const MapGraph& g) {
  auto kept = g.edges();
  for (std::size_t i = 0; i < kept.size();) {
    auto trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_planar(MapGraph::build_indexed(g.labels(), trial))) {
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  return MapGraph::build_indexed(g.labels(), kept);
}

constexpr std::size_t kDirectSearchLimit = 12;

}  // namespace

std::optional<KuratowskiWitness> find_subdivision(const MapGraph& g, KuratowskiKind kind) {
  auto w = search(g, kind);
  if (w) {
    if (auto err = validate_witness(g, *w)) fail(ErrorCode::Precondition, "internal witness error: " + *err);
  }
  return w;
}

std::optional<KuratowskiWitness> find_kuratowski(const MapGraph& g) {
  if (is_planar(g)) return std::nullopt;
  std::optional<KuratowskiWitness> w;
  if (g.face_count() <= kDirectSearchLimit) {
    std::size_t deg4 = 0;
    for (std::uint32_t v = 0; v < g.face_count(); ++v) deg4 += g.degree(FaceId{v}) >= 4 ? 1 : 0;
    if (deg4 >= 5) w = search(g, KuratowskiKind::K5);
    if (!w) w = search(g, KuratowskiKind::K33);
  }
  if (!w) {
    // An edge-minimal non-planar graph is itself a subdivision, so its branch
    // vertices are exactly its vertices of degree three or more.
    MapGraph reduced = minimal_nonplanar(g);
    std::size_t deg4 = 0;
    for (std::uint32_t v = 0; v < reduced.face_count(); ++v) deg4 += reduced.degree(FaceId{v}) >= 4 ? 1 : 0;
    w = search(reduced, deg4 >= 5 ? KuratowskiKind::K5 : KuratowskiKind::K33);
  }
  if (!w) fail(ErrorCode::Precondition, "non-planar graph without a Kuratowski subdivision");
  if (auto err = validate_witness(g, *w)) fail(ErrorCode::Precondition, "internal witness error: " + *err);
  return w;
}

std::optional<std::string> validate_witness(const MapGraph& host, const KuratowskiWitness& w) {
  const std::size_t n = host.face_count();
  const std::size_t branch_count = w.kind == KuratowskiKind::K5 ? 5 : 6;
  const auto pairs = slot_pairs(w.kind);
  if (w.branch.size() != branch_count) return "expected " + std::to_string(branch_count) + " branch vertices";
  if (w.paths.size() != pairs.size()) return "expected " + std::to_string(pairs.size()) + " paths";
  std::vector<int> role(n, 0);  // 1 = branch, 2 = used as an internal vertex
  for (auto b : w.branch) {
    if (b.value >= n) return "branch vertex out of range";
    if (role[b.value]) return "repeated branch vertex " + host.label(b);
    role[b.value] = 1;
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto& path = w.paths[p];
    if (path.size() < 2) return "path " + std::to_string(p) + " is too short";
    auto a = w.branch[pairs[p].first];
    auto b = w.branch[pairs[p].second];
    bool forward = path.front() == a && path.back() == b;
    bool backward = path.front() == b && path.back() == a;
    if (!forward && !backward) return "path " + std::to_string(p) + " does not join its branch pair";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i].value >= n) return "path vertex out of range";
      if (i > 0 && !host.adjacent(path[i - 1], path[i])) {
        return "edge " + host.label(path[i - 1]) + "-" + host.label(path[i]) + " missing from host";
      }
      if (i == 0 || i + 1 == path.size()) continue;
      if (role[path[i].value] == 1) return "path " + std::to_string(p) + " passes through a branch vertex";
      if (role[path[i].value] == 2) return "paths share internal vertex " + host.label(path[i]);
      role[path[i].value] = 2;
    }
  }
  return std::nullopt;
}

Theorem32Report verify_theorem_3_2() {
  const std::vector<std::string> faces{"A", "B", "C", "D", "E"};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all_pairs;
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) all_pairs.emplace_back(i, j);

  Theorem32Report r;
  for (std::uint32_t mask = 0; mask < (1u << all_pairs.size()); ++mask) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> chosen;
    for (std::size_t b = 0; b < all_pairs.size(); ++b) {
      if (mask >> b & 1u) chosen.push_back(all_pairs[b]);
    }
    MapGraph g = MapGraph::build_indexed(faces, chosen);
    int chi = *exact_chromatic(g, 5).chi;
    bool planar = is_planar(g);
    ++r.graphs_examined;
    ++r.chromatic_counts[chi];
    if (planar) ++r.planar_count;
    if (chi == 5) {
      ++r.five_chromatic;
      r.five_chromatic_is_k5 = g.edge_count() == 10;
      r.k5_planar = planar;
      if (planar) ++r.planar_five_chromatic;
    }
  }
  return r;
}

}  // namespace fourmap
