#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fourmap/embedding.hpp"
#include "fourmap/graph.hpp"

namespace fourmap {

struct EulerReport {
  VefCounts counts;
  int characteristic = 0;  // v - e + f
  int expected = 2;        // 1 once the outer face is cut away
  bool consistent = false;
};

EulerReport euler_check(const PlanarEmbedding& emb);
EulerReport euler_check(const AugmentedEmbedding& emb);

/// e <= 3v - 6. False certifies non-planarity; true is inconclusive.
/// Requires v >= 3.
bool edge_bound_filter(const MapGraph& g);

enum class KuratowskiKind { K5, K33 };

std::string to_string(KuratowskiKind kind);

/// A subdivision of K5 or K3,3 inside a host graph.
///
/// K5: five branch vertices, ten paths ordered by branch pair (0,1), (0,2),
/// ..., (3,4). K3,3: branch vertices are the three of one side followed by the
/// three of the other; nine paths ordered (a0,b0), (a0,b1), ..., (a2,b2). Each
/// path runs from the lower-numbered branch slot to the higher one.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::vector<FaceId> branch;
  std::vector<std::vector<FaceId>> paths;
};

/// Empty on success, otherwise the first violated invariant.
std::optional<std::string> validate_witness(const MapGraph& host, const KuratowskiWitness& w);

/// Boyer-Myrvold planarity test.
bool is_planar(const MapGraph& g);

/// A validated witness iff g is non-planar.
std::optional<KuratowskiWitness> find_kuratowski(const MapGraph& g);

/// Backtracking search for a subdivision of one specific kind. Branch
/// candidates are tried in descending degree order and paths shortest first.
/// Exponential; meant for graphs of about a dozen vertices.
std::optional<KuratowskiWitness> find_subdivision(const MapGraph& g, KuratowskiKind kind);

/// Exhaustive check over all 2^10 labeled graphs on five faces.
struct Theorem32Report {
  int graphs_examined = 0;
  std::array<int, 6> chromatic_counts{};  // index = chromatic number, [0] unused
  int planar_count = 0;
  int five_chromatic = 0;
  int planar_five_chromatic = 0;
  bool five_chromatic_is_k5 = false;
  bool k5_planar = true;
  bool holds() const {
    return graphs_examined == 1024 && planar_five_chromatic == 0 && five_chromatic == 1 &&
           five_chromatic_is_k5 && !k5_planar;
  }
};

Theorem32Report verify_theorem_3_2();

}  // namespace fourmap
