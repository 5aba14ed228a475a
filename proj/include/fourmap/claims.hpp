#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace fourmap {

enum class ClaimId { Thm3_2, Claim4_1, Claim4_2, Conclusion5_1, Conjecture6_1_n1, Conjecture6_1_n3 };
enum class ClaimVerdict { Verified, Falsified, HoldsOnCorpus };

inline constexpr ClaimId kAllClaims[] = {ClaimId::Thm3_2,        ClaimId::Claim4_1,
                                         ClaimId::Claim4_2,      ClaimId::Conclusion5_1,
                                         ClaimId::Conjecture6_1_n1, ClaimId::Conjecture6_1_n3};

std::string to_string(ClaimId id);
std::string to_string(ClaimVerdict v);
std::optional<ClaimId> parse_claim_id(std::string_view s);

struct ClaimConfig {
  std::uint64_t seed = 0;
  int corpus_size = 200;
  int min_faces = 6;
  int max_faces = 30;
  int curve_max = 12;  // n = 1: every P_n and C_n with n <= curve_max
  int boxes_m = 6;     // n = 3: neighborly_boxes(m)
  int precolorings_per_map = 4;
};

/// Throws Error(InvalidArgument) for out-of-range sizes.
void validate(const ClaimConfig& config);

struct ClaimStatus {
  ClaimId id = ClaimId::Thm3_2;
  ClaimVerdict verdict = ClaimVerdict::Verified;
  ClaimVerdict expected = ClaimVerdict::Verified;
  /// Counterexamples re-checked through their module before reporting.
  bool replay_ok = true;
  nlohmann::ordered_json evidence;
};

/// The verdict each claim reaches under the default configuration.
ClaimVerdict expected_verdict(ClaimId id);

ClaimStatus run_claim(ClaimId id, const ClaimConfig& config = {});
std::vector<ClaimStatus> run_all(std::uint64_t seed);

/// False iff a Verified-expected claim did not verify or a replay failed.
bool claims_ok(const std::vector<ClaimStatus>& statuses);

/// Corpus used by the four-color claims: `size` maps with face counts drawn
/// from [min_faces, max_faces].
struct CorpusEntry {
  int faces = 0;
  std::uint64_t seed = 0;
};
std::vector<CorpusEntry> corpus_plan(const ClaimConfig& config);

}  // namespace fourmap
