#ifndef HOMOTALLY_BALLOT_H_
#define HOMOTALLY_BALLOT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "homotally/field.h"
#include "homotally/random.h"
#include "homotally/shamir.h"

namespace homotally {

using Json = nlohmann::ordered_json;

// Public election parameters. Everything here may be shown to collection
// centers; the evaluation points live in OfficerSecrets.
struct ElectionConfig {
  std::string election_id;
  std::vector<std::string> candidates;
  uint64_t voter_count = 0;
  uint32_t window_width = 0;
  Prime prime = Prime::Certify(2);
  uint32_t threshold = 0;
  uint32_t center_count = 0;
  // Lowercase hex Ed25519 public keys, one per center in center order. May be
  // empty for configs that never produce signed records.
  std::vector<std::string> center_public_keys;
  // Accept a prime too small for every reachable tally. Only for reproducing
  // small hand-worked examples; DeriveConfig never sets it.
  bool field_bound_override = false;

  uint32_t candidate_count() const { return static_cast<uint32_t>(candidates.size()); }
};

// Chief-officer-only material: the secret evaluation point of each center.
struct OfficerSecrets {
  std::string election_id;
  std::vector<FieldElement> eval_points;
};

struct ElectionSetup {
  ElectionConfig config;
  OfficerSecrets secrets;
};

struct SetupParams {
  std::vector<std::string> candidates;
  uint64_t voter_count = 0;
  uint32_t threshold = 0;
  uint32_t center_count = 0;
  // Explicit prime; must satisfy the field bound. Chosen automatically if unset.
  std::optional<uint64_t> prime;
  // Random if unset.
  std::optional<std::string> election_id;
};

struct EncodedBallot {
  FieldElement value;
};

struct TallyResult {
  std::vector<uint64_t> counts;  // in candidate order
  FieldElement raw_decoded;
};

// floor(log2 n) + 1 for n >= 1.
uint32_t WindowWidth(uint64_t voter_count);

// 2^(m*w) - 1, the largest packed tally. Throws kUnsupportedScale when m*w
// exceeds 63 bits (no 64-bit prime could exceed the bound).
uint64_t MaxPackedTally(uint32_t candidate_count, uint32_t window_width);

// Throws Error(kConfig) naming the first violated invariant, or
// kUnsupportedScale for elections too wide for a 64-bit prime.
void ValidateConfig(const ElectionConfig& config);

ElectionSetup DeriveConfig(const SetupParams& params, RandomSource& rng);

// Policy for this election. Throws Error(kConfig) if the secrets belong to a
// different election or have the wrong number of points.
SharingPolicy MakePolicy(const ElectionConfig& config, const OfficerSecrets& secrets);

// candidate_index is 1-based. Out of range: kInvalidCandidate.
EncodedBallot EncodeVote(const ElectionConfig& config, uint32_t candidate_index);

// Accepts a candidate name or a 1-based index. Unknown: kInvalidCandidate.
uint32_t ResolveCandidate(const ElectionConfig& config, const std::string& name_or_index);

// Unpacks per-candidate w-bit windows, least significant window first.
// Residue beyond m*w bits: kCorruptedTally. Any window (or the total) above
// the voter count: kImplausibleCount.
TallyResult DecodeTally(const ElectionConfig& config, const FieldElement& packed);

// Canonical JSON documents. Field order is fixed; FromJson validates.
Json ConfigToJson(const ElectionConfig& config);
ElectionConfig ConfigFromJson(const Json& doc);
Json SecretsToJson(const OfficerSecrets& secrets);
OfficerSecrets SecretsFromJson(const Json& doc, Prime p);

}  // namespace homotally

#endif  // HOMOTALLY_BALLOT_H_
