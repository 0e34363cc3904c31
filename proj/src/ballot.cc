#include "homotally/ballot.h"

#include <bit>
#include <set>

#include "homotally/error.h"

namespace homotally {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kConfig, what);
}

bool IsLowerHex(const std::string& s, size_t length) {
  if (s.size() != length) return false;
  for (char c : s) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

template <typename T>
T Field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorCode::kConfig, std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

uint32_t WindowWidth(uint64_t voter_count) {
  Require(voter_count >= 1, "voter_count must be at least 1");
  return static_cast<uint32_t>(std::bit_width(voter_count));
}

uint64_t MaxPackedTally(uint32_t candidate_count, uint32_t window_width) {
  const uint64_t bits = static_cast<uint64_t>(candidate_count) * window_width;
  if (bits > 63) {
    throw Error(ErrorCode::kUnsupportedScale,
                std::to_string(candidate_count) + " candidates x " + std::to_string(window_width) +
                    "-bit windows needs a field wider than 64 bits");
  }
  return (uint64_t{1} << bits) - 1;
}

void ValidateConfig(const ElectionConfig& config) {
  Require(!config.election_id.empty(), "election_id is empty");
  Require(!config.candidates.empty(), "at least one candidate required");
  std::set<std::string> names;
  for (const auto& name : config.candidates) {
    Require(!name.empty(), "candidate name is empty");
    Require(names.insert(name).second, "duplicate candidate '" + name + "'");
  }
  Require(config.voter_count >= 1, "voter_count must be at least 1");
  Require(config.window_width == WindowWidth(config.voter_count),
          "window_width must be floor(log2 voter_count) + 1 = " +
              std::to_string(WindowWidth(config.voter_count)));
  Require(config.threshold >= 1, "threshold must be at least 1");
  Require(config.threshold <= config.center_count,
          "threshold " + std::to_string(config.threshold) + " exceeds center_count " +
              std::to_string(config.center_count));
  Require(IsPrime(config.prime.value()), "prime is not prime");
  Require(config.prime.value() > config.center_count,
          "prime must exceed center_count " + std::to_string(config.center_count));
  const uint64_t bound = MaxPackedTally(config.candidate_count(), config.window_width);
  if (!config.field_bound_override) {
    Require(config.prime.value() > bound,
            "prime " + std::to_string(config.prime.value()) + " must exceed the largest tally " +
                std::to_string(bound));
  }
  if (!config.center_public_keys.empty()) {
    Require(config.center_public_keys.size() == config.center_count,
            "need one public key per center");
    for (const auto& key : config.center_public_keys) {
      Require(IsLowerHex(key, 64), "public key must be 64 lowercase hex digits");
    }
  }
}

ElectionSetup DeriveConfig(const SetupParams& params, RandomSource& rng) {
  if (params.candidates.empty()) throw Error(ErrorCode::kConfig, "at least one candidate required");
  if (params.threshold < 1 || params.center_count < 1) {
    throw Error(ErrorCode::kConfig, "threshold and center_count must be positive");
  }
  if (params.threshold > params.center_count) {
    throw Error(ErrorCode::kConfig, "threshold " + std::to_string(params.threshold) +
                                        " exceeds center_count " +
                                        std::to_string(params.center_count));
  }
  ElectionConfig config;
  config.election_id = params.election_id.value_or(rng.HexToken(8));
  config.candidates = params.candidates;
  config.voter_count = params.voter_count;
  config.window_width = WindowWidth(params.voter_count);
  config.threshold = params.threshold;
  config.center_count = params.center_count;
  const uint64_t bound = MaxPackedTally(config.candidate_count(), config.window_width);
  if (params.prime) {
    config.prime = Prime::Certify(*params.prime);
  } else {
    config.prime = SmallestPrimeAbove(std::max<uint64_t>(bound, params.center_count));
  }
  ValidateConfig(config);

  const SharingPolicy policy =
      SharingPolicy::WithRandomPoints(config.threshold, config.center_count, config.prime, rng);
  return ElectionSetup{config, OfficerSecrets{config.election_id, policy.eval_points()}};
}

SharingPolicy MakePolicy(const ElectionConfig& config, const OfficerSecrets& secrets) {
  Require(secrets.election_id == config.election_id,
          "secrets are for election '" + secrets.election_id + "', not '" + config.election_id + "'");
  Require(secrets.eval_points.size() == config.center_count,
          "secrets hold " + std::to_string(secrets.eval_points.size()) + " points for " +
              std::to_string(config.center_count) + " centers");
  for (const auto& x : secrets.eval_points) {
    Require(x.modulus() == config.prime.value(), "evaluation point outside the election field");
  }
  return SharingPolicy(config.threshold, secrets.eval_points);
}

EncodedBallot EncodeVote(const ElectionConfig& config, uint32_t candidate_index) {
  if (candidate_index < 1 || candidate_index > config.candidate_count()) {
    throw Error(ErrorCode::kInvalidCandidate,
                "candidate " + std::to_string(candidate_index) + " outside 1.." +
                    std::to_string(config.candidate_count()));
  }
  const uint64_t shift = static_cast<uint64_t>(candidate_index - 1) * config.window_width;
  return EncodedBallot{FieldElement(uint64_t{1} << shift, config.prime)};
}

uint32_t ResolveCandidate(const ElectionConfig& config, const std::string& name_or_index) {
  for (uint32_t k = 0; k < config.candidate_count(); ++k) {
    if (config.candidates[k] == name_or_index) return k + 1;
  }
  try {
    uint64_t k = ParseDecimal(name_or_index);
    if (k >= 1 && k <= config.candidate_count()) return static_cast<uint32_t>(k);
  } catch (const Error&) {
  }
  throw Error(ErrorCode::kInvalidCandidate, "unknown candidate '" + name_or_index + "'");
}

TallyResult DecodeTally(const ElectionConfig& config, const FieldElement& packed) {
  const uint64_t bound = MaxPackedTally(config.candidate_count(), config.window_width);
  if (packed.residue() > bound) {
    throw Error(ErrorCode::kCorruptedTally, "packed tally " + packed.ToDecimal() +
                                                " has bits beyond " +
                                                std::to_string(config.candidate_count()) + " windows");
  }
  const uint64_t mask = (uint64_t{1} << config.window_width) - 1;
  TallyResult result{{}, packed};
  result.counts.reserve(config.candidate_count());
  uint64_t total = 0;
  for (uint32_t k = 0; k < config.candidate_count(); ++k) {
    const uint64_t count = (packed.residue() >> (k * config.window_width)) & mask;
    if (count > config.voter_count) {
      throw Error(ErrorCode::kImplausibleCount,
                  config.candidates[k] + " decoded " + std::to_string(count) + " votes from " +
                      std::to_string(config.voter_count) + " voters");
    }
    total += count;
    result.counts.push_back(count);
  }
  if (total > config.voter_count) {
    throw Error(ErrorCode::kImplausibleCount, "decoded " + std::to_string(total) +
                                                  " votes from " +
                                                  std::to_string(config.voter_count) + " voters");
  }
  return result;
}

Json ConfigToJson(const ElectionConfig& config) {
  Json doc;
  doc["election_id"] = config.election_id;
  doc["candidates"] = config.candidates;
  doc["voter_count"] = config.voter_count;
  doc["window_width"] = config.window_width;
  doc["prime"] = std::to_string(config.prime.value());
  doc["threshold"] = config.threshold;
  doc["center_count"] = config.center_count;
  if (!config.center_public_keys.empty()) doc["center_public_keys"] = config.center_public_keys;
  if (config.field_bound_override) doc["field_bound_override"] = true;
  return doc;
}

ElectionConfig ConfigFromJson(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::kConfig, "config must be a JSON object");
  if (doc.contains("eval_points")) {
    throw Error(ErrorCode::kConfig, "public config must not carry evaluation points");
  }
  ElectionConfig config;
  config.election_id = Field<std::string>(doc, "election_id");
  config.candidates = Field<std::vector<std::string>>(doc, "candidates");
  config.voter_count = Field<uint64_t>(doc, "voter_count");
  config.window_width = Field<uint32_t>(doc, "window_width");
  config.prime = Prime::Certify(ParseDecimal(Field<std::string>(doc, "prime")));
  config.threshold = Field<uint32_t>(doc, "threshold");
  config.center_count = Field<uint32_t>(doc, "center_count");
  if (doc.contains("center_public_keys")) {
    config.center_public_keys = Field<std::vector<std::string>>(doc, "center_public_keys");
  }
  if (doc.contains("field_bound_override")) {
    config.field_bound_override = Field<bool>(doc, "field_bound_override");
  }
  ValidateConfig(config);
  return config;
}

Json SecretsToJson(const OfficerSecrets& secrets) {
  Json doc;
  doc["election_id"] = secrets.election_id;
  Json points = Json::array();
  for (const auto& x : secrets.eval_points) points.push_back(x.ToDecimal());
  doc["eval_points"] = points;
  return doc;
}

OfficerSecrets SecretsFromJson(const Json& doc, Prime p) {
  if (!doc.is_object()) throw Error(ErrorCode::kConfig, "secrets must be a JSON object");
  OfficerSecrets secrets;
  secrets.election_id = Field<std::string>(doc, "election_id");
  for (const auto& text : Field<std::vector<std::string>>(doc, "eval_points")) {
    secrets.eval_points.push_back(ParseFieldElement(text, p));
  }
  return secrets;
}

}  // namespace homotally
