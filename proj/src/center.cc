#include "homotally/center.h"

#include <set>

#include "homotally/error.h"

namespace homotally {
namespace {

void AppendLe(std::vector<uint8_t>& out, uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<uint8_t>(value >> (8 * i)));
}

[[noreturn]] void Corrupt(const std::string& what) {
  throw Error(ErrorCode::kIntegrity, "record rejected: " + what);
}

template <size_t N>
std::array<uint8_t, N> StrictHex(const Json& doc, const char* key) {
  if (!doc.at(key).is_string()) Corrupt(std::string(key) + " is not a string");
  try {
    return FromHex<N>(doc.at(key).get<std::string>());
  } catch (const Error& e) {
    Corrupt(std::string(key) + ": " + e.what());
  }
}

}  // namespace

bool IsValidBallotId(const std::string& id) {
  if (id.empty() || id.size() > 128) return false;
  for (char c : id) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kIdle:
      return "idle";
    case Phase::kCollecting:
      return "collecting";
    case Phase::kFinalized:
      return "finalized";
  }
  return "unknown";
}

std::vector<uint8_t> RecordSigningBytes(const std::string& election_id, uint32_t center_id,
                                        uint64_t share_sum, uint64_t received_count) {
  std::vector<uint8_t> out(election_id.begin(), election_id.end());
  AppendLe(out, center_id, 4);
  AppendLe(out, share_sum, 8);
  AppendLe(out, received_count, 8);
  return out;
}

FinalizationRecord MakeRecord(const std::string& election_id, uint32_t center_id,
                              uint64_t share_sum, uint64_t received_count,
                              const SigningKey& key) {
  FinalizationRecord record{election_id, center_id, share_sum, received_count, {}, {}};
  record.digest = Sha256(RecordSigningBytes(election_id, center_id, share_sum, received_count));
  record.signature = key.Sign(record.digest);
  return record;
}

Json RecordToJson(const FinalizationRecord& record) {
  Json doc;
  doc["election_id"] = record.election_id;
  doc["center_id"] = record.center_id;
  doc["share_sum"] = std::to_string(record.share_sum);
  doc["received_count"] = record.received_count;
  doc["digest"] = ToHex(record.digest);
  doc["signature"] = ToHex(record.signature);
  return doc;
}

FinalizationRecord RecordFromJson(const Json& doc) {
  static const std::set<std::string> kKeys = {"election_id", "center_id",  "share_sum",
                                              "received_count", "digest", "signature"};
  if (!doc.is_object()) Corrupt("not a JSON object");
  if (doc.size() != kKeys.size()) Corrupt("unexpected field set");
  for (const auto& item : doc.items()) {
    if (!kKeys.contains(item.key())) Corrupt("unexpected field '" + item.key() + "'");
  }
  FinalizationRecord record;
  if (!doc["election_id"].is_string()) Corrupt("election_id is not a string");
  record.election_id = doc["election_id"].get<std::string>();
  if (!doc["center_id"].is_number_unsigned() || doc["center_id"].get<uint64_t>() > UINT32_MAX) {
    Corrupt("center_id is not a 32-bit unsigned integer");
  }
  record.center_id = doc["center_id"].get<uint32_t>();
  if (!doc["received_count"].is_number_unsigned()) Corrupt("received_count is not unsigned");
  record.received_count = doc["received_count"].get<uint64_t>();
  if (!doc["share_sum"].is_string()) Corrupt("share_sum is not a decimal string");
  try {
    record.share_sum = ParseDecimal(doc["share_sum"].get<std::string>());
  } catch (const Error& e) {
    Corrupt(std::string("share_sum: ") + e.what());
  }
  record.digest = StrictHex<32>(doc, "digest");
  record.signature = StrictHex<64>(doc, "signature");
  return record;
}

Center::Center(uint32_t center_id, SigningKey key, std::optional<Journal> journal)
    : center_id_(center_id), key_(std::move(key)), journal_(std::move(journal)) {
  if (center_id_ < 1) throw Error(ErrorCode::kConfig, "center ids start at 1");
}

std::unique_ptr<Center> Center::Recover(uint32_t center_id, SigningKey key,
                                        const std::filesystem::path& journal_path) {
  std::vector<Journal::Entry> entries;
  Journal journal = Journal::Resume(journal_path, &entries);
  auto center = std::make_unique<Center>(center_id, std::move(key), std::nullopt);
  for (size_t i = 0; i < entries.size(); ++i) {
    const auto& entry = entries[i];
    const std::string where = journal_path.string() + " entry " + std::to_string(i);
    try {
      const std::string kind = entry.at("kind").get<std::string>();
      if (kind == "open") {
        if (center->phase_ != Phase::kIdle) throw Error(ErrorCode::kPhase, "second open");
        center->ApplyOpen(ConfigFromJson(entry.at("config")));
      } else if (kind == "submit") {
        if (center->phase_ != Phase::kCollecting) throw Error(ErrorCode::kPhase, "share outside collecting");
        const std::string ballot_id = entry.at("ballot_id").get<std::string>();
        if (center->seen_ballot_ids_.contains(ballot_id)) {
          throw Error(ErrorCode::kDuplicateBallot, "ballot journaled twice");
        }
        center->ApplySubmit(ballot_id, ParseFieldElement(entry.at("value").get<std::string>(),
                                                         center->config_->prime));
      } else if (kind == "finalize") {
        if (center->phase_ != Phase::kCollecting) throw Error(ErrorCode::kPhase, "finalize outside collecting");
        center->ApplyFinalize();
      } else {
        throw Error(ErrorCode::kIntegrity, "unknown entry kind '" + kind + "'");
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::kIntegrity, where + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kIntegrity, where + ": " + e.what());
    }
  }
  center->journal_ = std::move(journal);
  return center;
}

void Center::ApplyOpen(const ElectionConfig& config) {
  ValidateConfig(config);
  if (center_id_ > config.center_count) {
    throw Error(ErrorCode::kConfig, "center " + std::to_string(center_id_) + " is not part of a " +
                                        std::to_string(config.center_count) + "-center election");
  }
  if (!config.center_public_keys.empty() &&
      config.center_public_keys[center_id_ - 1] != key_.public_key().ToHex()) {
    throw Error(ErrorCode::kConfig, "config registers a different key for center " +
                                        std::to_string(center_id_));
  }
  config_ = config;
  share_sum_ = FieldElement::Zero(config.prime);
  phase_ = Phase::kCollecting;
}

void Center::ApplySubmit(const std::string& ballot_id, const FieldElement& value) {
  share_sum_ = Accumulate(*share_sum_, Share{center_id_, value});
  seen_ballot_ids_.insert(ballot_id);
}

void Center::ApplyFinalize() {
  record_ = MakeRecord(config_->election_id, center_id_, share_sum_->residue(),
                       seen_ballot_ids_.size(), key_);
  phase_ = Phase::kFinalized;
}

void Center::Open(const ElectionConfig& config) {
  std::lock_guard lock(mu_);
  if (phase_ == Phase::kCollecting) {
    throw Error(ErrorCode::kAlreadyOpen, "election " + config_->election_id + " already open");
  }
  if (phase_ == Phase::kFinalized) {
    throw Error(ErrorCode::kPhase, "election " + config_->election_id + " already finalized");
  }
  // Validate before journaling so a rejected config leaves no trace.
  Center probe(center_id_, key_, std::nullopt);
  probe.ApplyOpen(config);
  if (journal_) journal_->Append({{"kind", "open"}, {"config", ConfigToJson(config)}});
  ApplyOpen(config);
}

void Center::Submit(const std::string& ballot_id, const FieldElement& value) {
  std::lock_guard lock(mu_);
  if (phase_ != Phase::kCollecting) {
    throw Error(ErrorCode::kPhase, "center " + std::to_string(center_id_) + " is " +
                                       std::string(PhaseName(phase_)) + ", not collecting");
  }
  if (!IsValidBallotId(ballot_id)) {
    throw Error(ErrorCode::kConfig, "ballot id must be 1-128 characters of [A-Za-z0-9_-]");
  }
  if (value.modulus() != config_->prime.value()) {
    throw Error(ErrorCode::kConfig, "share is not an element of Z_" +
                                        std::to_string(config_->prime.value()));
  }
  if (seen_ballot_ids_.contains(ballot_id)) {
    throw Error(ErrorCode::kDuplicateBallot, "ballot " + ballot_id + " already recorded");
  }
  if (seen_ballot_ids_.size() >= config_->voter_count) {
    throw Error(ErrorCode::kCapacity, "all " + std::to_string(config_->voter_count) +
                                          " ballots already received");
  }
  if (journal_) {
    journal_->Append({{"kind", "submit"}, {"ballot_id", ballot_id}, {"value", value.ToDecimal()}});
  }
  ApplySubmit(ballot_id, value);
}

FinalizationRecord Center::Finalize() {
  std::lock_guard lock(mu_);
  if (phase_ == Phase::kFinalized) return *record_;
  if (phase_ != Phase::kCollecting) {
    throw Error(ErrorCode::kPhase, "center " + std::to_string(center_id_) + " has no open election");
  }
  if (journal_) journal_->Append({{"kind", "finalize"}});
  ApplyFinalize();
  return *record_;
}

CenterStatus Center::Status() const {
  std::lock_guard lock(mu_);
  return CenterStatus{center_id_, phase_, config_ ? config_->election_id : std::string(),
                      seen_ballot_ids_.size()};
}

std::optional<ElectionConfig> Center::config() const {
  std::lock_guard lock(mu_);
  return config_;
}

std::optional<FinalizationRecord> Center::record() const {
  std::lock_guard lock(mu_);
  return record_;
}

FieldElement Center::share_sum() const {
  std::lock_guard lock(mu_);
  if (!share_sum_) throw Error(ErrorCode::kPhase, "no open election");
  return *share_sum_;
}

}  // namespace homotally
