#ifndef HOMOTALLY_CENTER_H_
#define HOMOTALLY_CENTER_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homotally/ballot.h"
#include "homotally/crypto.h"
#include "homotally/field.h"
#include "homotally/journal.h"

namespace homotally {

enum class Phase { kIdle, kCollecting, kFinalized };

std::string_view PhaseName(Phase phase);

// A center's signed statement of its final share sum.
struct FinalizationRecord {
  std::string election_id;
  uint32_t center_id = 0;
  uint64_t share_sum = 0;  // residue
  uint64_t received_count = 0;
  Digest digest{};
  Signature signature{};

  friend bool operator==(const FinalizationRecord&, const FinalizationRecord&) = default;
};

// election_id bytes || center_id (u32 LE) || share_sum (u64 LE) || count (u64 LE)
std::vector<uint8_t> RecordSigningBytes(const std::string& election_id, uint32_t center_id,
                                        uint64_t share_sum, uint64_t received_count);

// Digest over the signing bytes; the signature covers the 32 digest bytes.
FinalizationRecord MakeRecord(const std::string& election_id, uint32_t center_id,
                              uint64_t share_sum, uint64_t received_count,
                              const SigningKey& key);

// {"election_id","center_id","share_sum","received_count","digest","signature"}
// with share_sum as a decimal string and lowercase hex digest/signature.
Json RecordToJson(const FinalizationRecord& record);
// Strict inverse of RecordToJson: exactly those keys, canonical encodings.
// Throws Error(kIntegrity) on anything else.
FinalizationRecord RecordFromJson(const Json& doc);

// 1-128 characters of [A-Za-z0-9_-].
bool IsValidBallotId(const std::string& id);

struct CenterStatus {
  uint32_t center_id;
  Phase phase;
  std::string election_id;  // empty while idle
  uint64_t received_count;
};

// One collection center for one election. All mutations hold a single lock
// that also covers the journal append, so concurrent submissions serialize.
class Center {
 public:
  // A center with no journal keeps state in memory only.
  Center(uint32_t center_id, SigningKey key, std::optional<Journal> journal);

  // Rebuilds state by replaying a journal. Throws Error(kIntegrity) on a
  // damaged journal or one whose entries cannot have been produced by a
  // center (e.g. a share before the open entry).
  static std::unique_ptr<Center> Recover(uint32_t center_id, SigningKey key,
                                         const std::filesystem::path& journal_path);

  // idle -> collecting. The config must pass ValidateConfig, name this center
  // and, if it carries public keys, register this center's key.
  void Open(const ElectionConfig& config);
  // Adds one share to the running sum. Errors: kPhase outside collecting,
  // kDuplicateBallot, kCapacity once voter_count shares are in, kConfig for a
  // value from another field or a malformed ballot id.
  void Submit(const std::string& ballot_id, const FieldElement& value);
  // collecting -> finalized; repeated calls return the same record.
  FinalizationRecord Finalize();

  uint32_t center_id() const { return center_id_; }
  CenterStatus Status() const;
  std::optional<ElectionConfig> config() const;
  std::optional<FinalizationRecord> record() const;
  // Only meaningful to tests and the record; never exposed over the wire
  // before finalization.
  FieldElement share_sum() const;

 private:
  void ApplyOpen(const ElectionConfig& config);
  void ApplySubmit(const std::string& ballot_id, const FieldElement& value);
  void ApplyFinalize();

  const uint32_t center_id_;
  const SigningKey key_;
  mutable std::mutex mu_;
  std::optional<Journal> journal_;
  Phase phase_ = Phase::kIdle;
  std::optional<ElectionConfig> config_;
  std::optional<FieldElement> share_sum_;
  std::set<std::string> seen_ballot_ids_;
  std::optional<FinalizationRecord> record_;
};

}  // namespace homotally

#endif  // HOMOTALLY_CENTER_H_
