#ifndef HOMOTALLY_TALLY_H_
#define HOMOTALLY_TALLY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "homotally/ballot.h"
#include "homotally/center.h"
#include "homotally/crypto.h"

namespace homotally {

inline constexpr size_t kMaxCheckedSubsets = 35;

struct SubsetReconstruction {
  std::vector<uint32_t> center_ids;
  FieldElement value;
};

struct TallyReport {
  std::string election_id;
  std::vector<std::string> candidates;
  std::vector<uint64_t> counts;  // candidate order
  FieldElement packed;
  std::vector<SubsetReconstruction> subsets;
  std::vector<FinalizationRecord> records;  // sorted by center_id
};

// Recomputes the digest from the record fields, then checks the signature.
// kIntegrity names the center on a digest mismatch; kAuthenticity on a bad
// signature.
void VerifyRecord(const FinalizationRecord& record, const PublicKey& key);

// VerifyRecord against the key the config registers for record.center_id,
// plus the election id. Unknown centers fail with kAuthenticity.
void VerifyRecord(const FinalizationRecord& record, const ElectionConfig& config);

// Index subsets (into a list of `count` records) of size `threshold` whose
// reconstructions get cross-checked. All C(count, threshold) subsets in
// lexicographic order when there are at most `cap`; otherwise the cyclic
// windows {r, ..., r+threshold-1 mod count} first, then a fixed-seed sample.
// The windows put every record both inside and outside some checked subset
// whenever count <= cap and count > threshold.
std::vector<std::vector<size_t>> SelectSubsets(size_t count, size_t threshold,
                                               size_t cap = kMaxCheckedSubsets);

// Verifies every record, interpolates each selected subset at zero, requires
// agreement and decodes. Errors: kInsufficientShares below threshold,
// kInconsistency when subsets disagree, plus VerifyRecord and DecodeTally
// errors.
TallyReport ComputeResult(const std::vector<FinalizationRecord>& records,
                          const OfficerSecrets& secrets, const ElectionConfig& config);

// Advisory: one note per center whose received_count differs from the most
// common count. Empty means clean.
std::vector<std::string> TurnoutCheck(const TallyReport& report);

Json ReportToJson(const TallyReport& report, const std::vector<std::string>& audit_notes);

// Candidate / votes table, highest count first.
std::string FormatResultTable(const TallyReport& report);

}  // namespace homotally

#endif  // HOMOTALLY_TALLY_H_
