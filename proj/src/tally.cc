#include "homotally/tally.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "homotally/error.h"
#include "homotally/shamir.h"

namespace homotally {
namespace {

// C(n, k), saturating at UINT64_MAX.
uint64_t Binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<uint64_t>(result);
}

std::string Join(const std::vector<uint32_t>& ids) {
  std::string out = "{";
  for (size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
  return out + "}";
}

}  // namespace

void VerifyRecord(const FinalizationRecord& record, const PublicKey& key) {
  const Digest expected = Sha256(RecordSigningBytes(record.election_id, record.center_id,
                                                    record.share_sum, record.received_count));
  if (expected != record.digest) {
    throw Error(ErrorCode::kIntegrity,
                "center " + std::to_string(record.center_id) + ": digest does not match record");
  }
  if (!key.Verify(record.digest, record.signature)) {
    throw Error(ErrorCode::kAuthenticity,
                "center " + std::to_string(record.center_id) + ": signature does not verify");
  }
}

void VerifyRecord(const FinalizationRecord& record, const ElectionConfig& config) {
  if (record.center_id < 1 || record.center_id > config.center_public_keys.size()) {
    throw Error(ErrorCode::kAuthenticity,
                "no registered key for center " + std::to_string(record.center_id));
  }
  VerifyRecord(record, PublicKey::FromHex(config.center_public_keys[record.center_id - 1]));
  if (record.election_id != config.election_id) {
    throw Error(ErrorCode::kIntegrity, "center " + std::to_string(record.center_id) +
                                           ": record is for election " + record.election_id);
  }
}

std::vector<std::vector<size_t>> SelectSubsets(size_t count, size_t threshold, size_t cap) {
  std::vector<std::vector<size_t>> out;
  if (threshold == 0 || threshold > count || cap == 0) return out;

  if (Binomial(count, threshold) <= cap) {
    std::vector<size_t> combo(threshold);
    std::iota(combo.begin(), combo.end(), 0);
    for (;;) {
      out.push_back(combo);
      size_t i = threshold;
      while (i > 0 && combo[i - 1] == count - threshold + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (size_t j = i; j < threshold; ++j) combo[j] = combo[j - 1] + 1;
    }
    return out;
  }

  std::set<std::vector<size_t>> chosen;
  auto take = [&](std::vector<size_t> subset) {
    std::sort(subset.begin(), subset.end());
    if (chosen.insert(subset).second) out.push_back(std::move(subset));
  };
  const size_t windows = std::min(count, cap);
  for (size_t w = 0; w < windows; ++w) {
    // Spread window starts evenly when there are more records than slots.
    const size_t start = w * count / windows;
    std::vector<size_t> subset;
    for (size_t i = 0; i < threshold; ++i) subset.push_back((start + i) % count);
    take(std::move(subset));
  }
  SeededRandom rng(count * 1000003 + threshold);
  while (out.size() < cap) {
    std::set<size_t> picked;
    while (picked.size() < threshold) picked.insert(rng.UniformBelow(count));
    take(std::vector<size_t>(picked.begin(), picked.end()));
  }
  return out;
}

TallyReport ComputeResult(const std::vector<FinalizationRecord>& records,
                          const OfficerSecrets& secrets, const ElectionConfig& config) {
  const SharingPolicy policy = MakePolicy(config, secrets);
  std::vector<FinalizationRecord> sorted = records;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.center_id < b.center_id; });
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i].center_id == sorted[i - 1].center_id) {
      throw Error(ErrorCode::kConfig,
                  "two records from center " + std::to_string(sorted[i].center_id));
    }
    VerifyRecord(sorted[i], config);
  }
  if (sorted.size() < config.threshold) {
    throw Error(ErrorCode::kInsufficientShares,
                std::to_string(sorted.size()) + " verified record(s); " +
                    std::to_string(config.threshold) + " centers are needed to tally");
  }

  std::vector<Point> points;
  points.reserve(sorted.size());
  for (const auto& record : sorted) {
    if (record.share_sum >= config.prime.value()) {
      throw Error(ErrorCode::kCorruptedTally, "center " + std::to_string(record.center_id) +
                                                  " reports a sum outside the field");
    }
    points.emplace_back(policy.EvalPoint(record.center_id),
                        FieldElement(record.share_sum, config.prime));
  }

  TallyReport report{config.election_id, config.candidates, {},
                     FieldElement::Zero(config.prime), {}, sorted};
  std::map<uint64_t, size_t> votes;
  for (const auto& subset : SelectSubsets(points.size(), config.threshold)) {
    std::vector<Point> chosen;
    std::vector<uint32_t> ids;
    for (size_t index : subset) {
      chosen.push_back(points[index]);
      ids.push_back(sorted[index].center_id);
    }
    const FieldElement value = InterpolateAtZero(chosen, config.threshold);
    ++votes[value.residue()];
    report.subsets.push_back(SubsetReconstruction{ids, value});
  }

  if (votes.size() > 1) {
    const auto top = std::max_element(
        votes.begin(), votes.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    // A tie for the most common value leaves no reference, so list them all.
    const bool has_majority =
        std::count_if(votes.begin(), votes.end(),
                      [&](const auto& v) { return v.second == top->second; }) == 1;
    std::string listed;
    for (const auto& s : report.subsets) {
      if (!has_majority || s.value.residue() != top->first) {
        listed += " " + Join(s.center_ids) + "=" + s.value.ToDecimal();
      }
    }
    throw Error(ErrorCode::kInconsistency,
                has_majority ? "subset reconstructions disagree (most common " +
                                   std::to_string(top->first) + "):" + listed
                             : "subset reconstructions disagree (no single most common value):" + listed);
  }

  report.packed = report.subsets.front().value;
  report.counts = DecodeTally(config, report.packed).counts;
  return report;
}

std::vector<std::string> TurnoutCheck(const TallyReport& report) {
  std::map<uint64_t, size_t> frequency;
  for (const auto& record : report.records) ++frequency[record.received_count];
  if (frequency.size() <= 1) return {};
  // Most common count; ties go to the larger count.
  uint64_t majority = 0;
  size_t best = 0;
  for (const auto& [count, n] : frequency) {
    if (n >= best) {
      best = n;
      majority = count;
    }
  }
  std::vector<std::string> notes;
  for (const auto& record : report.records) {
    if (record.received_count != majority) {
      notes.push_back("center " + std::to_string(record.center_id) + " received " +
                      std::to_string(record.received_count) + " ballots; most centers received " +
                      std::to_string(majority));
    }
  }
  return notes;
}

Json ReportToJson(const TallyReport& report, const std::vector<std::string>& audit_notes) {
  Json doc;
  doc["election_id"] = report.election_id;
  doc["packed"] = report.packed.ToDecimal();
  Json counts = Json::array();
  for (size_t k = 0; k < report.candidates.size(); ++k) {
    counts.push_back(Json{{"candidate", report.candidates[k]}, {"votes", report.counts[k]}});
  }
  doc["counts"] = counts;
  Json subsets = Json::array();
  for (const auto& s : report.subsets) {
    subsets.push_back(Json{{"centers", s.center_ids}, {"value", s.value.ToDecimal()}});
  }
  doc["subsets"] = subsets;
  Json turnout = Json::array();
  Json records = Json::array();
  for (const auto& r : report.records) {
    turnout.push_back(Json{{"center_id", r.center_id}, {"received_count", r.received_count}});
    records.push_back(RecordToJson(r));
  }
  doc["turnout"] = turnout;
  doc["audit"] = audit_notes;
  doc["records"] = records;
  return doc;
}

std::string FormatResultTable(const TallyReport& report) {
  std::vector<size_t> order(report.candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return report.counts[a] > report.counts[b]; });
  size_t width = std::string("Candidate").size();
  for (const auto& name : report.candidates) width = std::max(width, name.size());

  std::ostringstream out;
  auto row = [&](const std::string& name, const std::string& votes) {
    out << name << std::string(width - name.size() + 2, ' ') << votes << "\n";
  };
  row("Candidate", "Votes Secured");
  for (size_t k : order) row(report.candidates[k], std::to_string(report.counts[k]));
  return out.str();
}

}  // namespace homotally
