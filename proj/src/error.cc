#include "homotally/error.h"

#include <array>

namespace homotally {
namespace {

struct ErrorInfo {
  ErrorCode code;
  std::string_view name;
  int exit_code;
};

constexpr std::array<ErrorInfo, 20> kErrorTable = {{
    {ErrorCode::kInternal, "internal", 1},
    {ErrorCode::kUsage, "usage", 2},
    {ErrorCode::kConfig, "config", 3},
    {ErrorCode::kDomain, "domain", 4},
    {ErrorCode::kUnsupportedScale, "unsupported-scale", 5},
    {ErrorCode::kInvalidCandidate, "invalid-candidate", 6},
    {ErrorCode::kCorruptedTally, "corrupted-tally", 7},
    {ErrorCode::kImplausibleCount, "implausible-count", 8},
    {ErrorCode::kInsufficientShares, "insufficient-shares", 9},
    {ErrorCode::kInconsistency, "inconsistency", 10},
    {ErrorCode::kIntegrity, "integrity", 11},
    {ErrorCode::kAuthenticity, "authenticity", 12},
    {ErrorCode::kPhase, "phase", 13},
    {ErrorCode::kAlreadyOpen, "already-open", 14},
    {ErrorCode::kDuplicateBallot, "duplicate-ballot", 15},
    {ErrorCode::kCapacity, "capacity", 16},
    {ErrorCode::kUnknownElection, "unknown-election", 17},
    {ErrorCode::kIo, "io", 18},
    {ErrorCode::kNetwork, "network", 19},
    {ErrorCode::kPartialCast, "partial-cast", 20},
}};

const ErrorInfo& Lookup(ErrorCode code) {
  for (const auto& info : kErrorTable) {
    if (info.code == code) return info;
  }
  return kErrorTable[0];
}

}  // namespace

std::string_view ErrorName(ErrorCode code) { return Lookup(code).name; }

int ExitCode(ErrorCode code) { return Lookup(code).exit_code; }

ErrorCode ErrorCodeFromName(std::string_view name) {
  for (const auto& info : kErrorTable) {
    if (info.name == name) return info.code;
  }
  return ErrorCode::kInternal;
}

}  // namespace homotally
