#ifndef HOMOTALLY_ERROR_H_
#define HOMOTALLY_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace homotally {

// Every failure the library reports falls into one of these classes. Each
// class has a stable wire name (used in HTTP error bodies and CLI error
// lines) and a distinct process exit code.
enum class ErrorCode {
  kInternal,
  kUsage,
  kConfig,
  kDomain,
  kUnsupportedScale,
  kInvalidCandidate,
  kCorruptedTally,
  kImplausibleCount,
  kInsufficientShares,
  kInconsistency,
  kIntegrity,
  kAuthenticity,
  kPhase,
  kAlreadyOpen,
  kDuplicateBallot,
  kCapacity,
  kUnknownElection,
  kIo,
  kNetwork,
  kPartialCast,
};

std::string_view ErrorName(ErrorCode code);
int ExitCode(ErrorCode code);
// Inverse of ErrorName; unknown names map to kInternal.
ErrorCode ErrorCodeFromName(std::string_view name);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace homotally

#endif  // HOMOTALLY_ERROR_H_
