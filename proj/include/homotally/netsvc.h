#ifndef HOMOTALLY_NETSVC_H_
#define HOMOTALLY_NETSVC_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "homotally/ballot.h"
#include "homotally/center.h"
#include "homotally/error.h"
#include "homotally/random.h"
#include "homotally/shamir.h"

namespace httplib {
class Server;
}

namespace homotally {

inline constexpr const char* kProtocolVersion = "1";

// ---------------------------------------------------------------------------
// Wire messages
//
// Every body on the wire is one JSON object with "version", "kind" and
// "election_id". Field elements travel as decimal strings. The allowed key
// set per kind is closed: a submit carries exactly one share and a ballot id.

Json OpenMessage(const ElectionConfig& config);
Json SubmitMessage(const std::string& election_id, const std::string& ballot_id,
                   const FieldElement& value);
Json AckMessage(const std::string& election_id, uint32_t center_id, const std::string& status,
                const std::string& ballot_id = "");
Json FinalizeRequestMessage(const std::string& election_id);
Json RecordMessage(const FinalizationRecord& record);
Json StatusMessage(const CenterStatus& status);
Json ErrorMessage(const std::string& election_id, ErrorCode code, const std::string& message);

// Throws Error(kConfig) if `message` is not a well-formed wire message.
void ValidateWireMessage(const Json& message);

// Sees every message a client or service sends or receives.
using MessageObserver = std::function<void(const Json&)>;

int HttpStatusFor(ErrorCode code);

// ---------------------------------------------------------------------------
// Center service

// Serves one Center over HTTP:
//   POST /v1/elections                  open
//   POST /v1/elections/{id}/shares      submit
//   POST /v1/elections/{id}/finalize    finalize
//   GET  /v1/elections/{id}/record      finalization record
//   GET  /v1/elections/{id}/status      phase and received count
class CenterService {
 public:
  explicit CenterService(Center& center, MessageObserver observer = {});
  ~CenterService();
  CenterService(const CenterService&) = delete;
  CenterService& operator=(const CenterService&) = delete;

  // Binds (port 0 picks a free port) and returns the bound port. Throws
  // Error(kIo) on bind failure.
  int Bind(const std::string& host, int port);
  // Serves until Stop(); Bind first.
  void Run();
  // Bind + Run on a background thread.
  int Start(const std::string& host, int port);
  void Stop();

 private:
  void Install();

  Center& center_;
  MessageObserver observer_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

// ---------------------------------------------------------------------------
// Terminal and official client

struct Endpoint {
  uint32_t center_id;
  std::string url;  // e.g. "http://127.0.0.1:8101"
};

// Parses "url1,url2,..." into endpoints for centers 1, 2, ...
std::vector<Endpoint> ParseEndpoints(const std::string& comma_separated);

struct RetryPolicy {
  int attempts = 4;
  std::chrono::milliseconds initial_backoff{50};
  std::chrono::milliseconds timeout{2000};
};

struct PreparedBallot {
  std::string election_id;
  std::string ballot_id;
  ShareBatch shares;
};

// Encodes the vote and splits it. Nothing leaves the process here.
PreparedBallot PrepareBallot(const ElectionConfig& config, const SharingPolicy& policy,
                             uint32_t candidate_index, RandomSource& coefficient_rng,
                             RandomSource& id_rng);

enum class CastStatus { kRegistered, kPartial, kRejected };
std::string_view CastStatusName(CastStatus status);

struct CenterDelivery {
  uint32_t center_id;
  bool acknowledged;
  std::string reason;  // empty when acknowledged
};

struct CastOutcome {
  std::string ballot_id;
  std::vector<CenterDelivery> centers;
  CastStatus overall;
};

Json CastOutcomeToJson(const CastOutcome& outcome);

// Sends share j to center j concurrently, retrying transport failures with
// exponential backoff. A center answering duplicate-ballot already holds
// this ballot and counts as acknowledged, so replaying a prepared ballot is
// safe. registered iff every center acknowledged; rejected iff none did.
CastOutcome DeliverBallot(const PreparedBallot& ballot, const std::vector<Endpoint>& endpoints,
                          const RetryPolicy& retry = {}, const MessageObserver& observer = {});

// Prepare + deliver. An invalid candidate throws before anything is sent.
CastOutcome CastBallot(const ElectionConfig& config, const OfficerSecrets& secrets,
                       const std::vector<Endpoint>& endpoints, uint32_t candidate_index,
                       RandomSource& coefficient_rng, RandomSource& id_rng,
                       const RetryPolicy& retry = {}, const MessageObserver& observer = {});

// Result of one request per center; `error` empty on success.
struct CenterReply {
  uint32_t center_id;
  std::optional<Json> body;
  std::string error;
};

std::vector<CenterReply> OpenElection(const ElectionConfig& config,
                                      const std::vector<Endpoint>& endpoints,
                                      const RetryPolicy& retry = {},
                                      const MessageObserver& observer = {});
std::vector<CenterReply> FetchStatus(const std::string& election_id,
                                     const std::vector<Endpoint>& endpoints,
                                     const RetryPolicy& retry = {},
                                     const MessageObserver& observer = {});

// POSTs finalize to every center and parses the returned records. Centers
// that fail are skipped; the caller compares the count with its needs.
std::vector<FinalizationRecord> FinalizeCenters(const std::string& election_id,
                                                const std::vector<Endpoint>& endpoints,
                                                const RetryPolicy& retry = {},
                                                const MessageObserver& observer = {});

// GETs the record of every reachable center. Fewer than `threshold`:
// Error(kInsufficientShares).
std::vector<FinalizationRecord> CollectRecords(const std::string& election_id,
                                               const std::vector<Endpoint>& endpoints,
                                               uint32_t threshold, const RetryPolicy& retry = {},
                                               const MessageObserver& observer = {});

// ---------------------------------------------------------------------------
// Terminal gateway for the browser front end. Holds the officer secrets so
// evaluation points never reach the browser.
//   POST /v1/terminal/cast      {"candidate_index": k, "ballot_id"?: id}
//   GET  /v1/official/overview
//   POST /v1/official/open
//   POST /v1/official/finalize
// A cast naming a ballot_id the gateway has already prepared replays that
// ballot's shares instead of drawing new ones.
class GatewayService {
 public:
  GatewayService(ElectionConfig config, OfficerSecrets secrets, std::vector<Endpoint> endpoints,
                 std::unique_ptr<RandomSource> rng, RetryPolicy retry = {});
  ~GatewayService();
  GatewayService(const GatewayService&) = delete;
  GatewayService& operator=(const GatewayService&) = delete;

  // Serves files under `dir` at "/" as well.
  void ServeStatic(const std::string& dir) { static_dir_ = dir; }

  int Bind(const std::string& host, int port);
  void Run();
  int Start(const std::string& host, int port);
  void Stop();

  // Handlers, callable without HTTP.
  CastOutcome Cast(uint32_t candidate_index, const std::optional<std::string>& ballot_id);
  Json Overview();

 private:
  void Install();

  const ElectionConfig config_;
  const OfficerSecrets secrets_;
  const SharingPolicy policy_;
  const std::vector<Endpoint> endpoints_;
  const RetryPolicy retry_;
  std::mutex mu_;
  std::unique_ptr<RandomSource> rng_;
  std::map<std::string, PreparedBallot> prepared_;
  std::map<std::string, CastOutcome> registered_;
  std::string static_dir_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace homotally

#endif  // HOMOTALLY_NETSVC_H_
