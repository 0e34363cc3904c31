#include "homotally/netsvc.h"

#include <future>
#include <regex>
#include <set>
#include <sstream>

#include "httplib.h"

#include "homotally/error.h"
#include "homotally/tally.h"

namespace homotally {
namespace {

const std::map<std::string, std::set<std::string>, std::less<>>& AllowedKeys() {
  static const std::map<std::string, std::set<std::string>, std::less<>> kKeys = {
      {"open", {"config"}},
      {"submit", {"ballot_id", "value"}},
      {"ack", {"center_id", "status", "ballot_id"}},
      {"finalize-request", {}},
      {"record", {"record"}},
      {"status", {"center_id", "phase", "received_count"}},
      {"error", {"error", "message"}},
  };
  return kKeys;
}

Json Envelope(const std::string& kind, const std::string& election_id) {
  Json message;
  message["version"] = kProtocolVersion;
  message["kind"] = kind;
  message["election_id"] = election_id;
  return message;
}

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kConfig, "malformed wire message: " + what);
}

void Notify(const MessageObserver& observer, const Json& message) {
  if (observer) observer(message);
}

// --- client side -----------------------------------------------------------

struct HttpResult {
  int status = 0;
  std::optional<Json> body;
  std::string transport_error;  // set when no usable response arrived
};

HttpResult Send(const Endpoint& endpoint, const std::string& method, const std::string& path,
                const std::optional<Json>& body, const RetryPolicy& retry,
                const MessageObserver& observer) {
  if (body) Notify(observer, *body);
  const std::string payload = body ? body->dump() : std::string();
  auto backoff = retry.initial_backoff;
  HttpResult result;
  for (int attempt = 0; attempt < std::max(1, retry.attempts); ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    httplib::Client client(endpoint.url);
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(retry.timeout);
    const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(retry.timeout - secs);
    client.set_connection_timeout(secs.count(), usecs.count());
    client.set_read_timeout(secs.count(), usecs.count());
    client.set_write_timeout(secs.count(), usecs.count());
    auto res = method == "POST" ? client.Post(path, payload, "application/json")
                                : client.Get(path);
    if (!res) {
      result = HttpResult{0, std::nullopt, "unreachable: " + httplib::to_string(res.error())};
      continue;
    }
    result = HttpResult{res->status, std::nullopt, ""};
    try {
      result.body = Json::parse(res->body);
      ValidateWireMessage(*result.body);
      Notify(observer, *result.body);
    } catch (const std::exception& e) {
      result.body.reset();
      result.transport_error = "bad response (HTTP " + std::to_string(res->status) + "): " + e.what();
    }
    if (res->status >= 500) continue;
    return result;
  }
  return result;
}

// Error name from a wire error body, or the transport failure.
std::string Reason(const HttpResult& r) {
  if (!r.transport_error.empty()) return r.transport_error;
  if (r.body && r.body->value("kind", "") == "error") return r.body->value("error", "error");
  return "HTTP " + std::to_string(r.status);
}

template <typename Fn>
auto FanOut(const std::vector<Endpoint>& endpoints, Fn fn) {
  using Result = decltype(fn(endpoints.front()));
  std::vector<std::future<Result>> pending;
  pending.reserve(endpoints.size());
  for (const auto& endpoint : endpoints) {
    pending.push_back(std::async(std::launch::async, [&fn, endpoint] { return fn(endpoint); }));
  }
  std::vector<Result> results;
  results.reserve(endpoints.size());
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

// --- server side -----------------------------------------------------------

void Reply(httplib::Response& res, int status, const Json& body, const MessageObserver& observer) {
  Notify(observer, body);
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void ReplyError(httplib::Response& res, const std::string& election_id, ErrorCode code,
                const std::string& message, const MessageObserver& observer) {
  Reply(res, HttpStatusFor(code), ErrorMessage(election_id, code, message), observer);
}

Json ParseRequest(const httplib::Request& req, const std::string& kind,
                  const MessageObserver& observer) {
  Json body;
  try {
    body = Json::parse(req.body);
  } catch (const nlohmann::json::exception&) {
    Malformed("body is not JSON");
  }
  ValidateWireMessage(body);
  Notify(observer, body);
  if (body["kind"] != kind) Malformed("expected kind '" + kind + "'");
  return body;
}

}  // namespace

// ---------------------------------------------------------------------------

Json OpenMessage(const ElectionConfig& config) {
  Json m = Envelope("open", config.election_id);
  m["config"] = ConfigToJson(config);
  return m;
}

Json SubmitMessage(const std::string& election_id, const std::string& ballot_id,
                   const FieldElement& value) {
  Json m = Envelope("submit", election_id);
  m["ballot_id"] = ballot_id;
  m["value"] = value.ToDecimal();
  return m;
}

Json AckMessage(const std::string& election_id, uint32_t center_id, const std::string& status,
                const std::string& ballot_id) {
  Json m = Envelope("ack", election_id);
  m["center_id"] = center_id;
  m["status"] = status;
  if (!ballot_id.empty()) m["ballot_id"] = ballot_id;
  return m;
}

Json FinalizeRequestMessage(const std::string& election_id) {
  return Envelope("finalize-request", election_id);
}

Json RecordMessage(const FinalizationRecord& record) {
  Json m = Envelope("record", record.election_id);
  m["record"] = RecordToJson(record);
  return m;
}

Json StatusMessage(const CenterStatus& status) {
  Json m = Envelope("status", status.election_id);
  m["center_id"] = status.center_id;
  m["phase"] = std::string(PhaseName(status.phase));
  m["received_count"] = status.received_count;
  return m;
}

Json ErrorMessage(const std::string& election_id, ErrorCode code, const std::string& message) {
  Json m = Envelope("error", election_id);
  m["error"] = std::string(ErrorName(code));
  m["message"] = message;
  return m;
}

void ValidateWireMessage(const Json& message) {
  if (!message.is_object()) Malformed("not an object");
  if (!message.contains("version") || message["version"] != kProtocolVersion) {
    Malformed("missing or unsupported version");
  }
  if (!message.contains("kind") || !message["kind"].is_string()) Malformed("missing kind");
  if (!message.contains("election_id") || !message["election_id"].is_string()) {
    Malformed("missing election_id");
  }
  const std::string kind = message["kind"].get<std::string>();
  const auto allowed = AllowedKeys().find(kind);
  if (allowed == AllowedKeys().end()) Malformed("unknown kind '" + kind + "'");
  for (const auto& item : message.items()) {
    const std::string& key = item.key();
    if (key == "version" || key == "kind" || key == "election_id") continue;
    if (!allowed->second.contains(key)) Malformed("'" + key + "' not allowed in " + kind);
  }
  auto require_string = [&](const char* key) {
    if (!message.contains(key) || !message[key].is_string()) {
      Malformed(kind + " needs string '" + key + "'");
    }
  };
  if (kind == "submit") {
    require_string("ballot_id");
    require_string("value");
    try {
      ParseDecimal(message["value"].get<std::string>());
    } catch (const Error&) {
      Malformed("submit value is not a decimal field element");
    }
  } else if (kind == "open") {
    if (!message.contains("config") || !message["config"].is_object()) Malformed("open needs config");
    if (message["config"].contains("eval_points")) Malformed("open must not carry evaluation points");
  } else if (kind == "record") {
    if (!message.contains("record") || !message["record"].is_object()) Malformed("record missing");
  } else if (kind == "error") {
    require_string("error");
    require_string("message");
  } else if (kind == "ack") {
    require_string("status");
  } else if (kind == "status") {
    require_string("phase");
  }
}

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
    case ErrorCode::kConfig:
    case ErrorCode::kDomain:
    case ErrorCode::kUnsupportedScale:
    case ErrorCode::kInvalidCandidate:
      return 400;
    case ErrorCode::kUnknownElection:
      return 404;
    case ErrorCode::kPhase:
    case ErrorCode::kAlreadyOpen:
    case ErrorCode::kDuplicateBallot:
    case ErrorCode::kCapacity:
      return 409;
    default:
      return 500;
  }
}

// ---------------------------------------------------------------------------

CenterService::CenterService(Center& center, MessageObserver observer)
    : center_(center), observer_(std::move(observer)), server_(std::make_unique<httplib::Server>()) {
  Install();
}

CenterService::~CenterService() { Stop(); }

void CenterService::Install() {
  // Runs `body` and maps library errors to wire errors.
  auto guarded = [this](httplib::Response& res, const std::string& election_id, auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      ReplyError(res, election_id, e.code(), e.what(), observer_);
    } catch (const std::exception& e) {
      ReplyError(res, election_id, ErrorCode::kInternal, e.what(), observer_);
    }
  };
  // Election named in the path must be the open one.
  auto check_election = [this](const std::string& election_id) {
    const CenterStatus status = center_.Status();
    if (status.phase == Phase::kIdle || status.election_id != election_id) {
      throw Error(ErrorCode::kUnknownElection, "no election '" + election_id + "' at center " +
                                                   std::to_string(status.center_id));
    }
  };

  server_->Post("/v1/elections", [this, guarded](const httplib::Request& req,
                                                 httplib::Response& res) {
    guarded(res, "", [&] {
      const Json msg = ParseRequest(req, "open", observer_);
      const ElectionConfig config = ConfigFromJson(msg["config"]);
      if (config.election_id != msg["election_id"]) Malformed("election_id differs from config");
      center_.Open(config);
      Reply(res, 200, AckMessage(config.election_id, center_.center_id(), "opened"), observer_);
    });
  });

  server_->Post(R"(/v1/elections/([^/]+)/shares)",
                [this, guarded, check_election](const httplib::Request& req, httplib::Response& res) {
                  const std::string election_id = req.matches[1];
                  guarded(res, election_id, [&] {
                    const Json msg = ParseRequest(req, "submit", observer_);
                    if (msg["election_id"] != election_id) Malformed("election_id differs from path");
                    check_election(election_id);
                    const Prime p = center_.config()->prime;
                    const std::string ballot_id = msg["ballot_id"].get<std::string>();
                    center_.Submit(ballot_id, ParseFieldElement(msg["value"].get<std::string>(), p));
                    Reply(res, 200, AckMessage(election_id, center_.center_id(), "accepted", ballot_id),
                          observer_);
                  });
                });

  server_->Post(R"(/v1/elections/([^/]+)/finalize)",
                [this, guarded, check_election](const httplib::Request& req, httplib::Response& res) {
                  const std::string election_id = req.matches[1];
                  guarded(res, election_id, [&] {
                    const Json msg = ParseRequest(req, "finalize-request", observer_);
                    if (msg["election_id"] != election_id) Malformed("election_id differs from path");
                    check_election(election_id);
                    Reply(res, 200, RecordMessage(center_.Finalize()), observer_);
                  });
                });

  server_->Get(R"(/v1/elections/([^/]+)/record)",
               [this, guarded, check_election](const httplib::Request& req, httplib::Response& res) {
                 const std::string election_id = req.matches[1];
                 guarded(res, election_id, [&] {
                   check_election(election_id);
                   const auto record = center_.record();
                   if (!record) throw Error(ErrorCode::kPhase, "election not finalized");
                   Reply(res, 200, RecordMessage(*record), observer_);
                 });
               });

  server_->Get(R"(/v1/elections/([^/]+)/status)",
               [this, guarded, check_election](const httplib::Request& req, httplib::Response& res) {
                 const std::string election_id = req.matches[1];
                 guarded(res, election_id, [&] {
                   check_election(election_id);
                   Reply(res, 200, StatusMessage(center_.Status()), observer_);
                 });
               });
}

int CenterService::Bind(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    throw Error(ErrorCode::kIo, "cannot listen on " + host + ":" + std::to_string(port));
  }
  return bound;
}

void CenterService::Run() { server_->listen_after_bind(); }

int CenterService::Start(const std::string& host, int port) {
  const int bound = Bind(host, port);
  thread_ = std::thread([this] { Run(); });
  server_->wait_until_ready();
  return bound;
}

void CenterService::Stop() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

// ---------------------------------------------------------------------------

std::vector<Endpoint> ParseEndpoints(const std::string& comma_separated) {
  std::vector<Endpoint> endpoints;
  std::stringstream in(comma_separated);
  std::string url;
  while (std::getline(in, url, ',')) {
    if (url.empty()) continue;
    if (url.rfind("http://", 0) != 0) url = "http://" + url;
    endpoints.push_back(Endpoint{static_cast<uint32_t>(endpoints.size() + 1), url});
  }
  if (endpoints.empty()) throw Error(ErrorCode::kUsage, "no center endpoints given");
  return endpoints;
}

PreparedBallot PrepareBallot(const ElectionConfig& config, const SharingPolicy& policy,
                             uint32_t candidate_index, RandomSource& coefficient_rng,
                             RandomSource& id_rng) {
  const EncodedBallot ballot = EncodeVote(config, candidate_index);
  PreparedBallot prepared{config.election_id, id_rng.HexToken(16), {}};
  prepared.shares = Split(ballot.value, policy, coefficient_rng);
  return prepared;
}

std::string_view CastStatusName(CastStatus status) {
  switch (status) {
    case CastStatus::kRegistered:
      return "registered";
    case CastStatus::kPartial:
      return "partial";
    case CastStatus::kRejected:
      return "rejected";
  }
  return "unknown";
}

Json CastOutcomeToJson(const CastOutcome& outcome) {
  Json doc;
  doc["ballot_id"] = outcome.ballot_id;
  doc["overall"] = std::string(CastStatusName(outcome.overall));
  Json centers = Json::array();
  for (const auto& c : outcome.centers) {
    Json entry;
    entry["center_id"] = c.center_id;
    entry["status"] = c.acknowledged ? "acknowledged" : "failed";
    if (!c.acknowledged) entry["reason"] = c.reason;
    centers.push_back(entry);
  }
  doc["centers"] = centers;
  return doc;
}

CastOutcome DeliverBallot(const PreparedBallot& ballot, const std::vector<Endpoint>& endpoints,
                          const RetryPolicy& retry, const MessageObserver& observer) {
  if (endpoints.size() != ballot.shares.size()) {
    throw Error(ErrorCode::kUsage, std::to_string(endpoints.size()) + " endpoints for " +
                                       std::to_string(ballot.shares.size()) + " shares");
  }
  auto deliveries = FanOut(endpoints, [&](const Endpoint& endpoint) {
    const Share& share = ballot.shares.at(endpoint.center_id - 1);
    const HttpResult r = Send(endpoint, "POST", "/v1/elections/" + ballot.election_id + "/shares",
                              SubmitMessage(ballot.election_id, ballot.ballot_id, share.value),
                              retry, observer);
    const bool duplicate = r.status == 409 && r.body && r.body->value("error", "") == "duplicate-ballot";
    if (r.transport_error.empty() && (r.status == 200 || duplicate)) {
      return CenterDelivery{endpoint.center_id, true, ""};
    }
    return CenterDelivery{endpoint.center_id, false, Reason(r)};
  });
  size_t acked = 0;
  for (const auto& d : deliveries) acked += d.acknowledged ? 1 : 0;
  const CastStatus overall = acked == deliveries.size() ? CastStatus::kRegistered
                             : acked == 0                ? CastStatus::kRejected
                                                         : CastStatus::kPartial;
  return CastOutcome{ballot.ballot_id, std::move(deliveries), overall};
}

CastOutcome CastBallot(const ElectionConfig& config, const OfficerSecrets& secrets,
                       const std::vector<Endpoint>& endpoints, uint32_t candidate_index,
                       RandomSource& coefficient_rng, RandomSource& id_rng,
                       const RetryPolicy& retry, const MessageObserver& observer) {
  const SharingPolicy policy = MakePolicy(config, secrets);
  const PreparedBallot ballot =
      PrepareBallot(config, policy, candidate_index, coefficient_rng, id_rng);
  return DeliverBallot(ballot, endpoints, retry, observer);
}

namespace {

std::vector<CenterReply> Broadcast(const std::vector<Endpoint>& endpoints,
                                   const std::string& method,
                                   const std::function<std::string(const Endpoint&)>& path,
                                   const std::optional<Json>& body, const RetryPolicy& retry,
                                   const MessageObserver& observer) {
  return FanOut(endpoints, [&](const Endpoint& endpoint) {
    const HttpResult r = Send(endpoint, method, path(endpoint), body, retry, observer);
    if (r.transport_error.empty() && r.status == 200) {
      return CenterReply{endpoint.center_id, r.body, ""};
    }
    return CenterReply{endpoint.center_id, r.body, Reason(r)};
  });
}

std::vector<FinalizationRecord> RecordsFrom(const std::vector<CenterReply>& replies) {
  std::vector<FinalizationRecord> records;
  for (const auto& reply : replies) {
    if (!reply.error.empty() || !reply.body || !reply.body->contains("record")) continue;
    records.push_back(RecordFromJson((*reply.body)["record"]));
  }
  return records;
}

}  // namespace

std::vector<CenterReply> OpenElection(const ElectionConfig& config,
                                      const std::vector<Endpoint>& endpoints,
                                      const RetryPolicy& retry, const MessageObserver& observer) {
  return Broadcast(
      endpoints, "POST", [](const Endpoint&) { return std::string("/v1/elections"); },
      OpenMessage(config), retry, observer);
}

std::vector<CenterReply> FetchStatus(const std::string& election_id,
                                     const std::vector<Endpoint>& endpoints,
                                     const RetryPolicy& retry, const MessageObserver& observer) {
  return Broadcast(
      endpoints, "GET", [&](const Endpoint&) { return "/v1/elections/" + election_id + "/status"; },
      std::nullopt, retry, observer);
}

std::vector<FinalizationRecord> FinalizeCenters(const std::string& election_id,
                                                const std::vector<Endpoint>& endpoints,
                                                const RetryPolicy& retry,
                                                const MessageObserver& observer) {
  return RecordsFrom(Broadcast(
      endpoints, "POST",
      [&](const Endpoint&) { return "/v1/elections/" + election_id + "/finalize"; },
      FinalizeRequestMessage(election_id), retry, observer));
}

std::vector<FinalizationRecord> CollectRecords(const std::string& election_id,
                                               const std::vector<Endpoint>& endpoints,
                                               uint32_t threshold, const RetryPolicy& retry,
                                               const MessageObserver& observer) {
  std::vector<FinalizationRecord> records = RecordsFrom(Broadcast(
      endpoints, "GET", [&](const Endpoint&) { return "/v1/elections/" + election_id + "/record"; },
      std::nullopt, retry, observer));
  if (records.size() < threshold) {
    throw Error(ErrorCode::kInsufficientShares,
                std::to_string(records.size()) + " of " + std::to_string(endpoints.size()) +
                    " centers returned records; " + std::to_string(threshold) + " needed");
  }
  return records;
}

// ---------------------------------------------------------------------------

GatewayService::GatewayService(ElectionConfig config, OfficerSecrets secrets,
                               std::vector<Endpoint> endpoints, std::unique_ptr<RandomSource> rng,
                               RetryPolicy retry)
    : config_(std::move(config)),
      secrets_(std::move(secrets)),
      policy_(MakePolicy(config_, secrets_)),
      endpoints_(std::move(endpoints)),
      retry_(retry),
      rng_(std::move(rng)),
      server_(std::make_unique<httplib::Server>()) {
  if (endpoints_.size() != config_.center_count) {
    throw Error(ErrorCode::kUsage, "gateway needs one endpoint per center");
  }
  Install();
}

GatewayService::~GatewayService() { Stop(); }

CastOutcome GatewayService::Cast(uint32_t candidate_index,
                                 const std::optional<std::string>& ballot_id) {
  PreparedBallot ballot;
  {
    std::lock_guard lock(mu_);
    if (ballot_id) {
      if (auto done = registered_.find(*ballot_id); done != registered_.end()) return done->second;
      if (!IsValidBallotId(*ballot_id)) {
        throw Error(ErrorCode::kUsage, "ballot id must be 1-128 characters of [A-Za-z0-9_-]");
      }
    }
    auto it = ballot_id ? prepared_.find(*ballot_id) : prepared_.end();
    if (it != prepared_.end()) {
      ballot = it->second;
    } else {
      ballot = PrepareBallot(config_, policy_, candidate_index, *rng_, *rng_);
      if (ballot_id) ballot.ballot_id = *ballot_id;
      prepared_[ballot.ballot_id] = ballot;
    }
  }
  CastOutcome outcome = DeliverBallot(ballot, endpoints_, retry_);
  if (outcome.overall == CastStatus::kRegistered) {
    // Shares are dropped once every center holds them.
    std::lock_guard lock(mu_);
    prepared_.erase(ballot.ballot_id);
    registered_[ballot.ballot_id] = outcome;
  }
  return outcome;
}

Json GatewayService::Overview() {
  Json doc;
  doc["version"] = kProtocolVersion;
  doc["election_id"] = config_.election_id;
  doc["candidates"] = config_.candidates;
  doc["threshold"] = config_.threshold;
  doc["center_count"] = config_.center_count;

  const auto statuses = FetchStatus(config_.election_id, endpoints_, retry_);
  std::vector<FinalizationRecord> verified;
  Json centers = Json::array();
  bool any_collecting = false;
  bool all_finalized = true;
  for (size_t i = 0; i < endpoints_.size(); ++i) {
    const auto& status = statuses[i];
    Json c;
    c["center_id"] = endpoints_[i].center_id;
    c["url"] = endpoints_[i].url;
    c["reachable"] = status.error.empty();
    c["phase"] = status.error.empty() ? (*status.body)["phase"] : Json("unknown");
    c["received_count"] = status.error.empty() ? (*status.body)["received_count"] : Json(nullptr);
    c["integrity"] = "pending";
    if (!status.error.empty()) c["error"] = status.error;
    any_collecting = any_collecting || c["phase"] == "collecting";
    all_finalized = all_finalized && c["phase"] == "finalized";
    if (c["phase"] == "finalized") {
      const auto replies = Broadcast(
          {endpoints_[i]}, "GET",
          [&](const Endpoint&) { return "/v1/elections/" + config_.election_id + "/record"; },
          std::nullopt, retry_, {});
      try {
        const auto records = RecordsFrom(replies);
        if (records.empty()) throw Error(ErrorCode::kNetwork, replies.front().error);
        VerifyRecord(records.front(), config_);
        if (records.front().center_id != endpoints_[i].center_id) {
          throw Error(ErrorCode::kIntegrity, "record signed as another center");
        }
        c["record"] = RecordToJson(records.front());
        c["integrity"] = "verified";
        verified.push_back(records.front());
      } catch (const Error& e) {
        c["integrity"] = "failed";
        c["integrity_error"] = std::string(ErrorName(e.code())) + ": " + e.what();
      }
    }
    centers.push_back(c);
  }
  doc["phase"] = any_collecting ? "collecting" : (all_finalized ? "finalized" : "idle");
  doc["centers"] = centers;
  doc["tally"] = nullptr;
  doc["tally_error"] = nullptr;
  if (verified.size() >= config_.threshold) {
    try {
      const TallyReport report = ComputeResult(verified, secrets_, config_);
      doc["tally"] = ReportToJson(report, TurnoutCheck(report));
    } catch (const Error& e) {
      doc["tally_error"] = std::string(ErrorName(e.code())) + ": " + e.what();
    }
  } else {
    doc["tally_error"] = std::to_string(verified.size()) + " verified record(s); " +
                         std::to_string(config_.threshold) + " needed";
  }
  return doc;
}

void GatewayService::Install() {
  auto json_reply = [](httplib::Response& res, int status, const Json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  };
  auto error_reply = [json_reply, this](httplib::Response& res, const Error& e) {
    json_reply(res, HttpStatusFor(e.code()),
               Json{{"version", kProtocolVersion},
                    {"election_id", config_.election_id},
                    {"error", std::string(ErrorName(e.code()))},
                    {"message", e.what()}});
  };

  server_->Post("/v1/terminal/cast", [=, this](const httplib::Request& req, httplib::Response& res) {
    try {
      Json body;
      try {
        body = Json::parse(req.body);
      } catch (const nlohmann::json::exception&) {
        throw Error(ErrorCode::kUsage, "body is not JSON");
      }
      if (!body.is_object() || !body.contains("candidate_index") ||
          !body["candidate_index"].is_number_unsigned()) {
        throw Error(ErrorCode::kInvalidCandidate, "candidate_index must be a positive integer");
      }
      std::optional<std::string> ballot_id;
      if (body.contains("ballot_id")) {
        if (!body["ballot_id"].is_string()) throw Error(ErrorCode::kUsage, "ballot_id must be a string");
        ballot_id = body["ballot_id"].get<std::string>();
      }
      const uint64_t index = body["candidate_index"].get<uint64_t>();
      if (index > UINT32_MAX) throw Error(ErrorCode::kInvalidCandidate, "candidate out of range");
      const CastOutcome outcome = Cast(static_cast<uint32_t>(index), ballot_id);
      json_reply(res, 200, CastOutcomeToJson(outcome));
    } catch (const Error& e) {
      error_reply(res, e);
    }
  });

  server_->Get("/v1/official/overview", [=, this](const httplib::Request&, httplib::Response& res) {
    try {
      json_reply(res, 200, Overview());
    } catch (const Error& e) {
      error_reply(res, e);
    }
  });

  server_->Post("/v1/official/open", [=, this](const httplib::Request&, httplib::Response& res) {
    Json out = Json::array();
    for (const auto& r : OpenElection(config_, endpoints_, retry_)) {
      out.push_back(Json{{"center_id", r.center_id}, {"ok", r.error.empty()}, {"error", r.error}});
    }
    json_reply(res, 200, Json{{"centers", out}});
  });

  server_->Post("/v1/official/finalize", [=, this](const httplib::Request&, httplib::Response& res) {
    Json out = Json::array();
    for (const auto& r : FinalizeCenters(config_.election_id, endpoints_, retry_)) {
      out.push_back(RecordToJson(r));
    }
    json_reply(res, 200, Json{{"records", out}});
  });
}

int GatewayService::Bind(const std::string& host, int port) {
  if (!static_dir_.empty() && !server_->set_mount_point("/", static_dir_)) {
    throw Error(ErrorCode::kIo, "cannot serve static files from " + static_dir_);
  }
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound <= 0) throw Error(ErrorCode::kIo, "cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void GatewayService::Run() { server_->listen_after_bind(); }

int GatewayService::Start(const std::string& host, int port) {
  const int bound = Bind(host, port);
  thread_ = std::thread([this] { Run(); });
  server_->wait_until_ready();
  return bound;
}

void GatewayService::Stop() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace homotally
