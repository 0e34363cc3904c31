#include "cli.h"

#include <pthread.h>
#include <signal.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "homotally/ballot.h"
#include "homotally/center.h"
#include "homotally/error.h"
#include "homotally/netsvc.h"
#include "homotally/reference_election.h"
#include "homotally/tally.h"

namespace homotally {
namespace {

namespace fs = std::filesystem;

Json LoadJson(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": not valid JSON: " + e.what());
  }
}

void WriteText(const fs::path& path, const std::string& text) {
  // Write then rename, so readers never see half a file.
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << text;
    if (!out.flush()) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot write " + path.string() + ": " + ec.message());
}

void WriteJson(const fs::path& path, const Json& doc) { WriteText(path, doc.dump(2) + "\n"); }

std::string ConfigPath(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("HOMOTALLY_CONFIG"); env && *env) return env;
  throw Error(ErrorCode::kUsage, "--config is required (or set HOMOTALLY_CONFIG)");
}

ElectionConfig LoadConfig(const std::string& flag) {
  return ConfigFromJson(LoadJson(ConfigPath(flag)));
}

OfficerSecrets LoadSecrets(const std::string& path, const ElectionConfig& config) {
  OfficerSecrets secrets = SecretsFromJson(LoadJson(path), config.prime);
  if (secrets.election_id != config.election_id) {
    throw Error(ErrorCode::kConfig, "secrets are for election '" + secrets.election_id +
                                        "', config is '" + config.election_id + "'");
  }
  MakePolicy(config, secrets);
  return secrets;
}

Json KeyToJson(uint32_t center_id, const SigningKey& key) {
  Json doc;
  doc["center_id"] = center_id;
  doc["seed"] = key.SeedHex();
  doc["public_key"] = key.public_key().ToHex();
  return doc;
}

SigningKey LoadKey(const fs::path& path, uint32_t center_id) {
  const Json doc = LoadJson(path);
  try {
    if (doc.at("center_id").get<uint32_t>() != center_id) {
      throw Error(ErrorCode::kConfig, path.string() + " holds the key of center " +
                                          std::to_string(doc.at("center_id").get<uint32_t>()));
    }
    SigningKey key = SigningKey::FromSeedHex(doc.at("seed").get<std::string>());
    if (doc.contains("public_key") && doc["public_key"] != key.public_key().ToHex()) {
      throw Error(ErrorCode::kConfig, path.string() + ": public_key does not match seed");
    }
    return key;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
}

fs::path KeyPath(const fs::path& dir, uint32_t center_id) {
  return dir / ("center-" + std::to_string(center_id) + ".key.json");
}

std::unique_ptr<RandomSource> MakeRandom(const std::optional<uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SecureRandom>();
}

// Records from files holding one record, an array of records, or an object
// with a "records" array.
std::vector<FinalizationRecord> LoadRecords(const std::vector<std::string>& paths) {
  std::vector<FinalizationRecord> records;
  for (const auto& path : paths) {
    Json doc = LoadJson(path);
    if (doc.is_object() && doc.contains("records")) doc = doc["records"];
    if (doc.is_object() && doc.value("kind", "") == "record") doc = doc["record"];
    if (!doc.is_array()) doc = Json::array({doc});
    for (const auto& r : doc) records.push_back(RecordFromJson(r));
  }
  return records;
}

// Blocks SIGINT/SIGTERM in every thread, runs `start`, then waits for one.
template <typename Start, typename Stop>
void ServeUntilSignal(Start start, Stop stop) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  start();
  int received = 0;
  sigwait(&signals, &received);
  stop();
}

void WritePortFile(const std::string& path, int port) {
  if (!path.empty()) WriteText(path, std::to_string(port) + "\n");
}

std::string JoinIds(const std::vector<uint32_t>& ids) {
  std::string out = "{";
  for (size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
  return out + "}";
}

void PrintReport(std::ostream& out, const TallyReport& report) {
  out << "Subset reconstructions:\n";
  for (const auto& s : report.subsets) {
    out << "  " << JoinIds(s.center_ids) << " -> " << s.value.ToDecimal() << "\n";
  }
  out << "Decoded tally: " << report.packed.ToDecimal() << "\n\n";
  out << FormatResultTable(report);
  for (const auto& note : TurnoutCheck(report)) out << "audit: " << note << "\n";
}

std::string Describe(const ElectionConfig& config) {
  std::ostringstream s;
  s << "Election " << config.election_id << ": " << config.candidate_count() << " candidates, "
    << config.voter_count << " voters, " << config.window_width << "-bit windows, t="
    << config.threshold << " of c=" << config.center_count << ", Z_" << config.prime.value();
  return s.str();
}

// --- verbs -----------------------------------------------------------------

struct SetupOptions {
  std::vector<std::string> candidates;
  uint64_t voters = 0;
  uint32_t threshold = 0;
  uint32_t centers = 0;
  std::optional<uint64_t> prime;
  std::string election_id;
  std::optional<uint64_t> seed;
  std::string out_dir;
  bool reference = false;
};

int Setup(const SetupOptions& o, std::ostream& out) {
  ElectionSetup setup;
  std::vector<SigningKey> keys;
  if (o.reference) {
    if (!o.candidates.empty() || o.voters || o.threshold || o.centers || o.prime) {
      throw Error(ErrorCode::kUsage, "--reference takes no election parameters");
    }
    ReferenceElection ref = MakeReferenceElection();
    setup = ref.setup;
    keys = ref.center_keys;
  } else {
    if (o.candidates.empty() || !o.voters || !o.threshold || !o.centers) {
      throw Error(ErrorCode::kUsage,
                  "setup needs --candidates, --voters, --threshold and --centers");
    }
    const auto rng = MakeRandom(o.seed);
    SetupParams params{o.candidates, o.voters, o.threshold, o.centers, o.prime, std::nullopt};
    if (!o.election_id.empty()) params.election_id = o.election_id;
    setup = DeriveConfig(params, *rng);
    for (uint32_t j = 0; j < o.centers; ++j) {
      keys.push_back(SigningKey::Generate(*rng));
      setup.config.center_public_keys.push_back(keys.back().public_key().ToHex());
    }
    ValidateConfig(setup.config);
  }

  const fs::path dir = o.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  WriteJson(dir / "config.json", ConfigToJson(setup.config));
  WriteJson(dir / "secrets.json", SecretsToJson(setup.secrets));
  for (uint32_t j = 1; j <= keys.size(); ++j) WriteJson(KeyPath(dir, j), KeyToJson(j, keys[j - 1]));

  out << Describe(setup.config) << "\n";
  out << "wrote " << (dir / "config.json").string() << ", " << (dir / "secrets.json").string()
      << " and " << keys.size() << " center key files\n";
  return 0;
}

struct ServeOptions {
  uint32_t center_id = 0;
  std::string key;
  std::string journal;
  std::string config;
  std::string secrets;
  std::string centers;
  std::string host = "127.0.0.1";
  int port = 0;
  std::string port_file;
  std::string static_dir;
  std::optional<uint64_t> seed;
};

int RunCenter(const ServeOptions& o, std::ostream& err) {
  SigningKey key = LoadKey(o.key, o.center_id);
  std::optional<ElectionConfig> config;
  if (!o.config.empty()) config = LoadConfig(o.config);

  std::unique_ptr<Center> center;
  std::error_code ec;
  if (fs::exists(o.journal) && fs::file_size(o.journal, ec) > 0) {
    center = Center::Recover(o.center_id, key, o.journal);
  } else {
    center = std::make_unique<Center>(o.center_id, key, Journal::Create(o.journal));
  }
  if (config) {
    const CenterStatus status = center->Status();
    if (status.phase == Phase::kIdle) {
      center->Open(*config);
    } else if (status.election_id != config->election_id) {
      throw Error(ErrorCode::kConfig, "journal belongs to election '" + status.election_id + "'");
    }
  }

  CenterService service(*center);
  ServeUntilSignal(
      [&] {
        const int port = service.Start(o.host, o.port);
        WritePortFile(o.port_file, port);
        const CenterStatus status = center->Status();
        err << Json{{"event", "listening"},
                    {"center_id", o.center_id},
                    {"port", port},
                    {"phase", std::string(PhaseName(status.phase))},
                    {"received_count", status.received_count}}
                   .dump()
            << std::endl;
      },
      [&] { service.Stop(); });
  return 0;
}

int RunGateway(const ServeOptions& o, std::ostream& err) {
  const ElectionConfig config = LoadConfig(o.config);
  OfficerSecrets secrets = LoadSecrets(o.secrets, config);
  GatewayService gateway(config, std::move(secrets), ParseEndpoints(o.centers), MakeRandom(o.seed));
  if (!o.static_dir.empty()) gateway.ServeStatic(o.static_dir);
  ServeUntilSignal(
      [&] {
        const int port = gateway.Start(o.host, o.port);
        WritePortFile(o.port_file, port);
        err << Json{{"event", "listening"}, {"role", "gateway"}, {"port", port}}.dump() << std::endl;
      },
      [&] { gateway.Stop(); });
  return 0;
}

int Open(const std::string& config_flag, const std::string& centers, std::ostream& out) {
  const ElectionConfig config = LoadConfig(config_flag);
  const auto endpoints = ParseEndpoints(centers);
  if (endpoints.size() != config.center_count) {
    throw Error(ErrorCode::kUsage, "config has " + std::to_string(config.center_count) +
                                       " centers; " + std::to_string(endpoints.size()) + " given");
  }
  Json doc = Json::array();
  size_t failed = 0;
  for (const auto& r : OpenElection(config, endpoints)) {
    doc.push_back(Json{{"center_id", r.center_id}, {"ok", r.error.empty()}, {"error", r.error}});
    failed += r.error.empty() ? 0 : 1;
  }
  out << doc.dump(2) << "\n";
  if (failed) throw Error(ErrorCode::kNetwork, std::to_string(failed) + " center(s) did not open");
  return 0;
}

int Cast(const std::string& config_flag, const std::string& secrets_path, const std::string& centers,
         const std::string& candidate, const std::optional<uint64_t>& seed, std::ostream& out) {
  const ElectionConfig config = LoadConfig(config_flag);
  const OfficerSecrets secrets = LoadSecrets(secrets_path, config);
  const auto endpoints = ParseEndpoints(centers);
  const uint32_t k = ResolveCandidate(config, candidate);
  const auto rng = MakeRandom(seed);
  const CastOutcome outcome = CastBallot(config, secrets, endpoints, k, *rng, *rng);
  out << CastOutcomeToJson(outcome).dump(2) << "\n";
  if (outcome.overall == CastStatus::kPartial) {
    throw Error(ErrorCode::kPartialCast,
                "ballot " + outcome.ballot_id + " reached only some centers; retry is safe");
  }
  if (outcome.overall == CastStatus::kRejected) {
    throw Error(ErrorCode::kNetwork, "ballot " + outcome.ballot_id + " reached no center");
  }
  return 0;
}

int Finalize(const std::string& config_flag, const std::string& centers, const std::string& out_path,
             std::ostream& out) {
  const ElectionConfig config = LoadConfig(config_flag);
  const auto endpoints = ParseEndpoints(centers);
  const auto records = FinalizeCenters(config.election_id, endpoints);
  Json doc = Json::array();
  for (const auto& r : records) doc.push_back(RecordToJson(r));
  if (!out_path.empty()) WriteJson(out_path, doc);
  out << doc.dump(2) << "\n";
  if (records.empty()) throw Error(ErrorCode::kNetwork, "no center returned a record");
  return 0;
}

int Tally(const std::string& config_flag, const std::string& secrets_path,
          const std::vector<std::string>& record_paths, bool json, std::ostream& out) {
  const ElectionConfig config = LoadConfig(config_flag);
  const OfficerSecrets secrets = LoadSecrets(secrets_path, config);
  const auto records = LoadRecords(record_paths);
  const TallyReport report = ComputeResult(records, secrets, config);
  if (json) {
    out << ReportToJson(report, TurnoutCheck(report)).dump(2) << "\n";
  } else {
    out << Describe(config) << "\n";
    out << records.size() << " verified record(s)\n";
    PrintReport(out, report);
  }
  return 0;
}

struct SimulateOptions {
  std::string config;
  std::string secrets;
  std::string keys_dir;
  bool reference = false;
  std::vector<std::string> votes;
  std::optional<uint64_t> random;
  std::optional<uint64_t> seed;
  bool json = false;
};

int Simulate(const SimulateOptions& o, std::ostream& out) {
  const auto rng = MakeRandom(o.seed);
  ElectionSetup setup;
  std::vector<SigningKey> keys;
  std::vector<uint64_t> forced;
  std::vector<std::string> votes = o.votes;
  if (o.reference) {
    if (!o.config.empty() || !o.secrets.empty()) {
      throw Error(ErrorCode::kUsage, "--reference replaces --config and --secrets");
    }
    ReferenceElection ref = MakeReferenceElection();
    setup = ref.setup;
    keys = ref.center_keys;
    forced = ref.coefficients;
    if (votes.empty() && !o.random) votes = ref.votes;
  } else {
    setup.config = LoadConfig(o.config);
    setup.secrets = LoadSecrets(o.secrets, setup.config);
    if (!o.keys_dir.empty()) {
      for (uint32_t j = 1; j <= setup.config.center_count; ++j) {
        keys.push_back(LoadKey(KeyPath(o.keys_dir, j), j));
      }
    } else if (setup.config.center_public_keys.empty()) {
      for (uint32_t j = 0; j < setup.config.center_count; ++j) keys.push_back(SigningKey::Generate(*rng));
    } else {
      throw Error(ErrorCode::kUsage, "config registers center keys; pass --keys-dir");
    }
  }
  const ElectionConfig& config = setup.config;
  if (o.random && !o.votes.empty()) throw Error(ErrorCode::kUsage, "give --votes or --random, not both");

  // Resolve everything before any center exists.
  std::vector<uint32_t> choices;
  for (const auto& v : votes) choices.push_back(ResolveCandidate(config, v));
  if (o.random) {
    for (uint64_t i = 0; i < *o.random; ++i) {
      choices.push_back(1 + static_cast<uint32_t>(rng->UniformBelow(config.candidate_count())));
    }
  }
  if (choices.size() > config.voter_count) {
    throw Error(ErrorCode::kCapacity, std::to_string(choices.size()) + " votes for " +
                                          std::to_string(config.voter_count) + " voters");
  }

  std::vector<std::unique_ptr<Center>> centers;
  for (uint32_t j = 1; j <= config.center_count; ++j) {
    centers.push_back(std::make_unique<Center>(j, keys.at(j - 1), std::nullopt));
    centers.back()->Open(config);
  }
  const SharingPolicy policy = MakePolicy(config, setup.secrets);
  ScriptedRandom coefficients(forced, *rng);
  std::vector<uint64_t> plaintext(config.candidate_count(), 0);
  Json ballots = Json::array();
  std::ostringstream rows;
  rows << std::left << std::setw(8) << "Ballot" << std::setw(12) << "Vote" << std::setw(12)
       << "Encoded" << "Shares (center 1.." << config.center_count << ")\n";
  for (size_t i = 0; i < choices.size(); ++i) {
    const uint32_t k = choices[i];
    ++plaintext[k - 1];
    const PreparedBallot ballot = PrepareBallot(config, policy, k, coefficients, *rng);
    std::vector<std::string> shares;
    for (const auto& share : ballot.shares) {
      centers[share.center_id - 1]->Submit(ballot.ballot_id, share.value);
      shares.push_back(share.value.ToDecimal());
    }
    const std::string encoded = EncodeVote(config, k).value.ToDecimal();
    ballots.push_back(Json{{"ballot_id", ballot.ballot_id},
                           {"candidate", config.candidates[k - 1]},
                           {"encoded", encoded},
                           {"shares", shares}});
    rows << std::setw(8) << (i + 1) << std::setw(12) << config.candidates[k - 1] << std::setw(12)
         << encoded;
    for (size_t s = 0; s < shares.size(); ++s) rows << (s ? " " : "") << shares[s];
    rows << "\n";
  }
  std::vector<FinalizationRecord> records;
  for (auto& center : centers) records.push_back(center->Finalize());
  const TallyReport report = ComputeResult(records, setup.secrets, config);
  if (report.counts != plaintext) {
    throw Error(ErrorCode::kInternal, "decoded tally differs from the plaintext count");
  }

  if (o.json) {
    Json doc;
    doc["config"] = ConfigToJson(config);
    doc["ballots"] = ballots;
    doc["plaintext_counts"] = plaintext;
    doc["report"] = ReportToJson(report, TurnoutCheck(report));
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << Describe(config) << "\n\n" << rows.str() << "\nCenter sums:";
  for (const auto& r : records) out << " " << r.share_sum;
  out << "\n";
  PrintReport(out, report);
  out << "Plaintext count agrees: yes\n";
  return 0;
}

void PrintError(std::ostream& err, ErrorCode code, const std::string& message) {
  err << Json{{"error", std::string(ErrorName(code))},
              {"exit_code", ExitCode(code)},
              {"message", message}}
             .dump()
      << std::endl;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Threshold secret-sharing election tools", "homotally"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string config_flag, secrets_flag, centers_flag;
  auto add_seed = [](CLI::App* cmd, std::optional<uint64_t>& seed) {
    cmd->add_option("--seed", seed, "Deterministic randomness (testing and demos only)");
  };

  SetupOptions setup;
  auto* setup_cmd = app.add_subcommand("setup", "Derive an election config, officer secrets and center keys");
  setup_cmd->add_option("--candidates", setup.candidates, "Comma-separated names")->delimiter(',');
  setup_cmd->add_option("--voters", setup.voters, "Number of eligible voters");
  setup_cmd->add_option("--threshold", setup.threshold, "Centers needed to tally");
  setup_cmd->add_option("--centers", setup.centers, "Number of collection centers");
  setup_cmd->add_option("--prime", setup.prime, "Explicit field prime");
  setup_cmd->add_option("--election-id", setup.election_id);
  setup_cmd->add_option("--out-dir", setup.out_dir)->required();
  setup_cmd->add_flag("--reference", setup.reference, "Write the small Z_257 reference election");
  add_seed(setup_cmd, setup.seed);

  ServeOptions serve;
  auto* center_cmd = app.add_subcommand("run-center", "Serve one collection center");
  center_cmd->add_option("--center-id", serve.center_id)->required();
  center_cmd->add_option("--key", serve.key, "Center key file")->required();
  center_cmd->add_option("--journal", serve.journal, "Journal path; replayed if present")->required();
  center_cmd->add_option("--config", serve.config, "Open this election if the center is idle");
  center_cmd->add_option("--host", serve.host);
  center_cmd->add_option("--port", serve.port, "0 picks a free port");
  center_cmd->add_option("--port-file", serve.port_file, "Write the bound port here");

  auto* gateway_cmd = app.add_subcommand("run-gateway", "Serve the terminal and official gateway");
  gateway_cmd->add_option("--config", serve.config);
  gateway_cmd->add_option("--secrets", serve.secrets)->required();
  gateway_cmd->add_option("--centers", serve.centers, "Comma-separated center URLs")->required();
  gateway_cmd->add_option("--host", serve.host);
  gateway_cmd->add_option("--port", serve.port);
  gateway_cmd->add_option("--port-file", serve.port_file);
  gateway_cmd->add_option("--static", serve.static_dir, "Directory served at /");
  add_seed(gateway_cmd, serve.seed);

  auto* open_cmd = app.add_subcommand("open", "Open the election at every center");
  open_cmd->add_option("--config", config_flag);
  open_cmd->add_option("--centers", centers_flag)->required();

  std::string candidate;
  std::optional<uint64_t> cast_seed;
  auto* cast_cmd = app.add_subcommand("cast", "Split one vote and send a share to each center");
  cast_cmd->add_option("--config", config_flag);
  cast_cmd->add_option("--secrets", secrets_flag)->required();
  cast_cmd->add_option("--centers", centers_flag)->required();
  cast_cmd->add_option("--candidate", candidate, "Name or 1-based index")->required();
  add_seed(cast_cmd, cast_seed);

  std::string records_out;
  auto* finalize_cmd = app.add_subcommand("finalize", "Finalize every center and print the records");
  finalize_cmd->add_option("--config", config_flag);
  finalize_cmd->add_option("--centers", centers_flag)->required();
  finalize_cmd->add_option("--out", records_out, "Also write the records here");

  std::vector<std::string> record_paths;
  bool tally_json = false;
  auto* tally_cmd = app.add_subcommand("tally", "Verify records, reconstruct and decode");
  tally_cmd->add_option("--config", config_flag);
  tally_cmd->add_option("--secrets", secrets_flag)->required();
  tally_cmd->add_option("--records", record_paths, "Record files (repeatable)")->required();
  tally_cmd->add_flag("--json", tally_json);

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a whole election in-process");
  sim_cmd->add_option("--config", sim.config);
  sim_cmd->add_option("--secrets", sim.secrets);
  sim_cmd->add_option("--keys-dir", sim.keys_dir);
  sim_cmd->add_flag("--reference", sim.reference, "Use the Z_257 reference election");
  sim_cmd->add_option("--votes", sim.votes, "Comma-separated names or indices")->delimiter(',');
  sim_cmd->add_option("--random", sim.random, "Cast this many random votes");
  sim_cmd->add_flag("--json", sim.json);
  add_seed(sim_cmd, sim.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    PrintError(err, ErrorCode::kUsage, e.what());
    return ExitCode(ErrorCode::kUsage);
  }

  try {
    if (*setup_cmd) return Setup(setup, out);
    if (*center_cmd) return RunCenter(serve, err);
    if (*gateway_cmd) {
      serve.config = ConfigPath(serve.config);
      return RunGateway(serve, err);
    }
    if (*open_cmd) return Open(config_flag, centers_flag, out);
    if (*cast_cmd) return Cast(config_flag, secrets_flag, centers_flag, candidate, cast_seed, out);
    if (*finalize_cmd) return Finalize(config_flag, centers_flag, records_out, out);
    if (*tally_cmd) return Tally(config_flag, secrets_flag, record_paths, tally_json, out);
    if (*sim_cmd) {
      if (!sim.reference) sim.config = ConfigPath(sim.config);
      if (!sim.reference && sim.secrets.empty()) {
        throw Error(ErrorCode::kUsage, "simulate needs --secrets or --reference");
      }
      return Simulate(sim, out);
    }
  } catch (const Error& e) {
    out.flush();
    PrintError(err, e.code(), e.what());
    return ExitCode(e.code());
  } catch (const std::exception& e) {
    out.flush();
    PrintError(err, ErrorCode::kInternal, e.what());
    return ExitCode(ErrorCode::kInternal);
  }
  return ExitCode(ErrorCode::kUsage);
}

}  // namespace homotally
