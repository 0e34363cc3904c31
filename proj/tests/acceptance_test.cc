// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "homotally/ballot.h"
#include "homotally/center.h"
#include "homotally/netsvc.h"
#include "homotally/reference_election.h"
#include "homotally/shamir.h"
#include "homotally/tally.h"
#include "httplib.h"
#include "test_util.h"

#ifndef HOMOTALLY_CLI
#error "HOMOTALLY_CLI must name the homotally executable"
#endif

namespace homotally {
namespace {

using testing::ReadFile;
using testing::TempDir;
using testing::WriteFile;

// Failed check; the message becomes the FAIL line.
struct CheckFailed {
  std::string what;
};

void Check(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed{what};
}

template <typename A, typename B>
void CheckEq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    throw CheckFailed{s.str()};
  }
}

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  return testing::CodeOf(std::forward<Fn>(fn));
}

// --- fixtures ----------------------------------------------------------------

// Table rows: encoded vote, linear coefficient, shares at x = 1, 2, 3.
struct Row {
  uint64_t encoded;
  uint64_t coefficient;
  std::vector<uint64_t> shares;
};
const std::vector<Row> kTable = {
    {64, 233, {40, 16, 249}}, {8, 157, {165, 65, 222}},  {8, 78, {86, 164, 242}},
    {64, 255, {62, 60, 58}},  {1, 217, {218, 178, 138}}, {64, 124, {188, 55, 179}},
};
const std::vector<uint64_t> kCenterSums = {245, 24, 60};
const uint64_t kReconstructed = 209;
// [Charles, Bob, Alice]
const std::vector<uint64_t> kResult = {1, 2, 3};

std::vector<FinalizationRecord> RunReferenceInProcess(const ReferenceElection& ref,
                                                      std::vector<ShareBatch>* batches) {
  const auto& config = ref.setup.config;
  const SharingPolicy policy = MakePolicy(config, ref.setup.secrets);
  SeededRandom fallback(0);
  ScriptedRandom coefficients(ref.coefficients, fallback);
  std::vector<std::unique_ptr<Center>> centers;
  for (uint32_t j = 1; j <= 3; ++j) {
    centers.push_back(std::make_unique<Center>(j, ref.center_keys[j - 1], std::nullopt));
    centers.back()->Open(config);
  }
  for (size_t i = 0; i < ref.votes.size(); ++i) {
    const uint32_t k = ResolveCandidate(config, ref.votes[i]);
    const ShareBatch batch = Split(EncodeVote(config, k).value, policy, coefficients);
    for (const auto& share : batch) centers[share.center_id - 1]->Submit("b" + std::to_string(i), share.value);
    if (batches) batches->push_back(batch);
  }
  std::vector<FinalizationRecord> records;
  for (auto& c : centers) records.push_back(c->Finalize());
  return records;
}

struct RandomElection {
  ElectionSetup setup;
  std::vector<SigningKey> keys;
  std::vector<uint64_t> plaintext;
  std::vector<FinalizationRecord> records;
};

// m <= 5, n <= 50, c <= 7, 1 <= t <= c, and any number of abstentions.
RandomElection MakeRandomElection(RandomSource& rng) {
  SetupParams params;
  const uint32_t m = 1 + static_cast<uint32_t>(rng.UniformBelow(5));
  for (uint32_t k = 0; k < m; ++k) params.candidates.push_back("cand" + std::to_string(k));
  params.voter_count = 1 + rng.UniformBelow(50);
  params.center_count = 1 + static_cast<uint32_t>(rng.UniformBelow(7));
  params.threshold = 1 + static_cast<uint32_t>(rng.UniformBelow(params.center_count));
  RandomElection e;
  for (uint32_t j = 0; j < params.center_count; ++j) e.keys.push_back(SigningKey::Generate(rng));
  e.setup = DeriveConfig(params, rng);
  for (const auto& key : e.keys) e.setup.config.center_public_keys.push_back(key.public_key().ToHex());
  const auto& config = e.setup.config;
  const SharingPolicy policy = MakePolicy(config, e.setup.secrets);

  std::vector<std::unique_ptr<Center>> centers;
  for (uint32_t j = 1; j <= config.center_count; ++j) {
    centers.push_back(std::make_unique<Center>(j, e.keys[j - 1], std::nullopt));
    centers.back()->Open(config);
  }
  e.plaintext.assign(m, 0);
  const uint64_t turnout = rng.UniformBelow(config.voter_count + 1);
  for (uint64_t b = 0; b < turnout; ++b) {
    const uint32_t k = 1 + static_cast<uint32_t>(rng.UniformBelow(m));
    ++e.plaintext[k - 1];
    const PreparedBallot ballot = PrepareBallot(config, policy, k, rng, rng);
    for (const auto& share : ballot.shares) centers[share.center_id - 1]->Submit(ballot.ballot_id, share.value);
  }
  for (auto& c : centers) e.records.push_back(c->Finalize());
  return e;
}

uint64_t Binomial(uint64_t n, uint64_t k) {
  uint64_t r = 1;
  for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// --- processes -----------------------------------------------------------------

class Process {
 public:
  Process(const std::vector<std::string>& args, const std::filesystem::path& log) {
    pid_ = ::fork();
    if (pid_ == 0) {
      const int fd = ::open(log.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
      ::dup2(fd, 2);
      ::dup2(fd, 1);
      std::vector<char*> argv;
      std::string exe = HOMOTALLY_CLI;
      argv.push_back(exe.data());
      std::vector<std::string> copy = args;
      for (auto& a : copy) argv.push_back(a.data());
      argv.push_back(nullptr);
      ::execv(exe.c_str(), argv.data());
      ::_exit(127);
    }
  }
  ~Process() { Signal(SIGKILL); }
  Process(const Process&) = delete;
  Process& operator=(const Process&) = delete;

  // Sends `sig` and reaps the process.
  void Signal(int sig) {
    if (pid_ <= 0) return;
    ::kill(pid_, sig);
    int status = 0;
    ::waitpid(pid_, &status, 0);
    pid_ = -1;
  }

 private:
  pid_t pid_ = -1;
};

int WaitForPort(const std::filesystem::path& port_file) {
  for (int i = 0; i < 500; ++i) {
    const std::string text = ReadFile(port_file);
    if (!text.empty() && text.back() == '\n') return std::stoi(text);
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  throw CheckFailed{"no port file at " + port_file.string()};
}

// Starts `run-center` and returns its endpoint once it is listening.
std::unique_ptr<Process> StartCenter(const TempDir& dir, uint32_t j, Endpoint* endpoint,
                                     bool open_config = true) {
  const auto port_file = dir / ("port" + std::to_string(j));
  std::filesystem::remove(port_file);
  std::vector<std::string> args = {"run-center", "--center-id", std::to_string(j), "--key",
                                   (dir / ("center-" + std::to_string(j) + ".key.json")).string(),
                                   "--journal", (dir / ("journal" + std::to_string(j) + ".jsonl")).string(),
                                   "--port-file", port_file.string()};
  if (open_config) {
    args.push_back("--config");
    args.push_back((dir / "config.json").string());
  }
  auto process = std::make_unique<Process>(args, dir / ("center" + std::to_string(j) + ".log"));
  const int port = WaitForPort(port_file);
  *endpoint = Endpoint{j, "http://127.0.0.1:" + std::to_string(port)};
  return process;
}

void SetupReferenceDir(const TempDir& dir) {
  const std::string cmd = std::string(HOMOTALLY_CLI) + " setup --reference --out-dir " +
                          dir.path().string() + " > /dev/null";
  Check(std::system(cmd.c_str()) == 0, "setup --reference failed");
}

// --- criteria ------------------------------------------------------------------

std::string ReferenceExample() {
  const ReferenceElection ref = MakeReferenceElection();
  std::vector<ShareBatch> batches;
  const auto records = RunReferenceInProcess(ref, &batches);
  for (size_t i = 0; i < kTable.size(); ++i) {
    CheckEq(ref.coefficients[i], kTable[i].coefficient, "coefficient " + std::to_string(i + 1));
    const uint32_t k = ResolveCandidate(ref.setup.config, ref.votes[i]);
    CheckEq(EncodeVote(ref.setup.config, k).value.residue(), kTable[i].encoded,
            "encoded vote " + std::to_string(i + 1));
    for (size_t j = 0; j < 3; ++j) {
      CheckEq(batches[i][j].value.residue(), kTable[i].shares[j],
              "ballot " + std::to_string(i + 1) + " share " + std::to_string(j + 1));
    }
  }
  for (size_t j = 0; j < 3; ++j) CheckEq(records[j].share_sum, kCenterSums[j], "center sum " + std::to_string(j + 1));
  const TallyReport report = ComputeResult(records, ref.setup.secrets, ref.setup.config);
  CheckEq(report.subsets.size(), size_t{3}, "subset count");
  for (const auto& s : report.subsets) CheckEq(s.value.residue(), kReconstructed, "subset value");
  Check(report.counts == kResult, "decoded counts differ from Alice 3, Bob 2, Charles 1");
  return "shares, sums 245/24/60, three reconstructions of 209, Alice 3 Bob 2 Charles 1";
}

std::string OracleEquivalence() {
  SeededRandom rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const RandomElection e = MakeRandomElection(rng);
    const TallyReport report = ComputeResult(e.records, e.setup.secrets, e.setup.config);
    Check(report.counts == e.plaintext, "election " + std::to_string(trial) + " differs from plaintext count");
  }
  return "200 elections match the plaintext counter";
}

std::string SubsetConsistency() {
  SeededRandom rng(777);
  int elections = 0, perturbed = 0, detected = 0, single_subset = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RandomElection e = MakeRandomElection(rng);
    const auto& config = e.setup.config;
    const TallyReport report = ComputeResult(e.records, e.setup.secrets, config);
    const uint64_t expected_subsets = std::min<uint64_t>(Binomial(config.center_count, config.threshold),
                                                         kMaxCheckedSubsets);
    CheckEq(report.subsets.size(), expected_subsets, "checked subsets");
    for (const auto& s : report.subsets) Check(s.value == report.packed, "subsets disagree on honest records");
    ++elections;

    if (config.threshold == config.center_count) {
      ++single_subset;
      continue;
    }
    // Each center in turn reports a different, correctly signed sum.
    for (auto& record : e.records) {
      const FinalizationRecord original = record;
      const uint64_t delta = 1 + rng.UniformBelow(config.prime.value() - 1);
      const uint64_t altered = static_cast<uint64_t>(
          (static_cast<unsigned __int128>(record.share_sum) + delta) % config.prime.value());
      record = MakeRecord(record.election_id, record.center_id, altered, record.received_count,
                          e.keys[record.center_id - 1]);
      ++perturbed;
      if (CodeOf([&] { ComputeResult(e.records, e.setup.secrets, config); }) == ErrorCode::kInconsistency) {
        ++detected;
      }
      record = original;
    }
  }
  CheckEq(detected, perturbed, "perturbations detected");
  return std::to_string(elections) + " elections consistent; " + std::to_string(detected) + "/" +
         std::to_string(perturbed) + " single-record perturbations detected (" +
         std::to_string(single_subset) + " elections with t = c have one subset and are not checkable)";
}

std::string SecrecyEnumeration() {
  const Prime p5 = Prime::Certify(5);
  int observations = 0;
  for (uint64_t x = 1; x < 5; ++x) {
    std::map<uint64_t, std::map<uint64_t, int>> consistent;  // [share][secret]
    for (uint64_t secret = 0; secret < 5; ++secret) {
      for (uint64_t a1 = 0; a1 < 5; ++a1) {
        const Polynomial q{{FieldElement(secret, p5), FieldElement(a1, p5)}};
        ++consistent[Evaluate(q, FieldElement(x, p5)).residue()][secret];
      }
    }
    for (uint64_t y = 0; y < 5; ++y) {
      ++observations;
      const auto& per_secret = consistent[y];
      CheckEq(per_secret.size(), size_t{5}, "secrets consistent with x=" + std::to_string(x));
      for (const auto& [secret, n] : per_secret) {
        CheckEq(n, per_secret.begin()->second, "polynomial count at x=" + std::to_string(x));
      }
    }
  }
  return std::to_string(observations) + " single-share observations, each consistent with every secret exactly once";
}

std::string Homomorphism() {
  SeededRandom rng(1000);
  for (int pair = 0; pair < 1000; ++pair) {
    const Prime p = SmallestPrimeAbove(2 + rng.UniformBelow(uint64_t{1} << 62));
    const uint32_t c = 1 + static_cast<uint32_t>(rng.UniformBelow(7));
    const uint32_t t = 1 + static_cast<uint32_t>(rng.UniformBelow(c));
    const SharingPolicy policy = SharingPolicy::WithRandomPoints(t, c, p, rng);
    const FieldElement s1(rng.UniformBelow(p.value()), p), s2(rng.UniformBelow(p.value()), p);
    const ShareBatch a = Split(s1, policy, rng), b = Split(s2, policy, rng);
    std::vector<Point> points;
    for (uint32_t j = 0; j < t; ++j) {
      points.emplace_back(policy.eval_points()[j], Accumulate(a[j].value, b[j]));
    }
    // Independent oracle for (s1 + s2) mod p.
    const uint64_t want = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(s1.residue()) + s2.residue()) % p.value());
    CheckEq(InterpolateAtZero(points, t).residue(), want, "pair " + std::to_string(pair));
  }
  return "1000 pairs reconstruct to (s1 + s2) mod p";
}

std::string FieldBound() {
  SeededRandom rng(1);
  SetupParams params{{"Charles", "Bob", "Alice"}, 7, 2, 3, std::nullopt, std::nullopt};
  const ElectionSetup setup = DeriveConfig(params, rng);
  CheckEq(setup.config.prime.value(), uint64_t{521}, "derived prime");
  CheckEq(MaxPackedTally(3, 3), uint64_t{511}, "packed bound");
  int rejected = 0;
  for (uint64_t q = 2; q <= 511; ++q) {
    if (!IsPrime(q)) continue;
    params.prime = q;
    CheckEq(static_cast<int>(CodeOf([&] { DeriveConfig(params, rng); })),
            static_cast<int>(ErrorCode::kConfig), "supplied prime " + std::to_string(q));
    ++rejected;
  }
  params.prime = 521;
  CheckEq(DeriveConfig(params, rng).config.prime.value(), uint64_t{521}, "supplied 521");
  std::cout << "note: the worked example uses Z_257, below the 2^9 - 1 = 511 packed-tally bound for "
               "3 candidates and 7 voters; it is reproduced only under field_bound_override, and "
               "DeriveConfig picks 521\n";
  return "p = 521; all " + std::to_string(rejected) + " primes <= 511 rejected";
}

std::string RecordIntegrity() {
  const ReferenceElection ref = MakeReferenceElection();
  const FinalizationRecord record = RunReferenceInProcess(ref, nullptr).front();
  const PublicKey key = ref.center_keys[0].public_key();
  VerifyRecord(record, key);
  SeededRandom rng(100);

  // Byte flips over the binary record: signed fields, digest and signature.
  int binary = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<uint8_t> bytes = RecordSigningBytes(record.election_id, record.center_id,
                                                    record.share_sum, record.received_count);
    const size_t id_len = record.election_id.size();
    bytes.insert(bytes.end(), record.digest.begin(), record.digest.end());
    bytes.insert(bytes.end(), record.signature.begin(), record.signature.end());
    bytes[rng.UniformBelow(bytes.size())] ^= static_cast<uint8_t>(1 + rng.UniformBelow(255));

    FinalizationRecord r;
    r.election_id.assign(bytes.begin(), bytes.begin() + id_len);
    auto read_le = [&](size_t offset, size_t width) {
      uint64_t v = 0;
      for (size_t b = 0; b < width; ++b) v |= uint64_t{bytes[offset + b]} << (8 * b);
      return v;
    };
    r.center_id = static_cast<uint32_t>(read_le(id_len, 4));
    r.share_sum = read_le(id_len + 4, 8);
    r.received_count = read_le(id_len + 12, 8);
    std::copy_n(bytes.begin() + id_len + 20, 32, r.digest.begin());
    std::copy_n(bytes.begin() + id_len + 52, 64, r.signature.begin());
    const ErrorCode code = CodeOf([&] {
      VerifyRecord(r, key);
      if (r.election_id != ref.setup.config.election_id || r.center_id != 1) {
        throw Error(ErrorCode::kIntegrity, "identity changed");
      }
    });
    binary += (code == ErrorCode::kIntegrity || code == ErrorCode::kAuthenticity) ? 1 : 0;
  }
  CheckEq(binary, 100, "binary corruptions detected");

  // Byte flips over the published JSON document.
  const std::string text = RecordToJson(record).dump();
  int published = 0;
  for (int i = 0; i < 100; ++i) {
    std::string corrupted = text;
    corrupted[rng.UniformBelow(corrupted.size())] ^= static_cast<char>(1 + rng.UniformBelow(255));
    bool rejected = false;
    try {
      VerifyRecord(RecordFromJson(Json::parse(corrupted)), ref.setup.config);
    } catch (const Error&) {
      rejected = true;
    } catch (const nlohmann::json::exception&) {
      rejected = true;
    }
    published += rejected ? 1 : 0;
  }
  CheckEq(published, 100, "JSON corruptions detected");
  return "100/100 binary and 100/100 JSON byte corruptions rejected";
}

std::string CrashConsistency() {
  const ReferenceElection ref = MakeReferenceElection();
  const auto& config = ref.setup.config;
  const std::vector<uint64_t> column = {40, 165, 86, 62, 218, 188};
  TempDir dir;
  SetupReferenceDir(dir);

  // Real process: SIGKILL after every acknowledged submission, restart on
  // the same journal, and check the replayed state.
  Endpoint endpoint;
  auto process = StartCenter(dir, 1, &endpoint);
  uint64_t fold = 0;
  for (size_t i = 0; i < column.size(); ++i) {
    httplib::Client client(endpoint.url);
    const Json submit = SubmitMessage(config.election_id, "ballot-" + std::to_string(i),
                                      FieldElement(column[i], config.prime));
    const auto res = client.Post("/v1/elections/" + config.election_id + "/shares", submit.dump(),
                                 "application/json");
    Check(res && res->status == 200, "submission " + std::to_string(i + 1) + " not acknowledged");
    fold = (fold + column[i]) % 257;

    process->Signal(SIGKILL);
    // The journal left behind by the killed process replays to the fold.
    const auto snapshot = dir / "snapshot.jsonl";
    std::filesystem::copy_file(dir / "journal1.jsonl", snapshot,
                               std::filesystem::copy_options::overwrite_existing);
    const auto recovered = Center::Recover(1, ref.center_keys[0], snapshot);
    CheckEq(recovered->share_sum().residue(), fold, "replayed sum after kill " + std::to_string(i + 1));

    process = StartCenter(dir, 1, &endpoint);
    const auto status = FetchStatus(config.election_id, {endpoint});
    Check(status[0].error.empty(), "restarted center unreachable: " + status[0].error);
    CheckEq((*status[0].body)["received_count"].get<uint64_t>(), uint64_t{i + 1}, "count after restart");
    // Duplicate suppression survives the crash.
    httplib::Client restarted(endpoint.url);
    const auto again = restarted.Post("/v1/elections/" + config.election_id + "/shares", submit.dump(),
                                   "application/json");
    Check(again && again->status == 409, "duplicate accepted after restart");
  }
  const auto records = FinalizeCenters(config.election_id, {endpoint});
  Check(records.size() == 1, "finalize after restarts failed");
  CheckEq(records[0].share_sum, uint64_t{245}, "final sum");
  process->Signal(SIGTERM);

  // In-process: every journal prefix, including a torn final line.
  const std::string full = ReadFile(dir / "journal1.jsonl");
  size_t lines = 0;
  uint64_t prefix_fold = 0;
  for (size_t pos = full.find('\n'); pos != std::string::npos; pos = full.find('\n', pos + 1)) {
    WriteFile(dir / "prefix.jsonl", full.substr(0, pos + 1));
    const auto center = Center::Recover(1, ref.center_keys[0], dir / "prefix.jsonl");
    if (lines >= 1 && lines <= column.size()) prefix_fold = (prefix_fold + column[lines - 1]) % 257;
    CheckEq(center->share_sum().residue(), prefix_fold, "prefix " + std::to_string(lines));
    WriteFile(dir / "torn.jsonl", full.substr(0, pos + 1) + full.substr(pos + 1, 10));
    if (pos + 1 < full.size()) {
      CheckEq(static_cast<int>(CodeOf([&] { Center::Recover(1, ref.center_keys[0], dir / "torn.jsonl"); })),
              static_cast<int>(ErrorCode::kIntegrity), "torn entry after line " + std::to_string(lines));
    }
    ++lines;
  }
  return "6 kill/restart cycles and " + std::to_string(lines) +
         " journal prefixes replay to the fold; torn entries refuse recovery";
}

std::string FullLoopback() {
  const auto start = std::chrono::steady_clock::now();
  const ReferenceElection ref = MakeReferenceElection();
  TempDir dir;
  SetupReferenceDir(dir);
  const ElectionConfig config = ConfigFromJson(Json::parse(ReadFile(dir / "config.json")));
  const OfficerSecrets secrets =
      SecretsFromJson(Json::parse(ReadFile(dir / "secrets.json")), config.prime);

  std::vector<Endpoint> endpoints(3);
  std::vector<std::unique_ptr<Process>> centers;
  for (uint32_t j = 1; j <= 3; ++j) centers.push_back(StartCenter(dir, j, &endpoints[j - 1], false));

  for (const auto& r : OpenElection(config, endpoints)) Check(r.error.empty(), "open: " + r.error);
  SeededRandom fallback(0);
  ScriptedRandom coefficients(ref.coefficients, fallback);
  SeededRandom ids(6);
  for (const auto& vote : ref.votes) {
    const auto outcome = CastBallot(config, secrets, endpoints, ResolveCandidate(config, vote),
                                    coefficients, ids);
    Check(outcome.overall == CastStatus::kRegistered, "ballot not registered");
  }
  const auto finalized = FinalizeCenters(config.election_id, endpoints);
  CheckEq(finalized.size(), size_t{3}, "records");
  const auto records = CollectRecords(config.election_id, endpoints, config.threshold);
  for (size_t j = 0; j < 3; ++j) CheckEq(records[j].share_sum, kCenterSums[j], "center sum");
  const TallyReport report = ComputeResult(records, secrets, config);
  for (const auto& s : report.subsets) CheckEq(s.value.residue(), kReconstructed, "subset value");
  Check(report.counts == kResult, "decoded counts differ from Alice 3, Bob 2, Charles 1");
  for (auto& c : centers) c->Signal(SIGTERM);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Check(seconds < 10.0, "took " + std::to_string(seconds) + " s");
  return "3 center processes, 6 ballots: sums 245/24/60, 209, Alice 3 Bob 2 Charles 1";
}

struct Criterion {
  std::string name;
  double limit_seconds;  // 0 = none
  std::function<std::string()> run;
};

}  // namespace
}  // namespace homotally

int main() {
  using namespace homotally;
  const std::vector<Criterion> criteria = {
      {"reference-example", 1.0, ReferenceExample},
      {"oracle-equivalence", 30.0, OracleEquivalence},
      {"subset-consistency", 0, SubsetConsistency},
      {"secrecy-enumeration", 0, SecrecyEnumeration},
      {"homomorphism", 0, Homomorphism},
      {"field-bound", 0, FieldBound},
      {"record-integrity", 0, RecordIntegrity},
      {"crash-consistency", 0, CrashConsistency},
      {"full-loopback", 10.0, FullLoopback},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const CheckFailed& e) {
      ok = false;
      detail = e.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected error: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      ok = false;
      detail += "; over the " + std::to_string(c.limit_seconds) + " s budget";
    }
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << ": " << detail << " (" << std::fixed
              << std::setprecision(2) << seconds << " s)" << std::endl;
    failed += ok ? 0 : 1;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size()
            << std::endl;
  return failed ? 1 : 0;
}
