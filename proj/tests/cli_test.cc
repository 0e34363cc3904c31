#include "cli.h"

#include <cstdlib>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "homotally/netsvc.h"
#include "homotally/reference_election.h"
#include "test_util.h"

namespace homotally {
namespace {

using testing::ReadFile;
using testing::TempDir;
using testing::WriteFile;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

// Every failing run ends with one JSON error line naming its exit code.
void ExpectErrorLine(const CliRun& run, ErrorCode code) {
  EXPECT_EQ(run.code, ExitCode(code)) << run.err;
  ASSERT_FALSE(run.err.empty());
  const std::string last = run.err.substr(run.err.rfind('\n', run.err.size() - 2) + 1);
  const Json line = Json::parse(last);
  EXPECT_EQ(line["error"], ErrorName(code));
  EXPECT_EQ(line["exit_code"], ExitCode(code));
  EXPECT_TRUE(line["message"].is_string());
}

TEST(CliTest, ExitCodesAreDistinct) {
  std::set<int> codes;
  for (int c = 0; c <= static_cast<int>(ErrorCode::kPartialCast); ++c) {
    const auto code = static_cast<ErrorCode>(c);
    EXPECT_TRUE(codes.insert(ExitCode(code)).second);
    EXPECT_NE(ExitCode(code), 0);
    EXPECT_EQ(ErrorCodeFromName(ErrorName(code)), code);
  }
}

TEST(CliTest, SetupDerivesConfig) {
  TempDir dir;
  const CliRun run = Cli({"setup", "--candidates", "Charles,Bob,Alice", "--voters", "7", "--threshold",
                       "2", "--centers", "3", "--out-dir", dir.path().string()});
  ASSERT_EQ(run.code, 0) << run.err;
  const Json config = Json::parse(ReadFile(dir / "config.json"));
  EXPECT_EQ(config["window_width"], 3);
  EXPECT_EQ(config["prime"], "521");
  EXPECT_EQ(config["center_public_keys"].size(), 3u);
  const Json secrets = Json::parse(ReadFile(dir / "secrets.json"));
  EXPECT_EQ(secrets["eval_points"].size(), 3u);
  EXPECT_FALSE(ReadFile(dir / "config.json").find("eval_points") != std::string::npos);
  const Json key = Json::parse(ReadFile(dir / "center-2.key.json"));
  EXPECT_EQ(key["public_key"], config["center_public_keys"][1]);
}

TEST(CliTest, SetupRejectsBadCombinations) {
  TempDir dir;
  const CliRun run = Cli({"setup", "--candidates", "A,B", "--voters", "7", "--threshold", "4",
                       "--centers", "3", "--out-dir", dir.path().string()});
  ExpectErrorLine(run, ErrorCode::kConfig);
  EXPECT_NE(run.err.find("threshold"), std::string::npos);
  EXPECT_FALSE(std::filesystem::exists(dir / "config.json"));

  ExpectErrorLine(Cli({"setup", "--candidates", "A", "--voters", "7", "--threshold", "1", "--centers",
                       "1", "--prime", "7", "--out-dir", dir.path().string()}),
                  ErrorCode::kConfig);
  ExpectErrorLine(Cli({"setup", "--voters", "7", "--out-dir", dir.path().string()}), ErrorCode::kUsage);
  ExpectErrorLine(Cli({"setup", "--candidates", "A"}), ErrorCode::kUsage);
}

TEST(CliTest, SetupMinimalElection) {
  TempDir dir;
  const CliRun run = Cli({"setup", "--candidates", "A", "--voters", "1", "--threshold", "1",
                       "--centers", "1", "--out-dir", dir.path().string()});
  ASSERT_EQ(run.code, 0) << run.err;
  const Json config = Json::parse(ReadFile(dir / "config.json"));
  EXPECT_EQ(config["window_width"], 1);
  EXPECT_EQ(config["prime"], "2");
}

TEST(CliTest, SeededSetupIsReproducible) {
  TempDir a, b;
  const std::vector<std::string> common = {"setup", "--candidates", "X,Y", "--voters", "20",
                                           "--threshold", "2", "--centers", "4", "--seed", "8",
                                           "--out-dir"};
  auto args_a = common, args_b = common;
  args_a.push_back(a.path().string());
  args_b.push_back(b.path().string());
  ASSERT_EQ(Cli(args_a).code, 0);
  ASSERT_EQ(Cli(args_b).code, 0);
  for (const char* name : {"config.json", "secrets.json", "center-4.key.json"}) {
    EXPECT_EQ(ReadFile(a / name), ReadFile(b / name)) << name;
  }
}

TEST(CliTest, SimulateReference) {
  const CliRun run = Cli({"simulate", "--reference", "--seed", "1"});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("1       Alice       64          40 16 249\n"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("6       Alice       64          188 55 179\n"), std::string::npos);
  EXPECT_NE(run.out.find("Center sums: 245 24 60\n"), std::string::npos);
  EXPECT_NE(run.out.find("  {1,2} -> 209\n  {1,3} -> 209\n  {2,3} -> 209\n"), std::string::npos);
  EXPECT_NE(run.out.find("Candidate  Votes Secured\nAlice      3\nBob        2\nCharles    1\n"),
            std::string::npos);
}

TEST(CliTest, SeededSimulateIsByteIdentical) {
  TempDir dir;
  ASSERT_EQ(Cli({"setup", "--candidates", "A,B,C,D", "--voters", "50", "--threshold", "3",
                 "--centers", "5", "--seed", "2", "--out-dir", dir.path().string()})
                .code,
            0);
  const std::vector<std::string> args = {
      "simulate", "--config", (dir / "config.json").string(), "--secrets",
      (dir / "secrets.json").string(), "--keys-dir", dir.path().string(), "--random", "50",
      "--seed", "77", "--json"};
  const CliRun first = Cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(Cli(args).out, first.out);
  const Json doc = Json::parse(first.out);
  std::vector<uint64_t> decoded;
  for (const auto& c : doc["report"]["counts"]) decoded.push_back(c["votes"]);
  EXPECT_EQ(decoded, doc["plaintext_counts"].get<std::vector<uint64_t>>());
  EXPECT_EQ(doc["ballots"].size(), 50u);

  auto other = args;
  other[10] = "78";
  EXPECT_NE(Cli(other).out, first.out);
}

TEST(CliTest, SimulateZeroVotesAndErrors) {
  const CliRun zero = Cli({"simulate", "--reference", "--random", "0", "--seed", "1", "--json"});
  ASSERT_EQ(zero.code, 0) << zero.err;
  for (const auto& c : Json::parse(zero.out)["report"]["counts"]) EXPECT_EQ(c["votes"], 0);

  ExpectErrorLine(Cli({"simulate", "--reference", "--votes", "Alice,Zed"}), ErrorCode::kInvalidCandidate);
  ExpectErrorLine(Cli({"simulate", "--reference", "--random", "8", "--seed", "1"}), ErrorCode::kCapacity);
  ExpectErrorLine(Cli({"simulate", "--reference", "--random", "x"}), ErrorCode::kUsage);
  ExpectErrorLine(Cli({"bogus"}), ErrorCode::kUsage);
}

class CliElectionTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(Cli({"setup", "--reference", "--out-dir", dir_.path().string()}).code, 0);
    for (uint32_t j = 1; j <= 3; ++j) {
      const auto& key = ref_.center_keys[j - 1];
      const auto record = MakeRecord(ref_.setup.config.election_id, j, sums_[j - 1], 6, key);
      WriteFile(dir_ / ("r" + std::to_string(j) + ".json"), RecordToJson(record).dump());
    }
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  TempDir dir_;
  ReferenceElection ref_ = MakeReferenceElection();
  const std::vector<uint64_t> sums_ = {245, 24, 60};
};

TEST_F(CliElectionTest, TallyWithTwoOfThreeRecords) {
  const CliRun run = Cli({"tally", "--config", Path("config.json"), "--secrets", Path("secrets.json"),
                       "--records", Path("r1.json"), "--records", Path("r3.json")});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("  {1,3} -> 209\n"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("Alice      3\nBob        2\nCharles    1\n"), std::string::npos);
}

TEST_F(CliElectionTest, TallyWithOneRecordIsInsufficient) {
  ExpectErrorLine(Cli({"tally", "--config", Path("config.json"), "--secrets", Path("secrets.json"),
                       "--records", Path("r2.json")}),
                  ErrorCode::kInsufficientShares);
}

TEST_F(CliElectionTest, TallyDetectsTamperingAndBadFiles) {
  std::string text = ReadFile(dir_ / "r2.json");
  text.replace(text.find("\"24\""), 4, "\"25\"");
  WriteFile(dir_ / "bad.json", text);
  ExpectErrorLine(Cli({"tally", "--config", Path("config.json"), "--secrets", Path("secrets.json"),
                       "--records", Path("r1.json"), "--records", Path("bad.json")}),
                  ErrorCode::kIntegrity);
  ExpectErrorLine(Cli({"tally", "--config", Path("config.json"), "--secrets", Path("secrets.json"),
                       "--records", Path("missing.json")}),
                  ErrorCode::kIo);
  WriteFile(dir_ / "junk.json", "{");
  ExpectErrorLine(Cli({"tally", "--config", Path("junk.json"), "--secrets", Path("secrets.json"),
                       "--records", Path("r1.json")}),
                  ErrorCode::kConfig);
}

TEST_F(CliElectionTest, ConfigFromEnvironment) {
  ::setenv("HOMOTALLY_CONFIG", Path("config.json").c_str(), 1);
  const CliRun run = Cli({"tally", "--secrets", Path("secrets.json"), "--records", Path("r1.json"),
                       "--records", Path("r2.json"), "--json"});
  ::unsetenv("HOMOTALLY_CONFIG");
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_EQ(Json::parse(run.out)["packed"], "209");
  ExpectErrorLine(Cli({"tally", "--secrets", Path("secrets.json"), "--records", Path("r1.json")}),
                  ErrorCode::kUsage);
}

// Cast, finalize and tally against in-process center services.
TEST_F(CliElectionTest, CastFinalizeTallyOverLoopback) {
  std::vector<std::unique_ptr<Center>> centers;
  std::vector<std::unique_ptr<CenterService>> services;
  std::string urls;
  for (uint32_t j = 1; j <= 3; ++j) {
    centers.push_back(std::make_unique<Center>(j, ref_.center_keys[j - 1], std::nullopt));
    services.push_back(std::make_unique<CenterService>(*centers.back()));
    urls += "127.0.0.1:" + std::to_string(services.back()->Start("127.0.0.1", 0)) + ",";
  }
  const std::string config = Path("config.json");
  ASSERT_EQ(Cli({"open", "--config", config, "--centers", urls}).code, 0);
  ExpectErrorLine(Cli({"open", "--config", config, "--centers", urls}), ErrorCode::kNetwork);
  for (const char* vote : {"Alice", "3", "Charles"}) {
    const CliRun cast = Cli({"cast", "--config", config, "--secrets", Path("secrets.json"),
                          "--centers", urls, "--candidate", vote});
    ASSERT_EQ(cast.code, 0) << cast.err;
    EXPECT_EQ(Json::parse(cast.out)["overall"], "registered");
  }
  ExpectErrorLine(Cli({"cast", "--config", config, "--secrets", Path("secrets.json"), "--centers",
                       urls, "--candidate", "Dave"}),
                  ErrorCode::kInvalidCandidate);
  for (const auto& c : centers) EXPECT_EQ(c->Status().received_count, 3u);

  services[1]->Stop();
  const CliRun partial = Cli({"cast", "--config", config, "--secrets", Path("secrets.json"),
                           "--centers", urls, "--candidate", "Bob"});
  ExpectErrorLine(partial, ErrorCode::kPartialCast);
  EXPECT_EQ(Json::parse(partial.out)["overall"], "partial");
  services[1] = std::make_unique<CenterService>(*centers[1]);
  const std::string port2 = urls.substr(urls.find(',') + 1);
  services[1]->Start("127.0.0.1", std::stoi(port2.substr(port2.find(':') + 1)));

  const CliRun first = Cli({"finalize", "--config", config, "--centers", urls, "--out", Path("records.json")});
  ASSERT_EQ(first.code, 0) << first.err;
  const CliRun second = Cli({"finalize", "--config", config, "--centers", urls});
  EXPECT_EQ(second.out, first.out);

  // Center 2 never received Bob's share, so only centers 1 and 3 agree.
  const Json records = Json::parse(ReadFile(dir_ / "records.json"));
  ASSERT_EQ(records.size(), 3u);
  WriteFile(dir_ / "c13.json", Json::array({records[0], records[2]}).dump());
  const CliRun tally = Cli({"tally", "--config", config, "--secrets", Path("secrets.json"), "--records",
                        Path("c13.json"), "--json"});
  ASSERT_EQ(tally.code, 0) << tally.err;
  const Json report = Json::parse(tally.out);
  EXPECT_EQ(report["counts"][0]["votes"], 1);  // Charles
  EXPECT_EQ(report["counts"][1]["votes"], 1);  // Bob
  EXPECT_EQ(report["counts"][2]["votes"], 2);  // Alice
  ExpectErrorLine(Cli({"tally", "--config", config, "--secrets", Path("secrets.json"), "--records",
                       Path("records.json")}),
                  ErrorCode::kInconsistency);
  for (auto& s : services) s->Stop();
}

}  // namespace
}  // namespace homotally
