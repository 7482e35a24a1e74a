// End-to-end runs of the command-line tool.

#include <brlb/io/json_io.hpp>
#include <brlb/io/report.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace brlb;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + BRLB_CLI + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(BRLB_DATA_DIR) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("brlb_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_F(Cli, ZooEntryCounts) {
  EXPECT_EQ(Json::parse(run("zoo wstate").out)["entries"].size(), 3u);
  EXPECT_EQ(Json::parse(run("zoo big_cw --q 2").out)["entries"].size(), 9u);
  EXPECT_EQ(Json::parse(run("zoo matmul --l 2 --m 2 --n 3").out)["entries"].size(), 12u);
  EXPECT_EQ(Json::parse(run("zoo small_cw --q 2 --power 2").out)["dims"][0], 9);
  EXPECT_NE(run("zoo nonsense").code, 0);
}

TEST_F(Cli, AnalyzeMatmulKoszul) {
  const auto r = run("analyze zoo:matmul:2 --methods koszul --json");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["aggregate_lower_bound"], 6);
  EXPECT_EQ(j["battery"]["obstructions"].size(), 1u);
  EXPECT_EQ(j["battery"]["obstructions"][0]["name"], "KOSZUL");
}

TEST_F(Cli, AnalyzeUnitAllPass) {
  const auto r = run("analyze zoo:unit:4 --json --target-r 4");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["aggregate_lower_bound"], 4);
  EXPECT_EQ(j["target_r"]["excluded"], false);
  for (const auto& ob : j["battery"]["obstructions"]) EXPECT_EQ(ob["verdict"], "PASS") << ob["name"];
}

TEST_F(Cli, MalformedInputExitsTwo) {
  std::ofstream(path("bad.json")) << R"({"dims":[2,2,2],"entries":[{"i":5,"j":0,"k":0,"value":1}]})";
  EXPECT_EQ(run("analyze " + path("bad.json")).code, 2);
  std::ofstream(path("junk.json")) << "not json";
  EXPECT_EQ(run("analyze " + path("junk.json")).code, 2);
  EXPECT_EQ(run("analyze zoo:unit:0").code, 2);
  EXPECT_EQ(run("analyze zoo:unit:3 --field prime:15").code, 2);
  EXPECT_EQ(run("analyze zoo:unit:3 --methods bogus").code, 2);
}

TEST_F(Cli, ReportsAreReproducible) {
  ASSERT_EQ(run("analyze zoo:small_cw:2 --seed 9 --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("analyze zoo:small_cw:2 --out " + path("b.json"), "BRLB_SEED=9").code, 0);
  ASSERT_EQ(run("analyze zoo:small_cw:2 --seed 10 --out " + path("c.json")).code, 0);
  const auto a = Json::parse(slurp(path("a.json"))), b = Json::parse(slurp(path("b.json"))), c = Json::parse(slurp(path("c.json")));
  EXPECT_EQ(strip_wall_time(a).dump(), strip_wall_time(b).dump());
  EXPECT_EQ(a["reproducibility_hash"], b["reproducibility_hash"]);
  EXPECT_NE(a["reproducibility_hash"], c["reproducibility_hash"]);
}

TEST_F(Cli, FileRoundTripKeepsContentHash) {
  ASSERT_EQ(run("zoo big_cw --q 2 --out " + path("t.json")).code, 0);
  const auto from_file = Json::parse(run("analyze " + path("t.json") + " --methods strassen --json").out);
  EXPECT_EQ(from_file["tensor"]["id"], "zoo:big_cw:2");
  const auto tf = read_tensor_file(path("t.json"));
  EXPECT_EQ(from_file["tensor"]["content_hash"], content_hash(tf));
}

TEST_F(Cli, VerifyCertificates) {
  EXPECT_EQ(run("verify zoo:wstate " + data("wstate_r2.cert.json")).code, 0);
  EXPECT_EQ(run("verify zoo:matmul:2 " + data("strassen_m2_r7.cert.json")).code, 0);
  auto cert = Json::parse(slurp(data("strassen_m2_r7.cert.json")));
  cert["terms"][3]["a"][0][0] = "2";
  std::ofstream(path("tampered.json")) << cert.dump();
  EXPECT_EQ(run("verify zoo:matmul:2 " + path("tampered.json")).code, 1);
  EXPECT_EQ(run("verify zoo:unit:3 " + data("wstate_r2.cert.json")).code, 2);
}

TEST_F(Cli, LedgerSquareOfSmallCw) {
  const auto ledger = path("ledger.json");
  ASSERT_EQ(run("verify zoo:small_cw:2 " + data("small_cw2_r4.cert.json") + " --ledger " + ledger).code, 0);
  const auto r = run("analyze zoo:small_cw:2^2 --methods koszul --json --ledger " + ledger);
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["upper_bound_facts"].size(), 1u);
  EXPECT_EQ(j["upper_bound_facts"][0]["value"], 16);
  EXPECT_GE(j["aggregate_lower_bound"].get<int>(), 9);
  const auto l = read_ledger(ledger);
  EXPECT_EQ(l.best("zoo:small_cw:2^2", FactKind::UPPER), 16u);
}

TEST_F(Cli, ConsistencyViolationExitsThree) {
  const auto ledger = path("ledger.json");
  ASSERT_EQ(run("ledger " + ledger + " --upper zoo:matmul:2=5").code, 0);
  EXPECT_EQ(run("analyze zoo:matmul:2 --methods koszul --ledger " + ledger).code, 3);
}

TEST_F(Cli, OmegaSubcommand) {
  EXPECT_NE(run("omega cw --q 8 --r 10").out.find("2.4036"), std::string::npos);
  EXPECT_NE(run("omega bini --n 2 --r 7").out.find("2.8074"), std::string::npos);
  EXPECT_EQ(run("omega cw --q 2 --r 2").code, 2);
}
