#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "qalg/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json body(const Result& r) { return json::parse(r.out).at("body"); }

}  // namespace

TEST(Cli, EnumerateParity) {
  auto r = run({"enumerate", "--modes", "2", "--filter", "sap"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(body(r)["count"], 8);
  EXPECT_EQ(body(r)["generators"].size(), 8u);
}

TEST(Cli, ClosureFromScript) {
  auto r = run({"closure", "--modes", "3", "--set", "xy_nn.ops"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto b = body(r);
  EXPECT_EQ(b["dimension"], 9);
  EXPECT_EQ(b["label"], "xy-nn");
  EXPECT_EQ(b["conserves_number"], true);
  EXPECT_EQ(b["universal_full_space"], false);
  for (const char* key : {"n_modes", "dimension_traceless", "closed", "rounds", "conserves_parity", "matches",
                          "provenance_depth"})
    EXPECT_TRUE(b.contains(key)) << key;
}

TEST(Cli, ClosureModesMismatchIsUsageError) {
  EXPECT_EQ(run({"closure", "--modes", "4", "--set", "xy_nn.ops"}).code, 2);
}

TEST(Cli, ClassifyPreset) {
  auto r = run({"classify", "--preset", "so2n", "--modes", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(body(r)["algebra"], "so(2N)");
  EXPECT_EQ(body(r)["generator_verdicts"].size(), body(r)["generators"].get<size_t>());
}

TEST(Cli, SubspaceClosure) {
  auto r = run({"closure", "--preset", "xy-nn", "--modes", "3", "--excitations", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(body(r)["code"]["dim"], 3);
}

TEST(Cli, VerifyKerr) {
  auto r = run({"verify", "kerr"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(body(r)["passed"], true);
}

TEST(Cli, VerifyAll) {
  auto r = run({"verify", "--all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(body(r)["checks"].size(), 13u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--modes", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "nope"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--modes", "2", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"jw"}).code, 2);
  auto r = run({"frobnicate"});
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(Cli, ReportEnvelope) {
  auto r = run({"enumerate", "--modes", "1"});
  auto j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["tool"], "qalg");
  EXPECT_TRUE(j["version"].is_string());
  EXPECT_EQ(j["input_hash"].get<std::string>().size(), 64u);
  EXPECT_TRUE(j["envelope"].contains("timestamp"));
}

TEST(Cli, ByteStableBody) {
  std::vector<std::string> args = {"closure", "--preset", "xyz", "--modes", "3"};
  auto a = json::parse(run(args).out), b = json::parse(run(args).out);
  EXPECT_EQ(a["body"].dump(), b["body"].dump());
  EXPECT_EQ(a["input_hash"], b["input_hash"]);
  args.push_back("--no-timestamp");
  EXPECT_EQ(run(args).out, run(args).out);
  auto other = json::parse(run({"closure", "--preset", "xyz", "--modes", "2"}).out);
  EXPECT_NE(other["input_hash"], a["input_hash"]);
}

TEST(Cli, JwExpression) {
  auto r = run({"jw", "--modes", "2", "--expr", "fd(1) f(0)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(body(r)["map"]["species"], "fermion");
  auto car = run({"jw", "--car", "4", "--boson-approx", "3", "--compound", "2", "--pairs", "2"});
  EXPECT_EQ(car.code, 0) << car.out;
}

TEST(Cli, CodeVerbs) {
  auto r = run({"code", "--modes", "3", "--excitations", "1", "--list", "--rate", "--encoded-generators",
                "--cphase-check", "--synthesize"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto b = body(r);
  EXPECT_EQ(b["mode0"], "leftmost");
  EXPECT_EQ(b["codewords"], json({"001", "010", "100"}));
  EXPECT_EQ(b["synthesis"]["dimension_traceless"], 8);
  EXPECT_EQ(b["cphase"]["left_factor"], json({-1, 1, 1}));
  EXPECT_EQ(b["encoded_generators"][0]["action"][1][2], "1");
  EXPECT_EQ(run({"code", "--modes", "3", "--excitations", "1"}).code, 2);
}

TEST(Cli, ThermalCsvAndSweep) {
  auto r = run({"thermal", "--B", "0.5,1.0", "--mu", "1", "--kT", "0.2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "site,B,mu,kT,n,ambiguous");
  EXPECT_NE(r.out.find("0,0.5,1,0.20000000000000001,0.5,0"), std::string::npos) << r.out;
  auto s = run({"thermal", "--B", "0.5", "--mu", "1", "--sweep", "kT:0.1:1:4"});
  EXPECT_EQ(body(s)["rows"].size(), 4u);
  EXPECT_EQ(run({"thermal", "--B", "0.5", "--mu", "1", "--kT", "0"}).code, 2);
  auto z = run({"thermal", "--B", "0.4,0.6", "--mu", "1", "--zero-limit"});
  EXPECT_EQ(body(z)["rows"][0]["n"], 1.0);
}

TEST(Cli, TextFormatAndOutFile) {
  auto r = run({"code", "--modes", "2", "--excitations", "1", "--list", "--format", "text"});
  EXPECT_NE(r.out.find("codewords:"), std::string::npos);
  std::string path = testing::TempDir() + "qalg_out.json";
  auto f = run({"enumerate", "--modes", "1", "--out", path});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(f.out.empty());
}
