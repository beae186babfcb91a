#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kostant/cache.hpp"
#include "kostant/cli.hpp"
#include "kostant/tables.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "kostant");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = kostant::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("kostant_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Cli, TablesE6) {
  const Result r = run({"tables", "--only", "E6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "9 11 15 19 15 9\n");
}

TEST(Cli, ClassifyF4) {
  const Result r = run({"classify", "--type", "F4", "--crossed", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "24 elements, 8 Kostant, 5 standard");
  const Result j = run({"classify", "--type", "F", "--rank", "4", "--crossed", "1", "--format", "json", "--method", "both"});
  EXPECT_EQ(j.code, 0) << j.err;
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("kostant_count"), 8);
  EXPECT_EQ(doc.at("methods_agree"), true);
}

TEST(Cli, ResolutionE7) {
  const Result r = run({"resolution", "--pair", "E7", "--k", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0 -> R(-15) -> R(-13)^27"), std::string::npos);
  const Result j = run({"resolution", "--pair", "E7", "--k", "1", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).at("betti").at(5), 702);
  EXPECT_EQ(run({"resolution", "--pair", "D5", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"resolution", "--pair", "D5", "--crossed", "1", "--k", "1"}).code, 0);
  EXPECT_EQ(run({"resolution", "--pair", "F4", "--k", "1"}).code, 2);
}

TEST(Cli, SingularReportsBothOrderings) {
  const Result r = run({"singular", "--type", "F4", "--crossed", "1", "--J", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("bruhat (graded-interval definition): 3 Kostant"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("mu (mu-ordering definition): 5 Kostant"), std::string::npos) << r.out;
  const Result e = run({"singular", "--type", "E7", "--crossed", "7", "--J", "4", "--emit", "dot,json", "--ordering", "mu"});
  EXPECT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.out.rfind("digraph", 0), 0u);
  const auto json_start = e.out.find("\n{");
  ASSERT_NE(json_start, std::string::npos);
  const auto doc = nlohmann::json::parse(e.out.substr(json_start + 1));
  EXPECT_EQ(doc.at("dprime").at("signature"), "D6[1]");
  const Result adj = run({"singular", "--type", "E7", "--crossed", "7", "--J", "3,4"});
  EXPECT_EQ(adj.code, 0);
  EXPECT_NE(adj.out.find("empty block"), std::string::npos);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"poset", "--type", "A3", "--crossed", "2", "--format", "dot"}).out.rfind("digraph", 0), 0u);
  const Result k = run({"klpoly", "--type", "A3", "--crossed", "2", "--w", "5", "--x", "0"});
  EXPECT_EQ(k.out, "P(0, 5) = 1\n");
  const Result b = run({"bgg", "--type", "F4", "--crossed", "1"});
  EXPECT_NE(b.out.find("verified"), std::string::npos);
  EXPECT_EQ(run({"klpoly", "--type", "A3", "--crossed", "2"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"classify", "--type", "F4", "--bogus"}).code, 2);
  EXPECT_EQ(run({"classify", "--type", "Q4"}).code, 2);
  EXPECT_EQ(run({"classify", "--type", "F4", "--crossed", "9"}).code, 2);
  EXPECT_EQ(run({"classify", "--type", "F4", "--crossed", "1", "--method", "magic"}).code, 2);
  EXPECT_EQ(run({"classify", "--type", "F4", "--crossed", "1", "--format", "dot"}).code, 2);
  EXPECT_EQ(run({"classify", "--type", "E8", "--crossed", "4"}).code, 3);
  EXPECT_EQ(run({"classify", "--type", "E7", "--crossed", "4", "--max-elements", "100"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GoldenMismatchNamesTheValue) {
  const fs::path dir = temp_dir("golden");
  for (const auto& e : fs::directory_iterator(kostant::default_golden_dir())) fs::copy(e.path(), dir / e.path().filename());
  nlohmann::json t1 = nlohmann::json::parse(std::ifstream(dir / "table1.json"));
  t1["counts"]["E6"][2] = 16;
  std::ofstream(dir / "table1.json") << t1.dump();
  const Result r = run({"tables", "--only", "E6", "--golden-dir", dir.string()});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("E6 r=3: expected 16, got 15"), std::string::npos) << r.err;
  EXPECT_EQ(run({"tables", "--only", "E9"}).code, 2);
  fs::remove_all(dir);
}

TEST(Cache, HitsAreByteIdentical) {
  const fs::path dir = temp_dir("cache");
  const std::vector<std::string> cmd = {"classify", "--type", "E6", "--crossed", "4", "--format", "json", "--cache-dir", dir.string()};
  const Result cold = run(cmd);
  ASSERT_EQ(cold.code, 0) << cold.err;
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
  const Result warm = run(cmd);
  EXPECT_EQ(warm.out, cold.out);
  auto verify = cmd;
  verify.push_back("--verify-cache");
  EXPECT_EQ(run(verify).code, 0);
  // --jobs does not enter the key and does not change the output
  auto jobs = cmd;
  jobs.insert(jobs.end(), {"--jobs", "3"});
  EXPECT_EQ(run(jobs).out, cold.out);
  const Result plain = run({"classify", "--type", "E6", "--crossed", "4", "--format", "json"});
  EXPECT_EQ(plain.out, cold.out);

  // a tampered payload is served as is, caught by --verify-cache
  const fs::path entry = fs::directory_iterator(dir)->path();
  nlohmann::json j = nlohmann::json::parse(std::ifstream(entry));
  j["payload"] = "tampered\n";
  std::ofstream(entry) << j.dump();
  EXPECT_EQ(run(cmd).out, "tampered\n");
  const Result bad = run(verify);
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("differs from recomputation"), std::string::npos);

  // entries of another schema are ignored and rewritten
  j["schema"] = kostant::kCacheSchemaVersion + 1;
  std::ofstream(entry) << j.dump();
  EXPECT_EQ(run(cmd).out, cold.out);
  EXPECT_EQ(nlohmann::json::parse(std::ifstream(entry)).at("schema"), kostant::kCacheSchemaVersion);
  fs::remove_all(dir);
}

TEST(Cache, EnvironmentAndKeys) {
  const fs::path dir = temp_dir("env");
  ::setenv("KOSTANT_CACHE_DIR", dir.string().c_str(), 1);
  EXPECT_EQ(run({"classify", "--type", "A3", "--crossed", "2"}).code, 0);
  ::unsetenv("KOSTANT_CACHE_DIR");
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 1);
  EXPECT_EQ(run({"classify", "--type", "A3", "--crossed", "2", "--verify-cache"}).code, 2);
  fs::remove_all(dir);

  EXPECT_EQ(kostant::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const std::string k = kostant::Cache::make_key("d", "op", "c");
  EXPECT_EQ(k.size(), 64u);
  EXPECT_NE(k, kostant::Cache::make_key("d", "op2", "c"));
  EXPECT_NE(k, kostant::Cache::make_key("d", "op", "c2"));
}

TEST(Tables, LinearExpressions) {
  const std::map<char, long> v = {{'n', 7}, {'r', 3}, {'t', 2}};
  EXPECT_EQ(kostant::eval_linear("n+1-2t", v), 4);
  EXPECT_EQ(kostant::eval_linear("r-t", v), 1);
  EXPECT_EQ(kostant::eval_linear("-3n", v), -21);
  EXPECT_EQ(kostant::eval_linear("12", v), 12);
  for (const char* bad : {"", "n+", "2x", "n t", "+-1"}) EXPECT_THROW(kostant::eval_linear(bad, v), kostant::ConfigError) << bad;
}

TEST(Tables, ShippedTable2MatchesTheAlgorithm) {
  const auto rows = kostant::parse_table2(nlohmann::json::parse(std::ifstream(kostant::default_golden_dir() / "table2.json")));
  EXPECT_EQ(rows.size(), 13u);
  const auto c = kostant::compare_table2(rows, 7);
  EXPECT_TRUE(c.ok());
  for (const auto& m : c.mismatches) ADD_FAILURE() << m;
  EXPECT_EQ(c.matched + c.out_of_domain.size(), c.blocks);
  // every uncovered block is a single module
  for (const auto& s : c.out_of_domain) EXPECT_NE(s.find("gives empty x1"), std::string::npos) << s;
}
