#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "support.hpp"
#include "vlg/cli.hpp"

namespace vlg {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_data = "") {
  args.insert(args.begin(), "vlg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_data);
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

std::set<std::string> lines(const std::string& s) {
  std::set<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.insert(line);
  return out;
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("vlg_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Cli, MatchFromStdin) {
  const Result r = run_cli({"match", "-p", test::kExamplePattern}, test::kExampleText + "\n");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "17\n28\n31\n");
}

TEST(Cli, MatchFromFile) {
  TempFile f(test::kExampleText);
  const Result r = run_cli({"match", "-p", test::kExamplePattern, "-t", f.path()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "17\n28\n31\n");
}

TEST(Cli, NoMatchesIsSuccess) {
  const Result r = run_cli({"match", "-p", "QQ"}, test::kExampleText);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Stats) {
  const Result r = run_cli({"stats", "-p", test::kExamplePattern}, test::kExampleText);
  EXPECT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  EXPECT_TRUE(l.count("alpha=14")) << r.out;
  EXPECT_TRUE(l.count("alpha_per_subpattern=5,5,4")) << r.out;
  EXPECT_TRUE(l.count("matches=3")) << r.out;
  EXPECT_TRUE(l.count("m=5")) << r.out;
  EXPECT_TRUE(l.count("B=13")) << r.out;
}

TEST(Cli, CombosBothEngines) {
  const Result fly = run_cli({"combos", "-p", test::kCombinationPattern}, test::kExampleText);
  ASSERT_EQ(fly.code, 0) << fly.err;
  const auto got = lines(fly.out);
  for (const char* c : {"5,9,12,17", "5,8,12,17", "5,8,10,17", "5,6,12,17", "5,6,10,17"}) EXPECT_TRUE(got.count(c)) << c;

  const Result chunk = run_cli({"combos", "-p", test::kCombinationPattern, "--engine", "chunked", "--chunk-len", "20"},
                               test::kExampleText);
  ASSERT_EQ(chunk.code, 0) << chunk.err;
  EXPECT_EQ(lines(chunk.out), got);

  const Result oracle = run_cli({"oracle", "--combos", "-p", test::kCombinationPattern}, test::kExampleText);
  ASSERT_EQ(oracle.code, 0) << oracle.err;
  EXPECT_EQ(lines(oracle.out), got);
}

TEST(Cli, MatchEqualsDistinctCombinationEnds) {
  const Result combos = run_cli({"combos", "-p", test::kExamplePattern}, test::kExampleText);
  std::set<std::string> ends;
  for (const auto& line : lines(combos.out)) ends.insert(line.substr(line.rfind(',') + 1));
  EXPECT_EQ(ends, lines(run_cli({"match", "-p", test::kExamplePattern}, test::kExampleText).out));
}

TEST(Cli, OracleEndpoints) {
  const Result r = run_cli({"oracle", "-p", test::kExamplePattern}, test::kExampleText);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "17\n28\n31\n");
}

TEST(Cli, Graph) {
  const Result r = run_cli({"graph", "-p", "A.{0,0}B"}, "AB");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "N 1 1\nN 2 2\nE 2 2 1 1\n");
}

TEST(Cli, FastaRecordsAreIndependent) {
  // The second record would match across the boundary if concatenated.
  const std::string fasta = ">r1 first\nATCGGCTCCAGACC\nAGTACCCGTTCCGTGGT\n>r2\nAC\n>empty\n>r3\nGT\n";
  const Result r = run_cli({"match", "-p", test::kExamplePattern, "--fasta"}, fasta);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "r1:17\nr1:28\nr1:31\n");
  EXPECT_NE(r.err.find("empty"), std::string::npos);

  const Result split = run_cli({"match", "-p", "A.{0,3}G", "--fasta"}, ">x\nA\n>y\nG\n");
  EXPECT_TRUE(split.out.empty());
}

TEST(Cli, JsonFormat) {
  const Result r = run_cli({"match", "-p", test::kExamplePattern, "--format", "json"}, test::kExampleText);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"end\":17}\n{\"end\":28}\n{\"end\":31}\n");
  const Result s = run_cli({"stats", "-p", test::kExamplePattern, "--format", "json"}, test::kExampleText);
  const auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j["alpha"], 14);
  EXPECT_EQ(j["alpha_per_subpattern"], nlohmann::json({5, 5, 4}));
}

TEST(Cli, UsageErrors) {
  const Result bad = run_cli({"match", "-p", "A.{5,2}C"}, "AC");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("invalid pattern"), std::string::npos);
  EXPECT_EQ(run_cli({"match", "-p", "A.{1,2}"}, "AC").code, 2);
  EXPECT_EQ(run_cli({"combos", "-p", "A.{1,*}C"}, "AC").code, 2);
  EXPECT_EQ(run_cli({"graph", "-p", "A.{1,*}C"}, "AC").code, 2);
  EXPECT_EQ(run_cli({"combos", "-p", "A.{1,2}C", "--engine", "chunked", "--chunk-len", "2"}, "AC").code, 2);
  EXPECT_EQ(run_cli({"match", "-p", "A", "-t", "/nonexistent/vlg/input"}).code, 2);
  EXPECT_EQ(run_cli({"match"}, "AC").code, 2);
  EXPECT_EQ(run_cli({}, "AC").code, 2);
  EXPECT_EQ(run_cli({"match", "--help"}).code, 0);
}

}  // namespace
}  // namespace vlg
