#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "scrminer/datagen.hpp"
#include "scrminer/pattern_io.hpp"

namespace scrminer {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("scrminer_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write(testing::example1(), "ex1");
    write(testing::example2(), "ex2");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const Dataset& d, const std::string& name) {
    std::ofstream csv(dir_ / (name + ".csv"));
    write_csv(csv, d);
    std::ofstream schema(dir_ / (name + ".schema"));
    write_schema(schema, d.schema());
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, MineExampleTwo) {
  const auto r = run({"mine", "--data", path("ex2.csv"), "--schema", path("ex2.schema"), "--algo", "scr",
                      "--min-supp-count", "2", "--min-conf", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("{A2 / B1C1 -> Cl1 (conf=1.0000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(": B2C2 -> Cl2 (conf=0.8000"), std::string::npos) << r.out;
}

TEST_F(CliTest, MineHigherConfidenceDropsPattern) {
  const auto r = run({"mine", "--data", path("ex2.csv"), "--schema", path("ex2.schema"), "--min-supp-count", "2",
                      "--min-conf", "0.85"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("B2C2 -> Cl2 (conf=0.8000"), std::string::npos) << r.out;
}

TEST_F(CliTest, MineMissingSchemaNamesPath) {
  const auto r = run({"mine", "--data", path("ex2.csv"), "--schema", path("nope.schema"), "--min-supp", "0.1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(path("nope.schema")), std::string::npos) << r.err;
}

TEST_F(CliTest, MineSupportFlagsAreExclusive) {
  EXPECT_EQ(run({"mine", "--data", path("ex2.csv"), "--schema", path("ex2.schema"), "--min-supp", "0.1",
                 "--min-supp-count", "2"})
                .code,
            2);
  EXPECT_EQ(run({"mine", "--data", path("ex2.csv"), "--schema", path("ex2.schema")}).code, 2);
  EXPECT_EQ(run({"mine", "--data", path("ex2.csv"), "--schema", path("ex2.schema"), "--min-supp", "1.5"}).code, 2);
  EXPECT_EQ(run({"mine", "--data", path("ex2.csv"), "--schema", path("ex2.schema"), "--min-supp", "0.1",
                 "--min-conf", "0"})
                .code,
            2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, MineTsvAndStats) {
  const auto r = run({"mine", "--data", path("ex1.csv"), "--schema", path("ex1.schema"), "--min-supp-count", "2",
                      "--out", path("p.txt"), "--tsv", path("p.tsv"), "--stats", path("s.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream tsv(path("p.tsv"));
  const auto patterns = read_patterns_tsv(tsv, testing::example1().schema());
  EXPECT_EQ(patterns, mine_scr_patterns(testing::example1(), {MinSupport::count(2), Ratio(1, 2)}));
  const auto stats = slurp(path("s.txt"));
  EXPECT_NE(stats.find("min_supp_count\t2\n"), std::string::npos) << stats;
  EXPECT_NE(stats.find("patterns\t" + std::to_string(patterns.size()) + "\n"), std::string::npos) << stats;
  EXPECT_NE(stats.find("#level\tcandidates\tkept\tbranch1"), std::string::npos) << stats;
}

TEST_F(CliTest, MineCarAndApriori) {
  const auto car = run({"mine", "--data", path("ex1.csv"), "--schema", path("ex1.schema"), "--algo", "car",
                        "--min-supp-count", "2", "--tsv", path("car.tsv")});
  const auto apriori = run({"mine", "--data", path("ex1.csv"), "--schema", path("ex1.schema"), "--algo",
                            "apriori", "--min-supp-count", "2", "--tsv", path("apriori.tsv")});
  ASSERT_EQ(car.code, 0) << car.err;
  ASSERT_EQ(apriori.code, 0) << apriori.err;
  EXPECT_NE(car.out.find("A1C1 -> Cl2 (conf=0.5556"), std::string::npos) << car.out;
  EXPECT_EQ(slurp(path("car.tsv")), slurp(path("apriori.tsv")));
}

TEST_F(CliTest, MineIsIdenticalAcrossThreadCounts) {
  GenSpec spec = GenSpec::uniform(6, 3, 2, 300, 5);
  write(generate(spec), "big");
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "2", "4"}) {
    const auto out = path(std::string("t") + threads + ".txt");
    ASSERT_EQ(run({"mine", "--data", path("big.csv"), "--schema", path("big.schema"), "--min-supp", "0.03",
                   "--threads", threads, "--out", out})
                  .code,
              0);
    outputs.push_back(slurp(out));
  }
  EXPECT_FALSE(outputs[0].empty());
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(outputs[0], outputs[2]);
}

TEST_F(CliTest, CompareAgrees) {
  const auto r = run({"compare", "--data", path("ex1.csv"), "--schema", path("ex1.schema"), "--min-supp-count",
                      "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("result\tequal"), std::string::npos) << r.out;
}

TEST_F(CliTest, CompareDetectsCorruption) {
  const auto r = run({"compare", "--data", path("ex1.csv"), "--schema", path("ex1.schema"), "--min-supp-count",
                      "2", "--corrupt-scr", "--diff", path("diff.txt")});
  EXPECT_EQ(r.code, 1);
  const auto diff = slurp(path("diff.txt"));
  EXPECT_NE(diff.find("missing_from_scr\t{"), std::string::npos) << diff;
}

TEST_F(CliTest, CompareCorruptionOfEmptyResult) {
  const auto r = run({"compare", "--data", path("ex1.csv"), "--schema", path("ex1.schema"), "--min-supp-count",
                      "15", "--corrupt-scr"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("missing_from_oracle"), std::string::npos) << r.out;
}

TEST_F(CliTest, CompareOverCap) {
  ASSERT_EQ(run({"gen", "--attrs", "20", "--values", "2", "--records", "40", "--out", path("wide")}).code, 0);
  const auto r = run({"compare", "--data", path("wide.csv"), "--schema", path("wide.schema"), "--min-supp",
                      "0.1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("cap"), std::string::npos) << r.err;
}

TEST_F(CliTest, GenRoundTrip) {
  const auto g = run({"gen", "--attrs", "4", "--values", "2", "--records", "60", "--seed", "7", "--out",
                      path("g")});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto data = load_dataset_file(path("g.csv"), load_schema_file(path("g.schema")));
  EXPECT_EQ(data.size(), 60u);
  const auto m = run({"mine", "--data", path("g.csv"), "--schema", path("g.schema"), "--min-supp", "0.1"});
  EXPECT_EQ(m.code, 0) << m.err;
  ASSERT_EQ(run({"gen", "--attrs", "4", "--values", "2", "--records", "60", "--seed", "7", "--out",
                 path("h")})
                .code,
            0);
  EXPECT_EQ(slurp(path("g.csv")), slurp(path("h.csv")));
}

TEST_F(CliTest, GenPlantedPassesCompare) {
  const auto g = run({"gen", "--attrs", "5", "--values", "3", "--invariant", "2", "--records", "300", "--seed", "3",
                      "--plant-rule0", "A1,C1", "--plant-rule1", "A1,C2", "--plant-conf", "0.8", "--plant-supp",
                      "0.15", "--out", path("p")});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto c = run({"compare", "--data", path("p.csv"), "--schema", path("p.schema"), "--min-supp", "0.1"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.find("scr_patterns\t0\n"), std::string::npos) << c.out;
}

TEST_F(CliTest, GenRejectsBadNoise) {
  EXPECT_EQ(run({"gen", "--noise", "1.5", "--out", path("x")}).code, 2);
  EXPECT_EQ(run({"gen", "--plant-rule0", "A1,B1", "--out", path("x")}).code, 2);
  EXPECT_EQ(run({"gen", "--plant-rule0", "a1", "--plant-rule1", "A1,B2", "--out", path("x")}).code, 2);
}

TEST_F(CliTest, BenchRows) {
  const auto r = run({"bench", "--seeds", "5", "--attrs", "5", "--values", "3", "--records", "200", "--tsv",
                      path("b.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream tsv(slurp(path("b.tsv")));
  std::string line;
  std::getline(tsv, line);
  EXPECT_EQ(line.rfind("seed\tmin_supp", 0), 0u);
  int rows = 0;
  while (std::getline(tsv, line)) {
    ++rows;
    EXPECT_NE(line.find("\tyes\t"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 5);
  EXPECT_NE(r.out.find("SCR-ruleitems: "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("frequent ruleitems identified with CAR-Apriori"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("SCR rules: "), std::string::npos) << r.out;
}

TEST_F(CliTest, BenchPlantedPrunes) {
  const auto r = run({"bench", "--seeds", "1", "--planted", "--min-supp", "0.1", "--tsv", path("b.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream tsv(slurp(path("b.tsv")));
  std::string header, row;
  std::getline(tsv, header);
  std::getline(tsv, row);
  std::vector<std::string> h, v;
  std::string cell;
  for (std::istringstream s(header); std::getline(s, cell, '\t');) h.push_back(cell);
  for (std::istringstream s(row); std::getline(s, cell, '\t');) v.push_back(cell);
  ASSERT_EQ(h.size(), v.size());
  const auto col = [&](const std::string& name) {
    return v[static_cast<std::size_t>(std::find(h.begin(), h.end(), name) - h.begin())];
  };
  EXPECT_LT(std::stoul(col("scr_ruleitems")), std::stoul(col("car_ruleitems")));
}

TEST_F(CliTest, BenchEmptySweep) {
  const auto r = run({"bench", "--seeds", "0", "--tsv", path("b.tsv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto tsv = slurp(path("b.tsv"));
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 1);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

}  // namespace
}  // namespace scrminer
