#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "ptk/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ptk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

double value_of(const std::string& out) { return json::parse(out).at("value_nats").get<double>(); }

} // namespace

TEST(Cli, PosetSingleNode) {
  auto r = run({"poset", "--level", "I", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["elements"], json::array({"1"}));
  EXPECT_TRUE(j["edges"].empty());
}

TEST(Cli, BarredDotArrowsMatchRepresentativeCovers) {
  auto r = run({"poset", "--level", "I", "--barred", "--n", "6", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  std::map<std::string, std::string> label;
  std::regex node(R"re(  (n\d+) \[label="([^"]+)"\];)re"), edge(R"re(  (n\d+) -> (n\d+);)re");
  for (std::sregex_iterator it(r.out.begin(), r.out.end(), node), end; it != end; ++it) label[(*it)[1]] = (*it)[2];
  std::set<std::pair<std::vector<int>, std::vector<int>>> arrows;
  auto parts = [](const std::string& s) { return ptk::intpart::parse(s).parts(); };
  for (std::sregex_iterator it(r.out.begin(), r.out.end(), edge), end; it != end; ++it)
    arrows.insert({parts(label[(*it)[1]]), parts(label[(*it)[2]])});
  EXPECT_EQ(label.size(), 11u);
  EXPECT_EQ(arrows, oracle::TypeOrder(6).covers());
}

TEST(Cli, BarredIdealLatticeNodeCount) {
  auto r = run({"poset", "--level", "II", "--barred", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto p = ptk::intpart::refinement_poset(4);
  std::vector<std::vector<bool>> m(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
  EXPECT_EQ(json::parse(r.out)["elements"].size(), oracle::down_sets(m).size());
}

TEST(Cli, PosetFormatsAndCaps) {
  auto csv = run({"poset", "--level", "II", "--n", "3", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, 12), "lower,upper\n");
  EXPECT_NE(csv.out.find("\"v{12|3, 13|2}\""), std::string::npos);
  EXPECT_EQ(run({"poset", "--level", "III", "--n", "3"}).code, 0);
  auto cap = run({"poset", "--level", "II", "--n", "5"});
  EXPECT_EQ(cap.code, 3);
  EXPECT_NE(cap.err.find("size cap"), std::string::npos);
  EXPECT_EQ(run({"poset", "--level", "I", "--n", "13"}).code, 3);
  EXPECT_EQ(run({"poset", "--level", "IV", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"poset", "--n", "3", "--format", "svg"}).code, 2);
}

TEST(Cli, CellCapOverride) {
  ::setenv("PARTITION_TOOLKIT_MAX_CELLS", "10", 1);
  EXPECT_EQ(run({"poset", "--level", "I", "--n", "4"}).code, 3);
  ::unsetenv("PARTITION_TOOLKIT_MAX_CELLS");
  EXPECT_EQ(run({"poset", "--level", "I", "--n", "4"}).code, 0);
}

TEST(Cli, KpropsTable) {
  auto r = run({"kprops", "table", "--n", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, ptk::kprops::kprops_csv(4));
  auto j = run({"kprops", "--n", "10", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_TRUE(json::parse(j.out)["bounds_ok"].get<bool>());
  EXPECT_EQ(run({"kprops", "--n", "31"}).code, 3);
}

TEST(Cli, MeasureValues) {
  const double ln2 = std::log(2.0);
  EXPECT_NEAR(value_of(run({"measure", "--state", "ghz:3:2", "--partition", "1|2|3", "--format", "json"}).out), 3 * ln2, 1e-9);
  EXPECT_NEAR(value_of(run({"measure", "--state", "ghz:3:2", "--kprod", "3", "--format", "json"}).out), 0.0, 1e-12);
  EXPECT_NEAR(value_of(run({"measure", "--state", "bell", "--partition", "1|2", "--format", "json"}).out), 2 * ln2, 1e-9);
  EXPECT_NEAR(value_of(run({"measure", "--state", "bell", "--partition", "1|2", "--pure", "--format", "json"}).out), 2 * ln2, 1e-9);
  EXPECT_NEAR(value_of(run({"measure", "--state", "ghz:3", "--kstr", "0", "--format", "json"}).out), 2 * ln2, 1e-9);
  EXPECT_NEAR(value_of(run({"measure", "--state", "ghz:3", "--types", "2+1", "--format", "json"}).out), 2 * ln2, 1e-9);
  auto bits = json::parse(run({"measure", "--state", "ghz:3", "--ideal", "12|3;13|2", "--bits", "--format", "json"}).out);
  EXPECT_NEAR(bits["value_bits"].get<double>(), 2.0, 1e-9);
  auto text = run({"measure", "--state", "ghz:3", "--partition", "12|3"});
  EXPECT_NE(text.out.find("minimizing partition: 12|3"), std::string::npos);
}

TEST(Cli, MeasureErrors) {
  EXPECT_EQ(run({"measure", "--state", "ghz:q", "--partition", "1|2"}).code, 2);
  EXPECT_EQ(run({"measure", "--state", "bell", "--partition", "1|2|3"}).code, 2);
  EXPECT_EQ(run({"measure", "--state", "bell"}).code, 2);
  EXPECT_EQ(run({"measure", "--state", "bell", "--partition", "1|2", "--kpart", "1"}).code, 2);
  EXPECT_EQ(run({"measure", "--state", "bell", "--kpart", "3"}).code, 2);
  auto pur = run({"measure", "--state", "mixed:2", "--partition", "1|2", "--pure"});
  EXPECT_EQ(pur.code, 2);
  EXPECT_NE(pur.err.find("purity"), std::string::npos);
  EXPECT_EQ(run({"measure", "--state", "bell", "--partition", "1|2", "--tol", "0"}).code, 2);

  const std::string path = ::testing::TempDir() + "bad_state.json";
  std::ofstream(path) << "{\"dims\":[2],\"matrix\":[[[0.5,0],[0,0]],[[0,0],[0.6,0]]]}";
  auto bad = run({"measure", "--state", path, "--partition", "1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("trace"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, MeasureFromJsonFile) {
  const std::string path = ::testing::TempDir() + "bell_state.json";
  std::ofstream(path) << ptk::quantum::state_to_json(ptk::quantum::bell()).dump();
  auto r = run({"measure", "--state", path, "--partition", "1|2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(value_of(r.out), 2 * std::log(2.0), 1e-9);
  std::remove(path.c_str());
}

TEST(Cli, Classify) {
  auto p = json::parse(run({"classify", "--state", "zero:3", "--format", "json"}).out);
  EXPECT_EQ(p["finest_product_partition"], "1|2|3");
  EXPECT_EQ(p["type"], "{1,1,1}");
  auto bb = json::parse(run({"classify", "--state", "bell*bell", "--format", "json"}).out);
  EXPECT_EQ(bb["type"], "{2,2}");
  EXPECT_EQ(bb["uncorrelated"]["part"], json::array({1, 2}));
  EXPECT_EQ(bb["uncorrelated"]["prod"], json::array({2, 3, 4}));
  EXPECT_EQ(bb["uncorrelated"]["str"], json::array({0, 1, 2, 3}));
  auto g = json::parse(run({"classify", "--state", "ghz:4:2", "--format", "json"}).out);
  EXPECT_EQ(g["type"], "{4}");
  EXPECT_EQ(g["uncorrelated"]["part"], json::array({1}));
  EXPECT_EQ(g["uncorrelated"]["prod"], json::array({4}));
  EXPECT_EQ(g["uncorrelated"]["str"], json::array({3}));
  EXPECT_EQ(run({"classify", "--state", "nothing"}).code, 2);
}

TEST(Cli, Verify) {
  auto ok = run({"verify", "--n-max", "4"});
  ASSERT_EQ(ok.code, 0);
  auto j = json::parse(ok.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GT(j["checks"].size(), 20u);
  EXPECT_EQ(run({"verify", "--n-max", "1"}).code, 0);
  auto bad = run({"verify", "--n-max", "3", "--inject-fault"});
  EXPECT_EQ(bad.code, 1);
  bool witness = false;
  const auto report = json::parse(bad.out);
  for (const auto& c : report["checks"])
    if (!c["passed"].get<bool>()) witness = witness || c["counterexample"].get<std::string>().find("disagreement at") != std::string::npos;
  EXPECT_TRUE(witness);
  EXPECT_EQ(run({"verify", "--n-max", "13"}).code, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
