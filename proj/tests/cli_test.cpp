#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "krasner_cli.hpp"
#include "oracles.hpp"

namespace krasner {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "krasner");
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) { return std::string(KRASNER_DATA_DIR) + "/golden/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("krasner_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, ConstructAutoOrder) {
  const auto r = run({"construct", "--order", "6"});
  EXPECT_EQ(r.status, 0) << r.err;
  const auto doc = parse_document(r.out);
  EXPECT_EQ(doc.order, 6);
  EXPECT_TRUE(verify(to_candidate(doc)).passed());
  EXPECT_NE(r.err.find("verification=pass"), std::string::npos);
}

TEST_F(CliTest, ConstructOrderBounds) {
  EXPECT_EQ(run({"construct", "--order", "1"}).status, 2);
  EXPECT_EQ(run({"construct", "--order", "65"}).status, 3);
  EXPECT_EQ(run({"construct"}).status, 2);
  EXPECT_EQ(run({"construct", "--order", "6", "--method", "massouros"}).status, 2);
  EXPECT_EQ(run({"construct", "--method", "bogus", "--order", "4"}).status, 2);
}

TEST_F(CliTest, ConstructQuotient) {
  const auto out = path("q.json");
  const auto r = run({"construct", "--method", "quotient", "--field", "5,1", "--gens", "4", "--out", out});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "order=3 method=quotient verification=pass\n");
  EXPECT_EQ(parse_document(read_file(out)).order, 3);
  EXPECT_EQ(run({"construct", "--method", "quotient", "--field", "5,1", "--gens", "0"}).status, 2);
  EXPECT_EQ(run({"construct", "--method", "quotient", "--field", "4,1"}).status, 2);
  EXPECT_EQ(run({"construct", "--method", "quotient", "--field", "2,9"}).status, 3);
}

TEST_F(CliTest, ConstructMassourosMatchesGolden) {
  const auto r = run({"construct", "--method", "massouros", "--field", "2,1"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, read_file(golden("order2_krasner.json")));
}

TEST_F(CliTest, ConstructProductIsANegative) {
  const auto a = golden("order2_krasner.json");
  const auto r = run({"construct", "--method", "product", "--factor", a, "--factor", a});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("HF2 FAIL"), std::string::npos) << r.err;
  EXPECT_EQ(run({"construct", "--method", "product", "--factor", a}).status, 2);
}

TEST_F(CliTest, VerifyGolden) {
  const auto r = run({"verify", golden("order5_cyclic.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "verification: pass\n");
  const auto full = run({"verify", "--report", golden("order5_cyclic.json")});
  EXPECT_NE(full.out.find("HF2 pass"), std::string::npos) << full.out;
}

TEST_F(CliTest, VerifyMutatedNamesTheAxiom) {
  auto c = oracle::cyclic_order5();
  c.set_sum(1, 2, {1});
  c.set_sum(2, 1, {1});
  const auto file = write("bad.json", render_document(to_document(c)));
  const auto r = run({"verify", "--report", file});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("CH5 FAIL witness=(2,3,2)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("verification: FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyMalformedIsUsage) {
  const auto text = read_file(golden("order5_cyclic.json"));
  const auto r = run({"verify", write("cut.json", text.substr(0, text.size() / 2))});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("line"), std::string::npos);
  EXPECT_EQ(run({"verify", path("missing.json")}).status, 2);
  EXPECT_EQ(run({"verify"}).status, 2);
}

TEST_F(CliTest, EnumerateCounts) {
  auto r = run({"enumerate", "--order", "3", "--count-only"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "5\n");
  r = run({"enumerate", "--order", "5", "--count-only", "--jobs", "2"});
  EXPECT_EQ(r.out, "27\n");
  r = run({"enumerate", "--order", "4"});
  EXPECT_EQ(r.out.substr(0, 2), "7\n");
}

TEST_F(CliTest, EnumerateWritesOneFilePerClass) {
  const auto out = path("classes");
  ASSERT_EQ(run({"enumerate", "--order", "2", "--out", out}).status, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(out)) {
    ++files;
    EXPECT_EQ(entry.path().filename().string().rfind("order2-", 0), 0u);
    EXPECT_TRUE(verify(to_candidate(parse_document(read_file(entry.path().string())))).passed());
  }
  EXPECT_EQ(files, 2);
}

TEST_F(CliTest, EnumerateBeyondCapacity) {
  EXPECT_EQ(run({"enumerate", "--order", "7"}).status, 3);
  EXPECT_EQ(run({"enumerate", "--order", "6", "--budget", "0"}).status, 3);
  EXPECT_EQ(run({"enumerate", "--order", "1"}).status, 2);
}

TEST_F(CliTest, IsoSameFile) {
  const auto g = golden("order5_cyclic.json");
  const auto r = run({"iso", g, g});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "isomorphic: 0->0 1->1 2->2 3->3 4->4\n");
}

TEST_F(CliTest, IsoFieldVersusMassouros) {
  const auto field = write("f.json", render_document(to_document(oracle::field_as_hyperfield(gf(3, 1)))));
  const auto mass = path("m.json");
  ASSERT_EQ(run({"construct", "--method", "massouros", "--field", "3,1", "--out", mass}).status, 0);
  const auto r = run({"iso", field, mass});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "not isomorphic\n");
}

TEST_F(CliTest, IsoRelabeledCopy) {
  const auto c = oracle::cyclic_order5();
  const auto a = write("a.json", render_document(to_document(c)));
  const auto b = write("b.json", render_document(to_document(relabel(c, {0, 1, 4, 3, 2}))));
  const auto r = run({"iso", a, b});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("isomorphic:", 0), 0u);
}

TEST_F(CliTest, IsoRejectsNonHyperfieldInput) {
  auto c = oracle::cyclic_order5();
  c.set_sum(1, 2, {1});
  const auto bad = write("bad.json", render_document(to_document(c)));
  const auto r = run({"iso", golden("order5_cyclic.json"), bad});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("is not a Krasner hyperfield"), std::string::npos);
  EXPECT_EQ(r.out.find("not isomorphic"), std::string::npos);
}

TEST_F(CliTest, Show) {
  const auto r = run({"show", golden("order5_cyclic.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, pretty_table(oracle::cyclic_order5(), default_labels(5)));
  const auto relabeled = run({"show", golden("order2_krasner.json"), "--labels", "o,e"});
  EXPECT_NE(relabeled.out.find("{o,e}"), std::string::npos);
  EXPECT_EQ(run({"show", golden("order2_krasner.json"), "--labels", "o"}).status, 2);
  EXPECT_EQ(run({"show", path("none.json")}).status, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

}  // namespace
}  // namespace krasner
