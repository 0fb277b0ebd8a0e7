#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "circlab/dimacs.hpp"
#include "circlab/families.hpp"
#include "circlab/serialize.hpp"
#include "cli.hpp"

namespace circlab::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / "circlab_cli_test" / info->name();
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string gen(const std::vector<std::string>& family, const std::string& name) {
    std::vector<std::string> args{"gen"};
    args.insert(args.end(), family.begin(), family.end());
    args.insert(args.end(), {"-o", path(name)});
    EXPECT_EQ(invoke(args).code, kExitOk);
    return path(name);
  }
  fs::path dir_;
};

TEST_F(Cli, GenRoundTripsAdjacency) {
  const std::string f = gen({"kneser", "5", "2"}, "kg52.col");
  EXPECT_TRUE(load_graph(f).same_adjacency(kneser(5, 2)));
  const std::string m = gen({"mycielski", "2", "complete", "2"}, "grotzsch.col");
  EXPECT_EQ(load_graph(m).provenance()->name(), "M^2(K2)");
  const std::string p = gen({"product", "complete", "2", "x", "complete", "3"}, "prod.col");
  EXPECT_EQ(load_graph(p).order(), 6u);
  const std::string n = gen({"M(C5)"}, "mc5.col");
  EXPECT_TRUE(load_graph(n).same_adjacency(build_family("M(C5)")));
}

TEST_F(Cli, GenToStdout) {
  const auto r = invoke({"gen", "cycle", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("p edge 5 5"), std::string::npos);
}

TEST_F(Cli, Invariants) {
  const std::string c5 = gen({"cycle", "5"}, "c5.col");
  EXPECT_EQ(invoke({"inv", "chi-c", c5}).out, "5/2\n");
  EXPECT_EQ(invoke({"inv", "chi", c5}).out, "3\n");
  EXPECT_EQ(invoke({"inv", "phi", c5}).out, "5\n");
  EXPECT_EQ(invoke({"inv", "phi-ab", c5, "--a", "0", "--b", "1"}).out, "inf\n");
  EXPECT_EQ(invoke({"inv", "phi-ab", c5, "--a", "3", "--b", "1"}).out, "3\n");
  EXPECT_EQ(invoke({"inv", "girth", c5}).out, "5\n");
  EXPECT_EQ(invoke({"inv", "alpha", c5}).out, "2\n");
  EXPECT_EQ(invoke({"inv", "omega", c5}).out, "2\n");
  EXPECT_EQ(invoke({"inv", "free", c5}).out, "true\n");
  EXPECT_EQ(invoke({"inv", "alpha-bar", c5}).out, "1\n");
  EXPECT_EQ(invoke({"inv", "d", c5}).out, "4\n");
}

TEST_F(Cli, InvariantJson) {
  const std::string c5 = gen({"cycle", "5"}, "c5.col");
  const auto r = invoke({"inv", "chi-c", c5, "--json"});
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["graph"], "C5");
  EXPECT_EQ(j["value"]["num"], 5);
  EXPECT_EQ(j["value"]["den"], 2);
  EXPECT_EQ(r.out, invoke({"inv", "chi-c", c5, "--json"}).out);
}

TEST_F(Cli, Homomorphisms) {
  const std::string c5 = gen({"cycle", "5"}, "c5.col");
  const std::string c7 = gen({"cycle", "7"}, "c7.col");
  const std::string pet = gen({"kneser", "5", "2"}, "pet.col");
  EXPECT_EQ(invoke({"hom", c5, "--circular", "7", "3"}).out, "NONE\n");
  EXPECT_EQ(invoke({"hom", pet, c5}).out, "NONE\n");
  const auto found = invoke({"hom", c7, c5, "--json"});
  EXPECT_EQ(Json::parse(found.out)["status"], "FOUND");
  EXPECT_EQ(invoke({"hom", c5, c5, "--onto"}).out.rfind("FOUND", 0), 0u);
  EXPECT_EQ(invoke({"hom", c5}).code, kExitUsage);
}

TEST_F(Cli, ExhaustedExitCode) {
  const std::string g = gen({"kneser", "7", "2"}, "kg72.col");
  ::setenv("CIRCLAB_NODE_BUDGET", "5", 1);
  const auto r = invoke({"inv", "chi", g});
  ::unsetenv("CIRCLAB_NODE_BUDGET");
  EXPECT_EQ(r.code, kExitExhausted);
  EXPECT_NE(r.err.find("EXHAUSTED"), std::string::npos);
}

TEST_F(Cli, BadBudgetIsUsageError) {
  const std::string c5 = gen({"cycle", "5"}, "c5.col");
  ::setenv("CIRCLAB_NODE_BUDGET", "lots", 1);
  const auto r = invoke({"inv", "chi", c5});
  ::unsetenv("CIRCLAB_NODE_BUDGET");
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(Cli, Derivations) {
  const std::string c7 = gen({"cycle", "7"}, "c7.col");
  const std::string k2 = gen({"complete", "2"}, "k2.col");
  for (const char* kind : {"free-from-circular", "via-edge", "girth"}) {
    const auto r = invoke({"derive", kind, c7, "--json"});
    ASSERT_EQ(r.code, kExitOk) << kind << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(is_valid(cycle_graph(7), free_coloring_from_json(j["coloring"], 7))) << kind;
  }
  EXPECT_EQ(invoke({"derive", "girth", c7, "--two"}).code, kExitOk);
  const auto push = invoke({"derive", "pushdown", k2, "--json"});
  ASSERT_EQ(push.code, kExitOk) << push.err;
  EXPECT_EQ(Json::parse(push.out)["coloring"]["b"], 4);
  const auto pipe = invoke({"derive", "pipeline", k2, "-t", "1", "--json"});
  ASSERT_EQ(pipe.code, kExitOk) << pipe.err;
  EXPECT_EQ(Json::parse(pipe.out)["cap"], 4);
  EXPECT_EQ(invoke({"derive", "nonsense", c7}).code, kExitUsage);
}

TEST_F(Cli, Bounds) {
  EXPECT_EQ(invoke({"bound", "kneser-chi", "5", "2"}).out, "3\n");
  EXPECT_EQ(invoke({"bound", "hilton-phi", "7", "2", "1"}).out, "15/2\n");
  EXPECT_EQ(invoke({"bound", "threshold", "3", "2"}).out, "54\n");
  EXPECT_EQ(invoke({"bound", "binomial", "100", "50"}).out, "100891344545564193334812497256\n");
  EXPECT_EQ(invoke({"bound", "k-value", "3", "--variant", "statement"}).out, "11\n");
  EXPECT_EQ(invoke({"bound", "frankl", "5", "3", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "kneser-chi", "5"}).code, kExitUsage);

  const std::string batch = path("batch.json");
  {
    std::ofstream f(batch);
    f << R"([{"name":"ekr","params":[5,2]},{"name":"final","params":[12,2,1]}])";
  }
  const Json j = Json::parse(invoke({"bound", "--batch", batch}).out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["value"], 4);
  EXPECT_EQ(j[1]["value"]["needed"], true);
}

TEST_F(Cli, MycProductExport) {
  const std::string k2 = gen({"complete", "2"}, "k2.col");
  const std::string out = path("m2k2.col");
  EXPECT_EQ(invoke({"myc", k2, "-t", "2", "-o", out}).code, kExitOk);
  EXPECT_EQ(load_graph(out).order(), 11u);
  const std::string k3 = gen({"complete", "3"}, "k3.col");
  const auto prod = invoke({"product", k2, k3});
  EXPECT_NE(prod.out.find("p edge 6 6"), std::string::npos);
  const Json j = Json::parse(invoke({"export", out, "--format", "json"}).out);
  EXPECT_EQ(j["order"], 11);
  EXPECT_EQ(j["size"], 20);
  const auto dimacs = invoke({"export", out, "--format", "dimacs"});
  EXPECT_NE(dimacs.out.find("p edge 11 20"), std::string::npos);
  EXPECT_EQ(invoke({"export", out, "--format", "xml"}).code, kExitUsage);
}

TEST_F(Cli, VerifySingleCheck) {
  const auto r = invoke({"verify", "product-example", "--param", "m=3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("PASS product-example", 0), 0u);
  const std::string report = path("report.json");
  EXPECT_EQ(invoke({"verify", "chi-kneser", "--json", report}).code, kExitOk);
  std::ifstream in(report);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(invoke({"verify", "no-such"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--all", "--profile", "huge"}).code, kExitUsage);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"inv", "chi"}).code, kExitUsage);
  EXPECT_EQ(invoke({"inv", "chi", "x.col", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "kneser", "5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "kneser", "five", "2"}).code, kExitUsage);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace circlab::cli
