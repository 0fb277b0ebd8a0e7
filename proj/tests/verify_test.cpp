#include <gtest/gtest.h>

#include "circlab/verify.hpp"

namespace circlab {
namespace {

TEST(Registry, NamesAndOrder) {
  const auto& checks = registered_checks();
  ASSERT_EQ(checks.size(), 20u);
  EXPECT_EQ(checks.front().name, "myc-chi-omega");
  EXPECT_EQ(checks.back().name, "schrijver-count-critical");
  for (const auto& c : checks) {
    EXPECT_TRUE(is_registered(c.name));
    EXPECT_FALSE(c.claim.empty()) << c.name;
    EXPECT_FALSE(check_instances(c.name, Profile::quick).empty()) << c.name;
    EXPECT_GE(check_instances(c.name, Profile::full).size(),
              check_instances(c.name, Profile::quick).size())
        << c.name;
  }
  EXPECT_FALSE(is_registered("no-such-check"));
}

TEST(Profiles, Configuration) {
  EXPECT_EQ(parse_profile("quick"), Profile::quick);
  EXPECT_EQ(parse_profile("full"), Profile::full);
  EXPECT_FALSE(parse_profile("huge").has_value());
  EXPECT_EQ(profile_config(Profile::quick).max_vertices, 12u);
  EXPECT_EQ(profile_config(Profile::quick).max_t, 1u);
  EXPECT_EQ(profile_config(Profile::full).max_vertices, 45u);
  EXPECT_EQ(profile_config(Profile::full).max_t, 2u);
}

TEST(RunCheck, ProductExample) {
  const auto r = run_check("product-example", Json{{"m", 3}});
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.lhs["phi"], 6);
}

TEST(RunCheck, Phi2ContrapositiveOnFiveCycle) {
  const auto r = run_check("phi2-contrapositive", Json{{"graph", "C5"}});
  EXPECT_EQ(r.status, CheckStatus::pass) << r.note;
}

TEST(RunCheck, ChiKneserSmall) {
  const auto r = run_check("chi-kneser", Json{{"m", 4}, {"n", 2}});
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.lhs, r.rhs);
}

TEST(RunCheck, SkipsCarryReason) {
  const auto r = run_check("phi2-contrapositive", Json{{"graph", "K3"}});
  EXPECT_EQ(r.status, CheckStatus::skip);
  EXPECT_FALSE(r.note.empty());
}

TEST(RunCheck, TinyBudgetExhausts) {
  const auto r = run_check("chi-c-jhs", Json{{"m", 5}, {"n", 2}}, Profile::quick, 2);
  EXPECT_EQ(r.status, CheckStatus::exhausted);
  EXPECT_NE(r.note.find("budget"), std::string::npos);
}

TEST(RunCheck, Errors) {
  EXPECT_THROW(run_check("no-such-check", Json::object()), std::invalid_argument);
  EXPECT_THROW(run_check("chi-kneser", Json{{"q", 1}}), std::invalid_argument);
}

TEST(RunCheck, SimonyiTardosGroetzsch) {
  const auto r = run_check("simonyi-tardos-even", Json{{"n", 2}, {"t", 2}}, Profile::full);
  EXPECT_EQ(r.status, CheckStatus::pass) << r.note;
}

TEST(RunAll, DeterministicReports) {
  const std::vector<std::string> only{"chi-kneser", "product-example", "hilton-free"};
  const auto a = to_json(run_all(Profile::quick, only)).dump();
  const auto b = to_json(run_all(Profile::quick, only)).dump();
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["suite_version"], "1.0");
  EXPECT_EQ(j["profile"], "quick");
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_FALSE(j["results"][0].contains("elapsed_ms"));
}

TEST(RunAll, TimingIsOptIn) {
  const auto report = run_all(Profile::quick, {"chi-kneser"});
  EXPECT_TRUE(to_json(report, true)["results"][0].contains("elapsed_ms"));
}

}  // namespace
}  // namespace circlab
