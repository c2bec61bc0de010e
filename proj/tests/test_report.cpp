#include <gtest/gtest.h>

#include "qv/suites.hpp"

using namespace qv;

TEST(Report, ExactSerialization) {
    EXPECT_EQ(jv(canon(Q(-6, 4))), "-3/2");
    EXPECT_EQ(jv(Q(5)), "5/1");
    Poly p({Q(1, 2), Q(0), Q(-3)}, 'h');
    EXPECT_EQ(jv(p), (json{"1/2", "0/1", "-3/1"}));
    EXPECT_EQ(jv(Poly(Q(0))), json::array());
    RatFunc r(Poly::x(), Poly::lin(Q(1)));
    EXPECT_EQ(jv(r)["den"], (json{"1/1", "1/1"}));
}

TEST(Report, PaddedIdsSortNumerically) {
    EXPECT_EQ(pad(7), "07");
    EXPECT_EQ(pad(-3), "m03");
    EXPECT_EQ(pad(50, 3), "050");
    EXPECT_LT(pad(9), pad(10));
}

TEST(Report, RecorderCatchesAndTimes) {
    Recorder R("demo");
    R.add("b", json::object(), [] { return verdict(true); });
    R.add("a", json::object(), [] { return verdict(false, json{{"x", 1}}); });
    R.add("c", json::object(), []() -> Outcome { throw std::domain_error("boom"); });
    auto rs = R.records();
    sort_records(rs);
    ASSERT_EQ(rs.size(), 3u);
    EXPECT_EQ(rs[0].id, "a");
    EXPECT_EQ(rs[0].status, Status::Fail);
    EXPECT_EQ(rs[1].witness, nullptr);
    EXPECT_EQ(rs[2].witness["error"], "boom");
    auto s = summarize(rs);
    EXPECT_EQ(s.pass, 1);
    EXPECT_EQ(s.fail, 2);
    EXPECT_FALSE(rs[0].to_json(false).contains("wall_time_ms"));
    EXPECT_TRUE(rs[0].to_json().contains("wall_time_ms"));
}

TEST(Report, UsageErrors) {
    RunConfig c;
    c.suites = {"nope"};
    EXPECT_THROW(run(c), std::invalid_argument);
    c.suites = {"fixed-points"};
    c.kmax = 40;
    EXPECT_THROW(run(c), std::invalid_argument);
    c = RunConfig{};
    c.suites = {"gwa"};
    c.tau0 = Q(1);
    c.tau1 = Q(-1);
    EXPECT_THROW(run(c), std::invalid_argument);
}

TEST(Report, SmallRunsAreDeterministicAndComplete) {
    RunConfig c;
    c.suites = {"index-sets", "appendix"};
    c.kmax = 4;
    auto a = run(c), b = run(c);
    ASSERT_EQ(a.records.size(), b.records.size());
    std::set<std::pair<std::string, std::string>> ids;
    for (size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].to_json(false), b.records[i].to_json(false));
        EXPECT_TRUE(ids.insert({a.records[i].suite, a.records[i].id}).second) << a.records[i].id;
    }
    EXPECT_EQ(a.records.front().suite, "appendix");
    EXPECT_EQ(a.exit_code(), 0);
    EXPECT_EQ(a.config["bounds"]["index-sets"]["kmax"], 4);
}

TEST(Report, SeedChangesOrbitWords) {
    RunConfig c;
    c.suites = {"kappa"};
    c.kmax = 1;
    c.nmax = 3;
    c.lmax = 2;
    c.symbolic = false;
    auto a = run(c);
    c.seed = 7;
    auto b = run(c);
    bool differ = false;
    for (size_t i = 0; i < a.records.size(); ++i)
        if (a.records[i].params != b.records[i].params) differ = true;
    EXPECT_TRUE(differ);
}

TEST(Report, MarkdownSummary) {
    RunConfig c;
    c.suites = {"index-sets"};
    c.kmax = 3;
    auto r = run(c);
    auto md = report_markdown(r.config, r.records);
    EXPECT_NE(md.find("| index-sets | 12 | 0 | 0 | 0 |"), std::string::npos);
    auto j = report_json(r.config, r.records);
    EXPECT_EQ(j["version"], tool_version);
    EXPECT_EQ(j["cases"].size(), 12u);
}
