#include <gtest/gtest.h>

#include <algorithm>

#include "qlc/report.hpp"

using namespace qlc;

namespace {

CertificationReport sample_report() {
    const FamilySpec spec{Family::F, Rational(1), Rational(2), CoefficientSequence::ones()};
    return verify_theorem(TheoremId::T1_F_CONCAVE, spec,
                          {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}, {Rational(0), Rational(2)}}, 12);
}

} // namespace

TEST(JsonReport, SchemaAndSummary) {
    const auto j = to_json(sample_report(), false);
    EXPECT_EQ(j["schema"], kReportSchema);
    EXPECT_FALSE(j.contains("timestamp"));
    EXPECT_EQ(j["theorem"], "T1_F_CONCAVE");
    EXPECT_EQ(j["params"]["a"], "1");
    EXPECT_EQ(j["order"], 12);
    EXPECT_EQ(j["summary"]["CERTIFIED"], 2);
    EXPECT_EQ(j["summary"]["HYPOTHESIS_UNMET"], 1);
    ASSERT_EQ(j["points"].size(), 3u);
    EXPECT_EQ(j["points"][0]["mu"], "0");
    EXPECT_EQ(j["points"][0]["nu"], "1");
    EXPECT_EQ(j["points"][1]["verdict"], "HYPOTHESIS_UNMET");
    EXPECT_TRUE(j["points"][1].contains("reason"));
}

TEST(JsonReport, TimestampOnlyWhenRequested) {
    const auto j = to_json(sample_report(), true);
    ASSERT_TRUE(j.contains("timestamp"));
    const std::string ts = j["timestamp"];
    EXPECT_EQ(ts.size(), 20u);
    EXPECT_EQ(ts.back(), 'Z');
}

TEST(JsonReport, Deterministic) {
    EXPECT_EQ(to_json(sample_report(), false).dump(), to_json(sample_report(), false).dump());
}

TEST(JsonReport, ViolationCarriesCoefficient) {
    PointResult p;
    p.mu = Rational(1);
    p.nu = Rational(2);
    p.verdict = Verdict::Violation;
    p.index = 4;
    p.coefficient = "-3/7";
    const auto j = to_json(p);
    EXPECT_EQ(j["verdict"], "VIOLATION");
    EXPECT_EQ(j["index"], 4);
    EXPECT_EQ(j["coefficient"], "-3/7");
}

TEST(CsvReport, HeaderAndRows) {
    const std::string csv = to_csv(sample_report());
    EXPECT_EQ(csv.rfind("theorem,family,a,c,mu,nu,order,verdict,exact,index,coefficient,reason\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    EXPECT_NE(csv.find(",HYPOTHESIS_UNMET,true,,,mu must be at least nu-1\n"), std::string::npos);
}

TEST(CsvReport, Escaping) {
    EXPECT_EQ(csv_escape("plain"), "plain");
    EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
}
