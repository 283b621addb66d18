#include <gtest/gtest.h>

#include <sstream>

#include "cli/cli.hpp"

namespace cgof::cli {
namespace {

std::vector<double> parse(const std::string& text, const std::optional<std::string>& column = {}) {
    std::istringstream in(text);
    return parse_numbers(in, column);
}

int exit_code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const CliError& e) {
        return e.exit_code();
    }
    return 0;
}

TEST(Input, PlainLinesCommentsAndBlanks) {
    EXPECT_EQ(parse("1\n# note\n\n 2.5 \n-3e2 # trailing\n"), (std::vector<double>{1.0, 2.5, -300.0}));
}

TEST(Input, RoundTripsSeventeenDigits) {
    const double v = 0.1 + 0.2;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    EXPECT_EQ(parse(buf).front(), v);
}

TEST(Input, CsvByHeaderAndIndex) {
    const std::string csv = "id,value\n1,0.5\n2,-1.25\n";
    EXPECT_EQ(parse(csv, "value"), (std::vector<double>{0.5, -1.25}));
    EXPECT_EQ(parse(csv, "2"), (std::vector<double>{0.5, -1.25}));
    EXPECT_EQ(parse("3,4\n5,6\n", "1"), (std::vector<double>{3.0, 5.0}));
}

TEST(Input, ErrorsAreUsageErrors) {
    EXPECT_EQ(exit_code_of([] { (void)parse("1\nx\n"); }), kExitUsage);
    EXPECT_EQ(exit_code_of([] { (void)parse("# only comments\n"); }), kExitUsage);
    EXPECT_EQ(exit_code_of([] { (void)parse("a,b\n1,2\n", "c"); }), kExitUsage);
    EXPECT_EQ(exit_code_of([] { (void)parse("1\ninf\n"); }), kExitUsage);
    EXPECT_EQ(exit_code_of([] { (void)read_numbers("/nonexistent/file"); }), kExitUsage);
}

TEST(Grammar, Alternatives) {
    EXPECT_EQ(to_string(parse_alternative("t:4")), "t:4");
    EXPECT_EQ(to_string(parse_alternative("stable:1.5")), "stable:1.5");
    EXPECT_EQ(to_string(parse_alternative("cauchy")), "cauchy");
    EXPECT_EQ(to_string(parse_alternative("cauchy:2,3")), "cauchy:2,3");
    EXPECT_EQ(display_label(parse_alternative("normal")), "N(0,1)");
    EXPECT_EQ(display_label(parse_alternative("tukey:0.05")), "Tuk_0.05");

    const auto list = parse_alternatives("normal,cauchy:1,2,t:4,laplace");
    ASSERT_EQ(list.size(), 4u);
    EXPECT_EQ(to_string(list[1]), "cauchy:1,2");
    EXPECT_EQ(to_string(list[2]), "t:4");
}

TEST(Grammar, RejectsMalformedSpecs) {
    for (const char* bad : {"t", "t:0", "stable:2.5", "tukey:-1", "gamma:2", "cauchy:1,0", "t:4x", ""}) {
        EXPECT_EQ(exit_code_of([&] { (void)parse_alternative(bad); }), kExitUsage) << bad;
    }
}

TEST(Grammar, Lists) {
    EXPECT_EQ(parse_real_list("0.05,0.10"), (std::vector<double>{0.05, 0.10}));
    EXPECT_EQ(parse_count_list("10,30,50"), (std::vector<std::size_t>{10, 30, 50}));
    EXPECT_EQ(exit_code_of([] { (void)parse_count_list("10,-3"); }), kExitUsage);
    EXPECT_EQ(exit_code_of([] { (void)parse_real_list("0.1,,0.2"); }), kExitUsage);
    EXPECT_EQ(parse_method("vstat"), Method::vstat);
    EXPECT_EQ(parse_rule("gauss-hermite"), QuadratureRule::gauss_hermite);
    EXPECT_EQ(parse_fit_mode("scale-only"), FitMode::scale_only);
    EXPECT_EQ(parse_format("md"), Format::markdown);
    EXPECT_EQ(exit_code_of([] { (void)parse_format("xml"); }), kExitUsage);
}

TEST(RunTest, RejectMatchesDecisionRule) {
    const Sample x = sample(alt::Normal{}, 30, 5);
    const std::vector<double> data(x.begin(), x.end());

    TestOptions cv_mode;
    cv_mode.calibration_reps = 300;
    const TestReport a = run_test(data, cv_mode);
    ASSERT_TRUE(a.critical_value.has_value());
    EXPECT_FALSE(a.p_value.has_value());
    EXPECT_EQ(a.decision_rule, "critical_value");
    EXPECT_EQ(a.reject, a.statistic.delta > *a.critical_value);

    TestOptions p_mode;
    p_mode.pvalue_reps = 199;
    p_mode.baselines = true;
    p_mode.calibration_reps = 300;
    const TestReport b = run_test(data, p_mode);
    ASSERT_TRUE(b.p_value.has_value());
    EXPECT_EQ(b.decision_rule, "p_value");
    EXPECT_EQ(b.reject, *b.p_value < b.level);
    ASSERT_TRUE(b.baselines.has_value());
    EXPECT_TRUE(b.baselines->critical_values.has_value());
    EXPECT_EQ(a.statistic.delta, b.statistic.delta);
}

TEST(RunTest, ExitCodes) {
    EXPECT_EQ(exit_code_of([] { (void)run_test({1.0, 2.0}, {}); }), kExitDegenerate);
    EXPECT_EQ(exit_code_of([] { (void)run_test({4.0, 4.0, 4.0, 4.0}, {}); }), kExitDegenerate);
    TestOptions bad;
    bad.level = 1.5;
    EXPECT_EQ(exit_code_of([&] { (void)run_test({1.0, 2.0, 3.5}, bad); }), kExitUsage);
    bad.level = 0.05;
    bad.pvalue_reps = 10;
    EXPECT_EQ(exit_code_of([&] { (void)run_test({1.0, 2.0, 3.5}, bad); }), kExitUsage);
}

TEST(RunSample, MatchesLibrarySampler) {
    std::ostringstream out;
    run_sample({alt::StudentT{4}, 5, 9}, out);
    const Sample ref = sample(alt::StudentT{4}, 5, 9);
    std::istringstream in(out.str());
    EXPECT_EQ(parse_numbers(in), std::vector<double>(ref.begin(), ref.end()));
}

TEST(Emit, CalibrationMarkdownLayout) {
    CalibrateOptions o;
    o.ns = {10, 20};
    o.reps = 200;
    const auto tables = run_calibrate(o);
    std::ostringstream out;
    emit(tables, Format::markdown, out);
    const std::string s = out.str();
    EXPECT_EQ(s.rfind("| Sig. | n → | 10 | 20 |", 0), 0u) << s;
    EXPECT_NE(s.find("| | 0.05 |"), std::string::npos);
    EXPECT_NE(s.find("| | 0.10 |"), std::string::npos);

    const auto j = to_json(tables);
    EXPECT_EQ(j["kind"], "critical_value_table");
    EXPECT_EQ(j["tables"].size(), 2u);
    EXPECT_EQ(j["tables"][0]["metadata"]["seed"], 1);
}

}  // namespace
}  // namespace cgof::cli
