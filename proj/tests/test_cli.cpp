#include "hypermetric/cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = hypermetric::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
    std::size_t n = 0;
    for (char ch : s) {
        n += ch == '\n';
    }
    return n;
}

} // namespace

TEST(Cli, DistDefaultPrecision) {
    const auto r = run({"dist", "--domain", "ball:2", "--points", "0,0", "0.5,0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.881374\n");
    const auto p = run({"dist", "--domain", "ball:2", "--points", "0,0", "0.5,0", "--precision", "3"});
    EXPECT_EQ(p.out, "0.881\n");
}

TEST(Cli, DistOtherMetrics) {
    EXPECT_EQ(run({"dist", "--domain", "ball:2", "--metric", "j", "--points", "0,0", "0.5,0"}).out, "0.693147\n");
    EXPECT_EQ(run({"dist", "--domain", "halfspace:2", "--metric", "rho-halfspace", "--points", "0,1", "0,2"}).out,
              "0.693147\n");
    EXPECT_EQ(run({"dist", "--domain", "punctured:2", "--metric", "h", "--points", "-0.5,0", "1,0"}).code, 0);
}

TEST(Cli, FalsifyCollinear) {
    const auto bad = run({"falsify", "--c", "1.9"});
    EXPECT_EQ(bad.code, 1);
    const auto j = nlohmann::json::parse(bad.out);
    EXPECT_EQ(j.at("violation").at("r"), 0.9973);
    const auto ok = run({"falsify", "--c", "2"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(ok.out).at("violation").is_null());
}

TEST(Cli, FalsifyPhi) {
    const auto r = run({"falsify", "--metric", "phi"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out).at("violation").at("t"), 0.9);
    EXPECT_EQ(run({"falsify", "--metric", "phi", "--grid", "1e-8"}).code, 0);
}

TEST(Cli, VerifySuite) {
    const auto r = run({"verify-suite", "--suite", "T4_6", "--domain", "ball:2", "--count", "2000"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("suite_id"), "T4_6");
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(run({"verify-suite", "--suite", "L4_4_1", "--domain", "ball:2", "--c", "0.5", "--count", "2000"}).code, 1);
}

TEST(Cli, ScanTriangle) {
    EXPECT_EQ(run({"scan-triangle", "--domain", "ball:2", "--count", "2000"}).code, 0);
    const auto phi = run({"scan-triangle", "--domain", "ball:2", "--metric", "phi", "--count", "100000"});
    EXPECT_EQ(phi.code, 1);
    EXPECT_LT(nlohmann::json::parse(phi.out).at("min_slack").get<double>(), 0.0);
}

TEST(Cli, CsvOutput) {
    const auto r = run({"scan-triangle", "--domain", "interval:0:1", "--count", "50", "--output", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("index,slack\n", 0), 0u);
    EXPECT_EQ(line_count(r.out), 51u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"dist", "--domain", "ball:2", "--points", "0,0"}).code, 2);
    EXPECT_EQ(run({"dist", "--domain", "ball:2", "--points", "0,0", "2,0"}).code, 2);
    EXPECT_EQ(run({"dist", "--domain", "ball:2", "--points", "0,0", "0,0,0"}).code, 2);
    EXPECT_EQ(run({"dist", "--domain", "ball:2", "--points", "0,x", "0,0"}).code, 2);
    EXPECT_EQ(run({"dist", "--domain", "sphere:2", "--points", "0,0", "0,0"}).code, 2);
    EXPECT_EQ(run({"dist", "--domain", "ball:2", "--c", "-1", "--points", "0,0", "0.5,0"}).code, 2);
    EXPECT_EQ(run({"verify-suite", "--suite", "T3_6", "--domain", "ball:2"}).code, 2);
    EXPECT_EQ(run({"verify-suite", "--suite", "X1", "--domain", "ball:2"}).code, 2);
    EXPECT_EQ(run({"scan-triangle", "--domain", "ball:2", "--output", "xml"}).code, 2);
    const auto r = run({"dist", "--domain", "ball:2", "--points", "0,0", "2,0"});
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, KEstimate) {
    const auto r = run({"k-estimate", "--domain", "halfspace:2", "--points", "0,1", "0,2"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_LT(j.at("relative_error").get<double>(), 0.01);
}

TEST(Cli, Dilatation) {
    const auto r = run({"dilatation", "--map", "radial:2:2", "--z", "0.5,0", "--radii", "0.1", "0.01"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("dilatation").at("ratios").size(), 2u);
    EXPECT_EQ(run({"dilatation", "--map", "radial:2:2", "--z", "0.5,0", "--radii", "0.01", "0.1"}).code, 2);
    EXPECT_EQ(run({"dilatation", "--map", "shear:2"}).code, 2);
}

TEST(Cli, RepeatRunsAreByteIdentical) {
    const std::vector<std::string> args{"verify-suite", "--suite", "L4_4_2", "--domain", "halfspace:3",
                                        "--count", "3000", "--seed", "99"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> unif{"uniformity", "--domain", "ball:2", "--count", "5"};
    EXPECT_EQ(run(unif).out, run(unif).out);
}
