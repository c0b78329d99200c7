#include <gtest/gtest.h>

#include <sstream>

#include "gen.hpp"
#include "strsolve/cli/cli.hpp"

using namespace strsolve;
using namespace strsolve::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(const std::vector<std::string>& args, const std::string& input, const char* trace_env = nullptr) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run(args, in, out, err, trace_env);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> r;
    std::istringstream ss(s);
    for (std::string l; std::getline(ss, l);) r.push_back(l);
    return r;
}

const char* kSat = "(declare-fun x () String)(assert (str.in_re x (re.+ (str.to_re \"a\"))))(check-sat)(get-model)";

}  // namespace

TEST(ParseArgs, PaperConfigurations) {
    auto a = parse_args({"+F+B-N"});
    EXPECT_TRUE(a.config.forward);
    EXPECT_TRUE(a.config.backward);
    EXPECT_FALSE(a.config.nielsen);
    EXPECT_EQ(a.config.flags(), "+F+B-N");

    auto b = parse_args({"-F+B+N"});
    EXPECT_FALSE(b.config.forward);
    EXPECT_TRUE(b.config.nielsen);
    EXPECT_EQ(b.config.flags(), "-F+B+N");

    auto c = parse_args({"-F", "+B", "+N", "-eager"});
    EXPECT_EQ(c.config.flags(), "-F+B+N");
    EXPECT_FALSE(c.config.eager);
}

TEST(ParseArgs, Defaults) {
    auto a = parse_args({});
    EXPECT_EQ(a.config.flags(), "+F+B-N");
    EXPECT_TRUE(a.config.eager);
    EXPECT_EQ(a.config.trace_level, 0);
    EXPECT_FALSE(a.input.has_value());
}

TEST(ParseArgs, LongForms) {
    auto a = parse_args({"--forward=off", "--nielsen", "on", "--step-cap", "7", "--time-cap=250", "in.smt2"});
    EXPECT_FALSE(a.config.forward);
    EXPECT_TRUE(a.config.nielsen);
    EXPECT_EQ(a.config.step_cap, 7u);
    EXPECT_EQ(a.config.time_cap_ms, 250u);
    EXPECT_EQ(a.input, std::optional<std::string>("in.smt2"));
    EXPECT_THROW(parse_args({"--forward=maybe"}), UsageError);
}

TEST(ParseArgs, NoPropagationIsUsageError) {
    EXPECT_THROW(parse_args({"-F-B"}), UsageError);
    EXPECT_THROW(parse_args({"--forward=off", "--backward=off"}), UsageError);
    auto r = run_cli({"-F-B"}, kSat);
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
}

TEST(ParseArgs, PortfolioNeedsTimeCap) {
    EXPECT_THROW(parse_args({"--portfolio"}), UsageError);
    EXPECT_TRUE(parse_args({"--portfolio", "--time-cap", "100"}).portfolio);
}

TEST(ParseArgs, TraceEnvironment) {
    EXPECT_EQ(parse_args({}, "2").config.trace_level, 2);
    EXPECT_EQ(parse_args({"--trace-level", "3"}, "2").config.trace_level, 3);
    EXPECT_EQ(parse_args({"--trace"}).config.trace_level, 1);
    EXPECT_THROW(parse_args({}, "loud"), UsageError);
}

TEST(Run, ExitCodes) {
    auto sat = run_cli({}, kSat);
    EXPECT_EQ(sat.code, 0);
    auto ls = lines_of(sat.out);
    ASSERT_GE(ls.size(), 2u);
    EXPECT_EQ(ls[0], "sat");
    EXPECT_EQ(ls[1], "(define-fun x () String \"a\")");

    EXPECT_EQ(run_cli({}, "(assert false)(check-sat)").out, "unsat\n");
    EXPECT_EQ(run_cli({}, "(assert false)(check-sat)").code, 0);

    auto unknown = run_cli({"--step-cap", "2", "-F"},
                           "(declare-fun x () String)(assert (= (str.++ x \"a\") (str.++ \"b\" x)))"
                           "(assert (<= (str.len x) 50))(check-sat)");
    EXPECT_EQ(unknown.out, "unknown\n");
    EXPECT_EQ(unknown.code, 2);

    auto bad = run_cli({}, "(assert (= x 1))(check-sat)");
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("error"), std::string::npos);
}

TEST(Run, MissingFile) {
    auto r = run_cli({"/nonexistent/none.smt2"}, "");
    EXPECT_EQ(r.code, 1);
}

TEST(Run, TraceHeaderRoundTrip) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"+F+B-N", "--trace"}, {"-F+B+N", "-eager", "--trace", "--step-cap", "900"}}) {
        auto r = run_cli(args, kSat);
        ASSERT_EQ(r.code, 0);
        auto ls = lines_of(r.err);
        ASSERT_FALSE(ls.empty());
        EXPECT_EQ(ls[0], parse_args(args).config.header());
        // the flag token of the header parses back to the same flags
        std::string token = ls[0].substr(ls[0].find(' ') + 1, 6);
        EXPECT_EQ(parse_args({token}).config.flags(), parse_args(args).config.flags());
        for (std::size_t i = 1; i < ls.size(); ++i) {
            EXPECT_EQ(ls[i].rfind("rule=", 0), 0u) << ls[i];
            EXPECT_NE(ls[i].find(" target="), std::string::npos);
            EXPECT_NE(ls[i].find(" priority="), std::string::npos);
            EXPECT_NE(ls[i].find(" branch="), std::string::npos);
        }
    }
}

TEST(Run, TraceFromEnvironment) {
    auto quiet = run_cli({}, kSat);
    EXPECT_TRUE(quiet.err.empty());
    auto loud = run_cli({}, kSat, "1");
    EXPECT_EQ(lines_of(loud.err).at(0).rfind("config +F+B-N", 0), 0u);
}

TEST(Run, Portfolio) {
    auto r = run_cli({"--portfolio", "--time-cap", "4000"},
                     "(declare-fun x () String)(assert (= (str.++ x \"a\") (str.++ \"a\" x)))"
                     "(assert (= (str.len x) 3))(check-sat)(get-model)");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines_of(r.out).at(0), "sat");
    EXPECT_NE(r.out.find("\"aaa\""), std::string::npos);
}

TEST(Run, Help) {
    auto r = run_cli({"--help"}, "");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("usage"), std::string::npos);
}
