#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "f2x/cli.hpp"

using namespace f2x;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Factor) {
    EXPECT_EQ(run({"factor", "x^2+x"}).out, "(x)^1 * (x+1)^1\n");
    EXPECT_EQ(run({"factor", "0x7"}).out, "(x^2+x+1)^1\n");
    EXPECT_EQ(run({"factor", "1"}).out, "1\n");
    EXPECT_EQ(run({"factor", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"factor", "x^"}).code, kExitUsage);
    EXPECT_EQ(run({"factor"}).code, kExitUsage);
}

TEST(Cli, Eval) {
    EXPECT_EQ(run({"eval", "sigma", "x^2+x"}).out, "x^2+x\n");
    EXPECT_EQ(run({"eval", "inv(sigma)", "x^2"}).out, "x\n");
    EXPECT_EQ(run({"eval", "sigma_star*mu", "x^3"}).out, "x^3+x^2\n");
    EXPECT_EQ(run({"eval", "sigma_star*mu", "x^3", "--oracle"}).out, "x^3+x^2\n");
    EXPECT_EQ(run({"eval", "tau", "x"}).code, kExitUsage);
    EXPECT_EQ(run({"eval", "sigma", "0"}).code, kExitUsage);
}

TEST(Cli, Conv) {
    EXPECT_EQ(run({"conv", "sigma", "sigma", "x^2+x"}).out, "0\n");
    EXPECT_EQ(run({"conv", "sigma", "id", "x^2+x", "--oracle"}).out, "1\n");
    EXPECT_EQ(run({"conv", "sigma", "z", "0x4"}).out, "x^2+1\n");
}

TEST(Cli, Verify) {
    const CliRun a = run({"verify", "--max-prime-deg", "3", "--max-exp", "6"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out.rfind("PASS ", 0), 0u);
    EXPECT_EQ(lines(a.out), 1u);

    const CliRun b = run({"verify", "--lemma", "sigma_phi", "--max-prime-deg", "2", "--max-exp", "8"});
    EXPECT_EQ(b.code, kExitOk);
    EXPECT_EQ(lines(b.out), 3u * 9 + 1);
    EXPECT_NE(b.out.find("LEMMA sigma_phi P=x^2+x+1 m=3 OK"), std::string::npos);
    EXPECT_NE(b.out.find("PASS 27/27"), std::string::npos);

    EXPECT_EQ(run({"verify", "--lemma", "nosuch"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--max-prime-deg", "9"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--max-exp", "17"}).code, kExitUsage);

    const CliRun c = run({"verify", "--max-prime-deg", "1", "--max-exp", "2", "--corollaries"});
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_EQ(c.out.rfind("PASS ", 0), 0u);
}

TEST(Cli, VerifyJobsDoNotChangeOutput) {
    const CliRun a = run({"verify", "--max-prime-deg", "3", "--max-exp", "6", "--verbose", "--jobs", "1"});
    const CliRun b = run({"verify", "--max-prime-deg", "3", "--max-exp", "6", "--verbose", "--jobs", "4"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_GT(lines(a.out), 100u);
}

TEST(Cli, Search) {
    const CliRun a = run({"search", "perfect", "--max-deg", "6"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(lines(a.out), 4u);
    EXPECT_NE(a.out.find("PERFECT deg=2 x^2+x class=trivial\n"), std::string::npos);

    const CliRun b = run({"search", "odd", "--max-deg", "24"});
    EXPECT_EQ(b.code, kExitOk);
    EXPECT_EQ(b.out, "");

    EXPECT_EQ(run({"search", "perfect", "--max-deg", "999"}).code, kExitUsage);
    EXPECT_EQ(run({"search", "bogus"}).code, kExitUsage);

    const CliRun kv = run({"search", "unitary", "--max-deg", "2", "--kv"});
    EXPECT_EQ(kv.out, "kind=unitary degree=2 poly=x^2+x hex=0x6 class=trivial\n");
}

TEST(Cli, Mersenne) {
    EXPECT_EQ(run({"mersenne", "--max-deg", "2"}).out, "x^2+x+1 a=1 b=1\n");
    const CliRun three = run({"mersenne", "--max-deg", "3"});
    EXPECT_EQ(three.out, "x^2+x+1 a=1 b=1\nx^3+x+1 a=1 b=2\nx^3+x^2+1 a=2 b=1\n");
    const CliRun four = run({"mersenne", "--max-deg", "4"});
    EXPECT_NE(four.out.find("x^4+x^3+x^2+x+1 a=1 b=3\n"), std::string::npos);
    EXPECT_NE(four.out.find("x^4+x^3+1 a=3 b=1\n"), std::string::npos);
    EXPECT_EQ(four.out.find("x^4+x^2+1"), std::string::npos);
    EXPECT_EQ(run({"mersenne", "--max-deg", "33"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}
