#include <gtest/gtest.h>

#include <sstream>

#include "dmod/cli.hpp"
#include "dmod/dmod.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "dmod");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = dmod::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, EnumerateText) {
    auto r = run({"enumerate", "--family", "spct", "--shape", "3,3,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("10 tableaux in"), std::string::npos);
    EXPECT_NE(r.out.find("#1  word"), std::string::npos);
}

TEST(Cli, EnumerateStructuredOneRecordPerTableau) {
    auto r = run({"enumerate", "--family", "ssht", "--shape", "4,3,1", "--format", "structured"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        auto t = dmod::io::tableau_from_json(dmod::io::json::parse(line));
        EXPECT_EQ(t.size(), 8);
        ++count;
    }
    EXPECT_EQ(count, 12);
}

TEST(Cli, Characteristics) {
    EXPECT_EQ(run({"characteristic", "--family", "syct", "--shape", "2,4"}).out, "F[2,4] + F[1,4,1] + F[1,3,2] + F[1,2,3]\n");
    EXPECT_EQ(run({"peak-characteristic", "--family", "spct", "--shape", "3,3,1"}).out,
              "K[3,3,1] + K[3,2,2] + K[2,4,1] + 3*K[2,3,2] + 2*K[2,2,3] + 2*K[2,2,2,1]\n");
    EXPECT_EQ(run({"peak-characteristic", "--family", "spct", "--shape", "2,1", "--format", "latex"}).out, "K_{(2,1)}\n");
}

TEST(Cli, SumTransforms) {
    EXPECT_EQ(run({"expand-K", "--shape", "2,1"}).out, "4*F[2,1] + 4*F[1,2]\n");
    EXPECT_EQ(run({"theta", "--sum", "F[1,1,2,2,1]"}).out, "K[4,2,1]\n");
    auto t = run({"truncate", "--family", "ssht", "--shape", "2,1", "--k", "2", "--check-symmetric"});
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("\nsymmetric\n"), std::string::npos);
}

TEST(Cli, VerifyAndHarness) {
    auto v = run({"verify", "--family", "spct", "--shape", "2,2,1"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("tableau-cyclic from"), std::string::npos);
    EXPECT_TRUE(v.out.ends_with("OK\n"));
    auto h = run({"harness", "--n", "3", "--format", "structured"});
    EXPECT_EQ(h.code, 0);
    EXPECT_FALSE(h.out.empty());
}

TEST(Cli, DumpMatrices) {
    auto r = run({"dump-matrices", "--family", "rib", "--shape", "2,2", "--convention", "pi_hat"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    auto m = dmod::io::read_matrices(in);
    EXPECT_EQ(m.at("pi_hat").size(), 3u);
    EXPECT_EQ(run({"dump-matrices", "--family", "rib", "--shape", "2,2", "--convention", "sideways"}).code, 2);
}

TEST(Cli, ErrorsExitWithTwo) {
    EXPECT_EQ(run({"enumerate", "--family", "nonsense", "--shape", "2,1"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "spct", "--shape", "1,2"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--family", "spct", "--shape", "a,b"}).code, 2);
    EXPECT_EQ(run({"truncate", "--shape", "2", "--k", "40"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    auto r = run({"theta"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("usage error"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }
