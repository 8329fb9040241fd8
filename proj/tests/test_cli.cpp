#include "kahlerdeg/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace kahlerdeg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SemigroupBasis) {
  Result r = run({"semigroup", "--gens", "t^6+t,t^4", "--show", "basis"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[ t^4, t^6+t, t^7+1/2*t^2 ]\n");
  Result g = run({"semigroup", "--gens", "t^6+t,t^4", "--show", "generators"});
  EXPECT_EQ(g.out, "[ 4, 6, 7 ]\n");
}

TEST(Cli, SemigroupFromDegrees) {
  Result r = run({"semigroup", "--degrees", "3,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("frobenius: 5"), std::string::npos);
}

TEST(Cli, ModuleBasisWithTrace) {
  Result r = run({"module-basis", "--algebra", "t^6+t,t^4", "--gens", "t^3,t^4", "--verbose"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-1/2*t^5"), std::string::npos);
  EXPECT_NE(r.out.find("-1/2*t^6"), std::string::npos);
  EXPECT_NE(r.out.find("#I  new generator t^5 of degree 5"), std::string::npos);
  EXPECT_NE(r.out.find("[ t^3, t^4, t^5, t^6 ]\n"), std::string::npos);
}

TEST(Cli, KahlerReport) {
  Result r = run({"kahler", "--x", "t^3+t", "--y", "t^4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("differentials: [ 1, t, t^2 ]"), std::string::npos);
  EXPECT_NE(r.out.find("non-exact: [ 0, 1, 4 ]"), std::string::npos);
  EXPECT_NE(r.out.find("milnor: 6"), std::string::npos);
  EXPECT_NE(r.out.find("tjurina: 3"), std::string::npos);
}

TEST(Cli, JsonAgreesWithText) {
  Result t = run({"kahler", "--x", "t^3", "--y", "t^4+t^2"});
  Result j = run({"kahler", "--x", "t^3", "--y", "t^4+t^2", "--json"});
  ASSERT_EQ(j.code, 0);
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["non_exact"], (std::vector<Int>{1, 4}));
  EXPECT_EQ(doc["milnor"], 6);
  EXPECT_EQ(doc["tjurina"], 4);
  std::string diffs = "differentials: " + render_list(parse_poly_list(
      [&] {
        std::string s;
        for (const auto& d : doc["differentials"]) s += (s.empty() ? "" : ",") + d.get<std::string>();
        return s;
      }()));
  EXPECT_NE(t.out.find(diffs), std::string::npos);
}

TEST(Cli, NormalizeExamples) {
  Result a = run({"normalize", "--x", "t^9+t^5", "--y", "t^4", "--json"});
  ASSERT_EQ(a.code, 0);
  auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["outcome"], "non_exact_witness");
  EXPECT_EQ(doc["witness_degree"], 4);
  EXPECT_EQ(doc["steps"][0]["amount"], "4/9");
  EXPECT_EQ(doc["w"], "-80/9*t^4");
  Result q = run({"normalize", "--x", "t^3", "--y", "t^4"});
  EXPECT_NE(q.out.find("outcome: quasi_homogeneous"), std::string::npos);
}

TEST(Cli, PrecisionExhaustionExitCode) {
  Result r = run({"normalize", "--x", "t^6+2*t", "--y", "t^5", "--precision", "-1"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, IdealOperations) {
  EXPECT_EQ(run({"ideal", "--semigroup", "3,4", "--gens", "3,5", "--op", "relators"}).out, "[ [ 6, 4 ], [ 8, 6 ] ]\n");
  Result over = run({"ideal", "--semigroup", "3,4", "--gens", "2,3", "--op", "over", "--json"});
  auto doc = nlohmann::json::parse(over.out);
  ASSERT_EQ(doc["over_ideals"].size(), 5u);
  EXPECT_EQ(doc["over_ideals"][1]["non_exact"], (std::vector<Int>{0, 1, 4}));
  EXPECT_EQ(run({"ideal", "--semigroup", "3,4", "--gens", "3,5", "--op", "intersect", "--other", "4"}).out,
            "[ 7, 8 ]\n");
  EXPECT_EQ(run({"ideal", "--semigroup", "3,4", "--gens", "5,3,6"}).out, "[ 3, 5 ]\n");
}

TEST(Cli, ClassifyReport) {
  Result r = run({"classify", "--x", "t^3", "--y", "t^4+t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("family: (m,n)=(3,4)"), std::string::npos);
  EXPECT_EQ(r.out.find("violation"), std::string::npos);
}

TEST(Cli, InputErrors) {
  Result p = run({"kahler", "--x", "t^3+*", "--y", "t^4"});
  EXPECT_EQ(p.code, 2);
  EXPECT_NE(p.err.find("position"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"kahler", "--x", "t^3", "--y", "t^4", "--bogus"}).code, 2);
  Result nn = run({"kahler", "--x", "t^4", "--y", "t^6"});
  EXPECT_EQ(nn.code, 2);
  EXPECT_NE(nn.err.find("gcd 2"), std::string::npos);
  EXPECT_EQ(run({"kahler", "--x", "t^3", "--y", "t^3+1"}).code, 2);
  EXPECT_EQ(run({"ideal", "--semigroup", "4,6", "--gens", "1"}).code, 2);
}

TEST(Cli, BatchMode) {
  Result r = run({"batch"}, "semigroup --gens \"t^6+t, t^4\" --show generators\n# comment\n\nideal --semigroup 3,4 --gens 3,5 --op relators\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[ 4, 6, 7 ]\n[ [ 6, 4 ], [ 8, 6 ] ]\n");
  Result bad = run({"batch"}, "kahler --x t^4 --y t^6\nsemigroup --degrees 2,3 --show generators\n");
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.out, "[ 2, 3 ]\n");
}

TEST(Cli, OutputsReparse) {
  Result r = run({"semigroup", "--gens", "t^6+t,t^4", "--show", "basis"});
  std::string body = r.out.substr(2, r.out.size() - 5);
  auto ps = parse_poly_list(body);
  EXPECT_EQ(render_list(ps) + "\n", r.out);
}
