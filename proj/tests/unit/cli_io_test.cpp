#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qlb/cli_io.hpp"

using namespace qlb;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Parse, MinimalAbelian) {
  auto doc = parse_document(R"({"dim": 2})");
  EXPECT_EQ(doc.dim, 2);
  EXPECT_TRUE(doc.mu.empty());
  ASSERT_TRUE(doc.gamma && doc.phi);
  EXPECT_TRUE(doc.gamma->empty() && doc.phi->empty());
  auto q = to_structure(doc);
  EXPECT_TRUE(q.gamma.is_zero());
  EXPECT_TRUE(q.phi.is_zero());
}

TEST(Parse, Sl2ExactPath) {
  auto doc = parse_document(R"({"dim": 3, "mu": [[1,2,2,"2"], [1,3,3,"-2"], [2,3,1,"1"]], "r": [[2,3,"1"]]})");
  ASSERT_TRUE(doc.exact());
  auto q = to_structure(doc);
  EXPECT_EQ(q.mu, fx::sl2());
  EXPECT_EQ(q.gamma, fx::sl2_exact().gamma);
  EXPECT_EQ(q.phi, fx::sl2_exact().phi);
}

TEST(Parse, IntegerAndStringValues) {
  auto doc = parse_document(R"({"dim": 2, "mu": [[1, 2, 2, 3]], "gamma": [[1, 2, 1, "-4/6"]]})");
  EXPECT_EQ(doc.mu[0].value, 3);
  EXPECT_EQ((*doc.gamma)[0].value, Scalar(-2, 3));
}

TEST(Parse, Errors) {
  EXPECT_NE(error_of(R"({"dim": 2, "mu": [[1,2,1,"1/0"]]})").find("malformed rational"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "mu": [[1,3,1,"1"]]})").find("out of range"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "mu": [[2,1,1,"1"]]})").find("ascending"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "mu": [[1,1,1,"1"]]})").find("ascending"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "mu": [[1,2,1,"1"],[1,2,1,"2"]]})").find("duplicate"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 3, "phi": [[1,3,2,"1"]]})").find("ascending"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "r": [[1,2,"1"]], "gamma": []})").find("not both"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "dim": 3})").find("duplicate key"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "extra": 1})").find("unknown key"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "mu": [[1,2,1,1.5]]})").find("value must be"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 2, "basis": ["a", "a"]})").find("repeated"), std::string::npos);
  EXPECT_NE(error_of(R"({"dim": 0})").find("dim"), std::string::npos);
}

TEST(Parse, SyntaxErrorHasLineAndColumn) {
  std::string msg = error_of("{\n  \"dim\": 2,\n  \"mu\": [1 2]\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(Serialize, RoundTripCatalog) {
  for (const auto& name : catalog_names()) {
    auto doc = example_catalog(name);
    auto text = serialize(doc);
    auto back = parse_document(text);
    EXPECT_EQ(back, doc) << name;
    EXPECT_EQ(serialize(back), text) << name;
  }
}

TEST(Serialize, CanonicalisesOrderAndZeros) {
  auto a = parse_document(R"({"dim": 3, "mu": [[2,3,1,"2/4"], [1,2,3,"0"], [1,2,2,"1"]]})");
  auto b = parse_document(R"({"dim": 3, "mu": [[1,2,2,1], [2,3,1,"1/2"]]})");
  EXPECT_EQ(serialize(a), serialize(b));
}

TEST(Structure, ExplicitRoundTrip) {
  auto q = fx::sl2_exact();
  auto back = to_structure(from_structure(q));
  EXPECT_EQ(back.mu, q.mu);
  EXPECT_EQ(back.gamma, q.gamma);
  EXPECT_EQ(back.phi, q.phi);
}

TEST(Catalog, UnknownName) { EXPECT_THROW(example_catalog("sl3"), InputError); }

TEST(Catalog, AllPassCheck) {
  for (const auto& name : catalog_names()) {
    auto res = run_check(example_catalog(name));
    EXPECT_EQ(res.exit_code, 0) << name << "\n" << summarize(res.report);
  }
}

TEST(Catalog, QuasitriangularPhi) {
  auto q = to_structure(example_catalog("sl2-quasitriangular"));
  EXPECT_EQ(q.phi, Multivector::from_blade(q.primal(), make_blade({0, 1, 2}), Scalar(3, 4)));
}

TEST(RunCheck, Sl2WithPhiZeroedStillPasses) {
  auto doc = from_structure(fx::sl2_exact());
  doc.phi->clear();
  EXPECT_EQ(run_check(doc).exit_code, 0);
}

TEST(RunCheck, NonCocycleFails) {
  auto doc = example_catalog("sl2-bialgebra");
  doc.gamma->push_back({1, 2, 0, 1});
  auto res = run_check(doc);
  EXPECT_EQ(res.exit_code, 1);
  EXPECT_EQ(res.report["status"], "fail");
}

TEST(RunCheck, ReportIsDeterministic) {
  auto doc = example_catalog("sl2-exact-r");
  EXPECT_EQ(run_check(doc).report.dump(2), run_check(doc).report.dump(2));
}

TEST(RunCheck, SkipsSuitesAboveCap) {
  RunFlags flags;
  flags.suite_max_dim = 2;
  auto res = run_check(example_catalog("sl2-exact-r"), flags);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.report["suites"][1]["status"], "skipped");
}

TEST(RunDouble, RoundTrip) {
  for (const auto& name : {"abelian2", "sl2-exact-r"}) {
    auto res = run_double(example_catalog(name));
    ASSERT_EQ(res.exit_code, 0) << summarize(res.report);
    ASSERT_TRUE(res.emitted);
    auto text = serialize(*res.emitted);
    EXPECT_EQ(text, serialize(*run_double(example_catalog(name)).emitted));
    auto again = run_check(parse_document(text));
    EXPECT_EQ(again.exit_code, 0) << summarize(again.report);
  }
  auto ab = run_double(example_catalog("abelian2"));
  EXPECT_TRUE(ab.emitted->mu.empty());
}

TEST(RunRepVerify, RankAndCap) {
  auto res = run_rep_verify(example_catalog("abelian2"));
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.report["artifacts"]["q_rank"], 16);
  auto sl2 = run_rep_verify(example_catalog("sl2-exact-r"));
  EXPECT_EQ(sl2.exit_code, 0);
  EXPECT_EQ(sl2.report["artifacts"]["q_rank"], 64);
  InputDocument big = parse_document(R"({"dim": 8})");
  EXPECT_THROW(run_rep_verify(big), InputError);
  RunFlags flags;
  flags.max_dim = 2;
  EXPECT_THROW(run_rep_verify(example_catalog("sl2-exact-r"), flags), InputError);
}
