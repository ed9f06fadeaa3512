#include <doctest.h>

#include "mtt/verify.hpp"

using mtt::Index;
using mtt::Json;
using mtt::Mutation;
using mtt::VerifyConfig;

namespace {

VerifyConfig small_config() {
  VerifyConfig cfg;
  cfg.seed = 424242;
  cfg.n_min = 2;
  cfg.n_max = 4;
  cfg.instances = 5;
  cfg.symbolic_n_max = 4;
  cfg.numeric = true;
  cfg.symbolic = true;
  cfg.derivatives = true;
  cfg.nonsymmetric = true;
  return cfg;
}

}  // namespace

TEST_CASE("mutation names round-trip") {
  for (const auto m : {Mutation::kNone, Mutation::kFlipCofactorSign,
                       Mutation::kSkipContractRelabel}) {
    CHECK(mtt::parse_mutation(mtt::to_string(m)) == m);
  }
  CHECK_FALSE(mtt::parse_mutation("bogus").has_value());
}

TEST_CASE("fnv1a digest is the documented function") {
  CHECK(mtt::fnv1a_digest("") == "fnv1a:cbf29ce484222325");  // offset basis
  CHECK(mtt::fnv1a_digest("a") != mtt::fnv1a_digest("b"));
  CHECK(mtt::fnv1a_digest("seed=1") == mtt::fnv1a_digest("seed=1"));
}

TEST_CASE("all suites pass at small parameters") {
  const mtt::RunReport report = mtt::run_verification_suite(small_config());
  CHECK(report.all_passed);
  CHECK(report.command == "verify numeric+symbolic+derivatives+nonsymmetric");
  REQUIRE(report.results.contains("suites"));
  CHECK(report.results["suites"].size() == 7);
  for (const auto& suite : report.results["suites"]) {
    CHECK(suite["passed"].get<bool>());
    CHECK(suite["failures"].empty());
    CHECK(suite["checks"].get<std::uint64_t>() > 0);
  }
}

TEST_CASE("fixed seed gives byte-identical reports") {
  const auto a = mtt::run_verification_suite(small_config());
  const auto b = mtt::run_verification_suite(small_config());
  CHECK(a == b);
  CHECK(mtt::to_json(a).dump() == mtt::to_json(b).dump());
}

TEST_CASE("report serialization round-trips") {
  const auto report = mtt::run_verification_suite(small_config());
  const auto back = mtt::run_report_from_json(mtt::to_json(report));
  CHECK(back == report);
  CHECK(mtt::to_json(back).dump(2) == mtt::to_json(report).dump(2));
}

TEST_CASE("flipped cofactor sign fails the numeric suite with a witness") {
  const auto suite = mtt::numeric_identity_suite(1, 2, 4, 5,
                                            Mutation::kFlipCofactorSign);
  CHECK_FALSE(suite.passed);
  REQUIRE(!suite.failures.empty());
  const Json& w = suite.failures.front();
  CHECK(w["identity"] == "identity_numeric");
  CHECK(w["left"] != w["right"]);
  CHECK(suite.failures.size() <= 5);

  VerifyConfig cfg = small_config();
  cfg.mutation = Mutation::kFlipCofactorSign;
  CHECK_FALSE(mtt::run_verification_suite(cfg).all_passed);
}

TEST_CASE("skipped relabeling fails the fiber suite with a witness") {
  const auto suite =
      mtt::fiber_suite(1, 3, 4, Mutation::kSkipContractRelabel);
  CHECK_FALSE(suite.passed);
  REQUIRE(!suite.failures.empty());
  CHECK(suite.failures.front()["identity"] == "fiber_bruteforce");

  // the unmutated suite passes on the same inputs
  CHECK(mtt::fiber_suite(1, 3, 4, Mutation::kNone).passed);
}

TEST_CASE("base case suite covers the full range") {
  const auto suite = mtt::base_case_suite(2, 8);
  CHECK(suite.passed);
  CHECK(suite.checks == 14);
}

TEST_CASE("human rendering reflects pass state") {
  const auto report = mtt::run_verification_suite(small_config());
  const std::string text = mtt::render_human(report);
  CHECK(text.find("overall: PASS") != std::string::npos);
  CHECK(text.find("identity_numeric") != std::string::npos);
  CHECK(text.find("elapsed") == std::string::npos);  // human channel only
}

TEST_CASE("witness cap limits stored failures") {
  const auto suite = mtt::numeric_identity_suite(
      1, 2, 3, 50, Mutation::kFlipCofactorSign, /*max_witnesses=*/2);
  CHECK_FALSE(suite.passed);
  CHECK(suite.failures.size() == 2);
  CHECK(suite.checks == 100);
}
