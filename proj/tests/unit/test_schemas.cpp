#include <doctest.h>

#include <doekit/fetcher.hpp>
#include <doekit/ingest.hpp>
#include <doekit/mine.hpp>
#include <doekit/report.hpp>
#include <doekit/scenario.hpp>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fixture_repo.hpp"
#include "minischema.hpp"

using namespace doekit;

namespace {

nlohmann::json load_schema(const std::string& name) {
  std::ifstream in(std::string(DOEKIT_DOCS_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

void expect_valid(const nlohmann::json& schema, const nlohmann::json& doc) {
  auto violations = testsupport::validate_schema(schema, doc);
  for (const auto& v : violations) MESSAGE(v);
  CHECK(violations.empty());
}

struct TrioReports {
  ContributionLedger ledger;
  ExpertiseMatrix matrix;
  TruckFactorResult tf;
};

const TrioReports& trio() {
  static TrioReports cached = [] {
    auto dir = testsupport::make_temp_dir("schema_trio");
    auto repo = testsupport::build_trio_repo(dir);
    TrioReports r;
    r.ledger = ingest_repository(repo.string());
    r.matrix = compute_matrix(r.ledger);
    r.tf = compute_truck_factor(identify_experts(r.matrix));
    return r;
  }();
  return cached;
}

const nlohmann::json kEcho = {{"repo", "trio"}, {"seed", 0}};

} // namespace

TEST_CASE("ledger report matches its schema") {
  expect_valid(load_schema("ledger.schema.json"),
               ledger_report(trio().ledger, kEcho));
}

TEST_CASE("matrix report matches its schema") {
  expect_valid(load_schema("matrix.schema.json"),
               matrix_report(trio().ledger, trio().matrix, kEcho));
}

TEST_CASE("truck factor report matches its schema") {
  expect_valid(load_schema("truck_factor_report.schema.json"),
               truck_factor_full_report(trio().ledger, trio().tf, {}, 0.5, kEcho));
}

TEST_CASE("simulate report matches its schema") {
  auto entries = run_sweep(trio().ledger, {0.1, 0.5}, 0.39, 7);
  expect_valid(load_schema("simulate_report.schema.json"),
               simulate_report(trio().ledger, entries, kEcho));
}

TEST_CASE("mine report matches its schema, with and without stats") {
  const std::string fixtures = DOEKIT_FIXTURES_DIR;
  MineConfig config;
  config.corpus_dir = fixtures + "/corpus";
  config.fixtures_dir = fixtures + "/links";
  FixtureFetcher fetcher(fixtures + "/links");
  auto outcome = run_mine(config, fetcher);
  auto schema = load_schema("mine_summary.schema.json");
  expect_valid(schema, mine_report(outcome, kEcho));

  MineOutcome empty;
  expect_valid(schema, mine_report(empty, kEcho)); // copy_stats is null here
}

TEST_CASE("quartile summary matches its schema") {
  expect_valid(load_schema("quartile_summary.schema.json"),
               stats::quartile_summary_to_json(
                   stats::quartile_summary({0.1, 0.4, 0.9})));
}

TEST_CASE("the validator actually rejects broken documents") {
  auto schema = load_schema("quartile_summary.schema.json");
  nlohmann::json good = {{"q1", 0.1}, {"q2", 0.2}, {"q3", 0.3},
                         {"mean", 0.2}, {"n", 3}};
  CHECK(testsupport::validate_schema(schema, good).empty());

  nlohmann::json missing = good;
  missing.erase("mean");
  CHECK_FALSE(testsupport::validate_schema(schema, missing).empty());

  nlohmann::json extra = good;
  extra["surprise"] = 1;
  CHECK_FALSE(testsupport::validate_schema(schema, extra).empty());

  nlohmann::json wrong_type = good;
  wrong_type["q1"] = "tiny";
  CHECK_FALSE(testsupport::validate_schema(schema, wrong_type).empty());

  nlohmann::json below_min = good;
  below_min["n"] = 0;
  CHECK_FALSE(testsupport::validate_schema(schema, below_min).empty());
}
