#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "contagrid.h"

namespace {

struct Owned {
  char* value = nullptr;
  ~Owned() { cg_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

}  // namespace

TEST_CASE("closure runs through the C interface") {
  cg_trace* trace = nullptr;
  REQUIRE(cg_closure_run(4, 5, "1,1;3,3;4,5", &trace) == CG_OK);
  CHECK(cg_trace_full(trace) == 1);
  int rounds = cg_trace_round_count(trace);
  CHECK(rounds > 0);

  Owned seeds;
  REQUIRE(cg_trace_cells_text(trace, 0, &seeds.value) == CG_OK);
  CHECK(seeds.str() == "1,1;3,3;4,5");

  Owned first_round;
  REQUIRE(cg_trace_cells_text(trace, 1, &first_round.value) == CG_OK);
  CHECK(first_round.str() == "2,2");

  Owned frame0;
  REQUIRE(cg_trace_frame_text(trace, 0, &frame0.value) == CG_OK);
  CHECK(frame0.str() == "S....\n.....\n..S..\n....S\n");

  Owned final_frame;
  REQUIRE(cg_trace_frame_text(trace, rounds, &final_frame.value) == CG_OK);
  CHECK(final_frame.str().find('.') == std::string::npos);

  Owned scenario;
  REQUIRE(cg_trace_scenario_json(trace, &scenario.value) == CG_OK);
  CHECK(scenario.str() == R"({"n":4,"m":5,"seeds":[[1,1],[3,3],[4,5]]})");

  Owned out_of_range;
  CHECK(cg_trace_cells_text(trace, rounds + 1, &out_of_range.value) ==
        CG_ERROR_INVALID_ARGUMENT);
  cg_trace_free(trace);
}

TEST_CASE("stuck configuration") {
  cg_trace* trace = nullptr;
  REQUIRE(cg_closure_run(2, 4, "1,1;2,4", &trace) == CG_OK);
  CHECK(cg_trace_full(trace) == 0);
  CHECK(cg_trace_round_count(trace) == 0);
  cg_trace_free(trace);
}

TEST_CASE("error reporting") {
  cg_trace* trace = nullptr;
  CHECK(cg_closure_run(0, 4, "", &trace) == CG_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(cg_last_error_message()).find("1x1") != std::string::npos);
  CHECK(cg_closure_run(2, 4, "3,1", &trace) == CG_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(cg_status_name(CG_ERROR_BUDGET_EXCEEDED)) == "budget-exceeded");
}

TEST_CASE("gamma through the C interface") {
  int64_t value = 0;
  REQUIRE(cg_gamma_formula(2, 7, &value) == CG_OK);
  CHECK(value == 5);
  REQUIRE(cg_gamma_formula(1, 1, &value) == CG_OK);
  CHECK(value == 1);

  cg_search_options options;
  cg_search_options_init(&options);
  int64_t brute = 0;
  Owned witness;
  REQUIRE(cg_gamma_brute(4, 5, &options, &brute, &witness.value) == CG_OK);
  CHECK(brute == 3);
  CHECK_FALSE(witness.str().empty());
}

TEST_CASE("alpha and beta through the C interface") {
  cg_search_options options;
  cg_search_options_init(&options);

  Owned alpha;
  REQUIRE(cg_alpha_enumerate(2, 3, &options, &alpha.value) == CG_OK);
  auto doc = nlohmann::json::parse(alpha.str());
  CHECK(doc["count"] == 10);
  CHECK(doc["k"] == 3);
  CHECK_FALSE(doc.contains("witnesses"));

  options.witnesses = 1;
  Owned with_witnesses;
  REQUIRE(cg_alpha_enumerate(2, 3, &options, &with_witnesses.value) == CG_OK);
  auto doc2 = nlohmann::json::parse(with_witnesses.str());
  REQUIRE(doc2.contains("witnesses"));
  CHECK(doc2["witnesses"].size() == 10);

  Owned beta;
  REQUIRE(cg_beta_count(1, 5, &options, &beta.value) == CG_OK);
  auto doc3 = nlohmann::json::parse(beta.str());
  CHECK(doc3["count"] == 5);
  CHECK(doc3["k"].is_null());

  options.max_candidates = 10;
  Owned too_big;
  CHECK(cg_alpha_enumerate(4, 5, &options, &too_big.value) == CG_ERROR_BUDGET_EXCEEDED);
}

TEST_CASE("tables through the C interface") {
  cg_search_options options;
  cg_search_options_init(&options);
  Owned csv;
  REQUIRE(cg_table("gamma", 3, 3, "csv", &options, &csv.value) == CG_OK);
  CHECK(csv.str() == "n,m,value\n1,1,1\n1,2,2\n1,3,2\n2,2,2\n2,3,3\n3,3,2\n");

  Owned zero;
  REQUIRE(cg_table("alpha", 0, 0, "csv", &options, &zero.value) == CG_OK);
  CHECK(zero.str() == "n,m,value\n0,0,0\n");

  Owned bad;
  CHECK(cg_table("delta", 3, 3, "csv", &options, &bad.value) == CG_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("verification through the C interface") {
  cg_search_options options;
  cg_search_options_init(&options);
  Owned report;
  Owned summary;
  int32_t failures = -1;
  REQUIRE(cg_verify("tables", 5, 50, &options, &report.value, &summary.value, &failures) == CG_OK);
  CHECK(failures == 0);
  auto doc = nlohmann::json::parse(report.str());
  CHECK(doc["suite"] == "tables");
  CHECK(doc["summary"]["proved-claim-FAIL"] == 0);
  CHECK_FALSE(summary.str().empty());

  Owned bad;
  CHECK(cg_verify("nope", 5, 50, &options, &bad.value, nullptr, nullptr) ==
        CG_ERROR_INVALID_ARGUMENT);
}
