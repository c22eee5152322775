#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "pcz.h"

namespace {
const char* kCusp = R"({"polynomial":[{"j":0,"k":2,"c":1},{"j":3,"k":0,"c":-1}]})";
}

TEST_CASE("parse and free") {
  pcz_function* f = nullptr;
  REQUIRE(pcz_function_parse(kCusp, &f) == PCZ_OK);
  REQUIRE(f != nullptr);
  CHECK(std::string(pcz_function_name(f)).empty());
  pcz_function_free(f);
  pcz_function_free(nullptr);
}

TEST_CASE("parse errors leave a message") {
  pcz_function* f = reinterpret_cast<pcz_function*>(1);
  CHECK(pcz_function_parse("{not json", &f) == PCZ_PARSE_ERROR);
  CHECK(f == nullptr);
  CHECK(std::string(pcz_last_error()).size() > 0);
  CHECK(pcz_function_parse(R"({"polynomial":[{"j":1,"k":1,"c":1},{"j":1,"k":1,"c":2}]})", &f) == PCZ_PARSE_ERROR);
  CHECK(std::string(pcz_last_error()).find("duplicate") != std::string::npos);
  CHECK(pcz_function_parse(nullptr, &f) == PCZ_INVALID_ARGUMENT);
}

TEST_CASE("invariants through the handle API") {
  pcz_function* f = nullptr;
  REQUIRE(pcz_function_parse(kCusp, &f) == PCZ_OK);
  pcz_output* out = nullptr;
  REQUIRE(pcz_invariants(f, &out) == PCZ_OK);
  std::string j = pcz_output_json(out);
  CHECK(j.find("\"delta0\": \"6/5\"") != std::string::npos);
  pcz_output_free(out);

  REQUIRE(pcz_resolve(f, 32, &out) == PCZ_OK);
  CHECK(std::string(pcz_output_dot(out)).find("graph") != std::string::npos);
  pcz_output_free(out);
  pcz_function_free(f);
}

TEST_CASE("flat input and null handles") {
  pcz_function* f = nullptr;
  REQUIRE(pcz_function_parse(R"({"polynomial":[]})", &f) == PCZ_OK);
  pcz_output* out = nullptr;
  pcz_status st = pcz_invariants(f, &out);
  CHECK(st == PCZ_FLAT_INPUT);
  CHECK(pcz_exit_code(st) == 2);
  pcz_output_free(out);
  pcz_function_free(f);
  CHECK(pcz_invariants(nullptr, &out) == PCZ_INVALID_ARGUMENT);
}

TEST_CASE("exit codes and names") {
  CHECK(pcz_exit_code(PCZ_OK) == 0);
  CHECK(pcz_exit_code(PCZ_PARSE_ERROR) == 2);
  CHECK(pcz_exit_code(PCZ_VERIFICATION_FAILED) == 3);
  CHECK(pcz_exit_code(PCZ_PRECISION_EXHAUSTED) == 4);
  CHECK(pcz_exit_code(PCZ_BUDGET_EXCEEDED) == 5);
  CHECK(std::string(pcz_status_name(PCZ_BUDGET_EXCEEDED)) == "BudgetExceeded");
}

TEST_CASE("precision setting") {
  long old = pcz_get_precision();
  CHECK(pcz_set_precision(256) == PCZ_OK);
  CHECK(pcz_get_precision() == 256);
  CHECK(pcz_set_precision(8) == PCZ_INVALID_ARGUMENT);
  CHECK(pcz_set_precision(old) == PCZ_OK);
}

TEST_CASE("probe threshold summary") {
  pcz_function* f = nullptr;
  REQUIRE(pcz_function_parse(R"({"polynomial":[{"j":2,"k":0,"c":1},{"j":0,"k":2,"c":1}]})", &f) == PCZ_OK);
  pcz_probe_options o;
  pcz_probe_options_init(&o);
  o.mode = "threshold";
  pcz_output* out = nullptr;
  REQUIRE(pcz_probe(f, &o, &out) == PCZ_OK);
  std::string j = pcz_output_json(out);
  CHECK(j.find("\"pass\": true") != std::string::npos);
  pcz_output_free(out);
  pcz_function_free(f);
}
