#include "doctest.h"
#include "pcz/commands.hpp"
#include "pcz/errors.hpp"
#include "pcz/json_io.hpp"

using namespace pcz;

namespace {
const char* kCusp = R"({"name":"cusp","polynomial":[{"j":0,"k":2,"c":1},{"j":3,"k":0,"c":"-1"}]})";

ErrorCode code_of(const std::string& text) {
  try {
    parse_function_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("parse a function description") {
  auto f = parse_function_spec(std::string(kCusp));
  CHECK(f.name == "cusp");
  CHECK(f.poly.coeff(0, 2) == Rational(1));
  CHECK(f.poly.coeff(3, 0) == Rational(-1));
  auto g = parse_function_spec(std::string(
      R"({"polynomial":[{"j":1,"k":2,"c":"1/2"}],"flat_terms":[{"c":1,"x_power":1,"y_power":0,"p":2}]})"));
  REQUIRE(g.flats.size() == 1);
  CHECK(g.flats[0].w == 1);
  CHECK(g.poly.coeff(1, 2) == Rational(1, 2));
}

TEST_CASE("malformed input is a parse error") {
  CHECK(code_of("{") == ErrorCode::ParseError);
  CHECK(code_of("[]") == ErrorCode::ParseError);
  CHECK(code_of(R"({"polynomial":[{"j":0,"k":2}]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"polynomial":[{"j":-1,"k":2,"c":1}]})") == ErrorCode::ParseError);
  CHECK(code_of(R"({"polynomial":[{"j":0,"k":2,"c":1.5}]})") == ErrorCode::ParseError);
}

TEST_CASE("duplicate monomials are rejected") {
  CHECK(code_of(R"({"polynomial":[{"j":0,"k":2,"c":1},{"j":0,"k":2,"c":3}]})") == ErrorCode::ParseError);
}

TEST_CASE("json round trip") {
  auto f = parse_function_spec(std::string(
      R"({"name":"g","polynomial":[{"j":1,"k":2,"c":"3/4"},{"j":5,"k":0,"c":-2}],"flat_terms":[{"c":"1/3","x_power":1,"y_power":0,"p":2,"w":2}]})"));
  auto g = parse_function_spec(function_spec_json(f));
  CHECK(g.poly == f.poly);
  CHECK(g.name == f.name);
  REQUIRE(g.flats.size() == 1);
  CHECK(g.flats[0].same_shape(f.flats[0]));
  CHECK(g.flats[0].c == f.flats[0].c);
}

TEST_CASE("invariants json") {
  auto j = invariants_json(parse_function_spec(std::string(kCusp)));
  CHECK(j["d"] == "6/5");
  CHECK(j["delta0"] == "6/5");
  CHECK(j["mu0"] == 1);
  CHECK(j["newton_polygon"]["vertices"].size() == 2);
}

TEST_CASE("commands and exit codes") {
  auto f = parse_function_spec(std::string(kCusp));
  auto r = cmd_resolve(f, 32);
  CHECK_FALSE(r.error.has_value());
  CHECK(r.out["verified"] == true);
  CHECK(r.out["divisor_graph_ok"] == true);
  CHECK(r.dot.find("graph") != std::string::npos);

  auto p = cmd_poles(f, 32);
  CHECK(p.out["h0"] == "5/6");

  CHECK_THROWS_AS(cmd_invariants(BivariateFunction()), Error);

  CHECK(exit_code_for(ErrorCode::ParseError) == 2);
  CHECK(exit_code_for(ErrorCode::FlatInput) == 2);
  CHECK(exit_code_for(ErrorCode::VerificationFailed) == 3);
  CHECK(exit_code_for(ErrorCode::PrecisionExhausted) == 4);
  CHECK(exit_code_for(ErrorCode::BudgetExceeded) == 5);
  CHECK(exit_code_for(ErrorCode::InvalidArgument) == 1);
}
