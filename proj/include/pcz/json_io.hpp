#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pcz/blowup.hpp"
#include "pcz/function.hpp"
#include "pcz/newton.hpp"
#include "pcz/numeric.hpp"
#include "pcz/zeta.hpp"

namespace pcz {

using json = nlohmann::json;

// {"polynomial":[{j,k,c}], "flat_terms":[{c,x_power,y_power,p[,w]}], "name"?}
// Coefficients are "num/den" strings or integers. Throws ParseError.
BivariateFunction parse_function_spec(const json& j);
BivariateFunction parse_function_spec(const std::string& text);
json function_spec_json(const BivariateFunction& f);

json newton_polygon_json(const NewtonPolygon& np);
json invariants_json(const BivariateFunction& f);
json progression_json(const ArithmeticProgression& p);
json pole_report_json(const PoleReport& r);
json tree_json(const ResolutionTree& t, const std::vector<VerifyReport>& checks, bool graph_ok,
               const std::string& graph_why);
json quadrature_json(const QuadratureResult& q);

std::string quadrature_csv_header();
std::string quadrature_csv_row(double sigma, const QuadratureResult& q);

}  // namespace pcz
