// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "conefix/certify.hpp"
#include "conefix/cone.hpp"
#include "conefix/degree.hpp"
#include "conefix/map.hpp"
#include "conefix/solve.hpp"

namespace conefix {

using json = nlohmann::json;

// Cone spec: {"type":"orthant","dim":N} | {"type":"ice_cream","w":[...],"beta":b}
Cone parse_cone_spec(const json& doc);

// Map spec:
//   {"type":"dense_network","layers":[{"weights":[[...]],"bias":[...],
//                                      "activation":"name"}]}
// | {"type":"builtin","name":"example3|zigzag|piecewise_contraction|rotation_sigmoid"}
// | {"type":"symmetric","inner":<spec>}
MapHandle parse_map_spec(const json& doc);

// Region spec: {"type":"box","low":[...],"high":[...]} |
// {"type":"interval","a":..,"b":..} | {"type":"disk","center":[...],"radius":..}
Region parse_region_spec(const json& doc);

json report_to_json(const PropertyReport& rep);
json report_to_json(const SfProbeReport& rep);
json report_to_json(const DegreeReport& rep);
json report_to_json(const TheoremReport& rep);
json result_to_json(const SolveResult& res);
json located_to_json(const std::vector<LocatedBox>& boxes);
json feasible_to_json(const std::vector<FeasiblePoint>& pts);
json multistart_to_json(const MultistartReport& rep);

// Tabular trace: one row per iteration (k, x components, residual_w,
// order flag, bound).
std::string trace_to_table(const SolveResult& res);

}  // namespace conefix
