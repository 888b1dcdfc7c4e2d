// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include "conefix/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace conefix {

namespace {

Vec to_vec(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  Vec v;
  for (const auto& e : j) {
    if (!e.is_number()) throw std::invalid_argument(std::string(what) + " must be numeric");
    v.push_back(e.get<double>());
  }
  return v;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Cone parse_cone_spec(const json& doc) {
  const std::string type = doc.value("type", "");
  if (type == "orthant") {
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
      throw std::invalid_argument("orthant spec needs an integer 'dim'");
    return Cone::orthant(doc["dim"].get<size_t>());
  }
  if (type == "ice_cream") {
    if (!doc.contains("w") || !doc.contains("beta"))
      throw std::invalid_argument("ice_cream spec needs 'w' and 'beta'");
    return Cone::ice_cream(to_vec(doc["w"], "w"), doc["beta"].get<double>());
  }
  throw std::invalid_argument("unknown cone type: '" + type + "'");
}

MapHandle parse_map_spec(const json& doc) {
  const std::string type = doc.value("type", "");
  if (type == "builtin") {
    if (!doc.contains("name")) throw std::invalid_argument("builtin spec needs 'name'");
    return MapHandle::builtin(doc["name"].get<std::string>());
  }
  if (type == "symmetric") {
    if (!doc.contains("inner")) throw std::invalid_argument("symmetric spec needs 'inner'");
    return MapHandle::symmetric(parse_map_spec(doc["inner"]));
  }
  if (type == "dense_network") {
    if (!doc.contains("layers") || !doc["layers"].is_array() || doc["layers"].empty())
      throw std::invalid_argument("dense_network spec needs a nonempty 'layers' array");
    std::vector<DenseLayer> layers;
    for (const auto& jl : doc["layers"]) {
      DenseLayer layer;
      if (!jl.contains("weights") || !jl["weights"].is_array())
        throw std::invalid_argument("layer needs a 'weights' matrix");
      for (const auto& row : jl["weights"])
        layer.weights.push_back(to_vec(row, "weights row"));
      layer.bias = to_vec(jl.at("bias"), "bias");
      const double param = jl.value("param", 1.0);
      layer.activation = Activation::from_name(jl.value("activation", "identity"), param);
      layers.push_back(std::move(layer));
    }
    return MapHandle::network(std::move(layers));  // validates shapes and chaining
  }
  throw std::invalid_argument("unknown map type: '" + type + "'");
}

Region parse_region_spec(const json& doc) {
  const std::string type = doc.value("type", "");
  if (type == "interval")
    return Region::interval(doc.at("a").get<double>(), doc.at("b").get<double>());
  if (type == "box")
    return Region::make_box(to_vec(doc.at("low"), "low"), to_vec(doc.at("high"), "high"));
  if (type == "disk")
    return Region::disk(to_vec(doc.at("center"), "center"), doc.at("radius").get<double>());
  throw std::invalid_argument("unknown region type: '" + type + "'");
}

namespace {

json config_to_json(const SampleConfig& cfg) {
  return json{{"seed", cfg.seed},       {"count", cfg.count},
              {"low", cfg.low},         {"high", cfg.high},
              {"alpha_lo", cfg.alpha_lo}, {"alpha_hi", cfg.alpha_hi},
              {"theta_lo", cfg.theta_lo}, {"theta_hi", cfg.theta_hi},
              {"tol", cfg.tol}};
}

json witness_to_json(const Witness& w) {
  json j{{"x", w.x}, {"lhs", w.lhs}, {"rhs", w.rhs}};
  if (!w.x_prime.empty()) j["x_prime"] = w.x_prime;
  if (w.factor) j["factor"] = *w.factor;
  return j;
}

}  // namespace

json report_to_json(const PropertyReport& rep) {
  json j{{"property", rep.property},
         {"strength", strength_name(rep.strength)},
         {"verdict", rep.violated ? "violated" : "no_violation_found"},
         {"samples_tested", rep.samples_tested},
         {"config", config_to_json(rep.config)}};
  if (rep.witness) j["witness"] = witness_to_json(*rep.witness);
  if (!rep.stats.empty()) j["stats"] = rep.stats;
  return j;
}

json report_to_json(const SfProbeReport& rep) {
  json radii = json::array();
  for (const auto& [r, found] : rep.feasible_at_radius)
    radii.push_back(json{{"radius", r}, {"feasible_point_found", found}});
  json j{{"property", "sf_bounded_probe"},
         {"per_radius", radii},
         {"exit_condition_at_top", rep.exit_condition_at_top},
         {"looks_bounded", rep.looks_bounded},
         {"samples_per_radius", rep.samples_per_radius}};
  if (rep.largest_feasible_radius) j["largest_feasible_radius"] = *rep.largest_feasible_radius;
  return j;
}

json report_to_json(const DegreeReport& rep) {
  return json{{"degree", rep.degree},
              {"boundary_min_residual", rep.boundary_min_residual},
              {"samples", rep.samples},
              {"reliable", rep.reliable}};
}

json located_to_json(const std::vector<LocatedBox>& boxes) {
  json arr = json::array();
  for (const auto& lb : boxes)
    arr.push_back(json{{"low", lb.box.low},
                       {"high", lb.box.high},
                       {"center", lb.box.center()},
                       {"degree", lb.degree},
                       {"resolved", lb.resolved}});
  return arr;
}

json report_to_json(const TheoremReport& rep) {
  json hyp = json::array();
  for (const auto& h : rep.hypotheses) {
    const char* v = h.verdict == HypothesisCheck::Verdict::Yes ? "yes"
                    : h.verdict == HypothesisCheck::Verdict::No ? "no"
                                                                : "sampled_only";
    hyp.push_back(json{{"name", h.name}, {"verdict", v}, {"detail", h.detail}});
  }
  json j{{"theorem", theorem_name(rep.theorem)},
         {"hypotheses", hyp},
         {"hypotheses_ok", rep.hypotheses_ok},
         {"conclusion_ok", rep.conclusion_ok}};
  if (rep.conclusion_check) j["located"] = located_to_json(*rep.conclusion_check);
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

json result_to_json(const SolveResult& res) {
  json j{{"status", status_name(res.trace.status)},
         {"fixed_point", res.fixed_point},
         {"iterations", res.trace.residual_w.size()},
         {"final_residual", res.final_residual},
         {"positive_at_zero", res.positive_at_zero}};
  if (res.certified_rate) j["certified_rate"] = *res.certified_rate;
  if (!res.trace.diagnostic.empty()) j["diagnostic"] = res.trace.diagnostic;
  return j;
}

json feasible_to_json(const std::vector<FeasiblePoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts)
    arr.push_back(json{{"x", p.x}, {"grade", grade_name(p.grade)}, {"residual", p.residual}});
  return arr;
}

json multistart_to_json(const MultistartReport& rep) {
  return json{{"distinct_limits", rep.distinct_limits},
              {"cluster_sizes", rep.cluster_sizes},
              {"non_converged", rep.non_converged},
              {"non_isolated_suspected", rep.non_isolated_suspected}};
}

std::string trace_to_table(const SolveResult& res) {
  std::ostringstream os;
  os << "k";
  for (size_t i = 0; i < res.fixed_point.size(); ++i) os << "\tx" << i;
  os << "\tresidual_w\torder_flag\tbound\n";
  const auto& tr = res.trace;
  for (size_t k = 0; k < tr.iterates.size(); ++k) {
    os << k;
    for (double v : tr.iterates[k]) os << "\t" << fmt17(v);
    os << "\t" << (k > 0 && k - 1 < tr.residual_w.size() ? fmt17(tr.residual_w[k - 1]) : "-");
    os << "\t" << (k > 0 && k - 1 < tr.order_descending.size()
                       ? (tr.order_descending[k - 1] ? "1" : "0")
                       : "-");
    os << "\t" << (k < tr.bound_certificate.size() ? fmt17(tr.bound_certificate[k]) : "-");
    os << "\n";
  }
  return os.str();
}

}  // namespace conefix
