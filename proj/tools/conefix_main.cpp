// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.
//
// CLI front end: properties, solvers, degree and theorem reports with stable
// JSON output. Exit codes: 0 pass/converged/reliable, 1 violated/diverged/
// unreliable, 2 usage or spec errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "conefix/json_io.hpp"

namespace cf = conefix;
using cf::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  json doc;
  in >> doc;
  return doc;
}

cf::Vec parse_vec(const std::string& csv) {
  cf::Vec v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
  if (v.empty()) throw std::invalid_argument("empty vector literal");
  return v;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("CONEFIX_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

struct Common {
  std::string map_path, cone_path, region_path;
  uint64_t seed = default_seed();
  long samples = 10000;
  double tol = 1e-10;
  int threads = 0;  // accepted for interface stability; results never depend on it
  std::string low_csv, high_csv;
};

cf::SampleConfig make_config(const Common& c, size_t dim) {
  cf::SampleConfig cfg;
  cfg.seed = c.seed;
  cfg.count = c.samples;
  if (!c.region_path.empty()) {
    const cf::Region r = cf::parse_region_spec(load_json(c.region_path));
    if (r.kind == cf::Region::Kind::Interval) {
      cfg.low = {r.a};
      cfg.high = {r.b};
    } else if (r.kind == cf::Region::Kind::BoxKind) {
      cfg.low = r.box.low;
      cfg.high = r.box.high;
    } else {
      cfg.low = {r.center[0] - r.radius, r.center[1] - r.radius};
      cfg.high = {r.center[0] + r.radius, r.center[1] + r.radius};
    }
  } else if (!c.low_csv.empty() && !c.high_csv.empty()) {
    cfg.low = parse_vec(c.low_csv);
    cfg.high = parse_vec(c.high_csv);
  } else {
    cfg.low = cf::Vec(dim, 0.0);
    cfg.high = cf::Vec(dim, 1.0);
  }
  return cfg;
}

json echo_config(const Common& c, const std::string& verb) {
  return json{{"verb", verb},     {"map", c.map_path}, {"cone", c.cone_path},
              {"region", c.region_path}, {"seed", c.seed},    {"samples", c.samples},
              {"tol", c.tol},     {"threads", c.threads}};
}

int emit(const json& body, int code) {
  std::cout << body.dump(2) << "\n";
  return code;
}

cf::Strength parse_strength(const std::string& s) {
  if (s == "weak" || s == "monotone") return cf::Strength::Weak;
  if (s == "strict") return cf::Strength::Strict;
  if (s == "strong") return cf::Strength::Strong;
  throw std::invalid_argument("unknown strength: " + s);
}

int run_check(const Common& c, const std::string& property, const std::string& strength,
              const std::string& w_csv, const std::string& v_csv, double gamma,
              const std::string& beta_grid_csv) {
  const cf::MapHandle m = cf::parse_map_spec(load_json(c.map_path));
  const cf::Cone cone = c.cone_path.empty() ? cf::Cone::orthant(m.in_dim())
                                            : cf::parse_cone_spec(load_json(c.cone_path));
  cf::SampleConfig cfg = make_config(c, m.in_dim());
  cfg.tol = cf::kBoundaryTol;
  const cf::Strength st = parse_strength(strength);

  json body{{"config", echo_config(c, "check")}};
  bool failed = false;
  if (property == "monotone") {
    const auto rep = cf::check_monotone(m, cone, cfg, st);
    body["report"] = cf::report_to_json(rep);
    failed = rep.violated;
  } else if (property == "sup_monotone") {
    const auto rep = cf::check_sup_monotone(m, cone, cfg, st);
    body["report"] = cf::report_to_json(rep);
    failed = rep.violated;
  } else if (property == "scalable") {
    const auto rep = cf::check_scalable(m, cone, cfg, st);
    body["report"] = cf::report_to_json(rep);
    failed = rep.violated;
  } else if (property == "subhomogeneous") {
    const auto rep = cf::check_subhomogeneous(m, cone, cfg, st);
    body["report"] = cf::report_to_json(rep);
    failed = rep.violated;
  } else if (property == "contractive") {
    const cf::Vec w = w_csv.empty() ? cf::ones(m.in_dim()) : parse_vec(w_csv);
    const auto rep = cf::estimate_contraction(m, cone, w, cfg);
    body["report"] = cf::report_to_json(rep);
    failed = rep.violated;
  } else if (property == "norm_monotone") {
    const cf::Vec v = v_csv.empty() ? cf::ones(m.out_dim()) : parse_vec(v_csv);
    const auto rep = cf::check_norm_monotone(m, cone, v, cfg);
    body["report"] = cf::report_to_json(rep);
    failed = rep.violated;
  } else if (property == "guiding_g") {
    const auto rep = cf::check_guiding_G(m, cfg);
    body["report"] = cf::report_to_json(rep);
    failed = rep.violated;
  } else if (property == "guiding_g2") {
    const auto rep = cf::check_guiding_G2(m, gamma, cfg);
    body["report"] = cf::report_to_json(rep);
    failed = rep.violated;
  } else if (property == "invariant_cone") {
    std::vector<double> grid;
    if (beta_grid_csv.empty()) {
      for (double b = 0.95; b > 0.05; b -= 0.05) grid.push_back(b);
    } else {
      for (double b : parse_vec(beta_grid_csv)) grid.push_back(b);
    }
    const cf::Vec axis = w_csv.empty() ? cf::ones(m.in_dim()) : parse_vec(w_csv);
    const auto res = cf::find_invariant_icecream(m, axis, grid, cfg);
    json verdicts = json::array();
    for (const auto& [b, ok] : res.grid_verdicts)
      verdicts.push_back(json{{"beta", b}, {"passed", ok}});
    body["report"] = json{{"property", "invariant_cone"}, {"grid", verdicts}};
    if (res.beta_star) body["report"]["beta_star"] = *res.beta_star;
    failed = !res.beta_star.has_value();
  } else {
    throw std::invalid_argument("unknown property: " + property);
  }
  return emit(body, failed ? 1 : 0);
}

int run_solve(const Common& c, bool contraction, bool descent, const std::string& w_csv,
              double cc, const std::string& x0_csv, const std::string& from_csv,
              int max_iter, const std::string& format) {
  const cf::MapHandle m = cf::parse_map_spec(load_json(c.map_path));
  const cf::Cone cone = c.cone_path.empty() ? cf::Cone::orthant(m.in_dim())
                                            : cf::parse_cone_spec(load_json(c.cone_path));
  const cf::Vec w = w_csv.empty() ? cf::ones(m.in_dim()) : parse_vec(w_csv);

  cf::SolveResult res;
  if (contraction) {
    const cf::Vec x0 = x0_csv.empty() ? cf::Vec(m.in_dim(), 0.0) : parse_vec(x0_csv);
    res = cf::contraction_solve(m, cone, w, cc, x0, c.tol, max_iter);
  } else if (descent) {
    cf::FeasiblePoint p;
    p.x = parse_vec(from_csv);
    res = cf::monotone_descent(m, cone, p, c.tol, max_iter);
  } else {
    const cf::Vec x0 = x0_csv.empty() ? cf::Vec(m.in_dim(), 0.0) : parse_vec(x0_csv);
    res = cf::iterate(m, x0, c.tol, max_iter, w);
  }
  if (format == "tabular") {
    std::cout << cf::trace_to_table(res);
    return res.trace.status == cf::SolveStatus::Converged ? 0 : 1;
  }
  json body{{"config", echo_config(c, "solve")}, {"result", cf::result_to_json(res)}};
  return emit(body, res.trace.status == cf::SolveStatus::Converged ? 0 : 1);
}

int run_demo(const std::string& name) {
  if (name == "example3") {
    const cf::MapHandle m = cf::MapHandle::builtin("example3");
    const auto boxes = cf::locate_fixed_points(m, cf::Region::interval(0.0, 1.0), 24, 128);
    json body{{"config", json{{"verb", "demo"}, {"name", name}}},
              {"located", cf::located_to_json(boxes)},
              {"interval_degree", cf::report_to_json(cf::degree_1d(m, 0.0, 1.0))}};
    return emit(body, 0);
  }
  if (name == "contraction") {
    const cf::MapHandle m = cf::MapHandle::builtin("piecewise_contraction");
    const auto res = cf::contraction_solve(m, cf::Cone::orthant(1), {1.0}, 0.5, {1.0},
                                           1e-12, 200);
    json body{{"config", json{{"verb", "demo"}, {"name", name}}},
              {"result", cf::result_to_json(res)}};
    return emit(body, res.trace.status == cf::SolveStatus::Converged ? 0 : 1);
  }
  if (name == "zigzag") {
    const cf::MapHandle m = cf::MapHandle::builtin("zigzag");
    cf::SampleConfig cfg = cf::SampleConfig::box({0, 0}, {5, 5}, 20000, default_seed());
    const auto rep = cf::check_monotone(m, cf::Cone::orthant(2), cfg, cf::Strength::Weak);
    json body{{"config", json{{"verb", "demo"}, {"name", name}}},
              {"monotone", cf::report_to_json(rep)},
              {"I(2,0)", cf::builtin_zigzag({2, 0})},
              {"I(4,0)", cf::builtin_zigzag({4, 0})}};
    return emit(body, 0);
  }
  throw std::invalid_argument("unknown demo: " + name + " (try example3, contraction, zigzag)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conefix: fixed points of cone-ordered mappings"};
  app.require_subcommand(1);

  Common c;
  std::string property, strength = "weak", w_csv, v_csv, beta_grid_csv;
  std::string x0_csv, from_csv, format = "structured", theorem, points_json, demo_name;
  double gamma = M_PI / 2.0, cc = 0.5;
  int max_iter = 10000, depth = 20;
  int boundary_samples = 256;
  bool contraction = false, descent = false;

  auto add_common = [&](CLI::App* sub, bool need_map) {
    if (need_map) sub->add_option("--map", c.map_path, "map spec file")->required();
    sub->add_option("--cone", c.cone_path, "cone spec file");
    sub->add_option("--region", c.region_path, "region spec file");
    sub->add_option("--seed", c.seed, "RNG seed (env CONEFIX_SEED)");
    sub->add_option("--samples", c.samples, "sample count");
    sub->add_option("--tol", c.tol, "tolerance");
    sub->add_option("--threads", c.threads, "worker cap (results independent of it)");
    sub->add_option("--low", c.low_csv, "region low, comma separated");
    sub->add_option("--high", c.high_csv, "region high, comma separated");
  };

  CLI::App* chk = app.add_subcommand("check", "certify a mapping property by sampling");
  add_common(chk, true);
  chk->add_option("--property", property)->required();
  chk->add_option("--strength", strength, "weak|strict|strong");
  chk->add_option("--w", w_csv, "direction / axis vector");
  chk->add_option("--v", v_csv, "norm weight vector");
  chk->add_option("--gamma", gamma, "guiding angle for guiding_g2");
  chk->add_option("--beta-grid", beta_grid_csv, "decreasing beta grid for invariant_cone");

  CLI::App* slv = app.add_subcommand("solve", "fixed-point iteration");
  add_common(slv, true);
  slv->add_flag("--contraction", contraction);
  slv->add_flag("--monotone-descent", descent);
  slv->add_option("--w", w_csv, "weighted-norm vector");
  slv->add_option("--c", cc, "contraction constant");
  slv->add_option("--x0", x0_csv, "starting point");
  slv->add_option("--from", from_csv, "feasible starting point for descent");
  slv->add_option("--max-iter", max_iter);
  slv->add_option("--format", format, "structured|tabular");

  CLI::App* deg = app.add_subcommand("degree", "topological degree of I - f over a region");
  add_common(deg, true);
  deg->add_option("--boundary-samples", boundary_samples);

  CLI::App* loc = app.add_subcommand("locate", "subdivision localization of fixed points");
  add_common(loc, true);
  loc->add_option("--depth", depth);
  loc->add_option("--boundary-samples", boundary_samples);

  CLI::App* fea = app.add_subcommand("feasible", "sampled elements of S_f");
  add_common(fea, true);

  CLI::App* thm = app.add_subcommand("theorem", "hypothesis/conclusion report");
  add_common(thm, true);
  thm->add_option("--name", theorem)->required();
  thm->add_option("--points", points_json, "named points as inline JSON or @file");

  CLI::App* dem = app.add_subcommand("demo", "built-in demonstration scenarios");
  dem->add_option("name", demo_name)->required();

  try {
    app.parse(argc, argv);

    if (chk->parsed())
      return run_check(c, property, strength, w_csv, v_csv, gamma, beta_grid_csv);
    if (slv->parsed())
      return run_solve(c, contraction, descent, w_csv, cc, x0_csv, from_csv, max_iter, format);
    if (deg->parsed()) {
      const cf::MapHandle m = cf::parse_map_spec(load_json(c.map_path));
      const cf::Region r = cf::parse_region_spec(load_json(c.region_path));
      cf::DegreeReport rep;
      if (r.kind == cf::Region::Kind::Interval) rep = cf::degree_1d(m, r.a, r.b, c.tol);
      else rep = cf::degree_2d(m, r, boundary_samples, c.tol);
      json body{{"config", echo_config(c, "degree")}, {"report", cf::report_to_json(rep)}};
      return emit(body, rep.reliable ? 0 : 1);
    }
    if (loc->parsed()) {
      const cf::MapHandle m = cf::parse_map_spec(load_json(c.map_path));
      const cf::Region r = cf::parse_region_spec(load_json(c.region_path));
      const auto boxes = cf::locate_fixed_points(m, r, depth, boundary_samples, c.tol);
      json body{{"config", echo_config(c, "locate")}, {"located", cf::located_to_json(boxes)}};
      bool all_resolved = true;
      for (const auto& b : boxes) all_resolved = all_resolved && b.resolved;
      return emit(body, all_resolved ? 0 : 1);
    }
    if (fea->parsed()) {
      const cf::MapHandle m = cf::parse_map_spec(load_json(c.map_path));
      const cf::Cone cone = c.cone_path.empty() ? cf::Cone::orthant(m.in_dim())
                                                : cf::parse_cone_spec(load_json(c.cone_path));
      const auto pts = cf::find_feasible(m, cone, make_config(c, m.in_dim()));
      json body{{"config", echo_config(c, "feasible")},
                {"feasible_points", cf::feasible_to_json(pts)}};
      return emit(body, 0);
    }
    if (thm->parsed()) {
      const cf::MapHandle m = cf::parse_map_spec(load_json(c.map_path));
      const cf::Cone cone = c.cone_path.empty() ? cf::Cone::orthant(m.in_dim())
                                                : cf::parse_cone_spec(load_json(c.cone_path));
      json pts_doc = points_json.empty() ? json::object()
                     : points_json[0] == '@' ? load_json(points_json.substr(1))
                                             : json::parse(points_json);
      std::map<std::string, cf::Vec> pts;
      for (auto& [k, v] : pts_doc.items()) {
        if (v.is_number()) pts[k] = cf::Vec{v.get<double>()};
        else pts[k] = v.get<cf::Vec>();
      }
      const auto rep = cf::check_theorem(m, cone, cf::theorem_from_name(theorem), pts,
                                         make_config(c, m.in_dim()));
      json body{{"config", echo_config(c, "theorem")}, {"report", cf::report_to_json(rep)}};
      return emit(body, rep.hypotheses_ok && rep.conclusion_ok ? 0 : 1);
    }
    if (dem->parsed()) return run_demo(demo_name);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "conefix: " << e.what() << "\n";
    return 2;
  }
}
