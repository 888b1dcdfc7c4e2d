// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.
//
// Python bindings. Reports cross the boundary as plain dicts/lists (converted
// from the library's JSON form) so the Python side needs no mirror types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conefix/json_io.hpp"

namespace py = pybind11;
using namespace conefix;

namespace {

py::object to_py(const json& doc) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(doc.dump());
}

json from_py(const py::object& obj) {
  py::object dumps = py::module_::import("json").attr("dumps");
  return json::parse(dumps(obj).cast<std::string>());
}

SampleConfig make_cfg(const Vec& low, const Vec& high, long samples, uint64_t seed) {
  return SampleConfig::box(low, high, samples, seed);
}

Strength strength_from(const std::string& s) {
  if (s == "weak") return Strength::Weak;
  if (s == "strict") return Strength::Strict;
  if (s == "strong") return Strength::Strong;
  throw std::invalid_argument("strength must be weak|strict|strong");
}

Region region_from(const py::object& spec) { return parse_region_spec(from_py(spec)); }

}  // namespace

PYBIND11_MODULE(_conefix, m) {
  m.doc() = "fixed points of cone-ordered mappings";

  py::class_<Cone>(m, "Cone")
      .def_static("orthant", &Cone::orthant, py::arg("dim"))
      .def_static("ice_cream", &Cone::ice_cream, py::arg("axis"), py::arg("beta"))
      .def("contains", &Cone::contains, py::arg("v"), py::arg("interior") = false,
           py::arg("tol") = kBoundaryTol)
      .def("leq", [](const Cone& k, const Vec& x, const Vec& y) { return k.compare(x, y).leq; })
      .def("lt", [](const Cone& k, const Vec& x, const Vec& y) { return k.compare(x, y).lt; })
      .def("ll", [](const Cone& k, const Vec& x, const Vec& y) { return k.compare(x, y).ll; })
      .def_property_readonly("dim", &Cone::dim)
      .def("opening_angle", &Cone::opening_angle)
      .def("solid", &Cone::solid);

  py::class_<MapHandle>(m, "Map")
      .def_static("builtin", &MapHandle::builtin, py::arg("name"))
      .def_static("from_spec", [](const py::object& spec) { return parse_map_spec(from_py(spec)); })
      .def_static("symmetric", &MapHandle::symmetric, py::arg("inner"))
      .def("__call__", &MapHandle::eval)
      .def("eval", &MapHandle::eval)
      .def_property_readonly("in_dim", &MapHandle::in_dim)
      .def_property_readonly("out_dim", &MapHandle::out_dim);

  m.def("lambda_coefficient", &lambda_coefficient, py::arg("beta"));
  m.def("weighted_max_norm", &weighted_max_norm, py::arg("x"), py::arg("v"));
  m.def("gauge_norm", &gauge_norm, py::arg("x"), py::arg("anchor"), py::arg("cone"));
  m.def("delta_K", &delta_K, py::arg("cone"), py::arg("w"), py::arg("resolution") = 4096);

  m.def(
      "check_property",
      [](const MapHandle& f, const Cone& cone, const std::string& property,
         const Vec& low, const Vec& high, long samples, uint64_t seed,
         const std::string& strength, const Vec& w, double gamma) {
        const SampleConfig cfg = make_cfg(low, high, samples, seed);
        const Strength st = strength_from(strength);
        PropertyReport rep;
        if (property == "monotone") rep = check_monotone(f, cone, cfg, st);
        else if (property == "sup_monotone") rep = check_sup_monotone(f, cone, cfg, st);
        else if (property == "scalable") rep = check_scalable(f, cone, cfg, st);
        else if (property == "subhomogeneous") rep = check_subhomogeneous(f, cone, cfg, st);
        else if (property == "contractive")
          rep = estimate_contraction(f, cone, w.empty() ? ones(f.in_dim()) : w, cfg);
        else if (property == "norm_monotone")
          rep = check_norm_monotone(f, cone, w.empty() ? ones(f.out_dim()) : w, cfg);
        else if (property == "guiding_g") rep = check_guiding_G(f, cfg);
        else if (property == "guiding_g2") rep = check_guiding_G2(f, gamma, cfg);
        else throw std::invalid_argument("unknown property: " + property);
        return to_py(report_to_json(rep));
      },
      py::arg("map"), py::arg("cone"), py::arg("property"), py::arg("low"),
      py::arg("high"), py::arg("samples") = 10000, py::arg("seed") = 0,
      py::arg("strength") = "weak", py::arg("w") = Vec{},
      py::arg("gamma") = M_PI / 2.0);

  m.def(
      "find_feasible",
      [](const MapHandle& f, const Cone& cone, const Vec& low, const Vec& high,
         long samples, uint64_t seed) {
        return to_py(feasible_to_json(
            find_feasible(f, cone, make_cfg(low, high, samples, seed))));
      },
      py::arg("map"), py::arg("cone"), py::arg("low"), py::arg("high"),
      py::arg("samples") = 2000, py::arg("seed") = 0);

  m.def(
      "iterate",
      [](const MapHandle& f, const Vec& x0, double tol, int max_iter, const Vec& w) {
        return to_py(result_to_json(
            iterate(f, x0, tol, max_iter, w.empty() ? ones(f.in_dim()) : w)));
      },
      py::arg("map"), py::arg("x0"), py::arg("tol") = 1e-10,
      py::arg("max_iter") = 10000, py::arg("w") = Vec{});

  m.def(
      "contraction_solve",
      [](const MapHandle& f, const Cone& cone, const Vec& w, double c, const Vec& x0,
         double tol, int max_iter) {
        return to_py(result_to_json(contraction_solve(f, cone, w, c, x0, tol, max_iter)));
      },
      py::arg("map"), py::arg("cone"), py::arg("w"), py::arg("c"), py::arg("x0"),
      py::arg("tol") = 1e-10, py::arg("max_iter") = 10000);

  m.def(
      "monotone_descent",
      [](const MapHandle& f, const Cone& cone, const Vec& start, double tol,
         int max_iter) {
        FeasiblePoint p;
        p.x = start;
        return to_py(result_to_json(monotone_descent(f, cone, p, tol, max_iter)));
      },
      py::arg("map"), py::arg("cone"), py::arg("start"), py::arg("tol") = 1e-10,
      py::arg("max_iter") = 10000);

  m.def(
      "degree",
      [](const MapHandle& f, const py::object& region, int boundary_samples, double tol) {
        const Region r = region_from(region);
        const DegreeReport rep = r.kind == Region::Kind::Interval
                                     ? degree_1d(f, r.a, r.b, tol)
                                     : degree_2d(f, r, boundary_samples, tol);
        return to_py(report_to_json(rep));
      },
      py::arg("map"), py::arg("region"), py::arg("boundary_samples") = 256,
      py::arg("tol") = 1e-9);

  m.def(
      "locate_fixed_points",
      [](const MapHandle& f, const py::object& region, int max_depth,
         int boundary_samples, double tol) {
        return to_py(located_to_json(
            locate_fixed_points(f, region_from(region), max_depth, boundary_samples, tol)));
      },
      py::arg("map"), py::arg("region"), py::arg("max_depth") = 20,
      py::arg("boundary_samples") = 128, py::arg("tol") = 1e-9);

  m.def(
      "check_theorem",
      [](const MapHandle& f, const Cone& cone, const std::string& name,
         const std::map<std::string, Vec>& points, const Vec& low, const Vec& high,
         long samples, uint64_t seed) {
        const TheoremReport rep = check_theorem(
            f, cone, theorem_from_name(name), points, make_cfg(low, high, samples, seed));
        return to_py(report_to_json(rep));
      },
      py::arg("map"), py::arg("cone"), py::arg("name"), py::arg("points"),
      py::arg("low"), py::arg("high"), py::arg("samples") = 4000, py::arg("seed") = 0);

  m.def(
      "multistart_uniqueness",
      [](const MapHandle& f, const Vec& low, const Vec& high, int starts, double tol,
         double cluster_radius) {
        return to_py(multistart_to_json(
            multistart_uniqueness(f, low, high, starts, tol, cluster_radius)));
      },
      py::arg("map"), py::arg("low"), py::arg("high"), py::arg("starts") = 16,
      py::arg("tol") = 1e-10, py::arg("cluster_radius") = 1e-6);
}
