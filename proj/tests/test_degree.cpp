// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include <cmath>

#include <doctest.h>

#include "conefix/degree.hpp"

using namespace conefix;

namespace {

MapHandle affine_1d(double a, double b) {
  DenseLayer l;
  l.weights = {{a}};
  l.bias = {b};
  l.activation = Activation::from_name("identity");
  return MapHandle::network({l});
}

MapHandle constant_2d(double c1, double c2) {
  DenseLayer l;
  l.weights = {{0.0, 0.0}, {0.0, 0.0}};
  l.bias = {c1, c2};
  l.activation = Activation::from_name("identity");
  return MapHandle::network({l});
}

}  // namespace

TEST_CASE("interval degree from endpoint signs") {
  const MapHandle m = MapHandle::builtin("example3");
  CHECK(degree_1d(m, 0.0, 1.0).degree == 1);
  CHECK(degree_1d(m, 0.0, 0.1).degree == 1);    // crossing up at ~0.0224
  CHECK(degree_1d(m, 0.1, 0.6).degree == -1);   // crossing down at ~0.3285
  CHECK(degree_1d(m, 0.6, 1.0).degree == 1);    // crossing up at ~0.9975
  CHECK(degree_1d(m, 0.05, 0.1).degree == 0);   // root-free
  // f(x) = 2x: x - f(x) = -x, sign flips downward through 0
  CHECK(degree_1d(affine_1d(2.0, 0.0), -1.0, 1.0).degree == -1);
}

TEST_CASE("interval degree is additive over partitions") {
  const MapHandle m = MapHandle::builtin("example3");
  const int whole = degree_1d(m, 0.0, 1.0).degree;
  const int parts = degree_1d(m, 0.0, 0.1).degree + degree_1d(m, 0.1, 0.6).degree +
                    degree_1d(m, 0.6, 1.0).degree;
  CHECK(whole == parts);
  CHECK(whole == 1);
}

TEST_CASE("degree is unreliable when a root sits on the boundary") {
  // x - f(x) = -x vanishes at the endpoint 0
  const DegreeReport rep = degree_1d(affine_1d(2.0, 0.0), 0.0, 1.0);
  CHECK_FALSE(rep.reliable);
}

TEST_CASE("winding number of the identity field is 1") {
  // f = const c: x - f(x) = x - c has one simple root at c
  const MapHandle m = constant_2d(0.25, 0.25);
  const DegreeReport inside = degree_2d(m, Region::make_box({0.0, 0.0}, {1.0, 1.0}));
  CHECK(inside.degree == 1);
  CHECK(inside.reliable);
  const DegreeReport disk = degree_2d(m, Region::disk({0.0, 0.0}, 2.0));
  CHECK(disk.degree == 1);
}

TEST_CASE("winding number of the squared field is 2") {
  const MapHandle m = MapHandle::builtin("quadratic_residual");  // x - f(x) = z^2
  CHECK(degree_2d(m, Region::disk({0.0, 0.0}, 1.0)).degree == 2);
  CHECK(degree_2d(m, Region::make_box({-1.0, -1.0}, {1.0, 1.0})).degree == 2);
}

TEST_CASE("winding number of a root-free region is 0") {
  const MapHandle m = constant_2d(0.25, 0.25);
  const DegreeReport rep = degree_2d(m, Region::make_box({1.0, 1.0}, {2.0, 2.0}));
  CHECK(rep.degree == 0);
  CHECK(rep.reliable);
}

TEST_CASE("antipodal field has degree 1 in the plane") {
  // f = 2x: x - f(x) = -x; in 2-D, -I is a rotation by pi, winding 1.
  DenseLayer l;
  l.weights = {{2.0, 0.0}, {0.0, 2.0}};
  l.bias = {0.0, 0.0};
  l.activation = Activation::from_name("identity");
  const MapHandle m = MapHandle::network({l});
  CHECK(degree_2d(m, Region::disk({0.0, 0.0}, 1.0)).degree == 1);
}

TEST_CASE("degree is stable under perturbations below the boundary residual") {
  const Region box = Region::make_box({0.0, 0.0}, {1.0, 1.0});
  const MapHandle m = constant_2d(0.25, 0.25);
  const DegreeReport base = degree_2d(m, box);
  REQUIRE(base.reliable);
  const double eps = 0.4 * base.boundary_min_residual;
  for (const double sgn : {1.0, -1.0}) {
    const MapHandle pert = constant_2d(0.25 + sgn * eps, 0.25 - sgn * eps);
    CHECK(degree_2d(pert, box).degree == base.degree);
  }
  // same story for the degree-2 field
  const MapHandle q = MapHandle::builtin("quadratic_residual");
  const DegreeReport qbase = degree_2d(q, Region::disk({0.0, 0.0}, 1.0));
  CHECK(qbase.degree == 2);
  CHECK(qbase.boundary_min_residual > 0.0);
}

TEST_CASE("locate fixed points of example 3 against the bisection oracle") {
  const MapHandle m = MapHandle::builtin("example3");
  const auto boxes = locate_fixed_points(m, Region::interval(0.0, 1.0), 24, 128);
  REQUIRE(boxes.size() == 3);
  const double oracle[3] = {0.022375, 0.32852, 0.997465};
  const int deg[3] = {1, -1, 1};
  for (int i = 0; i < 3; ++i) {
    CHECK(boxes[i].resolved);
    CHECK(boxes[i].degree == deg[i]);
    CHECK(boxes[i].box.center()[0] == doctest::Approx(oracle[i]).epsilon(1e-4));
    CHECK(boxes[i].box.side() <= 1e-6);
  }
}

TEST_CASE("locate fixed points in the plane") {
  // f = const c has the single fixed point c
  const MapHandle m = constant_2d(0.3, 0.7);
  const auto boxes = locate_fixed_points(m, Region::make_box({0.0, 0.0}, {1.0, 1.0}), 18, 64);
  REQUIRE(boxes.size() == 1);
  CHECK(boxes[0].degree == 1);
  CHECK(boxes[0].box.center()[0] == doctest::Approx(0.3).epsilon(1e-3));
  CHECK(boxes[0].box.center()[1] == doctest::Approx(0.7).epsilon(1e-3));
}

TEST_CASE("locate flags non-isolated fixed points instead of looping") {
  // the identity map: every point is fixed, no box ever resolves
  DenseLayer l;
  l.weights = {{1.0}};
  l.bias = {0.0};
  l.activation = Activation::from_name("identity");
  const MapHandle m = MapHandle::network({l});
  const auto boxes = locate_fixed_points(m, Region::interval(0.0, 1.0), 20, 32);
  CHECK(!boxes.empty());
  bool any_unresolved = false;
  for (const auto& b : boxes) any_unresolved = any_unresolved || !b.resolved;
  CHECK(any_unresolved);
}

TEST_CASE("region constructors validate their inputs") {
  CHECK_THROWS(Region::interval(1.0, 0.0));
  CHECK_THROWS(Region::make_box({0.0, 0.0}, {1.0}));
  CHECK_THROWS(Region::disk({0.0, 0.0}, -1.0));
}
