// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include <doctest.h>

#include "conefix/degree.hpp"

using namespace conefix;

namespace {

SampleConfig cfg_1d(uint64_t seed = 0) {
  return SampleConfig::box({0.0}, {2.5}, 4000, seed);
}

bool located_near(const TheoremReport& rep, double x, double tol) {
  if (!rep.conclusion_check) return false;
  for (const auto& b : *rep.conclusion_check)
    if (std::fabs(b.box.center()[0] - x) <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("theorem names round trip") {
  for (const char* n : {"degreerzero", "three_fixed_points", "thm5", "thm6", "thm8",
                        "thm9", "guiding_g", "guiding_g2"}) {
    CHECK(theorem_name(theorem_from_name(n)) == n);
  }
  CHECK_THROWS(theorem_from_name("thm42"));
}

TEST_CASE("interior fixed point between a strict subsolution and a feasible point") {
  // The pair (0.3, 0.6): f(0.3) ~ 0.27 < 0.3 and f(0.6) ~ 0.88 > 0.6, so the
  // crossing at ~0.3285 is bracketed strictly between the two points.
  const MapHandle m = MapHandle::builtin("example3");
  std::map<std::string, Vec> pts{{"x_prime", {0.3}}, {"x_second", {0.6}}};
  const TheoremReport rep =
      check_theorem(m, Cone::orthant(1), TheoremId::Thm6, pts, cfg_1d());
  CHECK(rep.hypotheses_ok);
  CHECK(rep.conclusion_ok);
  CHECK(located_near(rep, 0.32852, 1e-3));
}

TEST_CASE("hypothesis failure is reported, not silently passed") {
  // x' = 0.5 is not feasible: f(0.5) ~ 0.73 > 0.5.
  const MapHandle m = MapHandle::builtin("example3");
  std::map<std::string, Vec> pts{{"x_prime", {0.5}}, {"x_second", {0.9}}};
  const TheoremReport rep =
      check_theorem(m, Cone::orthant(1), TheoremId::Thm6, pts, cfg_1d());
  CHECK_FALSE(rep.hypotheses_ok);
  bool some_no = false;
  for (const auto& h : rep.hypotheses)
    some_no = some_no || h.verdict == HypothesisCheck::Verdict::No;
  CHECK(some_no);
}

TEST_CASE("two ordered fixed points from a dominated subsolution") {
  const MapHandle m = MapHandle::builtin("example3");
  std::map<std::string, Vec> pts{{"x_second", {0.1}}, {"x_prime", {2.0}}};
  const TheoremReport rep =
      check_theorem(m, Cone::orthant(1), TheoremId::Thm8, pts, cfg_1d());
  CHECK(rep.hypotheses_ok);
  CHECK(rep.conclusion_ok);
  REQUIRE(rep.conclusion_check.has_value());
  CHECK(rep.conclusion_check->size() >= 2);
}

TEST_CASE("three fixed points from the sandwich configuration") {
  const MapHandle m = MapHandle::builtin("example3");
  std::map<std::string, Vec> pts{
      {"x_prime", {0.1}}, {"x", {0.4}}, {"x_second", {2.0}}};
  const TheoremReport rep = check_theorem(m, Cone::orthant(1),
                                          TheoremId::ThreeFixedPoints, pts, cfg_1d());
  CHECK(rep.hypotheses_ok);
  CHECK(rep.conclusion_ok);
  REQUIRE(rep.conclusion_check.has_value());
  CHECK(rep.conclusion_check->size() >= 3);
  CHECK(located_near(rep, 0.022375, 1e-3));
  CHECK(located_near(rep, 0.32852, 1e-3));
  CHECK(located_near(rep, 0.997465, 1e-3));
}

TEST_CASE("theorem reports are deterministic in the seed") {
  const MapHandle m = MapHandle::builtin("example3");
  std::map<std::string, Vec> pts{{"x_prime", {0.3}}, {"x_second", {0.6}}};
  for (uint64_t seed : {0ull, 1ull, 2ull}) {
    const TheoremReport a =
        check_theorem(m, Cone::orthant(1), TheoremId::Thm6, pts, cfg_1d(seed));
    const TheoremReport b =
        check_theorem(m, Cone::orthant(1), TheoremId::Thm6, pts, cfg_1d(seed));
    CHECK(a.hypotheses_ok == b.hypotheses_ok);
    CHECK(a.conclusion_ok == b.conclusion_ok);
    REQUIRE(a.hypotheses.size() == b.hypotheses.size());
    for (size_t i = 0; i < a.hypotheses.size(); ++i)
      CHECK(a.hypotheses[i].verdict == b.hypotheses[i].verdict);
  }
}

TEST_CASE("missing named points are a spec error") {
  const MapHandle m = MapHandle::builtin("example3");
  CHECK_THROWS(check_theorem(m, Cone::orthant(1), TheoremId::Thm6, {}, cfg_1d()));
}
