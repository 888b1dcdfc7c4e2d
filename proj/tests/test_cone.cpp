// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include <cmath>
#include <random>

#include <doctest.h>

#include "conefix/cone.hpp"

using namespace conefix;

namespace {

// Direct membership test of the 2-D ice-cream cone with axis (1,1):
// <v,w> >= beta ||v|| ||w||, evaluated without the Lambda reduction.
bool direct_leq_2d(double beta, const Vec& x, const Vec& y) {
  const double d1 = y[0] - x[0], d2 = y[1] - x[1];
  return d1 + d2 >= beta * std::sqrt(2.0) * std::sqrt(d1 * d1 + d2 * d2);
}

Vec rand_vec(std::mt19937_64& g, size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vec v(n);
  for (auto& vi : v) vi = u(g);
  return v;
}

}  // namespace

TEST_CASE("orthant order axioms on random triples") {
  const Cone K = Cone::orthant(3);
  std::mt19937_64 g(1);
  for (int i = 0; i < 10000; ++i) {
    const Vec x = rand_vec(g, 3, -2, 2), y = rand_vec(g, 3, -2, 2), z = rand_vec(g, 3, -2, 2);
    CHECK(K.compare(x, x).leq);        // reflexive
    CHECK_FALSE(K.compare(x, x).lt);   // irreflexive strict part
    if (K.compare(x, y).leq && K.compare(y, z).leq) CHECK(K.compare(x, z).leq);
    if (K.compare(x, y).leq && K.compare(y, x).leq) {
      for (size_t k = 0; k < 3; ++k) CHECK(x[k] == doctest::Approx(y[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("ice-cream order axioms and pointedness") {
  const Cone K = Cone::ice_cream({1.0, 1.0}, 0.5);
  std::mt19937_64 g(2);
  for (int i = 0; i < 10000; ++i) {
    const Vec x = rand_vec(g, 2, -2, 2), y = rand_vec(g, 2, -2, 2), z = rand_vec(g, 2, -2, 2);
    CHECK(K.compare(x, x).leq);
    if (K.compare(x, y).leq && K.compare(y, z).leq) CHECK(K.compare(x, z).leq);
    // pointed: v in K and -v in K forces v ~ 0
    const Vec v = sub(y, x);
    if (K.contains(v, false, 0.0) && K.contains(scale(-1.0, v), false, 0.0))
      CHECK(norm2(v) == doctest::Approx(0.0));
  }
  CHECK(K.solid());
  CHECK(K.contains({1.0, 1.0}, true));
  CHECK_FALSE(K.contains({0.0, 0.0}, true));
}

TEST_CASE("interior relation implies strict implies weak") {
  const Cone K = Cone::ice_cream({1.0, 1.0}, 0.6);
  std::mt19937_64 g(3);
  for (int i = 0; i < 5000; ++i) {
    const Vec x = rand_vec(g, 2, -2, 2), y = rand_vec(g, 2, -2, 2);
    const OrderRelation r = K.compare(x, y);
    if (r.ll) CHECK(r.lt);
    if (r.lt) CHECK(r.leq);
  }
}

TEST_CASE("lambda coefficient values") {
  CHECK(lambda_coefficient(std::sqrt(2.0) / 2.0) == doctest::Approx(0.0).epsilon(1e-12));
  // beta = 0.5: g = sqrt(2)/2, 1-g^2 = 1/2, Lambda = (-1 + sqrt(3)/2) / (1/2)
  CHECK(lambda_coefficient(0.5) ==
        doctest::Approx(-2.0 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(lambda_coefficient(0.1) < lambda_coefficient(0.5));  // monotone in beta
}

TEST_CASE("Lambda reduction agrees with the direct membership test") {
  // 1e5 pairs per beta, disagreements only allowed inside a 1e-12 band around
  // the cone boundary.
  std::mt19937_64 g(4);
  for (double beta : {0.1, 0.3, 0.5, std::sqrt(2.0) / 2.0}) {
    const Cone K = Cone::ice_cream({1.0, 1.0}, beta);
    long disagreements = 0;
    for (int i = 0; i < 100000; ++i) {
      const Vec x = rand_vec(g, 2, -3, 3), y = rand_vec(g, 2, -3, 3);
      const Vec d = sub(y, x);
      const double margin =
          (d[0] + d[1]) - beta * std::sqrt(2.0) * norm2(d);  // boundary distance proxy
      if (std::fabs(margin) <= 1e-12) continue;
      if (leq_lambda_2d(beta, x, y, 0.0) != direct_leq_2d(beta, x, y)) ++disagreements;
      if (leq_lambda_2d(beta, x, y, 0.0) != K.compare(x, y, 0.0).leq) ++disagreements;
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("componentwise sup and inf are the orthant lattice bounds") {
  std::mt19937_64 g(5);
  const Cone K = Cone::orthant(4);
  for (int i = 0; i < 2000; ++i) {
    const Vec x = rand_vec(g, 4, -1, 1), y = rand_vec(g, 4, -1, 1);
    const Vec s = sup_orthant(x, y), m = inf_orthant(x, y);
    CHECK(K.compare(x, s).leq);
    CHECK(K.compare(y, s).leq);
    CHECK(K.compare(m, x).leq);
    CHECK(K.compare(m, y).leq);
    // least upper bound: any other upper bound dominates s
    const Vec u = add(s, rand_vec(g, 4, 0, 1));
    CHECK(K.compare(s, u).leq);
  }
}

TEST_CASE("weighted max norm axioms") {
  const Vec v{1.0, 2.0, 0.5};
  std::mt19937_64 g(6);
  for (int i = 0; i < 5000; ++i) {
    const Vec x = rand_vec(g, 3, -5, 5), y = rand_vec(g, 3, -5, 5);
    std::uniform_real_distribution<double> u(-3, 3);
    const double a = u(g);
    CHECK(weighted_max_norm(x, v) >= 0.0);
    CHECK(weighted_max_norm(scale(a, x), v) ==
          doctest::Approx(std::fabs(a) * weighted_max_norm(x, v)).epsilon(1e-12));
    CHECK(weighted_max_norm(add(x, y), v) <=
          weighted_max_norm(x, v) + weighted_max_norm(y, v) + 1e-12);
  }
  CHECK(weighted_max_norm({0, 0, 0}, v) == 0.0);
  CHECK(weighted_max_norm({1, 4, 1}, v) == doctest::Approx(2.0));
}

TEST_CASE("gauge of the orthant order body is the weighted max norm") {
  const Cone K = Cone::orthant(2);
  const Vec anchor{1.0, 2.0};
  // D(anchor) for the orthant is the box [-1,1] x [-2,2]
  CHECK(gauge_norm({1.0, 2.0}, anchor, K) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(gauge_norm({0.5, 1.0}, anchor, K) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(gauge_norm({2.0, 0.0}, anchor, K) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(gauge_norm({0.0, 3.0}, anchor, K) == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(gauge_norm({0.0, 0.0}, anchor, K) == doctest::Approx(0.0).epsilon(1e-10));

  std::mt19937_64 g(7);
  for (int i = 0; i < 3000; ++i) {
    const Vec x = rand_vec(g, 2, -4, 4);
    CHECK(gauge_norm(x, anchor, K) ==
          doctest::Approx(weighted_max_norm(x, anchor)).epsilon(1e-8));
  }
}

TEST_CASE("gauge axioms for an ice-cream order body") {
  const Cone K = Cone::ice_cream({1.0, 1.0}, 0.3);
  const Vec anchor{1.0, 1.0};
  std::mt19937_64 g(8);
  for (int i = 0; i < 1000; ++i) {
    const Vec x = rand_vec(g, 2, -2, 2);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    const double a = u(g);
    const double gx = gauge_norm(x, anchor, K);
    CHECK(gx >= 0.0);
    CHECK(gauge_norm(scale(a, x), anchor, K) == doctest::Approx(a * gx).epsilon(1e-7));
    // unit ball characterization
    if (gx < 1.0 - 1e-9) CHECK(in_order_body(x, anchor, K, 1e-9));
    if (gx > 1.0 + 1e-9) CHECK_FALSE(in_order_body(x, anchor, K, -1e-9));
  }
}

TEST_CASE("opening angles") {
  CHECK(Cone::orthant(2).opening_angle() ==
        doctest::Approx(std::acos(1.0 / std::sqrt(2.0))).epsilon(1e-12));
  CHECK(Cone::orthant(4).opening_angle() ==
        doctest::Approx(std::acos(0.5)).epsilon(1e-12));
  CHECK(Cone::ice_cream({2.0, 0.0}, 0.7).opening_angle() ==
        doctest::Approx(std::acos(0.7)).epsilon(1e-12));
}

TEST_CASE("delta(K) for the orthant") {
  const Cone K = Cone::orthant(3);
  CHECK(delta_K(K, {1.0, 1.0, 1.0}) == 1.0);  // analytic path, exact
  // sampled estimator agrees with the closed form
  CHECK(delta_K_sampled(K, {1.0, 1.0, 1.0}, 4096) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(delta_K_sampled(K, {2.0, 1.0, 0.5}, 4096) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("delta(K) for the right-angle ice-cream cone equals 1") {
  // C((1,1), sqrt(2)/2) in the plane is exactly the orthant.
  const Cone K = Cone::ice_cream({1.0, 1.0}, std::sqrt(2.0) / 2.0);
  const double est = delta_K(K, {1.0, 1.0});
  CHECK(est == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("delta(K) is at least 1 and grows as the cone widens") {
  // v = w is always admissible (w - w = 0, w + w = 2w), so delta(K) >= 1;
  // widening the cone only enlarges the admissible set.
  const Vec w{1.0, 1.0};
  const double d_narrow = delta_K(Cone::ice_cream(w, 0.9), w, 2048);
  const double d_wide = delta_K(Cone::ice_cream(w, 0.3), w, 2048);
  CHECK(d_narrow >= 1.0 - 1e-9);
  CHECK(d_wide > d_narrow + 0.1);
}

TEST_CASE("spec validation") {
  CHECK_THROWS(Cone::ice_cream({0.0, 0.0}, 0.5));
  CHECK_THROWS(Cone::ice_cream({1.0, 1.0}, 1.5));
  CHECK_THROWS(weighted_max_norm({1.0, 1.0}, {1.0, 0.0}));
  CHECK_THROWS(lambda_coefficient(0.9));  // reduction only valid for beta <= sqrt(2)/2
}
