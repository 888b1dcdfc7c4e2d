// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include "conefix/cone.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace conefix {

Cone Cone::orthant(size_t dim) {
  if (dim == 0) throw std::invalid_argument("orthant dimension must be positive");
  Cone c;
  c.kind_ = Kind::Orthant;
  c.dim_ = dim;
  return c;
}

Cone Cone::ice_cream(Vec axis, double beta) {
  if (axis.empty()) throw std::invalid_argument("ice-cream axis must be nonempty");
  require_finite(axis, "axis");
  if (norm2(axis) == 0.0) throw std::invalid_argument("ice-cream axis must be nonzero");
  if (beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("beta must lie in [0, 1]");
  Cone c;
  c.kind_ = Kind::IceCream;
  c.dim_ = axis.size();
  c.axis_ = std::move(axis);
  c.beta_ = beta;
  return c;
}

bool Cone::contains(const Vec& v, bool interior, double tol) const {
  if (v.size() != dim_)
    throw std::invalid_argument("cone/vector dimension mismatch");
  if (kind_ == Kind::Orthant) {
    for (double vi : v) {
      if (interior ? !(vi > tol) : !(vi >= -tol)) return false;
    }
    return true;
  }
  const double nv = norm2(v);
  if (nv == 0.0) return !interior;  // 0 is in K, never in int K
  const double lhs = dot(v, axis_);
  const double rhs = beta_ * nv * norm2(axis_);
  return interior ? (lhs > rhs + tol) : (lhs >= rhs - tol);
}

OrderRelation Cone::compare(const Vec& x, const Vec& y, double tol) const {
  require_same_dim(x, y);
  const Vec d = sub(y, x);
  OrderRelation r;
  r.leq = contains(d, false, tol);
  r.lt = r.leq && (x != y);
  r.ll = solid() && contains(d, true, tol);
  return r;
}

double Cone::opening_angle() const {
  if (kind_ == Kind::Orthant)
    return std::acos(1.0 / std::sqrt(static_cast<double>(dim_)));
  return std::acos(std::clamp(beta_, -1.0, 1.0));
}

bool Cone::solid() const {
  if (kind_ == Kind::Orthant) return true;
  return beta_ < 1.0;
}

double lambda_coefficient(double beta) {
  if (beta > std::sqrt(2.0) / 2.0 + 1e-15)
    throw std::invalid_argument("lambda reduction requires beta <= sqrt(2)/2");
  const double g = beta * std::sqrt(2.0);
  if (g >= 1.0) return 0.0;
  const double q = 1.0 - g * g;
  return (-1.0 + std::sqrt(1.0 - q * q)) / q;
}

bool leq_lambda_2d(double beta, const Vec& x, const Vec& y, double tol) {
  if (x.size() != 2 || y.size() != 2)
    throw std::invalid_argument("lambda reduction is 2-D only");
  const double L = lambda_coefficient(beta);
  const double d1 = y[0] - x[0];
  const double d2 = y[1] - x[1];
  return d1 >= L * d2 - tol && d2 >= L * d1 - tol;
}

Vec sup_orthant(const Vec& x, const Vec& y) {
  require_same_dim(x, y);
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = std::max(x[i], y[i]);
  return r;
}

Vec inf_orthant(const Vec& x, const Vec& y) {
  require_same_dim(x, y);
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = std::min(x[i], y[i]);
  return r;
}

double weighted_max_norm(const Vec& x, const Vec& v) {
  require_same_dim(x, v);
  double m = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (v[i] == 0.0) throw std::invalid_argument("weight vector has a zero entry");
    m = std::max(m, std::fabs(x[i]) / std::fabs(v[i]));
  }
  return m;
}

bool in_order_body(const Vec& x, const Vec& anchor, const Cone& cone, double tol) {
  return cone.contains(sub(anchor, abs(x)), false, tol);
}

double gauge_norm(const Vec& x, const Vec& anchor, const Cone& cone) {
  require_same_dim(x, anchor);
  if (!strictly_positive(anchor))
    throw std::invalid_argument("gauge anchor must be strictly positive");
  if (!(cone.opening_angle() < M_PI / 2.0))
    throw std::invalid_argument("order body unbounded: opening angle >= pi/2");
  if (norm_inf(x) == 0.0) return 0.0;

  auto inside = [&](double s) { return in_order_body(scale(1.0 / s, x), anchor, cone, 0.0); };

  // Bracket the gauge, then bisect; membership is monotone in s because the
  // body is convex and contains 0.
  double hi = 1.0;
  while (!inside(hi)) {
    hi *= 2.0;
    if (hi > 1e300) throw std::runtime_error("gauge bracketing failed");
  }
  double lo = hi / 2.0;
  while (lo > 1e-300 && inside(lo)) {
    hi = lo;
    lo /= 2.0;
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? hi : lo) = mid;
  }
  return hi;
}

namespace {

// Largest t >= 0 with w - t*u and w + t*u both in K. The admissible set of t
// is an interval containing 0, so doubling plus bisection applies.
double extremal_scale(const Cone& cone, const Vec& w, const Vec& u) {
  auto ok = [&](double t) {
    return cone.contains(sub(w, scale(t, u)), false, 0.0) &&
           cone.contains(add(w, scale(t, u)), false, 0.0);
  };
  if (!ok(0.0)) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while (ok(hi)) {
    hi *= 2.0;
    if (++guard > 2000) throw std::runtime_error("delta(K) set unbounded (opening angle >= pi/2?)");
  }
  double lo = hi / 2.0;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

double delta_K_sampled(const Cone& cone, const Vec& w, int resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  if (!cone.contains(w, true))
    throw std::invalid_argument("delta(K) weight must be strictly inside the cone");
  if (!(cone.opening_angle() < M_PI / 2.0))
    throw std::invalid_argument("delta(K) undefined: opening angle >= pi/2");
  const size_t n = w.size();

  double best = 0.0;
  auto consider = [&](const Vec& u) {
    const double nu = norm2(u);
    if (nu == 0.0) return;
    Vec d = scale(1.0 / nu, u);
    const double t = extremal_scale(cone, w, d);
    best = std::max(best, weighted_max_norm(scale(t, d), w));
  };

  if (n == 1) {
    consider(Vec{1.0});
  } else if (n == 2) {
    // v and -v enter symmetrically: half the circle suffices.
    for (int i = 0; i < resolution; ++i) {
      const double phi = M_PI * static_cast<double>(i) / resolution;
      consider(Vec{std::cos(phi), std::sin(phi)});
    }
  } else {
    std::mt19937_64 rng(0x636f6e65ull + static_cast<uint64_t>(resolution));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < resolution; ++i) {
      Vec u(n);
      for (auto& ui : u) ui = gauss(rng);
      consider(u);
    }
  }
  // w itself always qualifies (w - w = 0 and w + w = 2w are both in K).
  consider(w);
  return best;
}

double delta_K(const Cone& cone, const Vec& w, int resolution) {
  if (cone.kind() == Cone::Kind::Orthant) {
    if (!cone.contains(w, true))
      throw std::invalid_argument("delta(K) weight must be strictly inside the cone");
    return 1.0;  // |v_i| <= w_i componentwise, attained at v = w
  }
  return delta_K_sampled(cone, w, resolution);
}

}  // namespace conefix
