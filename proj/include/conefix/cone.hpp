// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <optional>

#include "conefix/vec.hpp"

namespace conefix {

// Default boundary tolerance for cone membership tests.
inline constexpr double kBoundaryTol = 1e-12;

// Flags of the partial order induced by a cone: x <=_K y, x <_K y, x <<_K y.
struct OrderRelation {
  bool leq = false;
  bool lt = false;
  bool ll = false;  // interior relation, needs a solid cone
};

// Either the nonnegative orthant R^N_+ or the ice-cream cone
// C(w, beta) = { v : <v,w> >= beta ||v|| ||w|| }.
//
// The orthant is kept as its own variant: componentwise sup/inf only exist
// there and its membership test is exact arithmetic on coordinates.
class Cone {
 public:
  enum class Kind { Orthant, IceCream };

  static Cone orthant(size_t dim);
  static Cone ice_cream(Vec axis, double beta);

  Kind kind() const { return kind_; }
  size_t dim() const { return dim_; }
  const Vec& axis() const { return axis_; }
  double beta() const { return beta_; }

  // v in K (or int K). The zero vector is in K but never in int K.
  // Membership inequality is relaxed by tol on the contains side and
  // tightened by tol for the interior test.
  bool contains(const Vec& v, bool interior = false, double tol = kBoundaryTol) const;

  OrderRelation compare(const Vec& x, const Vec& y, double tol = kBoundaryTol) const;

  // Half-angle of the smallest enclosing ice-cream cone:
  // arccos(beta) for C(w,beta), arccos(1/sqrt(N)) for the orthant
  // (realized against the extreme rays from the all-ones axis).
  double opening_angle() const;

  bool solid() const;

 private:
  Cone() = default;
  Kind kind_ = Kind::Orthant;
  size_t dim_ = 0;
  Vec axis_;          // ice-cream only
  double beta_ = 0.0; // ice-cream only
};

// 2-D reduction of the ice-cream membership test for axis (1,1):
// y1-x1 >= Lambda (y2-x2) and y2-x2 >= Lambda (y1-x1),
// Lambda = (-1 + sqrt(1 - (1-g^2)^2)) / (1-g^2) with g = beta*sqrt(2),
// and Lambda = 0 when g = 1. Requires beta <= sqrt(2)/2.
double lambda_coefficient(double beta);
bool leq_lambda_2d(double beta, const Vec& x, const Vec& y, double tol = kBoundaryTol);

// Componentwise max/min; least upper / greatest lower bound in the orthant order.
Vec sup_orthant(const Vec& x, const Vec& y);
Vec inf_orthant(const Vec& x, const Vec& y);

// ||x||_v = max_i |x_i| / |v_i|, v strictly positive componentwise.
double weighted_max_norm(const Vec& x, const Vec& v);

// Minkowski gauge of the symmetric order body
// D(anchor) = { z : (|z_1|,...,|z_N|) <=_K anchor }: the smallest s >= 0
// with x in s*D(anchor). Evaluates to 1 exactly on the boundary of D(anchor).
//
// Note: the source formulation "inf{a > 0 : a x in D}" degenerates to 0
// whenever 0 is interior to D; the gauge form below is the usable reading.
double gauge_norm(const Vec& x, const Vec& anchor, const Cone& cone);

// Membership in the body D(anchor) (used by the gauge and by region logic).
bool in_order_body(const Vec& x, const Vec& anchor, const Cone& cone,
                   double tol = kBoundaryTol);

// Numerical estimate of delta(K) = sup{ ||v||_w : v, -v <=_K w } for a given
// w strictly inside K. Directions are scanned (uniform angles in 2-D, seeded
// low-discrepancy sampling otherwise) and the extremal scale per direction is
// found by bisection; the result is monotone nondecreasing in resolution.
// Requires the opening angle < pi/2, otherwise the set is unbounded.
double delta_K_sampled(const Cone& cone, const Vec& w, int resolution);

// delta(K) with the orthant fast path (exactly 1) and the sampled estimate
// otherwise.
double delta_K(const Cone& cone, const Vec& w, int resolution = 4096);

}  // namespace conefix
