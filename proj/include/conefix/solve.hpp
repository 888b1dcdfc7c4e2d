// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conefix/certify.hpp"
#include "conefix/cone.hpp"
#include "conefix/map.hpp"

namespace conefix {

enum class SolveStatus { Converged, MaxIter, Diverged, OrderViolation, ContractionViolation };

std::string status_name(SolveStatus s);

struct IterationTrace {
  std::vector<Vec> iterates;             // x^0, x^1, ...
  std::vector<double> residual_w;        // ||x^{k+1} - x^k||_w
  std::vector<bool> order_descending;    // x^{k+1} <=_K x^k
  std::vector<double> bound_certificate; // (c delta)^k ||x^0 - x*||_w, contraction runs only
  SolveStatus status = SolveStatus::MaxIter;
  std::string diagnostic;
};

struct SolveResult {
  Vec fixed_point;
  IterationTrace trace;
  std::optional<double> certified_rate;  // c * delta(K)
  double final_residual = 0.0;           // ||f(x*) - x*||_inf
  bool positive_at_zero = false;         // whether 0 <_K f(0) held (reported, not enforced)
};

// Plain fixed-point iteration x^{k+1} = f(x^k); converged when the successive
// difference in the w-norm drops below tol, diverged when iterates leave the
// guard box [-1e9, 1e9]^N or turn non-finite. Descent flags are recorded
// against the orthant order for diagnostics.
SolveResult iterate(const MapHandle& m, const Vec& x0, double tol, int max_iter,
                    const Vec& norm_w);

// Same iteration started from a verified feasible point, asserting
// x^{k+1} <=_K x^k at every step; a violated order assertion aborts with the
// offending pair in the diagnostic (the monotonicity hypothesis failed).
SolveResult monotone_descent(const MapHandle& m, const Cone& cone,
                             const FeasiblePoint& p, double tol, int max_iter);

// Contraction iteration with certified rate c*delta(K) < 1. Stops when
// ||x^{k+1}-x^k||_w <= tol*(1-cd)/cd (a-posteriori rule) and attaches the
// a-priori bound sequence to the trace. An observed step ratio above
// cd + tol aborts with a contraction-violation witness.
SolveResult contraction_solve(const MapHandle& m, const Cone& cone, const Vec& w,
                              double c, const Vec& x0, double tol, int max_iter);

struct MultistartReport {
  std::vector<Vec> distinct_limits;
  std::vector<long> cluster_sizes;
  long non_converged = 0;
  bool non_isolated_suspected = false;  // about as many clusters as starts
};

// Runs `iterate` from low-discrepancy (Halton) starting points in the box and
// clusters the converged limits. One cluster is consistent with uniqueness.
MultistartReport multistart_uniqueness(const MapHandle& m, const Vec& low,
                                       const Vec& high, int starts, double tol,
                                       double cluster_radius);

}  // namespace conefix
