// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conefix/cone.hpp"
#include "conefix/map.hpp"

namespace conefix {

// Sampling configuration shared by all certifiers. All randomness derives
// from the seed; per-sample generators are keyed by sample index so parallel
// and serial runs produce identical reports.
struct SampleConfig {
  uint64_t seed = 0;
  long count = 10000;
  Vec low, high;  // axis-aligned sampling region
  double alpha_lo = 1.1, alpha_hi = 4.0;  // scalability factors, subset of (1, inf)
  double theta_lo = 0.1, theta_hi = 0.9;  // subhomogeneity factors, subset of (0, 1)
  double tol = kBoundaryTol;

  static SampleConfig box(Vec lo, Vec hi, long count = 10000, uint64_t seed = 0);
};

enum class Strength { Weak, Strict, Strong };

std::string strength_name(Strength s);

// Concrete counterexample; re-evaluating it reproduces the violation with no
// sampling involved.
struct Witness {
  Vec x;
  Vec x_prime;                   // second point, if the property is a pair property
  std::optional<double> factor;  // alpha / theta / epsilon when applicable
  Vec lhs, rhs;                  // the two sides whose order relation failed
};

struct PropertyReport {
  std::string property;
  Strength strength = Strength::Weak;
  bool violated = false;
  std::optional<Witness> witness;
  long samples_tested = 0;
  SampleConfig config;
  // Extra per-property numbers (contraction estimate, observed cosine, ...).
  std::map<std::string, double> stats;
};

struct FeasiblePoint {
  enum class Grade { Feasible, StrictlyFeasible, StronglyFeasible };
  Vec x;
  Grade grade = Grade::Feasible;
  Vec residual;  // x - f(x)
};

std::string grade_name(FeasiblePoint::Grade g);

// Sampled verdict on boundedness of S_f = {x >=_K 0 : f(x) <=_K x}.
struct SfProbeReport {
  std::vector<std::pair<double, bool>> feasible_at_radius;  // (R, sphere point in S_f found)
  std::optional<double> largest_feasible_radius;
  bool exit_condition_at_top = false;  // f(x) outside D_R for all sampled ||x||_inf = R at top R
  bool looks_bounded = false;
  long samples_per_radius = 0;
};

// x <_K x' => f(x) {<=,<,<<}_K f(x').
PropertyReport check_monotone(const MapHandle& m, const Cone& cone,
                              const SampleConfig& cfg, Strength strength);

// x <_K x' => f(x) {<=,<,<<}_K sup{x', f(x')}; orthant order only.
PropertyReport check_sup_monotone(const MapHandle& m, const Cone& cone,
                                  const SampleConfig& cfg, Strength strength);

// f(alpha x) {<=,<,<<}_K alpha f(x) for alpha > 1, x in K.
PropertyReport check_scalable(const MapHandle& m, const Cone& cone,
                              const SampleConfig& cfg, Strength strength);

// theta f(x) {<=,<,<<}_K f(theta x) for theta in (0,1); equivalent to
// scalability in its weak form.
PropertyReport check_subhomogeneous(const MapHandle& m, const Cone& cone,
                                    const SampleConfig& cfg, Strength strength);

// Smallest c with f(x + eps w) <=_K f(x) + c eps w over sampled (x, eps);
// stats carry c_hat, delta_K and the product. Throws if the relation is
// unsatisfiable for any c along direction w.
PropertyReport estimate_contraction(const MapHandle& m, const Cone& cone,
                                    const Vec& w, const SampleConfig& cfg);

// x <_K x' => ||f(x)||_v <= ||f(x')||_v.
PropertyReport check_norm_monotone(const MapHandle& m, const Cone& cone,
                                   const Vec& v, const SampleConfig& cfg);

// Guiding condition (G): ||x||_1 = ||x'||_1 => <f(x)-x, f(x')-x'> >= 0 on the
// orthant. Equal-1-norm pairs come from symmetric Dirichlet sampling on a
// shared simplex level.
PropertyReport check_guiding_G(const MapHandle& m, const SampleConfig& cfg);

// Guiding condition (G2): the inner product is bounded below by
// cos(gamma) ||f(x)-x|| ||f(x')-x'||. stats["inf_cosine"] is the tightest
// cosine supported by the samples (1 by convention when a factor vanishes).
PropertyReport check_guiding_G2(const MapHandle& m, double gamma,
                                const SampleConfig& cfg);

// Sampled elements of S_f within the region, graded by the positivity of x.
std::vector<FeasiblePoint> find_feasible(const MapHandle& m, const Cone& cone,
                                         const SampleConfig& cfg);

SfProbeReport probe_Sf_bounded(const MapHandle& m, const Cone& cone,
                               const std::vector<double>& radii,
                               const SampleConfig& cfg);

// Largest beta in the (decreasing) grid whose ice-cream cone around the axis
// is left invariant by f and makes f K-monotone on sampled ordered pairs.
struct InvariantConeResult {
  std::optional<double> beta_star;
  std::vector<std::pair<double, bool>> grid_verdicts;  // (beta, passed)
};
InvariantConeResult find_invariant_icecream(const MapHandle& m, const Vec& axis,
                                            const std::vector<double>& beta_grid,
                                            const SampleConfig& cfg);

// Deterministic per-index sample stream used by all certifiers; exposed for
// tests that need to share samples between two certifiers.
class SampleStream {
 public:
  SampleStream(uint64_t seed) : seed_(seed) {}
  // Uniform on [0,1)^k for sample `index`, dimension k, substream `tag`.
  std::vector<double> uniforms(long index, int k, uint64_t tag = 0) const;

 private:
  uint64_t seed_;
};

}  // namespace conefix
