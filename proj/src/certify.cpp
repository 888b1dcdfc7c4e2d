// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include "conefix/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace conefix {

namespace {

uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void validate(const SampleConfig& cfg) {
  if (cfg.count < 1) throw std::invalid_argument("sample count must be >= 1");
  require_same_dim(cfg.low, cfg.high);
  if (cfg.low.empty()) throw std::invalid_argument("sampling region is empty");
  for (size_t i = 0; i < cfg.low.size(); ++i)
    if (!(cfg.low[i] <= cfg.high[i]))
      throw std::invalid_argument("region low must be <= high componentwise");
}

double region_scale(const SampleConfig& cfg) {
  double s = 0.0;
  for (size_t i = 0; i < cfg.low.size(); ++i) s = std::max(s, cfg.high[i] - cfg.low[i]);
  return s > 0.0 ? s : 1.0;
}

struct Draw {
  std::mt19937_64 rng;
  explicit Draw(uint64_t seed, long index, uint64_t tag)
      : rng(splitmix64(seed ^ splitmix64(static_cast<uint64_t>(index) + 1) ^
                       splitmix64(tag + 0x51ef'c0de))) {}
  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  double gauss() { return std::normal_distribution<double>(0.0, 1.0)(rng); }
};

Vec sample_box(Draw& d, const SampleConfig& cfg) {
  Vec x(cfg.low.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] = d.uniform(cfg.low[i], cfg.high[i]);
  return x;
}

// Point of the cone within the region, by rejection.
Vec sample_in_cone(Draw& d, const Cone& cone, const SampleConfig& cfg) {
  for (int tries = 0; tries < 4096; ++tries) {
    Vec x = sample_box(d, cfg);
    if (cone.contains(x)) return x;
  }
  throw std::runtime_error("region does not appear to intersect the cone");
}

// Nonzero cone direction, by rejection from [-1,1]^N with the cone axis as a
// fallback: uniform rejection almost never hits a narrow cone.
Vec sample_cone_direction(Draw& d, const Cone& cone) {
  const size_t n = cone.dim();
  for (int tries = 0; tries < 128; ++tries) {
    Vec u(n);
    for (auto& ui : u) ui = d.uniform(-1.0, 1.0);
    if (norm_inf(u) > 1e-9 && cone.contains(u, false, 0.0)) return u;
  }
  if (cone.kind() == Cone::Kind::Orthant) return ones(n);
  return cone.axis();
}

// Ordered pair x <_K x': sample x in the region, a cone direction, and a
// log-uniform magnitude.
std::pair<Vec, Vec> sample_ordered_pair(Draw& d, const Cone& cone,
                                        const SampleConfig& cfg) {
  const Vec x = sample_box(d, cfg);
  Vec k = sample_cone_direction(d, cone);
  const double mag =
      region_scale(cfg) * std::exp(d.uniform(std::log(1e-3), std::log(1.0)));
  k = scale(mag / std::max(norm_inf(k), 1e-300), k);
  return {x, add(x, k)};
}

bool relation_holds(const Cone& cone, const Vec& a, const Vec& b, Strength s,
                    double tol) {
  const OrderRelation r = cone.compare(a, b, tol);
  switch (s) {
    case Strength::Weak: return r.leq;
    case Strength::Strict: return r.lt;
    case Strength::Strong: return r.ll;
  }
  return false;
}

PropertyReport base_report(const std::string& property, Strength strength,
                           const SampleConfig& cfg) {
  PropertyReport rep;
  rep.property = property;
  rep.strength = strength;
  rep.config = cfg;
  return rep;
}

}  // namespace

SampleConfig SampleConfig::box(Vec lo, Vec hi, long count, uint64_t seed) {
  SampleConfig cfg;
  cfg.low = std::move(lo);
  cfg.high = std::move(hi);
  cfg.count = count;
  cfg.seed = seed;
  return cfg;
}

std::string strength_name(Strength s) {
  switch (s) {
    case Strength::Weak: return "weak";
    case Strength::Strict: return "strict";
    case Strength::Strong: return "strong";
  }
  return "?";
}

std::string grade_name(FeasiblePoint::Grade g) {
  switch (g) {
    case FeasiblePoint::Grade::Feasible: return "feasible";
    case FeasiblePoint::Grade::StrictlyFeasible: return "strictly_feasible";
    case FeasiblePoint::Grade::StronglyFeasible: return "strongly_feasible";
  }
  return "?";
}

std::vector<double> SampleStream::uniforms(long index, int k, uint64_t tag) const {
  Draw d(seed_, index, tag);
  std::vector<double> u(k);
  for (auto& v : u) v = d.unit();
  return u;
}

PropertyReport check_monotone(const MapHandle& m, const Cone& cone,
                              const SampleConfig& cfg, Strength strength) {
  validate(cfg);
  if (strength == Strength::Strong && !cone.solid())
    throw std::invalid_argument("strong monotonicity needs a solid cone");
  PropertyReport rep = base_report("monotone", strength, cfg);
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 1);
    auto [x, xp] = sample_ordered_pair(d, cone, cfg);
    const Vec fx = m.eval(x), fxp = m.eval(xp);
    ++rep.samples_tested;
    if (!relation_holds(cone, fx, fxp, strength, cfg.tol)) {
      rep.violated = true;
      rep.witness = Witness{x, xp, std::nullopt, fx, fxp};
      break;
    }
  }
  return rep;
}

PropertyReport check_sup_monotone(const MapHandle& m, const Cone& cone,
                                  const SampleConfig& cfg, Strength strength) {
  validate(cfg);
  if (cone.kind() != Cone::Kind::Orthant)
    throw std::invalid_argument("sup-monotonicity is defined for the orthant order");
  PropertyReport rep = base_report("sup_monotone", strength, cfg);
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 1);  // same substream as check_monotone: shared pairs
    auto [x, xp] = sample_ordered_pair(d, cone, cfg);
    const Vec fx = m.eval(x);
    const Vec bound = sup_orthant(xp, m.eval(xp));
    ++rep.samples_tested;
    if (!relation_holds(cone, fx, bound, strength, cfg.tol)) {
      rep.violated = true;
      rep.witness = Witness{x, xp, std::nullopt, fx, bound};
      break;
    }
  }
  return rep;
}

PropertyReport check_scalable(const MapHandle& m, const Cone& cone,
                              const SampleConfig& cfg, Strength strength) {
  validate(cfg);
  if (!(cfg.alpha_lo > 1.0) || !(cfg.alpha_hi >= cfg.alpha_lo))
    throw std::invalid_argument("alpha range must lie within (1, inf)");
  PropertyReport rep = base_report("scalable", strength, cfg);
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 2);
    const Vec x = sample_in_cone(d, cone, cfg);
    const double alpha = d.uniform(cfg.alpha_lo, cfg.alpha_hi);
    const Vec lhs = m.eval(scale(alpha, x));
    const Vec rhs = scale(alpha, m.eval(x));
    ++rep.samples_tested;
    if (!relation_holds(cone, lhs, rhs, strength, cfg.tol)) {
      rep.violated = true;
      rep.witness = Witness{x, {}, alpha, lhs, rhs};
      break;
    }
  }
  return rep;
}

PropertyReport check_subhomogeneous(const MapHandle& m, const Cone& cone,
                                    const SampleConfig& cfg, Strength strength) {
  validate(cfg);
  if (!(cfg.theta_lo > 0.0) || !(cfg.theta_hi < 1.0) || !(cfg.theta_lo <= cfg.theta_hi))
    throw std::invalid_argument("theta range must lie within (0, 1)");
  PropertyReport rep = base_report("subhomogeneous", strength, cfg);
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 2);  // shares the scalability substream via theta = 1/alpha
    const Vec x = sample_in_cone(d, cone, cfg);
    const double theta = d.uniform(cfg.theta_lo, cfg.theta_hi);
    const Vec lhs = scale(theta, m.eval(x));
    const Vec rhs = m.eval(scale(theta, x));
    ++rep.samples_tested;
    if (!relation_holds(cone, lhs, rhs, strength, cfg.tol)) {
      rep.violated = true;
      rep.witness = Witness{x, {}, theta, lhs, rhs};
      break;
    }
  }
  return rep;
}

PropertyReport estimate_contraction(const MapHandle& m, const Cone& cone,
                                    const Vec& w, const SampleConfig& cfg) {
  validate(cfg);
  if (!cone.contains(w, true))
    throw std::invalid_argument("contraction direction w must be strictly inside the cone");
  PropertyReport rep = base_report("contractive", Strength::Weak, cfg);

  auto smallest_c = [&](const Vec& x, double eps) {
    const Vec fx = m.eval(x);
    const Vec fxe = m.eval(add(x, scale(eps, w)));
    auto holds = [&](double c) {
      // f(x) + c*eps*w - f(x+eps w) in K; monotone in c since w in K.
      return cone.contains(sub(add(fx, scale(c * eps, w)), fxe), false, cfg.tol);
    };
    if (cone.kind() == Cone::Kind::Orthant) {
      double c = 0.0;
      for (size_t i = 0; i < x.size(); ++i)
        c = std::max(c, (fxe[i] - fx[i]) / (eps * w[i]));
      return std::max(c, 0.0);
    }
    double hi = 1.0;
    while (!holds(hi)) {
      hi *= 2.0;
      if (hi > 1e9)
        throw std::runtime_error("contraction relation unsatisfiable along w");
    }
    double lo = 0.0;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (holds(mid) ? hi : lo) = mid;
    }
    return hi;
  };

  double c_hat = 0.0;
  Witness worst;
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 3);
    const Vec x = sample_in_cone(d, cone, cfg);
    const double eps =
        region_scale(cfg) * std::exp(d.uniform(std::log(1e-3), std::log(1.0)));
    const double c = smallest_c(x, eps);
    ++rep.samples_tested;
    if (c > c_hat) {
      c_hat = c;
      worst = Witness{x, {}, eps, m.eval(add(x, scale(eps, w))), m.eval(x)};
    }
  }
  const double dK = delta_K(cone, w);
  rep.stats["c_hat"] = c_hat;
  rep.stats["delta_K"] = dK;
  rep.stats["c_delta"] = c_hat * dK;
  rep.violated = !(c_hat < 1.0);
  if (rep.violated) rep.witness = worst;
  return rep;
}

PropertyReport check_norm_monotone(const MapHandle& m, const Cone& cone,
                                   const Vec& v, const SampleConfig& cfg) {
  validate(cfg);
  if (!strictly_positive(v))
    throw std::invalid_argument("norm weight v must be strictly positive");
  PropertyReport rep = base_report("norm_monotone", Strength::Weak, cfg);
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 4);
    auto [x, xp] = sample_ordered_pair(d, cone, cfg);
    const Vec fx = m.eval(x), fxp = m.eval(xp);
    ++rep.samples_tested;
    if (!(weighted_max_norm(fx, v) <= weighted_max_norm(fxp, v) + cfg.tol)) {
      rep.violated = true;
      rep.witness = Witness{x, xp, std::nullopt, fx, fxp};
      break;
    }
  }
  return rep;
}

namespace {

// Two independent points with the same 1-norm L: L times symmetric Dirichlet
// samples (normalized unit-exponentials). Independent box sampling would hit
// the equal-norm constraint with probability zero.
std::pair<Vec, Vec> equal_norm_pair(Draw& d, size_t n, double level) {
  auto simplex = [&]() {
    Vec p(n);
    double s = 0.0;
    for (auto& pi : p) {
      pi = -std::log(std::max(d.unit(), 1e-300));
      s += pi;
    }
    for (auto& pi : p) pi *= level / s;
    return p;
  };
  return {simplex(), simplex()};
}

}  // namespace

PropertyReport check_guiding_G(const MapHandle& m, const SampleConfig& cfg) {
  validate(cfg);
  PropertyReport rep = base_report("guiding_g", Strength::Weak, cfg);
  const double level_hi = std::max(norm1(cfg.high), 1e-9);
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 5);
    const double level = d.uniform(1e-9, level_hi);
    auto [x, xp] = equal_norm_pair(d, m.in_dim(), level);
    const Vec r1 = sub(m.eval(x), x);
    const Vec r2 = sub(m.eval(xp), xp);
    ++rep.samples_tested;
    if (!(dot(r1, r2) >= -cfg.tol)) {
      rep.violated = true;
      rep.witness = Witness{x, xp, std::nullopt, r1, r2};
      break;
    }
  }
  return rep;
}

PropertyReport check_guiding_G2(const MapHandle& m, double gamma,
                                const SampleConfig& cfg) {
  validate(cfg);
  if (gamma < -M_PI / 2.0 - 1e-12 || gamma > M_PI / 2.0 + 1e-12)
    throw std::invalid_argument("gamma must lie in [-pi/2, pi/2]");
  PropertyReport rep = base_report("guiding_g2", Strength::Weak, cfg);
  const double cg = std::cos(gamma);
  const double level_hi = std::max(norm1(cfg.high), 1e-9);
  double inf_cosine = 1.0;
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 5);  // shared with (G): gamma = pi/2 must agree
    const double level = d.uniform(1e-9, level_hi);
    auto [x, xp] = equal_norm_pair(d, m.in_dim(), level);
    const Vec r1 = sub(m.eval(x), x);
    const Vec r2 = sub(m.eval(xp), xp);
    const double n1 = norm2(r1), n2 = norm2(r2);
    ++rep.samples_tested;
    if (n1 > 1e-15 && n2 > 1e-15)
      inf_cosine = std::min(inf_cosine, dot(r1, r2) / (n1 * n2));
    if (!(dot(r1, r2) >= cg * n1 * n2 - cfg.tol)) {
      rep.violated = true;
      rep.witness = Witness{x, xp, gamma, r1, r2};
      break;
    }
  }
  rep.stats["inf_cosine"] = inf_cosine;
  return rep;
}

std::vector<FeasiblePoint> find_feasible(const MapHandle& m, const Cone& cone,
                                         const SampleConfig& cfg) {
  validate(cfg);
  std::vector<FeasiblePoint> out;
  for (long i = 0; i < cfg.count; ++i) {
    Draw d(cfg.seed, i, 6);
    Vec x = sample_box(d, cfg);
    if (!cone.contains(x, false, cfg.tol)) continue;
    const Vec fx = m.eval(x);
    if (!cone.compare(fx, x, cfg.tol).leq) continue;
    FeasiblePoint p;
    p.x = x;
    p.residual = sub(x, fx);
    const Vec zero(x.size(), 0.0);
    const OrderRelation pos = cone.compare(zero, x, cfg.tol);
    p.grade = pos.ll  ? FeasiblePoint::Grade::StronglyFeasible
              : pos.lt ? FeasiblePoint::Grade::StrictlyFeasible
                       : FeasiblePoint::Grade::Feasible;
    out.push_back(std::move(p));
  }
  return out;
}

SfProbeReport probe_Sf_bounded(const MapHandle& m, const Cone& cone,
                               const std::vector<double>& radii,
                               const SampleConfig& cfg) {
  if (radii.empty()) throw std::invalid_argument("radius schedule is empty");
  SfProbeReport rep;
  rep.samples_per_radius = std::max<long>(cfg.count, 1);
  const size_t n = cone.dim();

  for (size_t ri = 0; ri < radii.size(); ++ri) {
    const double R = radii[ri];
    bool feasible_found = false;
    bool exit_everywhere = true;
    for (long i = 0; i < rep.samples_per_radius; ++i) {
      Draw d(cfg.seed, static_cast<long>(ri) * rep.samples_per_radius + i, 7);
      Vec x = sample_cone_direction(d, cone);
      // jitter the direction, then push to the sup-norm sphere of radius R
      for (auto& xi : x) xi += 0.25 * d.gauss();
      if (!cone.contains(x, false, 0.0) || norm_inf(x) < 1e-12)
        x = sample_cone_direction(d, cone);
      x = scale(R / norm_inf(x), x);
      const Vec fx = m.eval(x);
      if (cone.compare(fx, x, cfg.tol).leq) feasible_found = true;
      if (norm_inf(fx) <= R) exit_everywhere = false;
    }
    rep.feasible_at_radius.emplace_back(R, feasible_found);
    if (feasible_found) rep.largest_feasible_radius = R;
    if (ri + 1 == radii.size()) rep.exit_condition_at_top = exit_everywhere;
  }
  // Feasible sphere points persisting at the top radius suggest S_f keeps
  // growing; "no violation found" is confidence, not proof, either way.
  rep.looks_bounded = !rep.feasible_at_radius.back().second;
  // ensure n referenced even for 1-D maps
  (void)n;
  return rep;
}

InvariantConeResult find_invariant_icecream(const MapHandle& m, const Vec& axis,
                                            const std::vector<double>& beta_grid,
                                            const SampleConfig& cfg) {
  validate(cfg);
  if (norm2(axis) == 0.0) throw std::invalid_argument("axis must be nonzero");
  InvariantConeResult res;
  for (double beta : beta_grid) {
    const Cone cone = Cone::ice_cream(axis, beta);
    bool ok = true;
    for (long i = 0; i < cfg.count && ok; ++i) {
      Draw d(cfg.seed, i, 8);
      // invariance on K intersected with the region
      Vec x = sample_box(d, cfg);
      if (cone.contains(x, false, cfg.tol) && !cone.contains(m.eval(x), false, cfg.tol))
        ok = false;
      // monotonicity on ordered pairs
      if (ok) {
        auto [a, b] = sample_ordered_pair(d, cone, cfg);
        if (!cone.compare(m.eval(a), m.eval(b), cfg.tol).leq) ok = false;
      }
    }
    res.grid_verdicts.emplace_back(beta, ok);
    if (ok && !res.beta_star) res.beta_star = beta;
  }
  return res;
}

}  // namespace conefix
