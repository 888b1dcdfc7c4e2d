// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "conefix/degree.hpp"
#include "conefix/solve.hpp"

namespace conefix {

TheoremId theorem_from_name(const std::string& name) {
  if (name == "degreerzero") return TheoremId::DegreeZero;
  if (name == "three_fixed_points") return TheoremId::ThreeFixedPoints;
  if (name == "thm5") return TheoremId::Thm5;
  if (name == "thm6") return TheoremId::Thm6;
  if (name == "thm8") return TheoremId::Thm8;
  if (name == "thm9") return TheoremId::Thm9;
  if (name == "guiding_g") return TheoremId::GuidingG;
  if (name == "guiding_g2") return TheoremId::GuidingG2;
  throw std::invalid_argument("unknown theorem: " + name);
}

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::DegreeZero: return "degreerzero";
    case TheoremId::ThreeFixedPoints: return "three_fixed_points";
    case TheoremId::Thm5: return "thm5";
    case TheoremId::Thm6: return "thm6";
    case TheoremId::Thm8: return "thm8";
    case TheoremId::Thm9: return "thm9";
    case TheoremId::GuidingG: return "guiding_g";
    case TheoremId::GuidingG2: return "guiding_g2";
  }
  return "?";
}

namespace {

using Verdict = HypothesisCheck::Verdict;

std::string fmt_vec(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

const Vec& named_point(const std::map<std::string, Vec>& points,
                       const std::string& name) {
  auto it = points.find(name);
  if (it == points.end())
    throw std::invalid_argument("theorem requires named point '" + name + "'");
  return it->second;
}

void push(TheoremReport& rep, const std::string& name, Verdict v,
          std::string detail = {}) {
  rep.hypotheses.push_back({name, v, std::move(detail)});
}

void check_exact(TheoremReport& rep, const std::string& name, bool ok,
                 std::string detail = {}) {
  push(rep, name, ok ? Verdict::Yes : Verdict::No, std::move(detail));
}

void check_sampled(TheoremReport& rep, const std::string& name,
                   const PropertyReport& pr) {
  std::ostringstream os;
  os << pr.samples_tested << " samples";
  push(rep, name, pr.violated ? Verdict::No : Verdict::SampledOnly, os.str());
}

void check_sf_bounded(TheoremReport& rep, const MapHandle& m, const Cone& cone,
                      const SampleConfig& cfg, double scale) {
  SampleConfig probe_cfg = cfg;
  probe_cfg.count = std::min<long>(cfg.count, 2000);
  const std::vector<double> radii{scale, 2 * scale, 4 * scale, 8 * scale};
  const SfProbeReport probe = probe_Sf_bounded(m, cone, radii, probe_cfg);
  // A finite probe can support boundedness but never refute it, so the
  // verdict stays sampled-only; persistent feasibility is surfaced as a
  // warning in the detail.
  std::ostringstream os;
  os << "probe up to R=" << radii.back()
     << (probe.looks_bounded ? ": no feasible sphere point at top radius"
                             : ": warning, feasible sphere points persist");
  push(rep, "S_f bounded", Verdict::SampledOnly, os.str());
}

// Sample of T = {z >=_K 0 : x'' in boundary(z + K)}: z = x'' - t*d with d a
// boundary ray of K and t chosen so z stays in K.
std::vector<Vec> sample_T_set(const Cone& cone, const Vec& x2, long count,
                              uint64_t seed) {
  std::vector<Vec> out;
  const size_t n = cone.dim();
  if (n == 1) {
    out.push_back(x2);  // boundary of [0,inf) is {0}: T = {x''}
    return out;
  }
  std::mt19937_64 rng(seed ^ 0x7365745f54ull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto boundary_dir = [&]() -> Vec {
    if (cone.kind() == Cone::Kind::Orthant) {
      Vec d(n);
      for (auto& di : d) di = unit(rng);
      d[rng() % n] = 0.0;  // a facet of the orthant
      if (norm_inf(d) < 1e-12) d[(rng() % n + 1) % n] = 1.0;
      return d;
    }
    // ice cream in 2-D: the two extreme rays at +/- arccos(beta) off the axis
    if (n != 2) throw std::invalid_argument("T-set sampling supports dim <= 2");
    const Vec& w = cone.axis();
    const double a = std::atan2(w[1], w[0]);
    const double alpha = cone.opening_angle();
    const double phi = (rng() & 1) ? a + alpha : a - alpha;
    return Vec{std::cos(phi), std::sin(phi)};
  };
  for (long i = 0; i < count; ++i) {
    Vec d = boundary_dir();
    // largest t with x'' - t d >=_K 0 (monotone in t), then a uniform fraction
    auto ok = [&](double t) { return cone.contains(sub(x2, scale(t, d)), false, 0.0); };
    if (!ok(0.0)) continue;
    double hi = 1.0;
    int guard = 0;
    while (ok(hi) && ++guard < 200) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (ok(mid) ? lo : hi) = mid;
    }
    const double t = lo * unit(rng);
    if (t > 0.0) out.push_back(sub(x2, scale(t, d)));
  }
  return out;
}

Region enclosing_region(const MapHandle& m, double hi) {
  if (m.in_dim() == 1) return Region::interval(-1e-9, hi);
  return Region::make_box(Vec{-1e-9, -1e-9}, Vec{hi, hi});
}

double points_scale(const std::map<std::string, Vec>& points) {
  double s = 1.0;
  for (const auto& [k, v] : points) s = std::max(s, norm_inf(v));
  return s;
}

// Locate fixed points over [0, hi]^N (N <= 2) or fall back to clustered
// multistart in higher dimension.
std::vector<LocatedBox> conclusion_boxes(const MapHandle& m, double hi,
                                         TheoremReport& rep) {
  if (m.in_dim() <= 2) {
    return locate_fixed_points(m, enclosing_region(m, hi), 20, 128, 1e-9);
  }
  rep.note = "dimension > 2: degree unavailable, clustered multistart search instead";
  const Vec low(m.in_dim(), 0.0), high(m.in_dim(), hi);
  const MultistartReport ms = multistart_uniqueness(m, low, high, 64, 1e-10, 1e-6);
  std::vector<LocatedBox> out;
  for (const auto& p : ms.distinct_limits) {
    Box b;
    b.low = b.high = p;
    for (size_t i = 0; i < p.size(); ++i) {
      b.low[i] -= 1e-7;
      b.high[i] += 1e-7;
    }
    out.push_back({b, 0, false});
  }
  return out;
}

bool box_center_in(const LocatedBox& lb, const std::function<bool(const Vec&)>& pred) {
  return pred(lb.box.center());
}

}  // namespace

TheoremReport check_theorem(const MapHandle& m, const Cone& cone, TheoremId id,
                            const std::map<std::string, Vec>& points,
                            const SampleConfig& cfg) {
  TheoremReport rep;
  rep.theorem = id;
  const Vec zero(cone.dim(), 0.0);
  const double scl = points_scale(points);

  auto in_Sf = [&](const Vec& p) {
    return cone.contains(p, false, cfg.tol) && cone.compare(m.eval(p), p, cfg.tol).leq;
  };

  long promised = 1;
  double locate_hi = 1.25 * scl;
  std::function<bool(const Vec&)> conclusion_filter = [](const Vec&) { return true; };

  switch (id) {
    case TheoremId::DegreeZero: {
      // orthant inside K
      bool orthant_in = true;
      for (size_t i = 0; i < cone.dim() && orthant_in; ++i) {
        Vec e(cone.dim(), 0.0);
        e[i] = 1.0;
        orthant_in = cone.contains(e, false, cfg.tol);
      }
      check_exact(rep, "R^N_+ subset of K", orthant_in);
      check_sampled(rep, "K-sup-monotone",
                    check_sup_monotone(m, Cone::orthant(cone.dim()), cfg, Strength::Weak));
      const Vec& xp = named_point(points, "x_prime");
      check_exact(rep, "x' strongly feasible",
                  in_Sf(xp) && cone.contains(xp, true, cfg.tol),
                  "x'=" + fmt_vec(xp));
      check_sf_bounded(rep, m, cone, cfg, scl);
      conclusion_filter = [&cone, tol = cfg.tol, zero](const Vec& z) {
        return cone.compare(zero, z, tol).lt;
      };
      promised = 1;
      break;
    }
    case TheoremId::ThreeFixedPoints: {
      const Vec& xp = named_point(points, "x_prime");
      const Vec& x2 = named_point(points, "x_second");
      const Vec& x = named_point(points, "x");
      check_sampled(rep, "K-monotone", check_monotone(m, cone, cfg, Strength::Weak));
      check_sf_bounded(rep, m, cone, cfg, scl);
      check_exact(rep, "x' in S_f, x' > 0", in_Sf(xp) && cone.compare(zero, xp, cfg.tol).lt);
      check_exact(rep, "x'' in S_f, x'' > 0", in_Sf(x2) && cone.compare(zero, x2, cfg.tol).lt);
      check_exact(rep, "f(x') << x'", cone.compare(m.eval(xp), xp, cfg.tol).ll);
      check_exact(rep, "f(x'') << x''", cone.compare(m.eval(x2), x2, cfg.tol).ll);
      check_exact(rep, "x' <= x <= x''",
                  cone.compare(xp, x, cfg.tol).leq && cone.compare(x, x2, cfg.tol).leq);
      check_exact(rep, "x << f(x)", cone.compare(x, m.eval(x), cfg.tol).ll);
      promised = 3;
      break;
    }
    case TheoremId::Thm5: {
      const Vec& xp = named_point(points, "x_prime");
      check_exact(rep, "cone is ice-cream C(w,beta)",
                  cone.kind() == Cone::Kind::IceCream);
      check_exact(rep, "x' in S_f, x' > 0",
                  in_Sf(xp) && cone.compare(zero, xp, cfg.tol).lt, "x'=" + fmt_vec(xp));
      check_sampled(rep, "K-monotone", check_monotone(m, cone, cfg, Strength::Weak));
      check_sf_bounded(rep, m, cone, cfg, scl);
      promised = 1;
      break;
    }
    case TheoremId::Thm6: {
      const Vec& xp = named_point(points, "x_prime");
      const Vec& x2 = named_point(points, "x_second");
      check_exact(rep, "x' in S_f, x' >> 0",
                  in_Sf(xp) && cone.contains(xp, true, cfg.tol), "x'=" + fmt_vec(xp));
      check_exact(rep, "x'' >> x'", cone.compare(xp, x2, cfg.tol).ll);
      check_sampled(rep, "K-monotone", check_monotone(m, cone, cfg, Strength::Weak));
      // boundary condition x'' not in f(x) + K on sampled T
      const auto T = sample_T_set(cone, x2, std::min<long>(cfg.count, 512), cfg.seed);
      bool boundary_ok = !T.empty();
      Vec bad;
      for (const Vec& z : T) {
        if (cone.contains(sub(x2, m.eval(z)), false, cfg.tol)) {
          boundary_ok = false;
          bad = z;
          break;
        }
      }
      push(rep, "x'' not in f(x)+K on T",
           boundary_ok ? (cone.dim() == 1 ? Verdict::Yes : Verdict::SampledOnly)
                       : Verdict::No,
           boundary_ok ? std::to_string(T.size()) + " T-samples"
                       : "violated at x=" + fmt_vec(bad));
      // fixed point promised in {z >=_K 0 : z <=_K x'', z not << x'}
      conclusion_filter = [&cone, x2, xp, tol = cfg.tol, zero](const Vec& z) {
        return cone.compare(zero, z, tol).leq && cone.compare(z, x2, tol).leq &&
               !cone.compare(z, xp, tol).ll;
      };
      promised = 1;
      break;
    }
    case TheoremId::Thm8: {
      const Vec& xp = named_point(points, "x_prime");
      const Vec& x2 = named_point(points, "x_second");
      check_exact(rep, "x'' << x'", cone.compare(x2, xp, cfg.tol).ll);
      check_exact(rep, "x' in S_f", in_Sf(xp));
      check_exact(rep, "x'' in S_f", in_Sf(x2));
      check_sampled(rep, "K-monotone", check_monotone(m, cone, cfg, Strength::Weak));
      check_sf_bounded(rep, m, cone, cfg, scl);
      promised = 2;
      break;
    }
    case TheoremId::Thm9: {
      const Vec& xp = named_point(points, "x_prime");
      const Vec& x2 = named_point(points, "x_second");
      check_exact(rep, "0 << x''", cone.contains(x2, true, cfg.tol));
      check_exact(rep, "x'' << x'", cone.compare(x2, xp, cfg.tol).ll);
      check_exact(rep, "x', x'' in S_f", in_Sf(xp) && in_Sf(x2));
      check_sampled(rep, "K-sup-monotone",
                    check_sup_monotone(m, Cone::orthant(cone.dim()), cfg, Strength::Weak));
      check_sf_bounded(rep, m, cone, cfg, scl);
      promised = 2;
      break;
    }
    case TheoremId::GuidingG: {
      const Vec& xp = named_point(points, "x_prime");
      const Vec r = sub(xp, m.eval(xp));
      // x' - f(x') = lambda * 1 for some lambda >= 0
      bool diag = true;
      for (size_t i = 1; i < r.size(); ++i)
        diag = diag && std::fabs(r[i] - r[0]) <= 1e-9;
      check_exact(rep, "x' - f(x') = lambda*1, lambda >= 0",
                  diag && r[0] >= -cfg.tol, "residual=" + fmt_vec(r));
      check_sampled(rep, "(G) residual alignment", check_guiding_G(m, cfg));
      check_sf_bounded(rep, m, cone, cfg, scl);
      promised = 1;
      break;
    }
    case TheoremId::GuidingG2: {
      const auto it = points.find("gamma");
      const double gamma = it != points.end() && !it->second.empty()
                               ? it->second[0]
                               : M_PI / 2.0;
      check_sampled(rep, "(G2) residual cone alignment",
                    check_guiding_G2(m, gamma, cfg));
      check_sf_bounded(rep, m, cone, cfg, scl);
      promised = 1;
      break;
    }
  }

  rep.hypotheses_ok =
      std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(),
                  [](const HypothesisCheck& h) { return h.verdict != Verdict::No; });
  if (!rep.hypotheses_ok) return rep;

  auto boxes = conclusion_boxes(m, locate_hi, rep);
  // keep nonzero-degree (or multistart) boxes; count those matching the
  // theorem's region filter
  std::vector<LocatedBox> kept;
  long matching = 0;
  for (const auto& lb : boxes) {
    if (lb.resolved && lb.degree == 0) continue;
    kept.push_back(lb);
    if (box_center_in(lb, conclusion_filter)) ++matching;
  }
  rep.conclusion_check = std::move(kept);
  rep.conclusion_ok = matching >= promised;
  return rep;
}

}  // namespace conefix
