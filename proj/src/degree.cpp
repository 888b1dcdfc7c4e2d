// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include "conefix/degree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "conefix/solve.hpp"

namespace conefix {

double Box::side() const {
  double s = 0.0;
  for (size_t i = 0; i < low.size(); ++i) s = std::max(s, high[i] - low[i]);
  return s;
}

Vec Box::center() const {
  Vec c(low.size());
  for (size_t i = 0; i < low.size(); ++i) c[i] = 0.5 * (low[i] + high[i]);
  return c;
}

Region Region::interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("interval needs a < b");
  Region r;
  r.kind = Kind::Interval;
  r.a = a;
  r.b = b;
  return r;
}

Region Region::make_box(Vec low, Vec high) {
  require_same_dim(low, high);
  for (size_t i = 0; i < low.size(); ++i)
    if (!(low[i] < high[i])) throw std::invalid_argument("box needs low < high");
  Region r;
  r.kind = Kind::BoxKind;
  r.box = Box{std::move(low), std::move(high)};
  return r;
}

Region Region::disk(Vec center, double radius) {
  if (center.size() != 2) throw std::invalid_argument("disk regions are 2-D");
  if (!(radius > 0.0)) throw std::invalid_argument("disk needs positive radius");
  Region r;
  r.kind = Kind::Disk;
  r.center = std::move(center);
  r.radius = radius;
  return r;
}

DegreeReport degree_1d(const MapHandle& m, double a, double b, double tol) {
  if (m.in_dim() != 1) throw std::invalid_argument("degree_1d needs a 1-D map");
  if (!(a < b)) throw std::invalid_argument("interval needs a < b");
  const double ga = a - m.eval(Vec{a})[0];
  const double gb = b - m.eval(Vec{b})[0];
  DegreeReport rep;
  rep.samples = 2;
  rep.boundary_min_residual = std::min(std::fabs(ga), std::fabs(gb));
  rep.reliable = rep.boundary_min_residual > tol;
  const int sa = ga > 0.0 ? 1 : (ga < 0.0 ? -1 : 0);
  const int sb = gb > 0.0 ? 1 : (gb < 0.0 ? -1 : 0);
  rep.degree = (sb - sa) / 2;
  return rep;
}

namespace {

// Residual field of the fixed-point problem.
Vec residual_field(const MapHandle& m, const Vec& x) { return sub(x, m.eval(x)); }

struct WindingAccumulator {
  const MapHandle& m;
  std::function<Vec(double)> path;  // s in [0,1] -> boundary point
  double total_angle = 0.0;
  double max_step = 0.0;
  double min_residual = std::numeric_limits<double>::infinity();
  long samples = 0;

  Vec g(double s) {
    ++samples;
    Vec r = residual_field(m, path(s));
    min_residual = std::min(min_residual, norm2(r));
    return r;
  }

  static double turn(const Vec& g0, const Vec& g1) {
    return std::atan2(g0[0] * g1[1] - g0[1] * g1[0], g0[0] * g1[0] + g0[1] * g1[1]);
  }

  void segment(double s0, const Vec& g0, double s1, const Vec& g1, int depth) {
    const double dth = turn(g0, g1);
    if (std::fabs(dth) < M_PI / 2.0 || depth >= 24) {
      total_angle += dth;
      max_step = std::max(max_step, std::fabs(dth));
      return;
    }
    const double sm = 0.5 * (s0 + s1);
    const Vec gm = g(sm);
    segment(s0, g0, sm, gm, depth + 1);
    segment(sm, gm, s1, g1, depth + 1);
  }
};

std::function<Vec(double)> boundary_path(const Region& region) {
  if (region.kind == Region::Kind::Disk) {
    return [c = region.center, r = region.radius](double s) {
      const double phi = 2.0 * M_PI * s;
      return Vec{c[0] + r * std::cos(phi), c[1] + r * std::sin(phi)};
    };
  }
  if (region.kind == Region::Kind::BoxKind) {
    const Box b = region.box;
    return [b](double s) {
      const double t = 4.0 * (s - std::floor(s));
      const double w = b.high[0] - b.low[0], h = b.high[1] - b.low[1];
      if (t < 1.0) return Vec{b.low[0] + t * w, b.low[1]};
      if (t < 2.0) return Vec{b.high[0], b.low[1] + (t - 1.0) * h};
      if (t < 3.0) return Vec{b.high[0] - (t - 2.0) * w, b.high[1]};
      return Vec{b.low[0], b.high[1] - (t - 3.0) * h};
    };
  }
  throw std::invalid_argument("degree_2d needs a box or disk region");
}

}  // namespace

DegreeReport degree_2d(const MapHandle& m, const Region& region,
                       int boundary_samples, double tol) {
  if (m.in_dim() != 2) throw std::invalid_argument("degree_2d needs a 2-D map");
  if (boundary_samples < 16)
    throw std::invalid_argument("boundary_samples must be >= 16");

  WindingAccumulator acc{m, boundary_path(region)};
  std::vector<std::pair<double, Vec>> ring;
  ring.reserve(boundary_samples + 1);
  for (int i = 0; i <= boundary_samples; ++i) {
    const double s =
        static_cast<double>(i % boundary_samples) / boundary_samples;
    ring.emplace_back(static_cast<double>(i) / boundary_samples,
                      acc.g(s));
  }
  for (int i = 0; i < boundary_samples; ++i)
    acc.segment(ring[i].first, ring[i].second, ring[i + 1].first, ring[i + 1].second, 0);

  DegreeReport rep;
  rep.samples = acc.samples;
  rep.boundary_min_residual = acc.min_residual;
  rep.degree = static_cast<int>(std::lround(acc.total_angle / (2.0 * M_PI)));
  rep.reliable = acc.min_residual > tol && acc.max_step < M_PI / 2.0;
  return rep;
}

namespace {

// 1-D sign-change / near-zero heuristic guarding the degree-0 prune.
bool interval_suspect(const MapHandle& m, double a, double b, double tol) {
  const int k = 9;
  double prev = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  bool sign_change = false;
  for (int i = 0; i <= k; ++i) {
    const double x = a + (b - a) * i / k;
    const double g = x - m.eval(Vec{x})[0];
    min_abs = std::min(min_abs, std::fabs(g));
    if (i > 0 && ((g > 0) != (prev > 0))) sign_change = true;
    prev = g;
  }
  return sign_change || min_abs <= std::max(tol, 1e-3 * (b - a));
}

void locate_1d(const MapHandle& m, double a, double b, double min_side,
               double tol, std::vector<LocatedBox>& out, int depth, int max_depth,
               int unreliable_streak) {
  const DegreeReport d = degree_1d(m, a, b, tol);
  unreliable_streak = d.reliable ? 0 : unreliable_streak + 1;
  // Non-isolated fixed points make every subinterval unreliable; stop the
  // subdivision from exploding and flag what we have.
  if (!d.reliable && (depth >= max_depth || unreliable_streak > 6)) {
    out.push_back({Box{{a}, {b}}, d.degree, false});
    return;
  }
  if (d.reliable && d.degree == 0 && !interval_suspect(m, a, b, tol)) return;
  if ((b - a) <= min_side && d.reliable) {
    if (d.degree != 0) out.push_back({Box{{a}, {b}}, d.degree, true});
    else if (interval_suspect(m, a, b, tol)) {
      // even root count inside a minimal interval: report as unresolved
      out.push_back({Box{{a}, {b}}, 0, false});
    }
    return;
  }
  if (depth >= max_depth) {
    out.push_back({Box{{a}, {b}}, d.degree, d.reliable});
    return;
  }
  const double mid = 0.5 * (a + b);
  locate_1d(m, a, mid, min_side, tol, out, depth + 1, max_depth, unreliable_streak);
  locate_1d(m, mid, b, min_side, tol, out, depth + 1, max_depth, unreliable_streak);
}

// 2-D interior heuristic: any residual component sign change over a coarse
// interior grid keeps the box alive even when its degree is 0.
bool box_suspect(const MapHandle& m, const Box& b, double tol) {
  const int k = 4;
  bool pos[2] = {false, false}, neg[2] = {false, false};
  double min_norm = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) {
      const Vec x{b.low[0] + (b.high[0] - b.low[0]) * i / k,
                  b.low[1] + (b.high[1] - b.low[1]) * j / k};
      const Vec g = residual_field(m, x);
      min_norm = std::min(min_norm, norm2(g));
      for (int c = 0; c < 2; ++c) (g[c] >= 0 ? pos : neg)[c] = true;
    }
  }
  return (pos[0] && neg[0] && pos[1] && neg[1]) || min_norm <= tol;
}

void locate_2d(const MapHandle& m, const Box& b, double min_side, double tol,
               int boundary_samples, std::vector<LocatedBox>& out, int depth,
               int max_depth, int unreliable_streak) {
  const DegreeReport d =
      degree_2d(m, Region::make_box(b.low, b.high), boundary_samples, tol);
  unreliable_streak = d.reliable ? 0 : unreliable_streak + 1;
  if (!d.reliable && (depth >= max_depth || unreliable_streak > 4)) {
    out.push_back({b, d.degree, false});
    return;
  }
  if (d.reliable && d.degree == 0 && !box_suspect(m, b, tol)) return;
  if (b.side() <= min_side && d.reliable) {
    if (d.degree != 0) out.push_back({b, d.degree, true});
    else if (box_suspect(m, b, tol)) out.push_back({b, 0, false});
    return;
  }
  if (depth >= max_depth) {
    out.push_back({b, d.degree, d.reliable});
    return;
  }
  const Vec c = b.center();
  for (int q = 0; q < 4; ++q) {
    Box child;
    child.low = {q & 1 ? c[0] : b.low[0], q & 2 ? c[1] : b.low[1]};
    child.high = {q & 1 ? b.high[0] : c[0], q & 2 ? b.high[1] : c[1]};
    locate_2d(m, child, min_side, tol, boundary_samples, out, depth + 1, max_depth,
              unreliable_streak);
  }
}

}  // namespace

std::vector<LocatedBox> locate_fixed_points(const MapHandle& m, const Region& region,
                                            int max_depth, int boundary_samples,
                                            double tol) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  std::vector<LocatedBox> out;
  if (region.kind == Region::Kind::Interval) {
    if (m.in_dim() != 1) throw std::invalid_argument("interval region needs a 1-D map");
    const double min_side = (region.b - region.a) * std::pow(0.5, max_depth);
    locate_1d(m, region.a, region.b, min_side, tol, out, 0, max_depth, 0);
  } else {
    if (m.in_dim() != 2) throw std::invalid_argument("planar region needs a 2-D map");
    Box b = region.kind == Region::Kind::BoxKind
                ? region.box
                : Box{{region.center[0] - region.radius, region.center[1] - region.radius},
                      {region.center[0] + region.radius, region.center[1] + region.radius}};
    const double min_side = b.side() * std::pow(0.5, max_depth);
    locate_2d(m, b, min_side, tol, boundary_samples, out, 0, max_depth, 0);
  }
  // deterministic merge order regardless of processing order
  std::sort(out.begin(), out.end(), [](const LocatedBox& a, const LocatedBox& b) {
    return a.box.low < b.box.low;
  });
  return out;
}

}  // namespace conefix
