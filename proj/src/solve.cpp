// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include "conefix/solve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace conefix {

namespace {

constexpr double kGuardBox = 1e9;

bool inside_guard(const Vec& x) {
  for (double v : x)
    if (!std::isfinite(v) || std::fabs(v) > kGuardBox) return false;
  return true;
}

void finish(SolveResult& res, const MapHandle& m) {
  if (!res.trace.iterates.empty()) res.fixed_point = res.trace.iterates.back();
  if (inside_guard(res.fixed_point))
    res.final_residual = norm_inf(sub(m.eval(res.fixed_point), res.fixed_point));
  const Vec zero(m.in_dim(), 0.0);
  const Vec f0 = m.eval(zero);
  bool pos = f0 != zero;
  for (double v : f0) pos = pos && v >= 0.0;
  res.positive_at_zero = pos;
}

double halton(long index, int base) {
  double f = 1.0, r = 0.0;
  long i = index;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

}  // namespace

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIter: return "max_iter";
    case SolveStatus::Diverged: return "diverged";
    case SolveStatus::OrderViolation: return "order_violation";
    case SolveStatus::ContractionViolation: return "contraction_violation";
  }
  return "?";
}

SolveResult iterate(const MapHandle& m, const Vec& x0, double tol, int max_iter,
                    const Vec& norm_w) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const Cone orthant = Cone::orthant(m.in_dim());

  SolveResult res;
  res.trace.iterates.push_back(x0);
  Vec x = x0;
  for (int k = 0; k < max_iter; ++k) {
    Vec xn = m.eval(x);
    if (!inside_guard(xn)) {
      res.trace.status = SolveStatus::Diverged;
      res.trace.diagnostic = "iterate left the guard box or is non-finite";
      res.trace.iterates.push_back(xn);
      res.fixed_point = x;
      finish(res, m);
      res.fixed_point = x;  // last finite point
      return res;
    }
    const double r = weighted_max_norm(sub(xn, x), norm_w);
    res.trace.iterates.push_back(xn);
    res.trace.residual_w.push_back(r);
    res.trace.order_descending.push_back(orthant.compare(xn, x).leq);
    x = std::move(xn);
    if (r <= tol) {
      res.trace.status = SolveStatus::Converged;
      finish(res, m);
      return res;
    }
  }
  res.trace.status = SolveStatus::MaxIter;
  finish(res, m);
  return res;
}

SolveResult monotone_descent(const MapHandle& m, const Cone& cone,
                             const FeasiblePoint& p, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (!cone.compare(m.eval(p.x), p.x).leq)
    throw std::invalid_argument("starting point is not feasible: f(p) <=_K p fails");

  SolveResult res;
  res.trace.iterates.push_back(p.x);
  Vec x = p.x;
  const Vec w = ones(m.in_dim());
  for (int k = 0; k < max_iter; ++k) {
    Vec xn = m.eval(x);
    const double r = weighted_max_norm(sub(xn, x), w);
    const bool descending = cone.compare(xn, x).leq;
    res.trace.iterates.push_back(xn);
    res.trace.residual_w.push_back(r);
    res.trace.order_descending.push_back(descending);
    if (!descending) {
      res.trace.status = SolveStatus::OrderViolation;
      std::ostringstream os;
      os << "descent order x^{k+1} <=_K x^k violated at k=" << k
         << " (monotonicity hypothesis failed along the path)";
      res.trace.diagnostic = os.str();
      finish(res, m);
      return res;
    }
    x = std::move(xn);
    if (r <= tol) {
      res.trace.status = SolveStatus::Converged;
      finish(res, m);
      return res;
    }
  }
  res.trace.status = SolveStatus::MaxIter;
  finish(res, m);
  return res;
}

SolveResult contraction_solve(const MapHandle& m, const Cone& cone, const Vec& w,
                              double c, const Vec& x0, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const double cd = c * delta_K(cone, w);
  if (!(cd < 1.0))
    throw std::invalid_argument("c * delta(K) >= 1: contraction rate not certified");

  SolveResult res;
  res.certified_rate = cd;
  res.trace.iterates.push_back(x0);
  Vec x = x0;
  const double stop = tol * (1.0 - cd) / cd;  // a-posteriori rule
  double prev_r = -1.0;
  for (int k = 0; k < max_iter; ++k) {
    Vec xn = m.eval(x);
    if (!inside_guard(xn)) {
      res.trace.status = SolveStatus::Diverged;
      res.trace.diagnostic = "iterate left the guard box or is non-finite";
      finish(res, m);
      return res;
    }
    const double r = weighted_max_norm(sub(xn, x), w);
    res.trace.iterates.push_back(xn);
    res.trace.residual_w.push_back(r);
    res.trace.order_descending.push_back(cone.compare(xn, x).leq);
    if (prev_r > 0.0 && r / prev_r > cd + kBoundaryTol) {
      res.trace.status = SolveStatus::ContractionViolation;
      std::ostringstream os;
      os << "step ratio " << (r / prev_r) << " exceeds certified rate " << cd
         << " at k=" << k;
      res.trace.diagnostic = os.str();
      finish(res, m);
      return res;
    }
    prev_r = r;
    x = std::move(xn);
    if (r <= stop) {
      res.trace.status = SolveStatus::Converged;
      break;
    }
  }
  if (res.trace.status != SolveStatus::Converged) res.trace.status = SolveStatus::MaxIter;
  finish(res, m);

  // a-priori bound sequence against the final iterate as x*
  const Vec& star = res.fixed_point;
  const double base = weighted_max_norm(sub(res.trace.iterates.front(), star), w);
  double factor = 1.0;
  res.trace.bound_certificate.clear();
  for (size_t k = 0; k < res.trace.iterates.size(); ++k) {
    res.trace.bound_certificate.push_back(factor * base);
    factor *= cd;
  }
  return res;
}

MultistartReport multistart_uniqueness(const MapHandle& m, const Vec& low,
                                       const Vec& high, int starts, double tol,
                                       double cluster_radius) {
  if (starts < 2) throw std::invalid_argument("multistart needs at least 2 starts");
  require_same_dim(low, high);
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
  if (low.size() > 8) throw std::invalid_argument("multistart supports dim <= 8");

  MultistartReport rep;
  const Vec w = ones(m.in_dim());
  for (int s = 0; s < starts; ++s) {
    Vec x0(low.size());
    for (size_t j = 0; j < low.size(); ++j)
      x0[j] = low[j] + (high[j] - low[j]) * halton(s + 1, primes[j]);
    SolveResult r = iterate(m, x0, tol, 10000, w);
    if (r.trace.status != SolveStatus::Converged) {
      ++rep.non_converged;
      continue;
    }
    bool merged = false;
    for (size_t ci = 0; ci < rep.distinct_limits.size(); ++ci) {
      if (norm_inf(sub(rep.distinct_limits[ci], r.fixed_point)) <= cluster_radius) {
        ++rep.cluster_sizes[ci];
        merged = true;
        break;
      }
    }
    if (!merged) {
      rep.distinct_limits.push_back(r.fixed_point);
      rep.cluster_sizes.push_back(1);
    }
  }
  const long converged = starts - rep.non_converged;
  rep.non_isolated_suspected =
      converged > 4 && static_cast<long>(rep.distinct_limits.size()) * 2 > converged;
  return rep;
}

}  // namespace conefix
