// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace conefix {

// Dense double vector; N is small (this is an analysis tool, not linear algebra).
using Vec = std::vector<double>;

inline void require_finite(const Vec& x, const char* what = "vector") {
  for (double v : x)
    if (!std::isfinite(v))
      throw std::invalid_argument(std::string(what) + " has a non-finite entry");
}

inline void require_same_dim(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
}

inline Vec add(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale(double s, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline Vec abs(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::fabs(a[i]);
  return r;
}

inline double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Vec& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::fabs(v));
  return m;
}

inline double norm1(const Vec& a) {
  double s = 0.0;
  for (double v : a) s += std::fabs(v);
  return s;
}

inline bool strictly_positive(const Vec& a) {
  for (double v : a)
    if (!(v > 0.0)) return false;
  return true;
}

inline Vec ones(size_t n) { return Vec(n, 1.0); }

}  // namespace conefix
