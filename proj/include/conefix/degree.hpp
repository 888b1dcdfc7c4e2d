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

struct Box {
  Vec low, high;
  size_t dim() const { return low.size(); }
  double side() const;
  Vec center() const;
};

// Planar or interval region for degree computations. Order-interval regions
// are handled by the theorem layer via their bounding boxes.
struct Region {
  enum class Kind { Interval, BoxKind, Disk };
  Kind kind = Kind::Interval;
  double a = 0.0, b = 0.0;  // interval
  Box box;                  // box
  Vec center;               // disk
  double radius = 0.0;      // disk
  static Region interval(double a, double b);
  static Region make_box(Vec low, Vec high);
  static Region disk(Vec center, double radius);
};

struct DegreeReport {
  int degree = 0;
  double boundary_min_residual = 0.0;  // min ||x - f(x)|| over sampled boundary
  long samples = 0;
  bool reliable = false;
};

// deg(I - f, (a,b), 0) from the endpoint signs of x - f(x); in {-1, 0, +1}.
DegreeReport degree_1d(const MapHandle& m, double a, double b, double tol = 1e-9);

// Winding number of x - f(x) around 0 along the region boundary. Boundary
// segments are refined adaptively until consecutive image points subtend less
// than pi/2 (hard cap), which prevents miscounts near boundary-adjacent roots.
DegreeReport degree_2d(const MapHandle& m, const Region& region,
                       int boundary_samples = 256, double tol = 1e-9);

struct LocatedBox {
  Box box;
  int degree = 0;
  bool resolved = true;  // false when the boundary was unreliable at max depth
};

// Recursive bisection: boxes with zero degree and no sign-change heuristic hit
// are pruned; minimal boxes with nonzero degree are returned. Dimension <= 2.
std::vector<LocatedBox> locate_fixed_points(const MapHandle& m, const Region& region,
                                            int max_depth = 20,
                                            int boundary_samples = 128,
                                            double tol = 1e-9);

enum class TheoremId {
  DegreeZero,        // strongly feasible + sup-monotone existence
  ThreeFixedPoints,
  Thm5,
  Thm6,
  Thm8,
  Thm9,
  GuidingG,
  GuidingG2,
};

TheoremId theorem_from_name(const std::string& name);
std::string theorem_name(TheoremId id);

struct HypothesisCheck {
  std::string name;
  enum class Verdict { Yes, No, SampledOnly } verdict = Verdict::No;
  std::string detail;
};

struct TheoremReport {
  TheoremId theorem;
  std::vector<HypothesisCheck> hypotheses;
  bool hypotheses_ok = false;  // all yes or sampled_only
  std::optional<std::vector<LocatedBox>> conclusion_check;  // located fixed points
  bool conclusion_ok = false;  // the promised count was found
  std::string note;
};

// Named points per theorem: "x_prime", "x_second", "x" as applicable.
// Pointwise hypotheses are verified exactly, universally quantified ones by
// sampling; when dim <= 2 and the hypotheses pass, fixed points are located
// over the theorem's regions and counted against the promise.
TheoremReport check_theorem(const MapHandle& m, const Cone& cone, TheoremId id,
                            const std::map<std::string, Vec>& points,
                            const SampleConfig& cfg);

}  // namespace conefix
