// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conefix/vec.hpp"

namespace conefix {

// Componentwise activation. capped_relu carries its cap as the parameter
// (default 1 when unspecified in a map document).
struct Activation {
  enum class Kind {
    Sigmoid,
    UnimodalSigmoid,
    CappedRelu,
    SaturatedLinear,
    Isru,
    Arctangent,
    Tanh,
    Arcsinh,
    Elliot,
    Logarithmic,
    Swish,
    Mish,
    Identity,
  };
  Kind kind = Kind::Identity;
  double param = 1.0;

  static Activation from_name(const std::string& name, double param = 1.0);
  std::string name() const;
};

// strict_domain rejects inputs outside the catalog domain R+ for the entries
// that are only defined there (logarithmic, elliot).
double eval_activation(const Activation& a, double xi, bool strict_domain = false);

struct DenseLayer {
  // Row-major weights, rows() x cols().
  std::vector<std::vector<double>> weights;
  Vec bias;
  Activation activation;

  size_t out_dim() const { return weights.size(); }
  size_t in_dim() const { return weights.empty() ? 0 : weights[0].size(); }
  Vec eval(const Vec& x) const;
};

// Closed-form builtin maps (kept as evaluators, not stored networks, so they
// stay bit-stable as parsing evolves).
double builtin_example3(double x);              // sigmoid(10x - 4)
double builtin_piecewise_contraction(double p); // p^2+1/100 on [0,1/4], p/2-1/16+1/100 beyond
double builtin_sin_shift(double x);             // sin(x) + x - 1
Vec builtin_zigzag(const Vec& xy);              // three-branch zigzag map on R^2_+
Vec builtin_rotation_sigmoid(const Vec& xy);    // sigmoid((0,-1;1,0) x)
Vec builtin_quadratic_residual(const Vec& xy);  // x - z^2 with z = x1 + i x2

// A pure evaluatable mapping R^in -> R^out: dense network, named builtin, or
// a symmetric extension of an inner map (evaluated at componentwise |x|).
class MapHandle {
 public:
  enum class Kind { Network, Builtin, Symmetric };

  static MapHandle network(std::vector<DenseLayer> layers);
  static MapHandle builtin(const std::string& name);
  static MapHandle symmetric(MapHandle inner);

  Kind kind() const { return kind_; }
  size_t in_dim() const { return in_dim_; }
  size_t out_dim() const { return out_dim_; }
  const std::string& builtin_name() const { return builtin_name_; }

  Vec eval(const Vec& x) const;

 private:
  MapHandle() = default;
  Kind kind_ = Kind::Builtin;
  size_t in_dim_ = 0;
  size_t out_dim_ = 0;
  std::vector<DenseLayer> layers_;
  std::string builtin_name_;
  std::shared_ptr<const MapHandle> inner_;
};

}  // namespace conefix
