// conefix - fixed-point analysis of cone-ordered mappings
// Licensed under the Apache License, Version 2.0.

#include "conefix/map.hpp"

#include <cmath>
#include <utility>

namespace conefix {

namespace {

double sigmoid(double xi) { return 1.0 / (1.0 + std::exp(-xi)); }

// log(1 + e^x) without overflow for large x.
double softplus(double xi) { return xi > 30.0 ? xi : std::log1p(std::exp(xi)); }

}  // namespace

Activation Activation::from_name(const std::string& name, double param) {
  using K = Activation::Kind;
  Activation a;
  a.param = param;
  if (name == "sigmoid") a.kind = K::Sigmoid;
  else if (name == "unimodal_sigmoid") a.kind = K::UnimodalSigmoid;
  else if (name == "capped_relu") a.kind = K::CappedRelu;
  else if (name == "saturated_linear") a.kind = K::SaturatedLinear;
  else if (name == "isru") a.kind = K::Isru;
  else if (name == "arctangent") a.kind = K::Arctangent;
  else if (name == "tanh") a.kind = K::Tanh;
  else if (name == "arcsinh") a.kind = K::Arcsinh;
  else if (name == "elliot") a.kind = K::Elliot;
  else if (name == "logarithmic") a.kind = K::Logarithmic;
  else if (name == "swish") a.kind = K::Swish;
  else if (name == "mish") a.kind = K::Mish;
  else if (name == "identity") a.kind = K::Identity;
  else throw std::invalid_argument("unknown activation: " + name);
  return a;
}

std::string Activation::name() const {
  switch (kind) {
    case Kind::Sigmoid: return "sigmoid";
    case Kind::UnimodalSigmoid: return "unimodal_sigmoid";
    case Kind::CappedRelu: return "capped_relu";
    case Kind::SaturatedLinear: return "saturated_linear";
    case Kind::Isru: return "isru";
    case Kind::Arctangent: return "arctangent";
    case Kind::Tanh: return "tanh";
    case Kind::Arcsinh: return "arcsinh";
    case Kind::Elliot: return "elliot";
    case Kind::Logarithmic: return "logarithmic";
    case Kind::Swish: return "swish";
    case Kind::Mish: return "mish";
    case Kind::Identity: return "identity";
  }
  return "?";
}

double eval_activation(const Activation& a, double xi, bool strict_domain) {
  using K = Activation::Kind;
  if (!std::isfinite(xi)) throw std::invalid_argument("activation input not finite");
  switch (a.kind) {
    case K::Sigmoid: return sigmoid(xi);
    case K::UnimodalSigmoid: return sigmoid(xi) - 0.5;
    case K::CappedRelu: return std::min(xi, a.param);
    case K::SaturatedLinear: return xi > 1.0 ? 1.0 : xi;
    case K::Isru: return xi / std::sqrt(1.0 + xi * xi);
    case K::Arctangent: return (2.0 / M_PI) * std::atan(xi);
    case K::Tanh: return std::tanh(xi);
    case K::Arcsinh: return std::asinh(xi);
    case K::Elliot:
      if (strict_domain && xi < 0.0)
        throw std::domain_error("elliot activation requires xi >= 0");
      return xi / (1.0 + xi);
    case K::Logarithmic:
      if (strict_domain && xi < 0.0)
        throw std::domain_error("logarithmic activation requires xi >= 0");
      if (xi <= -1.0) throw std::domain_error("logarithmic activation undefined at xi <= -1");
      return std::log1p(xi);
    case K::Swish: return xi * sigmoid(xi);
    case K::Mish: return xi * std::tanh(softplus(xi));
    case K::Identity: return xi;
  }
  throw std::logic_error("unreachable");
}

Vec DenseLayer::eval(const Vec& x) const {
  if (x.size() != in_dim())
    throw std::invalid_argument("layer input dimension mismatch");
  if (bias.size() != out_dim())
    throw std::invalid_argument("layer bias/weights shape mismatch");
  Vec y(out_dim());
  for (size_t i = 0; i < out_dim(); ++i) {
    double acc = bias[i];
    for (size_t j = 0; j < in_dim(); ++j) acc += weights[i][j] * x[j];
    y[i] = eval_activation(activation, acc);
  }
  return y;
}

double builtin_example3(double x) { return sigmoid(10.0 * x - 4.0); }

double builtin_piecewise_contraction(double p) {
  if (p < 0.0) throw std::domain_error("piecewise contraction requires p >= 0");
  if (p <= 0.25) return p * p + 0.01;
  return 0.5 * p - 1.0 / 16.0 + 0.01;
}

double builtin_sin_shift(double x) { return std::sin(x) + x - 1.0; }

Vec builtin_zigzag(const Vec& xy) {
  if (xy.size() != 2) throw std::invalid_argument("zigzag map is 2-D");
  const double x = xy[0], y = xy[1];
  if (x < 0.0 || y < 0.0) throw std::domain_error("zigzag map requires nonnegative input");
  const double t = std::max(std::fabs(x), std::fabs(y));

  // Triangular wave: t - 2n on [2n, 2n+1), -t + 2n + 2 on [2n+1, 2n+2).
  const double m = t - 2.0 * std::floor(t / 2.0);
  const double delta = m < 1.0 ? m : 2.0 - m;
  const double zeta = t / 4.0 - std::floor(t / 4.0);

  auto mix = [&](double ax, double ay, double bx, double by, double wa) {
    return Vec{wa * ax + (1.0 - wa) * bx, wa * ay + (1.0 - wa) * by};
  };
  if (zeta < 0.25) return mix(x, y, x, x, 1.0 - delta);   // (1-d)(x,y) + d(x,x)
  if (zeta < 0.75) return mix(x, x, y, x, delta);          // d(x,x) + (1-d)(y,x)
  return mix(x, x, x, y, delta);                           // d(x,x) + (1-d)(x,y)
}

Vec builtin_rotation_sigmoid(const Vec& xy) {
  if (xy.size() != 2) throw std::invalid_argument("rotation-sigmoid map is 2-D");
  return Vec{sigmoid(-xy[1]), sigmoid(xy[0])};
}

Vec builtin_quadratic_residual(const Vec& xy) {
  if (xy.size() != 2) throw std::invalid_argument("quadratic-residual map is 2-D");
  // Identity minus the complex square, so x - f(x) = z^2: winding 2 around 0.
  const double x = xy[0], y = xy[1];
  return Vec{x - (x * x - y * y), y - 2.0 * x * y};
}

MapHandle MapHandle::network(std::vector<DenseLayer> layers) {
  if (layers.empty()) throw std::invalid_argument("network needs at least one layer");
  for (size_t i = 0; i < layers.size(); ++i) {
    if (layers[i].out_dim() == 0 || layers[i].in_dim() == 0)
      throw std::invalid_argument("layer with empty weights");
    if (layers[i].bias.size() != layers[i].out_dim())
      throw std::invalid_argument("layer bias/weights shape mismatch");
    for (const auto& row : layers[i].weights)
      if (row.size() != layers[i].in_dim())
        throw std::invalid_argument("ragged weight rows");
    if (i > 0 && layers[i].in_dim() != layers[i - 1].out_dim())
      throw std::invalid_argument("layer dimensions do not chain");
  }
  MapHandle m;
  m.kind_ = Kind::Network;
  m.in_dim_ = layers.front().in_dim();
  m.out_dim_ = layers.back().out_dim();
  m.layers_ = std::move(layers);
  return m;
}

MapHandle MapHandle::builtin(const std::string& name) {
  MapHandle m;
  m.kind_ = Kind::Builtin;
  m.builtin_name_ = name;
  if (name == "example3" || name == "piecewise_contraction" || name == "sin_shift") {
    m.in_dim_ = m.out_dim_ = 1;
  } else if (name == "zigzag" || name == "rotation_sigmoid" ||
             name == "quadratic_residual") {
    m.in_dim_ = m.out_dim_ = 2;
  } else {
    throw std::invalid_argument("unknown builtin map: " + name);
  }
  return m;
}

MapHandle MapHandle::symmetric(MapHandle inner) {
  MapHandle m;
  m.kind_ = Kind::Symmetric;
  m.in_dim_ = inner.in_dim();
  m.out_dim_ = inner.out_dim();
  m.inner_ = std::make_shared<const MapHandle>(std::move(inner));
  return m;
}

Vec MapHandle::eval(const Vec& x) const {
  if (x.size() != in_dim_)
    throw std::invalid_argument("map input dimension mismatch");
  switch (kind_) {
    case Kind::Network: {
      Vec v = x;
      for (const auto& layer : layers_) v = layer.eval(v);
      return v;
    }
    case Kind::Builtin: {
      if (builtin_name_ == "example3") return Vec{builtin_example3(x[0])};
      if (builtin_name_ == "piecewise_contraction")
        return Vec{builtin_piecewise_contraction(x[0])};
      if (builtin_name_ == "sin_shift") return Vec{builtin_sin_shift(x[0])};
      if (builtin_name_ == "zigzag") return builtin_zigzag(x);
      if (builtin_name_ == "quadratic_residual") return builtin_quadratic_residual(x);
      return builtin_rotation_sigmoid(x);
    }
    case Kind::Symmetric:
      return inner_->eval(abs(x));
  }
  throw std::logic_error("unreachable");
}

}  // namespace conefix
