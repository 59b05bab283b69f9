#ifndef MOMCUT_GRID_HPP
#define MOMCUT_GRID_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "momcut/error.hpp"
#include "momcut/quadrature.hpp"

namespace momcut {

/// Mass tolerance used for the `normalized` flag.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Masses at or below this are treated as an all-zero input.
inline constexpr double kZeroMass = 1e-12;

/// A function on [0,1] sampled at `num_points` uniform nodes x_i = i/(num_points-1).
///
/// Two flavours share the type. Densities (from_density) are non-negative and
/// may carry the normalized flag; signals (from_signal) may be signed, which is
/// what low- and high-pass filtering produce.
class GridFunction1D {
 public:
  static GridFunction1D from_density(std::vector<double> values, bool normalized = false) {
    GridFunction1D f(std::move(values), true);
    if (normalized) f.mark_normalized();
    return f;
  }

  static GridFunction1D from_signal(std::vector<double> values) { return GridFunction1D(std::move(values), false); }

  std::size_t num_points() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  bool is_normalized() const { return normalized_; }
  bool is_density() const { return density_; }

  double step() const { return 1.0 / static_cast<double>(values_.size() - 1); }
  double node(std::size_t i) const {
    return i + 1 == values_.size() ? 1.0 : static_cast<double>(i) * step();
  }
  std::vector<double> nodes() const { return uniform_nodes(values_.size(), 0.0, 1.0); }

  double mass() const { return integrate(values_, 0.0, 1.0); }

  friend bool operator==(const GridFunction1D&, const GridFunction1D&) = default;

 private:
  GridFunction1D(std::vector<double> values, bool density) : values_(std::move(values)), density_(density) {
    detail::require_simpson_size(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i])) {
        throw Error(ErrorCode::InvalidArgument, "non-finite sample at index " + std::to_string(i));
      }
      if (density_ && values_[i] < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "density sample is negative at index " + std::to_string(i));
      }
    }
  }

  void mark_normalized() {
    const double m = mass();
    if (std::abs(m - 1.0) > kNormalizationTolerance) {
      throw Error(ErrorCode::NotNormalized, "mass " + std::to_string(m) + " differs from 1");
    }
    normalized_ = true;
  }

  std::vector<double> values_;
  bool density_ = true;
  bool normalized_ = false;
};

/// A function on [0,1]^2 with `num_points` uniform nodes per axis.
/// Row-major: at(i, j) = f(x1_i, x2_j).
class GridFunction2D {
 public:
  static GridFunction2D from_density(std::size_t num_points, std::vector<double> values, bool normalized = false) {
    GridFunction2D f(num_points, std::move(values), true);
    if (normalized) f.mark_normalized();
    return f;
  }

  static GridFunction2D from_signal(std::size_t num_points, std::vector<double> values) {
    return GridFunction2D(num_points, std::move(values), false);
  }

  std::size_t num_points() const { return n_; }
  std::span<const double> values() const { return values_; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  bool is_normalized() const { return normalized_; }
  bool is_density() const { return density_; }
  std::vector<double> nodes() const { return uniform_nodes(n_, 0.0, 1.0); }

  double mass() const { return integrate_2d(values_, n_, 0.0, 1.0); }

  friend bool operator==(const GridFunction2D&, const GridFunction2D&) = default;

 private:
  GridFunction2D(std::size_t n, std::vector<double> values, bool density)
      : n_(n), values_(std::move(values)), density_(density) {
    detail::require_simpson_size(n_);
    if (values_.size() != n_ * n_) throw Error(ErrorCode::BadGrid, "2-D grid needs num_points^2 samples");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i]) || (density_ && values_[i] < 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "invalid 2-D sample at flat index " + std::to_string(i));
      }
    }
  }

  void mark_normalized() {
    const double m = mass();
    if (std::abs(m - 1.0) > kNormalizationTolerance) {
      throw Error(ErrorCode::NotNormalized, "2-D mass " + std::to_string(m) + " differs from 1");
    }
    normalized_ = true;
  }

  std::size_t n_;
  std::vector<double> values_;
  bool density_ = true;
  bool normalized_ = false;
};

inline GridFunction1D normalize(const GridFunction1D& f) {
  detail::require(f.is_density(), ErrorCode::InvalidArgument, "only densities can be normalized");
  const double m = f.mass();
  if (!(m > kZeroMass)) throw Error(ErrorCode::ZeroMass, "quadrature mass is " + std::to_string(m));
  std::vector<double> scaled(f.values().begin(), f.values().end());
  for (double& v : scaled) v /= m;
  return GridFunction1D::from_density(std::move(scaled), true);
}

inline GridFunction2D normalize(const GridFunction2D& f) {
  detail::require(f.is_density(), ErrorCode::InvalidArgument, "only densities can be normalized");
  const double m = f.mass();
  if (!(m > kZeroMass)) throw Error(ErrorCode::ZeroMass, "quadrature mass is " + std::to_string(m));
  std::vector<double> scaled(f.values().begin(), f.values().end());
  for (double& v : scaled) v /= m;
  return GridFunction2D::from_density(f.num_points(), std::move(scaled), true);
}

/// Piecewise-linear interpolation; exact at grid nodes.
inline double evaluate(const GridFunction1D& f, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::DomainError, "evaluation point outside [0,1]");
  const std::size_t last = f.num_points() - 1;
  const double pos = x * static_cast<double>(last);
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-9) return f[static_cast<std::size_t>(nearest)];
  const std::size_t i = std::min(static_cast<std::size_t>(pos), last - 1);
  const double t = pos - static_cast<double>(i);
  return (1.0 - t) * f[i] + t * f[i + 1];
}

/// Outer product f1(x1) * f2(x2); normalized when both factors are.
inline GridFunction2D product(const GridFunction1D& f1, const GridFunction1D& f2) {
  if (f1.num_points() != f2.num_points()) throw Error(ErrorCode::GridMismatch, "factor grids differ");
  const std::size_t n = f1.num_points();
  std::vector<double> v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = f1[i] * f2[j];
  if (f1.is_density() && f2.is_density()) {
    return GridFunction2D::from_density(n, std::move(v), f1.is_normalized() && f2.is_normalized());
  }
  return GridFunction2D::from_signal(n, std::move(v));
}

}  // namespace momcut

#endif  // MOMCUT_GRID_HPP
