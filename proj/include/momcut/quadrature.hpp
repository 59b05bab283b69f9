#ifndef MOMCUT_QUADRATURE_HPP
#define MOMCUT_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "momcut/error.hpp"

namespace momcut {

/// Composite Simpson on a uniform grid that includes both endpoints.
struct QuadratureSpec {
  std::size_t points = 1001;

  static bool valid_points(std::size_t n) { return n >= 3 && n % 2 == 1; }
  bool valid() const { return valid_points(points); }
};

namespace detail {

inline void require_simpson_size(std::size_t n) {
  if (!QuadratureSpec::valid_points(n)) {
    throw Error(ErrorCode::BadGrid,
                "composite Simpson needs an odd number of nodes >= 3, got " + std::to_string(n));
  }
}

inline void require_interval(double lower, double upper) {
  if (!(lower < upper)) throw Error(ErrorCode::InvalidArgument, "integration interval must satisfy lower < upper");
}

template <typename T>
T simpson_sum(std::span<const T> samples) {
  const std::size_t n = samples.size();
  T odd{}, even{};
  for (std::size_t i = 1; i + 1 < n; i += 2) odd += samples[i];
  for (std::size_t i = 2; i + 1 < n; i += 2) even += samples[i];
  return samples.front() + samples.back() + T(4) * odd + T(2) * even;
}

}  // namespace detail

/// Node weights w_i such that sum_i w_i g(x_i) is the composite Simpson
/// estimate of the integral of g over [lower, upper].
inline std::vector<double> simpson_weights(std::size_t n, double lower, double upper) {
  detail::require_simpson_size(n);
  detail::require_interval(lower, upper);
  const double h = (upper - lower) / static_cast<double>(n - 1);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || i == n - 1) {
      w[i] = h / 3.0;
    } else {
      w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    }
  }
  return w;
}

/// Uniform nodes lower, lower + h, ..., upper. The last node is exactly `upper`.
inline std::vector<double> uniform_nodes(std::size_t n, double lower, double upper) {
  std::vector<double> x(n);
  if (n == 1) {
    x[0] = lower;
    return x;
  }
  const double h = (upper - lower) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = lower + h * static_cast<double>(i);
  x.back() = upper;
  return x;
}

inline double integrate(std::span<const double> samples, double lower, double upper) {
  detail::require_simpson_size(samples.size());
  detail::require_interval(lower, upper);
  const double h = (upper - lower) / static_cast<double>(samples.size() - 1);
  return detail::simpson_sum(samples) * h / 3.0;
}

/// Real and imaginary parts are integrated independently.
inline std::complex<double> integrate_complex(std::span<const std::complex<double>> samples, double lower,
                                              double upper) {
  detail::require_simpson_size(samples.size());
  detail::require_interval(lower, upper);
  const double h = (upper - lower) / static_cast<double>(samples.size() - 1);
  return detail::simpson_sum(samples) * (h / 3.0);
}

/// Tensor-product Simpson over [lower, upper]^2. `samples` is row-major with
/// `n` nodes per axis: samples[i * n + j] = g(x_i, y_j).
inline double integrate_2d(std::span<const double> samples, std::size_t n, double lower, double upper) {
  detail::require_simpson_size(n);
  if (samples.size() != n * n) {
    throw Error(ErrorCode::BadGrid, "2-D sample count does not match n*n");
  }
  const std::vector<double> w = simpson_weights(n, lower, upper);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += w[j] * samples[i * n + j];
    total += w[i] * row;
  }
  return total;
}

}  // namespace momcut

#endif  // MOMCUT_QUADRATURE_HPP
