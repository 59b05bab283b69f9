#ifndef MOMCUT_GENERATORS_HPP
#define MOMCUT_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momcut/error.hpp"
#include "momcut/grid.hpp"

namespace momcut {

namespace detail {

// erf(x) = 2/sqrt(pi) e^{-x^2} sum_n 2^n x^{2n+1} / (1*3*...*(2n+1)); all terms positive.
inline double erf_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= 2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x2) * sum;
}

// erfc(x) for x >= 3 by the Laplace continued fraction, evaluated with modified Lentz.
inline double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 500; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    d = d == 0.0 ? tiny : d;
    c = x + a / c;
    c = c == 0.0 ? tiny : c;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x * x) / (std::sqrt(std::numbers::pi) * f);
}

}  // namespace detail

/// Error function, absolute error below 1e-12.
inline double erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  double value;
  if (ax < 3.0) {
    value = detail::erf_series(ax);
  } else if (ax < 7.0) {
    value = 1.0 - detail::erfc_continued_fraction(ax);
  } else {
    value = 1.0;
  }
  return x < 0.0 ? -value : value;
}

/// SplitMix64 (Steele, Lea and Flood). State advances by 0x9E3779B97F4A7C15; the
/// output mix is two xor-shift-multiply rounds. Fully specified, so other
/// implementations reproduce the stream bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on the open interval (0,1): ((next() >> 11) + 0.5) * 2^-53.
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Standard normals by the Box-Muller transform on SplitMix64 uniforms:
/// r = sqrt(-2 ln u1), t = 2 pi u2, emitting r cos t then r sin t.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : uniform_(seed) {}

  double next() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    const double u1 = uniform_.uniform();
    const double u2 = uniform_.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    return r * std::cos(t);
  }

 private:
  SplitMix64 uniform_;
  std::optional<double> spare_;
};

struct TruncatedNormalSpec {
  double mu = 0.5;
  double sigma = 0.2;
};

/// Normal density exp(-(x-mu)^2 / (2 sigma^2)) restricted to [0,1] and
/// normalized by quadrature.
inline GridFunction1D truncated_normal(const TruncatedNormalSpec& spec, std::size_t num_points) {
  if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) {
    throw Error(ErrorCode::BadSigma, "sigma must be positive, got " + std::to_string(spec.sigma));
  }
  detail::require(spec.mu >= 0.0 && spec.mu <= 1.0, ErrorCode::InvalidArgument, "mu must lie in [0,1]");
  detail::require_simpson_size(num_points);
  std::vector<double> v(num_points);
  const double two_var = 2.0 * spec.sigma * spec.sigma;
  const double intervals = static_cast<double>(num_points - 1);
  const double center = spec.mu * intervals;
  for (std::size_t i = 0; i < num_points; ++i) {
    // (i - mu (N-1)) / (N-1): exactly mirror-symmetric when mu (N-1) is an integer.
    const double d = (static_cast<double>(i) - center) / intervals;
    v[i] = std::exp(-d * d / two_var);
  }
  return normalize(GridFunction1D::from_density(std::move(v)));
}

/// Closed-form normalization sigma sqrt(pi/2) [erf((1-mu)/(sqrt2 sigma)) - erf(-mu/(sqrt2 sigma))].
inline double truncated_normal_mass(const TruncatedNormalSpec& spec) {
  const double s = std::numbers::sqrt2 * spec.sigma;
  return spec.sigma * std::sqrt(std::numbers::pi / 2.0) * (erf((1.0 - spec.mu) / s) - erf(-spec.mu / s));
}

/// Random sine spectrum with an optional band of zeroed modes.
struct SpectrumSpec {
  std::uint64_t seed = 1;
  std::size_t num_modes = 64;
  /// 1-based inclusive mode range set to zero; nullopt leaves every mode.
  std::optional<std::pair<std::size_t, std::size_t>> zero_band = std::pair<std::size_t, std::size_t>{17, 48};
  double margin = 0.05;
};

/// Amplitudes a_1..a_J: J standard normals from NormalStream(seed), sorted by
/// descending magnitude, with the zero band cleared. Index 0 holds mode 1.
inline std::vector<double> spectrum_amplitudes(const SpectrumSpec& spec) {
  detail::require(spec.num_modes >= 1, ErrorCode::InvalidArgument, "need at least one mode");
  detail::require(spec.margin > 0.0 && std::isfinite(spec.margin), ErrorCode::InvalidArgument,
                  "margin must be positive");
  if (spec.zero_band) {
    const auto [lo, hi] = *spec.zero_band;
    if (hi < lo) throw Error(ErrorCode::BadBand, "zero band upper index below lower index");
    if (lo < 1 || hi > spec.num_modes) throw Error(ErrorCode::BadBand, "zero band outside [1, num_modes]");
  }
  NormalStream normals(spec.seed);
  std::vector<double> a(spec.num_modes);
  for (double& v : a) v = normals.next();
  std::stable_sort(a.begin(), a.end(), [](double p, double q) { return std::abs(p) > std::abs(q); });
  if (spec.zero_band) {
    for (std::size_t j = spec.zero_band->first; j <= spec.zero_band->second; ++j) a[j - 1] = 0.0;
  }
  return a;
}

/// g(x) = sum_j a_j sin(2 pi j x), shifted by max(0, -min g) + margin and normalized.
inline GridFunction1D scale_separated_pdf(const SpectrumSpec& spec, std::size_t num_points) {
  detail::require_simpson_size(num_points);
  const std::vector<double> a = spectrum_amplitudes(spec);
  const std::vector<double> x = uniform_nodes(num_points, 0.0, 1.0);
  std::vector<double> g(num_points, 0.0);
  for (std::size_t i = 0; i < num_points; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] != 0.0) sum += a[j] * std::sin(2.0 * std::numbers::pi * static_cast<double>(j + 1) * x[i]);
    }
    g[i] = sum;
  }
  const double lowest = *std::min_element(g.begin(), g.end());
  const double shift = std::max(0.0, -lowest) + spec.margin;
  for (double& v : g) v += shift;
  return normalize(GridFunction1D::from_density(std::move(g)));
}

}  // namespace momcut

#endif  // MOMCUT_GENERATORS_HPP
