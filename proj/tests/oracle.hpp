// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's quadrature, spectral or moment code.
#ifndef MOMCUT_TESTS_ORACLE_HPP
#define MOMCUT_TESTS_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr std::size_t kRefinedPoints = 16001;  // 16x the default 1001-point grid

/// Composite Simpson of a callable on [a, b] with n (odd) nodes.
template <typename T, typename Fn>
T simpson(Fn&& fn, double a, double b, std::size_t n) {
  const double h = (b - a) / static_cast<double>(n - 1);
  T sum = fn(a) + fn(b);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double x = a + h * static_cast<double>(i);
    sum += (i % 2 == 1 ? 4.0 : 2.0) * fn(x);
  }
  return sum * (h / 3.0);
}

/// Analytic truncated-normal density on [0,1], normalized by refined quadrature.
struct TruncatedNormal {
  double mu, sigma, norm;

  TruncatedNormal(double m, double s) : mu(m), sigma(s) {
    norm = simpson<double>([&](double x) { return raw(x); }, 0.0, 1.0, kRefinedPoints);
  }
  double raw(double x) const { return std::exp(-(x - mu) * (x - mu) / (2.0 * sigma * sigma)); }
  double operator()(double x) const { return raw(x) / norm; }
};

/// <x^k> of a density callable by refined Simpson.
template <typename Fn>
double moment(Fn&& density, unsigned k, std::size_t n = kRefinedPoints) {
  return simpson<double>([&](double x) { return std::pow(x, static_cast<double>(k)) * density(x); }, 0.0, 1.0, n);
}

/// Samples of a density callable on m uniform nodes of [0,1].
template <typename Fn>
std::vector<double> sample(Fn&& density, std::size_t m) {
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = density(static_cast<double>(i) / static_cast<double>(m - 1));
  return v;
}

/// Low-pass filter by direct double sums: F on num_k nodes of [0, K] from the
/// samples on a uniform grid, then (1/pi) int_0^K Re[e^{-ikx} F] at every node.
inline std::vector<double> lowpass(const std::vector<double>& f, double K, std::size_t num_k) {
  const std::size_t m = f.size();
  const double hx = 1.0 / static_cast<double>(m - 1);
  const double hk = K / static_cast<double>(num_k - 1);
  auto wt = [](std::size_t i, std::size_t n) { return (i == 0 || i == n - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0); };
  std::vector<double> re(num_k, 0.0), im(num_k, 0.0);
  for (std::size_t j = 0; j < num_k; ++j) {
    const double k = hk * static_cast<double>(j);
    for (std::size_t i = 0; i < m; ++i) {
      const double x = hx * static_cast<double>(i);
      re[j] += wt(i, m) * f[i] * std::cos(k * x);
      im[j] += wt(i, m) * f[i] * std::sin(k * x);
    }
    re[j] *= hx / 3.0;
    im[j] *= hx / 3.0;
  }
  std::vector<double> out(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = hx * static_cast<double>(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < num_k; ++j) {
      const double k = hk * static_cast<double>(j);
      acc += wt(j, num_k) * (std::cos(k * x) * re[j] + std::sin(k * x) * im[j]);
    }
    out[i] = acc * hk / 3.0 / std::numbers::pi;
  }
  return out;
}

/// L1 distance of two sample vectors on a uniform grid of [0,1] (Simpson).
inline double l1(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t m = a.size();
  const double h = 1.0 / static_cast<double>(m - 1);
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double w = (i == 0 || i == m - 1) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * std::abs(a[i] - b[i]);
  }
  return s * h / 3.0;
}

/// erf by its Maclaurin series 2/sqrt(pi) sum (-1)^n x^{2n+1} / (n! (2n+1)); fine for |x| <= 2.
inline double erf_taylor(double x) {
  double term = x;  // (-1)^n x^{2n+1} / n!
  double sum = x;
  for (int n = 1; n < 100; ++n) {
    term *= -x * x / n;
    sum += term / (2.0 * n + 1.0);
  }
  return 2.0 / std::sqrt(std::numbers::pi) * sum;
}

}  // namespace oracle

#endif  // MOMCUT_TESTS_ORACLE_HPP
