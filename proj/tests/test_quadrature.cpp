#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "momcut/quadrature.hpp"

using namespace momcut;

namespace {

template <typename Fn>
std::vector<decltype(std::declval<Fn>()(0.0))> tabulate(Fn fn, std::size_t n, double a = 0.0, double b = 1.0) {
  std::vector<decltype(fn(0.0))> v(n);
  const auto x = uniform_nodes(n, a, b);
  for (std::size_t i = 0; i < n; ++i) v[i] = fn(x[i]);
  return v;
}

}  // namespace

TEST(Quadrature, ExactForLowDegreePolynomials) {
  EXPECT_NEAR(integrate(tabulate([](double x) { return x; }, 101), 0.0, 1.0), 0.5, 1e-12);
  EXPECT_NEAR(integrate(tabulate([](double x) { return x * x * x; }, 101), 0.0, 1.0), 0.25, 1e-12);
}

TEST(Quadrature, FullPeriodsIntegrateToZero) {
  const auto v = tabulate([](double x) { return std::cos(10.0 * std::numbers::pi * x); }, 1001);
  EXPECT_NEAR(integrate(v, 0.0, 1.0), 0.0, 1e-10);
}

TEST(Quadrature, ComplexIntegrands) {
  using C = std::complex<double>;
  const auto one = tabulate([](double) { return C(1.0, 0.0); }, 11);
  const C r0 = integrate_complex(one, 0.0, 1.0);
  EXPECT_NEAR(r0.real(), 1.0, 1e-15);
  EXPECT_NEAR(r0.imag(), 0.0, 1e-15);

  const auto period = tabulate([](double x) { return std::exp(C(0.0, 2.0 * std::numbers::pi * x)); }, 1001);
  EXPECT_NEAR(std::abs(integrate_complex(period, 0.0, 1.0)), 0.0, 1e-10);

  const auto eix = tabulate([](double x) { return std::exp(C(0.0, x)); }, 1001);
  const C r = integrate_complex(eix, 0.0, 1.0);
  EXPECT_NEAR(r.real(), std::sin(1.0), 1e-10);
  EXPECT_NEAR(r.imag(), 1.0 - std::cos(1.0), 1e-10);
}

TEST(Quadrature, RejectsBadGrids) {
  std::vector<double> even(4, 1.0), tiny(1, 1.0);
  try {
    integrate(even, 0.0, 1.0);
    FAIL() << "even grid accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadGrid);
  }
  EXPECT_THROW(integrate(tiny, 0.0, 1.0), Error);
  std::vector<double> ok(3, 1.0);
  EXPECT_THROW(integrate(ok, 1.0, 1.0), Error);
}

TEST(Quadrature, LinearityOnRandomSamples) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> u(201), v(201), w(201);
    const double a = U(rng), b = U(rng);
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] = U(rng);
      v[i] = U(rng);
      w[i] = a * u[i] + b * v[i];
    }
    EXPECT_NEAR(integrate(w, 0.0, 1.0), a * integrate(u, 0.0, 1.0) + b * integrate(v, 0.0, 1.0), 1e-12);
  }
}

TEST(Quadrature, FourthOrderConvergence) {
  const double exact = std::exp(1.0) - 1.0;
  const double e1 = std::abs(integrate(tabulate([](double x) { return std::exp(x); }, 11), 0.0, 1.0) - exact);
  const double e2 = std::abs(integrate(tabulate([](double x) { return std::exp(x); }, 21), 0.0, 1.0) - exact);
  EXPECT_NEAR(e1 / e2, 16.0, 0.5);
}

TEST(Quadrature, WeightsReproduceIntegrate) {
  const auto w = simpson_weights(9, 0.0, 2.0);
  const auto v = tabulate([](double x) { return x * x; }, 9, 0.0, 2.0);
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
  EXPECT_NEAR(s, integrate(v, 0.0, 2.0), 1e-14);
  EXPECT_NEAR(s, 8.0 / 3.0, 1e-13);
}

TEST(Quadrature, TwoDimensionalSeparable) {
  const std::size_t n = 21;
  const auto x = uniform_nodes(n, 0.0, 1.0);
  std::vector<double> v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = x[i] * x[j] * x[j];
  EXPECT_NEAR(integrate_2d(v, n, 0.0, 1.0), 0.5 / 3.0, 1e-14);
}
