#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "momcut/cutoff.hpp"
#include "momcut/generators.hpp"
#include "momcut/moments.hpp"
#include "momcut/spectral.hpp"
#include "oracle.hpp"

using namespace momcut;
using C = std::complex<double>;

namespace {

GridFunction1D uniform(std::size_t n = 1001) { return GridFunction1D::from_density(std::vector<double>(n, 1.0), true); }

GridFunction1D linear(std::size_t n = 1001) {
  return normalize(GridFunction1D::from_density(oracle::sample([](double x) { return 2.0 * x; }, n)));
}

std::vector<double> to_vector(const GridFunction1D& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

TEST(CharFn, ClosedForms) {
  const auto tn = truncated_normal({0.4, 0.25}, 1001);
  EXPECT_NEAR(std::abs(char_fn(tn, 0.0) - C(1.0, 0.0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(char_fn(uniform(), 2.0 * std::numbers::pi)), 0.0, 1e-9);
  const C one = char_fn(uniform(), 1.0);
  EXPECT_NEAR(one.real(), std::sin(1.0), 1e-9);
  EXPECT_NEAR(one.imag(), 1.0 - std::cos(1.0), 1e-9);
  EXPECT_THROW(char_fn(GridFunction1D::from_density(std::vector<double>(11, 2.0)), 1.0), Error);
}

TEST(CharSamples, UniformNodes) {
  const auto s = char_samples(uniform(), 2.0 * std::numbers::pi, 3);
  ASSERT_EQ(s.num_k(), 3u);
  EXPECT_NEAR(std::abs(s.values[0] - C(1.0, 0.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.values[1] - C(0.0, 2.0 / std::numbers::pi)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(s.values[2]), 0.0, 1e-9);
}

TEST(CharSamples, TruncatedNormalDecaysAndMatchesOracle) {
  const auto f = truncated_normal({0.5, 0.2}, 1001);
  const auto s = char_samples(f, 10.0, 101);
  const oracle::TruncatedNormal exact(0.5, 0.2);
  const auto k = s.nodes();
  for (std::size_t j = 0; j < s.num_k(); ++j) {
    if (j > 0) {
      EXPECT_LT(std::abs(s.values[j]), std::abs(s.values[j - 1]));
    }
    const C ref = oracle::simpson<C>([&](double x) { return std::exp(C(0.0, k[j] * x)) * exact(x); }, 0.0, 1.0,
                                     oracle::kRefinedPoints);
    EXPECT_NEAR(std::abs(s.values[j] - ref), 0.0, 1e-9);
  }
}

TEST(CharFn, ConjugateSymmetryAndUnitBound) {
  const auto f = truncated_normal({0.3, 0.15}, 1001);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> K(0.0, 50.0);
  for (int t = 0; t < 20; ++t) {
    const double k = K(rng);
    EXPECT_LT(std::abs(char_fn(f, -k) - std::conj(char_fn(f, k))), 1e-9);
    EXPECT_LE(std::abs(char_fn(f, k)), 1.0 + 1e-9);
  }
}

TEST(CharFn, DerivativesAtZeroGiveMoments) {
  const auto f = truncated_normal({0.4, 0.25}, 1001);
  const auto m = compute_moments(f, 3);
  const double h = 1e-3;
  const C fp = (char_fn(f, h) - char_fn(f, -h)) / (2.0 * h);
  const C fpp = (char_fn(f, h) - 2.0 * char_fn(f, 0.0) + char_fn(f, -h)) / (h * h);
  EXPECT_NEAR((C(0.0, -1.0) * fp).real(), m.values[1], 1e-4);
  EXPECT_NEAR((-fpp).real(), m.values[2], 1e-4);
  EXPECT_NEAR((C(0.0, -1.0) * fp).imag(), 0.0, 1e-4);
}

TEST(CharFn, DerivativeContinuityBound) {
  // |F^(n)(k+h) - F^(n)(k)| <= 2 <x^n> for finite-difference derivatives.
  const auto f = truncated_normal({0.6, 0.2}, 1001);
  const auto m = compute_moments(f, 3);
  const double d = 1e-3;
  auto deriv = [&](int order, double k) {
    if (order == 1) return (char_fn(f, k + d) - char_fn(f, k - d)) / (2.0 * d);
    return (char_fn(f, k + d) - 2.0 * char_fn(f, k) + char_fn(f, k - d)) / (d * d);
  };
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> K(-30.0, 30.0), H(-10.0, 10.0);
  for (int t = 0; t < 100; ++t) {
    const double k = K(rng), h = H(rng);
    for (int order : {1, 2}) EXPECT_LE(std::abs(deriv(order, k + h) - deriv(order, k)), 2.0 * m.values[order] + 1e-6);
  }
}

TEST(Lowpass, IdempotentOnInteriorPdfs) {
  for (auto [mu, sigma, K] : {std::tuple{0.5, 0.1, 40.0}, std::tuple{0.5, 0.08, 60.0}, std::tuple{0.45, 0.1, 60.0}}) {
    const auto f = truncated_normal({mu, sigma}, 1001);
    const auto once = lowpass(f, K);
    const auto twice = lowpass(once, K);
    EXPECT_LE(distance(once, twice), 1e-3) << mu << " " << sigma << " " << K;
  }
}

TEST(Lowpass, MatchesBruteForceOracle) {
  const auto f = truncated_normal({0.4, 0.25}, 201);
  const auto lib = lowpass(f, 3.0, 401);
  const auto ref = oracle::lowpass(to_vector(f), 3.0, 401);
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(lib[i], ref[i], 1e-12);
}

TEST(Lowpass, ConvolutionMatchesTransformPair) {
  const auto f = scale_separated_pdf(SpectrumSpec{.seed = 4}, 301);
  for (double K : {0.7, 12.0, 150.0}) {
    const std::size_t num_k = default_num_k(K);
    const auto direct = FourierKernel(301, K, num_k).lowpass(f.values());
    const auto conv = ConvolutionKernel(301, K, num_k).apply(f.values());
    for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_NEAR(conv[i], direct[i], 1e-11) << "K=" << K;
  }
}

TEST(Lowpass, RecoversUniformAtLargeCutoff) {
  const auto u = uniform();
  EXPECT_LE(distance(u, lowpass(u, 500.0)), 0.01);
}

TEST(Lowpass, TruncatedNormalReferenceSmoothedDistance) {
  const auto f = truncated_normal({0.4, 0.25}, 1001);
  const auto g = truncated_normal({0.6, 0.25}, 1001);
  const double d = distance(lowpass(f, 1.396927), lowpass(g, 1.396927));
  EXPECT_NEAR(d, 0.010545, std::max(0.2 * 0.010545, 5e-3));
}

TEST(Lowpass, RecoveryImprovesAlongDoublingLadder) {
  for (const auto& f : {truncated_normal({0.4, 0.25}, 1001), uniform()}) {
    double previous = 1e9;
    for (double K : {25.0, 50.0, 100.0, 200.0, 400.0}) {
      const double d = distance(f, lowpass(f, K));
      EXPECT_LE(d, previous) << "K=" << K;
      previous = d;
    }
  }
}

TEST(Lowpass, AcceptsUnnormalizedButRejectsBadCutoff) {
  const auto f = GridFunction1D::from_signal({1.0, -1.0, 1.0});
  EXPECT_NO_THROW(lowpass(f, 1.0));
  EXPECT_THROW(lowpass(f, 0.0), Error);
  EXPECT_THROW(lowpass(f, -1.0), Error);
}

TEST(Highpass, ComplementsLowpass) {
  const auto f = truncated_normal({0.4, 0.25}, 1001);
  const auto lo = lowpass(f, 2.0);
  const auto hi = highpass(f, 2.0);
  for (std::size_t i = 0; i < f.num_points(); ++i) EXPECT_DOUBLE_EQ(lo[i] + hi[i], f[i]);
}

TEST(Highpass, SmallForSmoothPdfAtLargeCutoff) {
  const auto f = truncated_normal({0.4, 0.25}, 1001);
  const auto hi = highpass(f, 500.0);
  const auto zero = GridFunction1D::from_signal(std::vector<double>(f.num_points(), 0.0));
  EXPECT_LE(distance(hi, zero), 0.01);
}

TEST(Highpass, UniformRingsOnlyNearEndpoints) {
  const double K = 2.0 * std::numbers::pi * 40.0;
  const auto hi = highpass(uniform(), K);
  double interior = 0.0, edge = 0.0;
  for (std::size_t i = 0; i < hi.num_points(); ++i) {
    const double x = hi.node(i);
    (x > 0.1 && x < 0.9 ? interior : edge) = std::max(x > 0.1 && x < 0.9 ? interior : edge, std::abs(hi[i]));
  }
  EXPECT_LT(interior, 0.02);
  EXPECT_GT(edge, 0.3);
}

TEST(Distance, ClosedFormsAndReferenceValue) {
  const auto tn = truncated_normal({0.4, 0.25}, 1001);
  EXPECT_EQ(distance(tn, tn), 0.0);
  EXPECT_NEAR(distance(uniform(), linear()), 0.5, 1e-6);
  EXPECT_NEAR(distance(tn, truncated_normal({0.6, 0.25}, 1001)), 0.561495, 5e-3);
  try {
    distance(uniform(11), uniform(13));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GridMismatch);
  }
}

TEST(Distance, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> U(0.0, 2.0);
  auto random_pdf = [&] {
    std::vector<double> v(101);
    for (double& x : v) x = U(rng);
    return normalize(GridFunction1D::from_density(v));
  };
  for (int t = 0; t < 25; ++t) {
    const auto a = random_pdf(), b = random_pdf(), c = random_pdf();
    EXPECT_EQ(distance(a, b), distance(b, a));
    EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c) + 1e-12);
    EXPECT_GT(distance(a, b), 0.0);
    EXPECT_EQ(distance(a, a), 0.0);
  }
}

TEST(BoundValue, Examples) {
  EXPECT_NEAR(bound_value(MomentGap({0.0}, 2.0), 1.0), 1.0 / std::numbers::pi, 1e-15);
  EXPECT_EQ(bound_value(MomentGap({0.3, 0.2}, 1.0), 0.0), 0.0);
  const auto gap = moment_gap(compute_moments(truncated_normal({0.4, 0.25}, 1001), 3),
                              compute_moments(truncated_normal({0.6, 0.25}, 1001), 3));
  const Cutoff K = solve_unique_root(build_polynomial(gap, 0.1));
  EXPECT_NEAR(bound_value(gap, K.value()), 0.1, 1e-12);
}

TEST(BoundValue, DominatesSmoothedDistance) {
  const std::vector<std::pair<GridFunction1D, GridFunction1D>> pairs{
      {truncated_normal({0.4, 0.25}, 1001), truncated_normal({0.6, 0.25}, 1001)},
      {uniform(), linear()},
      {scale_separated_pdf(SpectrumSpec{.seed = 3}, 1001), scale_separated_pdf(SpectrumSpec{.seed = 4}, 1001)}};
  for (const auto& [f, g] : pairs) {
    for (std::size_t n : {1, 3, 6}) {
      const auto gap = moment_gap(compute_moments(f, n), compute_moments(g, n));
      for (double K : {0.5, 2.0, 8.0}) {
        EXPECT_LE(distance(lowpass(f, K), lowpass(g, K)), bound_value(gap, K) + 5e-3) << "n=" << n << " K=" << K;
      }
    }
  }
}

TEST(Lowpass2D, SeparableOnProducts) {
  const auto a = truncated_normal({0.4, 0.25}, 51), b = truncated_normal({0.6, 0.2}, 51);
  const auto filtered = lowpass2d(product(a, b), 3.0, 5.0);
  const auto expected = product(lowpass(a, 3.0), lowpass(b, 5.0));
  for (std::size_t i = 0; i < filtered.values().size(); ++i) {
    EXPECT_NEAR(filtered.values()[i], expected.values()[i], 1e-6);
  }
}

TEST(Lowpass2D, RecoversProductUniform) {
  const auto u = product(uniform(401), uniform(401));
  EXPECT_LE(distance(u, lowpass2d(u, 500.0, 500.0)), 0.02);
}

TEST(Lowpass2D, IdempotentOnInteriorProduct) {
  const auto a = truncated_normal({0.5, 0.1}, 101);
  const auto f = product(a, a);
  const auto once = lowpass2d(f, 40.0, 40.0);
  EXPECT_LE(distance(once, lowpass2d(once, 40.0, 40.0)), 1e-3);
}
