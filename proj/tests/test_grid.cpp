#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "momcut/grid.hpp"
#include "oracle.hpp"

using namespace momcut;

TEST(GridFunction, ValidatesConstruction) {
  EXPECT_THROW(GridFunction1D::from_density({1.0, 1.0}), Error);
  EXPECT_THROW(GridFunction1D::from_density({1.0, -0.1, 1.0}), Error);
  EXPECT_NO_THROW(GridFunction1D::from_signal({1.0, -0.1, 1.0}));
  EXPECT_THROW(GridFunction1D::from_density({2.0, 2.0, 2.0}, true), Error);
  EXPECT_NO_THROW(GridFunction1D::from_density({1.0, 1.0, 1.0}, true));
}

TEST(Normalize, ScalesConstant) {
  const auto f = normalize(GridFunction1D::from_density(std::vector<double>(11, 2.0)));
  EXPECT_TRUE(f.is_normalized());
  for (double v : f.values()) EXPECT_NEAR(v, 1.0, 1e-14);
}

TEST(Normalize, UniformUnchanged) {
  const auto u = GridFunction1D::from_density(std::vector<double>(101, 1.0));
  const auto f = normalize(u);
  for (std::size_t i = 0; i < f.num_points(); ++i) EXPECT_NEAR(f[i], u[i], 1e-12);
}

TEST(Normalize, GaussianMassMatchesRefinedOracle) {
  auto bump = [](double x) { return std::exp(-(x - 0.4) * (x - 0.4) / (2.0 * 0.25 * 0.25)); };
  const auto raw = oracle::sample(bump, 1001);
  const auto f = normalize(GridFunction1D::from_density(raw));
  const double refined_mass = oracle::simpson<double>(bump, 0.0, 1.0, oracle::kRefinedPoints);
  // Normalization factor agrees with the refined integral of the same integrand.
  EXPECT_NEAR(raw[500] / f[500], refined_mass, 1e-9);
  EXPECT_NEAR(f.mass(), 1.0, 1e-9);
}

TEST(Normalize, Idempotent) {
  const auto f = normalize(GridFunction1D::from_density(oracle::sample([](double x) { return 1.0 + x * x; }, 201)));
  const auto g = normalize(f);
  for (std::size_t i = 0; i < f.num_points(); ++i) EXPECT_NEAR(f[i], g[i], 1e-12);
}

TEST(Normalize, ZeroMassRejected) {
  try {
    normalize(GridFunction1D::from_density(std::vector<double>(5, 0.0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroMass);
  }
}

TEST(Evaluate, InterpolatesLinearly) {
  const auto u = GridFunction1D::from_density(std::vector<double>(101, 1.0), true);
  EXPECT_DOUBLE_EQ(evaluate(u, 0.37), 1.0);
  const auto f = GridFunction1D::from_density({0.0, 1.0, 2.0});
  EXPECT_DOUBLE_EQ(evaluate(f, 0.25), 0.5);
  EXPECT_DOUBLE_EQ(evaluate(f, 1.0), 2.0);
}

TEST(Evaluate, ExactAtNodes) {
  const auto f = GridFunction1D::from_density(
      oracle::sample([](double x) { return std::exp(-(x - 0.4) * (x - 0.4) / 0.125); }, 1001));
  for (std::size_t i = 0; i < f.num_points(); i += 37) EXPECT_EQ(evaluate(f, f.node(i)), f[i]);
}

TEST(Evaluate, DomainError) {
  const auto f = GridFunction1D::from_density({0.0, 1.0, 2.0});
  try {
    evaluate(f, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
  EXPECT_THROW(evaluate(f, -1e-9), Error);
}

TEST(GridFunction2D, ProductOfNormalizedFactorsIsNormalized) {
  const auto a = normalize(GridFunction1D::from_density(oracle::sample([](double x) { return 1.0 + x; }, 51)));
  const auto b = normalize(GridFunction1D::from_density(oracle::sample([](double x) { return 2.0 - x; }, 51)));
  const auto p = product(a, b);
  EXPECT_TRUE(p.is_normalized());
  EXPECT_NEAR(p.mass(), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(p.at(3, 7), a[3] * b[7]);
}
