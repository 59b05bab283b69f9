#ifndef MOMCUT_MOMENTS_HPP
#define MOMCUT_MOMENTS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "momcut/error.hpp"
#include "momcut/grid.hpp"
#include "momcut/model.hpp"
#include "momcut/quadrature.hpp"

namespace momcut {

// Remainder strategies. Each bounds the unknown n-th moments of both PDFs,
// where n is the number of known moments (orders 0..n-1).

/// Nothing known beyond integrability: <x^n> <= <x^{n-1}>.
struct HolderRemainder {};

/// Both densities bounded by the given sup norms (Cauchy-Schwarz route).
/// `m` selects the intermediate moment; nullopt picks the smallest bound.
struct BoundedRemainder {
  double sup_norm_f = 1.0;
  double sup_norm_g = 1.0;
  std::optional<int> m;
};

/// Absolutely continuous densities: sup norm from f(a) + ||f'||_1.
struct AbsContinuousRemainder {
  double anchor_f = 1.0;
  double derivative_l1_f = 0.0;
  double anchor_g = 1.0;
  double derivative_l1_g = 0.0;
  std::optional<int> m;
};

/// f(1), f'(1) and sup|f''| for one density.
struct BoundaryData {
  double f_at_1 = 0.0;
  double fprime_at_1 = 0.0;
  double sup_f2 = 0.0;
};

/// Twice-differentiable densities with known boundary data at x = 1.
struct IbpRemainder {
  BoundaryData f;
  BoundaryData g;
};

using RemainderStrategy = std::variant<HolderRemainder, BoundedRemainder, AbsContinuousRemainder, IbpRemainder>;

inline StrategyKind kind_of(const RemainderStrategy& s) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HolderRemainder>) return StrategyKind::Holder;
        else if constexpr (std::is_same_v<T, BoundedRemainder>) return StrategyKind::Bounded;
        else if constexpr (std::is_same_v<T, AbsContinuousRemainder>) return StrategyKind::AbsContinuous;
        else return StrategyKind::Ibp;
      },
      s);
}

/// values[k] = integral of x^k f(x) over [0,1], k = 0..n-1.
inline MomentSet compute_moments(const GridFunction1D& f, std::size_t n) {
  detail::require(f.is_normalized(), ErrorCode::NotNormalized, "moments need a normalized density");
  detail::require(n >= 1, ErrorCode::InvalidArgument, "need at least one moment");
  const std::size_t np = f.num_points();
  const std::vector<double> x = f.nodes();
  std::vector<double> integrand(f.values().begin(), f.values().end());
  MomentSet out;
  out.values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(integrate(integrand, 0.0, 1.0));
    for (std::size_t i = 0; i < np; ++i) integrand[i] *= x[i];
  }
  return out;
}

namespace detail {

inline void require_unit_samples(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::EmptyData, "no samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i] >= 0.0 && samples[i] <= 1.0)) {
      throw LocatedError(ErrorCode::OutOfDomain, i, "sample " + std::to_string(i) + " outside [0,1]");
    }
  }
}

}  // namespace detail

/// values[k] = (1/N) sum_i samples_i^k. values[0] is exactly 1.
inline MomentSet empirical_moments(std::span<const double> samples, std::size_t n) {
  detail::require_unit_samples(samples);
  detail::require(n >= 1, ErrorCode::InvalidArgument, "need at least one moment");
  std::vector<double> sums(n, 0.0);
  for (double s : samples) {
    double p = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      sums[k] += p;
      p *= s;
    }
  }
  const double count = static_cast<double>(samples.size());
  MomentSet out;
  out.values.resize(n);
  out.values[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) out.values[k] = sums[k] / count;
  return out;
}

/// Standard error of each sample moment: sqrt(Var[x^k] / N). Zero for k = 0.
inline std::vector<double> empirical_standard_errors(std::span<const double> samples, std::size_t n) {
  detail::require_unit_samples(samples);
  const MomentSet first = empirical_moments(samples, n);
  const double count = static_cast<double>(samples.size());
  std::vector<double> se(n, 0.0);
  if (samples.size() < 2) return se;
  for (std::size_t k = 1; k < n; ++k) {
    double ss = 0.0;
    for (double s : samples) {
      const double d = std::pow(s, static_cast<double>(k)) - first.values[k];
      ss += d * d;
    }
    se[k] = std::sqrt(ss / (count - 1.0) / count);
  }
  return se;
}

/// Bound on <x^n> for a density with ||f||_inf <= sup_norm, via the moment
/// <x^{2m}>. When `m` is empty every admissible m is tried and the smallest
/// bound returned.
inline double remainder_bounded(const MomentSet& moments, double sup_norm, std::size_t n, std::optional<int> m) {
  detail::require(std::isfinite(sup_norm) && sup_norm >= 1.0, ErrorCode::InvalidArgument,
                  "sup norm of a density on [0,1] is at least 1");
  detail::require(n >= 1, ErrorCode::InvalidArgument, "moment order must be positive");
  const double nd = static_cast<double>(n);
  if (!m) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n; ++c) {
      const bool available = c == 0 || 2 * c == n || 2 * c < moments.order();
      if (available) best = std::min(best, remainder_bounded(moments, sup_norm, n, static_cast<int>(c)));
    }
    return best;
  }
  detail::require(*m >= 0 && static_cast<std::size_t>(*m) < n, ErrorCode::InvalidArgument, "need 0 <= m < n");
  const std::size_t mm = static_cast<std::size_t>(*m);
  if (mm == 0) return std::sqrt(sup_norm / (2.0 * nd + 1.0));
  // <x^n> <= sqrt(sup <x^n> / (n+1)) solves to a bound free of moments.
  if (2 * mm == n) return sup_norm / (nd + 1.0);
  if (2 * mm >= moments.order()) {
    throw Error(ErrorCode::InsufficientMoments, "bound needs <x^" + std::to_string(2 * mm) + ">");
  }
  const double x2m = moments.values[2 * mm];
  return std::sqrt(sup_norm * x2m / (2.0 * (nd - static_cast<double>(mm)) + 1.0));
}

/// ||f||_inf <= |f(a)| + ||f'||_1 for any anchor a in [0,1].
inline double sup_norm_abs_continuous(double anchor_value, double derivative_l1) {
  detail::require(anchor_value >= 0.0 && derivative_l1 >= 0.0, ErrorCode::InvalidArgument,
                  "anchor value and derivative norm must be non-negative");
  return anchor_value + derivative_l1;
}

/// Two integrations by parts: f(1)/(n+1) - f'(1)/((n+1)(n+2)) + sup|f''|/((n+1)(n+2)(n+3)).
inline double remainder_ibp(double f_at_1, double fprime_at_1, double sup_f2, std::size_t n) {
  detail::require(sup_f2 >= 0.0, ErrorCode::InvalidArgument, "sup|f''| must be non-negative");
  detail::require(n >= 1, ErrorCode::InvalidArgument, "moment order must be positive");
  const double a = static_cast<double>(n) + 1.0;
  const double b = a * (a + 1.0);
  const double c = b * (a + 2.0);
  const double bound = f_at_1 / a - fprime_at_1 / b + sup_f2 / c;
  if (bound < 0.0) throw Error(ErrorCode::NegativeBound, "boundary data give a negative moment bound");
  return bound;
}

inline MomentGap moment_gap(const MomentSet& mf, const MomentSet& mg, const RemainderStrategy& strategy = {}) {
  if (mf.order() != mg.order()) throw Error(ErrorCode::OrderMismatch, "moment sets have different orders");
  detail::require(mf.order() >= 1, ErrorCode::InvalidArgument, "empty moment sets");
  const std::size_t n = mf.order();
  std::vector<double> gaps(n);
  for (std::size_t k = 0; k < n; ++k) gaps[k] = std::abs(mf.values[k] - mg.values[k]);

  const double remainder = std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HolderRemainder>) {
          return mf.values[n - 1] + mg.values[n - 1];
        } else if constexpr (std::is_same_v<T, BoundedRemainder>) {
          return remainder_bounded(mf, s.sup_norm_f, n, s.m) + remainder_bounded(mg, s.sup_norm_g, n, s.m);
        } else if constexpr (std::is_same_v<T, AbsContinuousRemainder>) {
          return remainder_bounded(mf, sup_norm_abs_continuous(s.anchor_f, s.derivative_l1_f), n, s.m) +
                 remainder_bounded(mg, sup_norm_abs_continuous(s.anchor_g, s.derivative_l1_g), n, s.m);
        } else {
          return remainder_ibp(s.f.f_at_1, s.f.fprime_at_1, s.f.sup_f2, n) +
                 remainder_ibp(s.g.f_at_1, s.g.fprime_at_1, s.g.sup_f2, n);
        }
      },
      strategy);
  return MomentGap(std::move(gaps), remainder, kind_of(strategy));
}

/// Adds z times the pooled standard error sqrt(se_f^2 + se_g^2) to each M_k.
/// Gaps are capped at 1, the largest possible difference of two moments on [0,1].
inline MomentGap inflate_gap(const MomentGap& gap, std::span<const double> se_f, std::span<const double> se_g,
                             double z) {
  if (se_f.size() != gap.order() || se_g.size() != gap.order()) {
    throw Error(ErrorCode::OrderMismatch, "standard errors do not match the gap order");
  }
  detail::require(z >= 0.0, ErrorCode::InvalidArgument, "inflation factor must be non-negative");
  std::vector<double> gaps = gap.gaps();
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    gaps[k] = std::min(1.0, gaps[k] + z * std::sqrt(se_f[k] * se_f[k] + se_g[k] * se_g[k]));
  }
  return MomentGap(std::move(gaps), gap.remainder(), gap.strategy());
}

// Grid-derived inputs for the optional strategies.

/// Largest grid sample.
inline double grid_sup_norm(const GridFunction1D& f) {
  return *std::max_element(f.values().begin(), f.values().end());
}

/// Total variation of the piecewise-linear interpolant, i.e. ||f'||_1 of it.
inline double grid_derivative_l1(const GridFunction1D& f) {
  double tv = 0.0;
  for (std::size_t i = 0; i + 1 < f.num_points(); ++i) tv += std::abs(f[i + 1] - f[i]);
  return tv;
}

/// f(1), a second-order one-sided f'(1) and the largest second difference.
inline BoundaryData grid_boundary_data(const GridFunction1D& f) {
  const std::size_t n = f.num_points();
  const double h = f.step();
  BoundaryData b;
  b.f_at_1 = f[n - 1];
  b.fprime_at_1 = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    b.sup_f2 = std::max(b.sup_f2, std::abs(f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h));
  }
  return b;
}

/// Builds a strategy of the requested kind from the sampled densities.
inline RemainderStrategy strategy_from_grids(StrategyKind kind, const GridFunction1D& f, const GridFunction1D& g) {
  switch (kind) {
    case StrategyKind::Holder:
    case StrategyKind::UserSupplied:
      return HolderRemainder{};
    case StrategyKind::Bounded:
      return BoundedRemainder{std::max(1.0, grid_sup_norm(f)), std::max(1.0, grid_sup_norm(g)), std::nullopt};
    case StrategyKind::AbsContinuous: {
      const auto min_f = *std::min_element(f.values().begin(), f.values().end());
      const auto min_g = *std::min_element(g.values().begin(), g.values().end());
      return AbsContinuousRemainder{min_f, grid_derivative_l1(f), min_g, grid_derivative_l1(g), std::nullopt};
    }
    case StrategyKind::Ibp:
      return IbpRemainder{grid_boundary_data(f), grid_boundary_data(g)};
  }
  return HolderRemainder{};
}

/// <x1^a1 x2^a2> for every |alpha| <= n-1 by tensor Simpson.
inline MultiMomentSet multi_moments(const GridFunction2D& f, std::size_t n) {
  detail::require(f.is_normalized(), ErrorCode::NotNormalized, "moments need a normalized density");
  detail::require(n >= 1, ErrorCode::InvalidArgument, "need at least one moment");
  const std::size_t np = f.num_points();
  const std::vector<double> x = f.nodes();
  const std::vector<double> w = simpson_weights(np, 0.0, 1.0);

  // pw[k][i] = w_i * x_i^k
  std::vector<std::vector<double>> pw(n, std::vector<double>(np));
  for (std::size_t i = 0; i < np; ++i) {
    double p = w[i];
    for (std::size_t k = 0; k < n; ++k) {
      pw[k][i] = p;
      p *= x[i];
    }
  }

  MultiMomentSet out;
  out.order = n;
  out.dimension = 2;
  for (unsigned degree = 0; degree < n; ++degree) {
    for (const MultiIndex& alpha : multi_indices(2, degree)) {
      const auto& wa = pw[alpha[0]];
      const auto& wb = pw[alpha[1]];
      double total = 0.0;
      for (std::size_t i = 0; i < np; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < np; ++j) row += wb[j] * f.at(i, j);
        total += wa[i] * row;
      }
      out.entries[alpha] = total;
    }
  }
  return out;
}

/// Smallest <x^beta> over single-component reductions beta of alpha.
inline double min_reduced_moment(const MultiMomentSet& m, const MultiIndex& alpha) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    MultiIndex beta = alpha;
    --beta[i];
    best = std::min(best, m.at(beta));
  }
  return best;
}

inline MultiMomentGap multi_moment_gap(const MultiMomentSet& mf, const MultiMomentSet& mg) {
  if (mf.order != mg.order || mf.dimension != mg.dimension) {
    throw Error(ErrorCode::OrderMismatch, "multi-moment sets differ in order or dimension");
  }
  MultiMomentGap out;
  out.order = mf.order;
  out.dimension = mf.dimension;
  for (const auto& [alpha, value] : mf.entries) out.gaps[alpha] = std::abs(value - mg.at(alpha));
  for (const MultiIndex& alpha : multi_indices(mf.dimension, static_cast<unsigned>(mf.order))) {
    out.remainders[alpha] = min_reduced_moment(mf, alpha) + min_reduced_moment(mg, alpha);
  }
  return out;
}

}  // namespace momcut

#endif  // MOMCUT_MOMENTS_HPP
