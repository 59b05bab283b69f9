#ifndef MOMCUT_PIPELINE_HPP
#define MOMCUT_PIPELINE_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "momcut/cutoff.hpp"
#include "momcut/error.hpp"
#include "momcut/grid.hpp"
#include "momcut/model.hpp"
#include "momcut/moments.hpp"
#include "momcut/spectral.hpp"

namespace momcut {

/// User-facing knobs shared by every subcommand. `n` counts the known moments
/// including the zeroth, so orders 0..n-1 enter the gaps.
struct RunConfig {
  std::size_t n = 3;
  double epsilon = 0.1;
  std::size_t grid = 1001;
  std::size_t kgrid = 2001;
  StrategyKind strategy = StrategyKind::Holder;
  std::optional<DomainMap> domain;
  double inflate_se = 0.0;

  void validate() const {
    detail::require(n >= 1, ErrorCode::InvalidArgument, "n must be at least 1");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(ErrorCode::BadTolerance, "epsilon must be positive");
    detail::require_simpson_size(grid);
    detail::require_simpson_size(kgrid);
    detail::require(inflate_se >= 0.0, ErrorCode::InvalidArgument, "--inflate-se must be non-negative");
  }
};

/// Shortest decimal string that reads back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, result.ptr);
}

/// One side of a comparison: a sampled PDF or a dataset already mapped to [0,1].
class Distribution {
 public:
  static Distribution from_grid(GridFunction1D f) {
    detail::require(f.is_normalized(), ErrorCode::NotNormalized, "comparison needs a normalized PDF");
    Distribution d;
    d.density_ = std::move(f);
    return d;
  }

  /// Samples must lie in [0,1]. The grid density (used for d(f,g) and the
  /// grid-derived remainder strategies) is a histogram evaluated at the nodes.
  static Distribution from_samples(std::vector<double> samples, std::size_t num_points) {
    detail::require_unit_samples(samples);
    Distribution d;
    d.density_ = histogram_density(samples, num_points);
    d.samples_ = std::move(samples);
    return d;
  }

  bool is_sampled() const { return samples_.has_value(); }
  const GridFunction1D& density() const { return *density_; }
  std::span<const double> samples() const { return samples_ ? std::span<const double>(*samples_) : std::span<const double>(); }

  MomentSet moments(std::size_t n) const {
    return samples_ ? empirical_moments(*samples_, n) : compute_moments(*density_, n);
  }

  std::vector<double> standard_errors(std::size_t n) const {
    return samples_ ? empirical_standard_errors(*samples_, n) : std::vector<double>(n, 0.0);
  }

  /// Filtered function on the density grid. Datasets are filtered through the
  /// exact characteristic function of the empirical measure.
  GridFunction1D lowpass(double K, std::size_t num_k) const {
    if (samples_) return inverse_lowpass(empirical_char_samples(*samples_, K, num_k), density_->num_points());
    return momcut::lowpass(*density_, K, num_k);
  }

  /// Histogram with clamp(ceil(sqrt(N)), 10, 200) equal bins on [0,1], read off at each node.
  static GridFunction1D histogram_density(std::span<const double> samples, std::size_t num_points) {
    const std::size_t bins =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(samples.size())))),
                                10, 200);
    std::vector<double> counts(bins, 0.0);
    for (double s : samples) counts[std::min(bins - 1, static_cast<std::size_t>(s * static_cast<double>(bins)))] += 1.0;
    const std::vector<double> x = uniform_nodes(num_points, 0.0, 1.0);
    std::vector<double> v(num_points);
    for (std::size_t i = 0; i < num_points; ++i) {
      v[i] = counts[std::min(bins - 1, static_cast<std::size_t>(x[i] * static_cast<double>(bins)))];
    }
    return normalize(GridFunction1D::from_density(std::move(v)));
  }

 private:
  Distribution() = default;
  std::optional<GridFunction1D> density_;
  std::optional<std::vector<double>> samples_;
};

/// Report plus the curves behind it.
struct ComparisonResult {
  ComparisonReport report;
  GridFunction1D f;
  GridFunction1D g;
  GridFunction1D f_smoothed;
  GridFunction1D g_smoothed;
};

inline RemainderStrategy strategy_for(const RunConfig& config, const Distribution& f, const Distribution& g) {
  return strategy_from_grids(config.strategy, f.density(), g.density());
}

/// moments -> gaps -> cutoff polynomial -> root -> filtering -> distances.
inline ComparisonResult run_comparison(const Distribution& f, const Distribution& g, const RunConfig& config) {
  config.validate();
  if (f.density().num_points() != g.density().num_points()) {
    throw Error(ErrorCode::GridMismatch, "both distributions must use the same grid");
  }
  const MomentSet mf = f.moments(config.n);
  const MomentSet mg = g.moments(config.n);
  MomentGap gap = moment_gap(mf, mg, strategy_for(config, f, g));
  if (config.inflate_se > 0.0) {
    gap = inflate_gap(gap, f.standard_errors(config.n), g.standard_errors(config.n), config.inflate_se);
  }
  const CutoffPolynomial poly = build_polynomial(gap, config.epsilon);
  const Cutoff cutoff = solve_unique_root(poly);

  ComparisonReport report;
  report.n = config.n;
  report.epsilon = config.epsilon;
  report.gaps = gap.gaps();
  report.remainder = gap.remainder();
  report.strategy = std::string(to_string(gap.strategy()));
  report.cutoff = cutoff;
  report.distance_original = distance(f.density(), g.density());
  report.domain_map = config.domain.value_or(DomainMap{});
  report.metadata["grid"] = std::to_string(config.grid);
  if (config.inflate_se > 0.0) report.metadata["inflate_se"] = format_double(config.inflate_se);
  if (f.is_sampled() || g.is_sampled()) report.metadata["distance_original_method"] = "histogram";

  if (cutoff.is_unbounded()) {
    // Zero polynomial: no smoothing is needed at any scale.
    report.distance_smoothed = report.distance_original;
    report.bound_at_K = 0.0;
    return {report, f.density(), g.density(), f.density(), g.density()};
  }
  const double K = cutoff.value();
  const std::size_t num_k = default_num_k(K, config.kgrid);
  GridFunction1D fl = f.lowpass(K, num_k);
  GridFunction1D gl = g.lowpass(K, num_k);
  report.distance_smoothed = distance(fl, gl);
  report.bound_at_K = bound_value(gap, K);
  report.metadata["kgrid"] = std::to_string(num_k);
  return {std::move(report), f.density(), g.density(), std::move(fl), std::move(gl)};
}

inline ComparisonReport compare(const GridFunction1D& f, const GridFunction1D& g, const RunConfig& config) {
  return run_comparison(Distribution::from_grid(f), Distribution::from_grid(g), config).report;
}

/// Cutoff from externally known bounds; no PDFs, so both distances are NaN.
inline ComparisonReport cutoff_only(const MomentGap& gap, double epsilon) {
  const Cutoff cutoff = solve_unique_root(build_polynomial(gap, epsilon));
  ComparisonReport report;
  report.n = gap.order();
  report.epsilon = epsilon;
  report.gaps = gap.gaps();
  report.remainder = gap.remainder();
  report.strategy = std::string(to_string(gap.strategy()));
  report.cutoff = cutoff;
  report.distance_original = std::numeric_limits<double>::quiet_NaN();
  report.distance_smoothed = std::numeric_limits<double>::quiet_NaN();
  report.bound_at_K = cutoff.is_unbounded() ? 0.0 : bound_value(gap, cutoff.value());
  return report;
}

struct Comparison2DResult {
  ComparisonReport report;
  MultiMomentGap gap;
  GridFunction2D f;
  GridFunction2D g;
  GridFunction2D f_smoothed;
  GridFunction2D g_smoothed;
};

/// 2-D path with a common cutoff kappa on both axes. The report flattens M_alpha
/// by total degree (lexicographically descending within a degree) and stores the
/// largest R_alpha as `remainder`.
inline Comparison2DResult run_comparison_2d(const GridFunction2D& f, const GridFunction2D& g,
                                            const RunConfig& config) {
  config.validate();
  if (f.num_points() != g.num_points()) throw Error(ErrorCode::GridMismatch, "2-D grids differ");
  const MultiMomentGap gap = multi_moment_gap(multi_moments(f, config.n), multi_moments(g, config.n));
  const Cutoff kappa = solve_unique_root(build_common_cutoff_equation(gap, config.epsilon, 2));

  ComparisonReport report;
  report.n = config.n;
  report.epsilon = config.epsilon;
  for (unsigned degree = 0; degree < config.n; ++degree)
    for (const MultiIndex& alpha : multi_indices(2, degree)) report.gaps.push_back(gap.gaps.at(alpha));
  for (const auto& [alpha, r] : gap.remainders) report.remainder = std::max(report.remainder, r);
  report.strategy = "holder";
  report.cutoff = kappa;
  report.distance_original = distance(f, g);
  report.metadata["dimension"] = "2";
  report.metadata["gap_order"] = "graded-lex-descending";
  report.metadata["remainder_reduction"] = "max";
  report.metadata["grid"] = std::to_string(f.num_points());

  if (kappa.is_unbounded()) {
    report.distance_smoothed = report.distance_original;
    return {report, gap, f, g, f, g};
  }
  const double k = kappa.value();
  const std::size_t num_k = default_num_k(k, config.kgrid);
  GridFunction2D fl = lowpass2d(f, k, k, num_k);
  GridFunction2D gl = lowpass2d(g, k, k, num_k);
  report.distance_smoothed = distance(fl, gl);
  const double both[2] = {k, k};
  report.bound_at_K = multi_bound_value(gap, both);
  report.metadata["kgrid"] = std::to_string(num_k);
  return {std::move(report), gap, f, g, std::move(fl), std::move(gl)};
}

}  // namespace momcut

#endif  // MOMCUT_PIPELINE_HPP
