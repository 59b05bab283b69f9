#ifndef MOMCUT_CUTOFF_HPP
#define MOMCUT_CUTOFF_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "momcut/error.hpp"
#include "momcut/model.hpp"

namespace momcut {

/// p(K) = sum_j c_j K^j - epsilon with c_j >= 0 for j >= 1.
/// coefficients()[j] is c_j; coefficients()[0] is always 0 (the constant
/// term lives in epsilon).
class CutoffPolynomial {
 public:
  CutoffPolynomial(std::vector<double> coefficients, double epsilon)
      : coefficients_(std::move(coefficients)), epsilon_(epsilon) {
    if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_)) {
      throw Error(ErrorCode::BadTolerance, "tolerance must be positive and finite");
    }
    detail::require(coefficients_.size() >= 2, ErrorCode::InvalidArgument, "polynomial needs degree >= 1");
    detail::require(coefficients_[0] == 0.0, ErrorCode::InvalidArgument, "constant term is carried by epsilon");
    for (double c : coefficients_) {
      detail::require(std::isfinite(c) && c >= 0.0, ErrorCode::InvalidArgument,
                      "non-constant coefficients must be non-negative");
    }
  }

  const std::vector<double>& coefficients() const { return coefficients_; }
  double epsilon() const { return epsilon_; }
  std::size_t degree() const { return coefficients_.size() - 1; }

  double operator()(double K) const {
    double acc = 0.0;
    for (std::size_t j = coefficients_.size(); j-- > 1;) acc = (acc + coefficients_[j]) * K;
    return acc - epsilon_;
  }

  /// True when every non-constant coefficient is zero, so p == -epsilon.
  bool is_degenerate() const {
    for (std::size_t j = 1; j < coefficients_.size(); ++j)
      if (coefficients_[j] > 0.0) return false;
    return true;
  }

  /// Sign changes in (-epsilon, c_1, ..., c_deg), zeros skipped.
  std::size_t sign_changes() const {
    std::size_t changes = 0;
    int previous = -1;
    for (std::size_t j = 1; j < coefficients_.size(); ++j) {
      if (coefficients_[j] == 0.0) continue;
      const int sign = coefficients_[j] > 0.0 ? 1 : -1;
      if (sign != previous) ++changes;
      previous = sign;
    }
    return changes;
  }

 private:
  std::vector<double> coefficients_;
  double epsilon_;
};

/// c_{j+1} = M_j / ((j+1)! pi) for j < n and c_{n+1} = R_n / ((n+1)! pi).
inline CutoffPolynomial build_polynomial(const MomentGap& gap, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::BadTolerance, "tolerance must be positive");
  const std::size_t n = gap.order();
  std::vector<double> c(n + 2, 0.0);
  double factorial = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    factorial *= static_cast<double>(j + 1);
    c[j + 1] = gap.gaps()[j] / (factorial * std::numbers::pi);
  }
  factorial *= static_cast<double>(n + 1);
  c[n + 1] = gap.remainder() / (factorial * std::numbers::pi);
  return CutoffPolynomial(std::move(c), epsilon);
}

/// Relative residual the root must reach: |p(K)| <= kRootTolerance * epsilon.
inline constexpr double kRootTolerance = 1e-12;

/// The unique positive root of p. With non-negative coefficients, at least one
/// positive, p is strictly increasing on K > 0 and p(0) = -epsilon, so the root
/// is bracketed by doubling from [0, 1] and then bisected.
inline Cutoff solve_unique_root(const CutoffPolynomial& p) {
  if (p.is_degenerate()) return Cutoff::unbounded();
  const double target = kRootTolerance * p.epsilon();

  double lo = 0.0;
  double hi = 1.0;
  while (p(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw Error(ErrorCode::InvalidArgument, "root bracket diverged");
  }
  for (int iter = 0; iter < 4000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = p(mid);
    if (std::abs(value) <= target) return Cutoff::finite(mid);
    (value < 0.0 ? lo : hi) = mid;
  }
  // Interval exhausted in double precision; keep the endpoint with smaller residual.
  const double best = (lo > 0.0 && std::abs(p(lo)) <= std::abs(p(hi))) ? lo : hi;
  return Cutoff::finite(best);
}

/// Lifts a 1-D gap to the multi-index form with d = 1.
inline MultiMomentGap to_multi_gap(const MomentGap& gap) {
  MultiMomentGap out;
  out.order = gap.order();
  out.dimension = 1;
  for (unsigned j = 0; j < gap.order(); ++j) out.gaps[MultiIndex{j}] = gap.gaps()[j];
  out.remainders[MultiIndex{static_cast<unsigned>(gap.order())}] = gap.remainder();
  return out;
}

/// Common cutoff kappa for all axes: (kappa^d / pi^d) sum_j a_j kappa^j - epsilon,
/// a_j = sum_{|alpha|=j} M_alpha / (alpha+1)! (R_alpha when j = n). Returned as a
/// plain polynomial of degree n + d whose coefficients below kappa^d vanish.
inline CutoffPolynomial build_common_cutoff_equation(const MultiMomentGap& gap, double epsilon, std::size_t d) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::BadTolerance, "tolerance must be positive");
  detail::require(d >= 1 && d == gap.dimension, ErrorCode::InvalidArgument, "dimension does not match the gap");
  const double scale = std::pow(std::numbers::pi, static_cast<double>(d));
  std::vector<double> c(gap.order + d + 1, 0.0);
  for (const auto& [alpha, m] : gap.gaps) c[total_degree(alpha) + d] += m / shifted_factorial(alpha);
  for (const auto& [alpha, r] : gap.remainders) c[total_degree(alpha) + d] += r / shifted_factorial(alpha);
  for (double& v : c) v /= scale;
  return CutoffPolynomial(std::move(c), epsilon);
}

}  // namespace momcut

#endif  // MOMCUT_CUTOFF_HPP
