#ifndef MOMCUT_MODEL_HPP
#define MOMCUT_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momcut/error.hpp"

namespace momcut {

/// Moments <x^0>, ..., <x^{n-1}> of one distribution on [0,1].
struct MomentSet {
  std::vector<double> values;

  std::size_t order() const { return values.size(); }

  /// 0 <= values[k+1] <= values[k] + tol for all k.
  bool is_monotone(double tol = 0.0) const {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] < -tol) return false;
      if (k + 1 < values.size() && values[k + 1] > values[k] + tol) return false;
    }
    return true;
  }

  friend bool operator==(const MomentSet&, const MomentSet&) = default;
};

/// Exponents (alpha_1, ..., alpha_d) of a mixed moment.
using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0u);
}

/// All multi-indices in `dimension` variables with |alpha| == degree,
/// in lexicographically descending order ((2,0), (1,1), (0,2), ...).
inline std::vector<MultiIndex> multi_indices(std::size_t dimension, unsigned degree) {
  std::vector<MultiIndex> out;
  MultiIndex current(dimension, 0);
  auto fill = [&](auto&& self, std::size_t axis, unsigned remaining) -> void {
    if (axis + 1 == dimension) {
      current[axis] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned a = remaining + 1; a-- > 0;) {
      current[axis] = a;
      self(self, axis + 1, remaining - a);
    }
  };
  if (dimension > 0) fill(fill, 0, degree);
  return out;
}

/// prod_i (alpha_i + 1)!
inline double shifted_factorial(const MultiIndex& alpha) {
  double out = 1.0;
  for (unsigned a : alpha)
    for (unsigned k = 2; k <= a + 1; ++k) out *= static_cast<double>(k);
  return out;
}

/// Mixed moments <x^alpha> for every |alpha| <= order - 1.
struct MultiMomentSet {
  std::size_t order = 0;
  std::size_t dimension = 0;
  std::map<MultiIndex, double> entries;

  double at(const MultiIndex& alpha) const {
    auto it = entries.find(alpha);
    if (it == entries.end()) throw Error(ErrorCode::InsufficientMoments, "mixed moment not available");
    return it->second;
  }
};

enum class StrategyKind { Holder, Bounded, AbsContinuous, Ibp, UserSupplied };

inline std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::Holder: return "holder";
    case StrategyKind::Bounded: return "bounded";
    case StrategyKind::AbsContinuous: return "abscont";
    case StrategyKind::Ibp: return "ibp";
    case StrategyKind::UserSupplied: return "user";
  }
  return "holder";
}

inline StrategyKind parse_strategy_kind(std::string_view name) {
  for (StrategyKind k : {StrategyKind::Holder, StrategyKind::Bounded, StrategyKind::AbsContinuous, StrategyKind::Ibp,
                         StrategyKind::UserSupplied}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown remainder strategy '" + std::string(name) + "'");
}

/// Bounds M_0..M_{n-1} on moment differences plus the remainder bound R_n.
class MomentGap {
 public:
  /// Sanity ceiling on each M_k: moments on [0,1] differ by at most 1.
  static constexpr double kMaxGap = 2.0;

  MomentGap(std::vector<double> gaps, double remainder, StrategyKind strategy = StrategyKind::Holder)
      : gaps_(std::move(gaps)), remainder_(remainder), strategy_(strategy) {
    detail::require(!gaps_.empty(), ErrorCode::InvalidArgument, "moment gap needs at least one moment");
    for (std::size_t k = 0; k < gaps_.size(); ++k) {
      if (!std::isfinite(gaps_[k]) || gaps_[k] < 0.0 || gaps_[k] > kMaxGap) {
        throw Error(ErrorCode::InvalidArgument, "gap M_" + std::to_string(k) + " outside [0, 2]");
      }
    }
    detail::require(std::isfinite(remainder_) && remainder_ >= 0.0, ErrorCode::InvalidArgument,
                    "remainder bound must be finite and non-negative");
  }

  std::size_t order() const { return gaps_.size(); }
  const std::vector<double>& gaps() const { return gaps_; }
  double remainder() const { return remainder_; }
  StrategyKind strategy() const { return strategy_; }

  friend bool operator==(const MomentGap&, const MomentGap&) = default;

 private:
  std::vector<double> gaps_;
  double remainder_;
  StrategyKind strategy_;
};

/// M_alpha for |alpha| <= n-1 and R_alpha for |alpha| == n.
struct MultiMomentGap {
  std::size_t order = 0;
  std::size_t dimension = 0;
  std::map<MultiIndex, double> gaps;
  std::map<MultiIndex, double> remainders;
};

/// Cut-off inverse length scale: a positive number, or unbounded when the
/// bound polynomial vanishes identically.
class Cutoff {
 public:
  static Cutoff finite(double k) {
    detail::require(std::isfinite(k) && k > 0.0, ErrorCode::InvalidArgument, "finite cutoff must be positive");
    return Cutoff(k);
  }
  static Cutoff unbounded() { return Cutoff(std::nullopt); }

  bool is_unbounded() const { return !value_.has_value(); }
  double value() const {
    if (!value_) throw Error(ErrorCode::InvalidArgument, "cutoff is unbounded");
    return *value_;
  }

  friend bool operator==(const Cutoff&, const Cutoff&) = default;

 private:
  explicit Cutoff(std::optional<double> v) : value_(v) {}
  std::optional<double> value_;
};

/// Affine map x -> (x - a) / (b - a) taking the data support onto [0,1].
struct DomainMap {
  double a = 0.0;
  double b = 1.0;

  double operator()(double x) const { return (x - a) / (b - a); }
  bool is_identity() const { return a == 0.0 && b == 1.0; }

  friend bool operator==(const DomainMap&, const DomainMap&) = default;
};

/// End-to-end result of one comparison.
struct ComparisonReport {
  std::size_t n = 0;
  double epsilon = 0.0;
  std::vector<double> gaps;
  double remainder = 0.0;
  std::string strategy = "holder";
  Cutoff cutoff = Cutoff::unbounded();
  double distance_original = 0.0;
  double distance_smoothed = 0.0;
  double bound_at_K = 0.0;
  DomainMap domain_map;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

}  // namespace momcut

#endif  // MOMCUT_MODEL_HPP
