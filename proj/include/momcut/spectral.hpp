#ifndef MOMCUT_SPECTRAL_HPP
#define MOMCUT_SPECTRAL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "momcut/error.hpp"
#include "momcut/grid.hpp"
#include "momcut/model.hpp"
#include "momcut/moments.hpp"
#include "momcut/quadrature.hpp"

namespace momcut {

/// Characteristic function sampled at k_j = j * k_max / (num_k - 1), j = 0..num_k-1.
/// Negative wavenumbers follow from F(-k) = conj(F(k)).
struct CharacteristicSamples {
  double k_max = 0.0;
  std::vector<std::complex<double>> values;

  std::size_t num_k() const { return values.size(); }
  std::vector<double> nodes() const { return uniform_nodes(values.size(), 0.0, k_max); }
};

/// Default k resolution: at least `minimum` nodes and 200 per unit of K, odd.
inline std::size_t default_num_k(double k_max, std::size_t minimum = 2001) {
  std::size_t n = std::max<std::size_t>(minimum, static_cast<std::size_t>(std::ceil(200.0 * k_max)));
  if (n % 2 == 0) ++n;
  return n;
}

/// Forward and inverse cosine/sine sums between an x grid on [0,1] and a k
/// grid on [0, k_max]. Trig tables are cached when they fit in `kTableLimit`
/// entries; otherwise they are recomputed on the fly with the same expressions.
class FourierKernel {
 public:
  static constexpr std::size_t kTableLimit = std::size_t{8} << 20;

  FourierKernel(std::size_t num_x, double k_max, std::size_t num_k)
      : x_(uniform_nodes(num_x, 0.0, 1.0)),
        k_(uniform_nodes(num_k, 0.0, k_max)),
        wx_(simpson_weights(num_x, 0.0, 1.0)),
        wk_(simpson_weights(num_k, 0.0, k_max)),
        k_max_(k_max) {
    if (num_x * num_k <= kTableLimit) {
      cos_.resize(num_x * num_k);
      sin_.resize(num_x * num_k);
      for (std::size_t i = 0; i < num_x; ++i) {
        for (std::size_t j = 0; j < num_k; ++j) {
          const double phase = k_[j] * x_[i];
          cos_[i * num_k + j] = std::cos(phase);
          sin_[i * num_k + j] = std::sin(phase);
        }
      }
    }
  }

  std::size_t num_x() const { return x_.size(); }
  std::size_t num_k() const { return k_.size(); }
  double k_max() const { return k_max_; }

  /// F(k_j) = integral over [0,1] of e^{i k_j x} f(x).
  CharacteristicSamples forward(std::span<const double> f) const {
    require_x_size(f.size());
    CharacteristicSamples out;
    out.k_max = k_max_;
    out.values.assign(num_k(), {0.0, 0.0});
    const std::size_t nk = num_k();
    for (std::size_t i = 0; i < num_x(); ++i) {
      const double a = wx_[i] * f[i];
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < nk; ++j) {
        double c, s;
        trig(i, j, c, s);
        out.values[j] += std::complex<double>(a * c, a * s);
      }
    }
    return out;
  }

  /// (1/pi) * integral over [0, k_max] of Re[e^{-ikx} F(k)], evaluated on the x grid.
  std::vector<double> inverse(const CharacteristicSamples& spectrum) const {
    if (spectrum.num_k() != num_k()) throw Error(ErrorCode::BadGrid, "spectrum resolution does not match kernel");
    std::vector<double> re(num_k()), im(num_k());
    for (std::size_t j = 0; j < num_k(); ++j) {
      re[j] = wk_[j] * spectrum.values[j].real();
      im[j] = wk_[j] * spectrum.values[j].imag();
    }
    std::vector<double> out(num_x());
    for (std::size_t i = 0; i < num_x(); ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < num_k(); ++j) {
        double c, s;
        trig(i, j, c, s);
        acc += c * re[j] + s * im[j];
      }
      out[i] = acc / std::numbers::pi;
    }
    return out;
  }

  std::vector<double> lowpass(std::span<const double> f) const { return inverse(forward(f)); }

 private:
  void require_x_size(std::size_t n) const {
    if (n != num_x()) throw Error(ErrorCode::GridMismatch, "sample count does not match kernel grid");
  }

  void trig(std::size_t i, std::size_t j, double& c, double& s) const {
    if (!cos_.empty()) {
      c = cos_[i * num_k() + j];
      s = sin_[i * num_k() + j];
    } else {
      const double phase = k_[j] * x_[i];
      c = std::cos(phase);
      s = std::sin(phase);
    }
  }

  std::vector<double> x_, k_, wx_, wk_;
  double k_max_;
  std::vector<double> cos_, sin_;
};

/// Integral over [0,1] of e^{ikx} f(x), without the normalization check.
inline std::complex<double> fourier_transform(const GridFunction1D& f, double k) {
  const std::vector<double> x = f.nodes();
  std::vector<std::complex<double>> integrand(f.num_points());
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    integrand[i] = std::complex<double>(std::cos(k * x[i]), std::sin(k * x[i])) * f[i];
  }
  return integrate_complex(integrand, 0.0, 1.0);
}

inline std::complex<double> char_fn(const GridFunction1D& f, double k) {
  detail::require(f.is_normalized(), ErrorCode::NotNormalized, "characteristic function needs a normalized PDF");
  return fourier_transform(f, k);
}

inline CharacteristicSamples char_samples(const GridFunction1D& f, double k_max, std::size_t num_k) {
  detail::require(f.is_normalized(), ErrorCode::NotNormalized, "characteristic function needs a normalized PDF");
  detail::require(k_max > 0.0, ErrorCode::InvalidArgument, "k_max must be positive");
  detail::require_simpson_size(num_k);
  return FourierKernel(f.num_points(), k_max, num_k).forward(f.values());
}

/// Characteristic function of the empirical measure: (1/N) sum_i e^{i k x_i}.
inline CharacteristicSamples empirical_char_samples(std::span<const double> samples, double k_max,
                                                    std::size_t num_k) {
  detail::require_unit_samples(samples);
  detail::require(k_max > 0.0, ErrorCode::InvalidArgument, "k_max must be positive");
  detail::require_simpson_size(num_k);
  const std::vector<double> k = uniform_nodes(num_k, 0.0, k_max);
  CharacteristicSamples out;
  out.k_max = k_max;
  out.values.assign(num_k, {0.0, 0.0});
  const double inv = 1.0 / static_cast<double>(samples.size());
  for (std::size_t j = 0; j < num_k; ++j) {
    double re = 0.0, im = 0.0;
    for (double x : samples) {
      re += std::cos(k[j] * x);
      im += std::sin(k[j] * x);
    }
    out.values[j] = {re * inv, im * inv};
  }
  return out;
}

/// Low-pass filtered function rebuilt from its spectrum on a grid of `num_points`.
inline GridFunction1D inverse_lowpass(const CharacteristicSamples& spectrum, std::size_t num_points) {
  detail::require(spectrum.k_max > 0.0, ErrorCode::InvalidArgument, "k_max must be positive");
  return GridFunction1D::from_signal(FourierKernel(num_points, spectrum.k_max, spectrum.num_k()).inverse(spectrum));
}

/// The low-pass filter as a convolution on the x grid. Substituting the forward
/// sums into the inverse gives f^<(x_i) = sum_l w_l f_l c(|i-l|) with taps
/// c(m) = (1/pi) sum_j wk_j cos(k_j m h), the same double sum reordered.
class ConvolutionKernel {
 public:
  /// Phases are advanced by rotation and reset from std::cos/std::sin every kReseed steps.
  static constexpr std::size_t kReseed = 32;

  ConvolutionKernel(std::size_t num_x, double k_max, std::size_t num_k)
      : wx_(simpson_weights(num_x, 0.0, 1.0)), taps_(num_x, 0.0) {
    const std::vector<double> k = uniform_nodes(num_k, 0.0, k_max);
    const std::vector<double> wk = simpson_weights(num_k, 0.0, k_max);
    const double h = 1.0 / static_cast<double>(num_x - 1);
    const double dk = k_max / static_cast<double>(num_k - 1);
    for (std::size_t m = 0; m < num_x; ++m) {
      const double a = static_cast<double>(m) * h;
      const double rc = std::cos(dk * a), rs = std::sin(dk * a);
      double c = 1.0, s = 0.0, acc = 0.0;
      for (std::size_t j = 0; j < num_k; ++j) {
        if (j % kReseed == 0) {
          c = std::cos(k[j] * a);
          s = std::sin(k[j] * a);
        }
        acc += wk[j] * c;
        const double next_c = c * rc - s * rs;
        s = s * rc + c * rs;
        c = next_c;
      }
      taps_[m] = acc / std::numbers::pi;
    }
  }

  std::size_t num_x() const { return taps_.size(); }
  const std::vector<double>& taps() const { return taps_; }

  std::vector<double> apply(std::span<const double> f) const {
    if (f.size() != num_x()) throw Error(ErrorCode::GridMismatch, "sample count does not match kernel grid");
    const std::size_t n = num_x();
    std::vector<double> wf(n);
    for (std::size_t l = 0; l < n; ++l) wf[l] = wx_[l] * f[l];
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t l = 0; l < i; ++l) acc += wf[l] * taps_[i - l];
      for (std::size_t l = i; l < n; ++l) acc += wf[l] * taps_[l - i];
      out[i] = acc;
    }
    return out;
  }

 private:
  std::vector<double> wx_;
  std::vector<double> taps_;
};

/// f^<(x) = (1/pi) * integral over [0,K] of Re[e^{-ikx} F(k)] dk on f's grid.
/// Not renormalized and not clipped: the result may dip below zero.
/// `num_k` = 0 selects default_num_k(K).
inline GridFunction1D lowpass(const GridFunction1D& f, double K, std::size_t num_k = 0) {
  detail::require(K > 0.0 && std::isfinite(K), ErrorCode::InvalidArgument, "cutoff K must be positive");
  if (num_k == 0) num_k = default_num_k(K);
  detail::require_simpson_size(num_k);
  return GridFunction1D::from_signal(ConvolutionKernel(f.num_points(), K, num_k).apply(f.values()));
}

/// f - lowpass(f, K), pointwise on the grid.
inline GridFunction1D highpass(const GridFunction1D& f, double K, std::size_t num_k = 0) {
  const GridFunction1D low = lowpass(f, K, num_k);
  std::vector<double> out(f.num_points());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] - low[i];
  return GridFunction1D::from_signal(std::move(out));
}

/// Normalized L1 distance on [0,1] (the domain has unit length).
inline double distance(const GridFunction1D& f, const GridFunction1D& g) {
  if (f.num_points() != g.num_points()) throw Error(ErrorCode::GridMismatch, "functions live on different grids");
  std::vector<double> diff(f.num_points());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = std::abs(f[i] - g[i]);
  return integrate(diff, 0.0, 1.0);
}

inline double distance(const GridFunction2D& f, const GridFunction2D& g) {
  if (f.num_points() != g.num_points()) throw Error(ErrorCode::GridMismatch, "functions live on different grids");
  std::vector<double> diff(f.values().size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = std::abs(f.values()[i] - g.values()[i]);
  return integrate_2d(diff, f.num_points(), 0.0, 1.0);
}

/// (1/pi) * { M_0 K + M_1 K^2/2! + ... + M_{n-1} K^n/n! + R_n K^{n+1}/(n+1)! }
inline double bound_value(const MomentGap& gap, double K) {
  detail::require(K >= 0.0, ErrorCode::InvalidArgument, "cutoff K must be non-negative");
  double sum = 0.0;
  double term = 1.0;  // K^{j+1}/(j+1)!
  for (std::size_t j = 0; j < gap.order(); ++j) {
    term *= K / static_cast<double>(j + 1);
    sum += gap.gaps()[j] * term;
  }
  term *= K / static_cast<double>(gap.order() + 1);
  sum += gap.remainder() * term;
  return sum / std::numbers::pi;
}

/// d-dimensional bound with per-axis cutoffs:
/// (1/pi^d) * sum over alpha of B_alpha K^{alpha+1} / (alpha+1)!,
/// with B_alpha = M_alpha for |alpha| <= n-1 and R_alpha for |alpha| = n.
inline double multi_bound_value(const MultiMomentGap& gap, std::span<const double> K) {
  if (K.size() != gap.dimension) throw Error(ErrorCode::InvalidArgument, "one cutoff per axis required");
  auto term = [&](const MultiIndex& alpha, double coefficient) {
    double t = coefficient / shifted_factorial(alpha);
    for (std::size_t i = 0; i < alpha.size(); ++i) t *= std::pow(K[i], static_cast<double>(alpha[i] + 1));
    return t;
  };
  double sum = 0.0;
  for (const auto& [alpha, m] : gap.gaps) sum += term(alpha, m);
  for (const auto& [alpha, r] : gap.remainders) sum += term(alpha, r);
  return sum / std::pow(std::numbers::pi, static_cast<double>(gap.dimension));
}

/// Box filter in 2-D: 1-D low-pass along x1 with K1, then along x2 with K2.
inline GridFunction2D lowpass2d(const GridFunction2D& f, double K1, double K2, std::size_t num_k = 0) {
  detail::require(K1 > 0.0 && K2 > 0.0, ErrorCode::InvalidArgument, "cutoffs must be positive");
  const std::size_t n = f.num_points();
  const ConvolutionKernel axis1(n, K1, num_k == 0 ? default_num_k(K1) : num_k);
  const ConvolutionKernel axis2(n, K2, num_k == 0 ? default_num_k(K2) : num_k);

  std::vector<double> work(f.values().begin(), f.values().end());
  std::vector<double> line(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) line[i] = work[i * n + j];
    const std::vector<double> filtered = axis1.apply(line);
    for (std::size_t i = 0; i < n; ++i) work[i * n + j] = filtered[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> filtered = axis2.apply(std::span<const double>(work).subspan(i * n, n));
    std::copy(filtered.begin(), filtered.end(), work.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return GridFunction2D::from_signal(n, std::move(work));
}

}  // namespace momcut

#endif  // MOMCUT_SPECTRAL_HPP
