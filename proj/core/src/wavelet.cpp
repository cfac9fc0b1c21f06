#include "eegdrive/wavelet.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "eegdrive/errors.hpp"

namespace eegdrive {

namespace {

using Complex = std::complex<double>;

// Roots of a monic cubic by Durand-Kerner. Fixed starting points keep the
// result deterministic; the iteration converges quadratically.
std::array<Complex, 3> monic_cubic_roots(double c2, double c1, double c0) {
  auto eval = [&](Complex y) { return ((y + c2) * y + c1) * y + c0; };
  std::array<Complex, 3> w;
  const Complex base(0.4, 0.9);
  w[0] = base;
  w[1] = base * base;
  w[2] = base * base * base;
  for (int iter = 0; iter < 200; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < 3; ++k) {
      Complex denom(1.0, 0.0);
      for (int j = 0; j < 3; ++j) {
        if (j != k) denom *= (w[k] - w[j]);
      }
      const Complex step = eval(w[k]) / denom;
      w[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-16) break;
  }
  return w;
}

// Builds the 8-tap scaling filter by spectral factorization:
//   H(z) = sqrt(2) * ((1+z)/2)^4 * Q(z),
// where Q collects, per root y_j of the Daubechies polynomial
// P(y) = 1 + 4y + 10y^2 + 20y^3, the z-root of z^2 - (2-4y_j)z + 1 = 0
// lying inside the unit circle.
std::array<double, 8> build_db4_lowpass() {
  const auto y_roots = monic_cubic_roots(10.0 / 20.0, 4.0 / 20.0, 1.0 / 20.0);

  std::array<Complex, 3> z_roots;
  for (int j = 0; j < 3; ++j) {
    const Complex b = Complex(2.0, 0.0) - 4.0 * y_roots[j];
    const Complex disc = std::sqrt(b * b - 4.0);
    const Complex z1 = (b + disc) / 2.0;
    const Complex z2 = (b - disc) / 2.0;
    z_roots[j] = std::abs(z1) < std::abs(z2) ? z1 : z2;
  }

  // Q(z) = prod (z - z_j), ascending powers.
  std::vector<Complex> q = {Complex(1.0, 0.0)};
  for (const Complex& root : z_roots) {
    std::vector<Complex> next(q.size() + 1, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k + 1] += q[k];
      next[k] -= root * q[k];
    }
    q = std::move(next);
  }

  // Convolve with (1+z)^4; overall scale is fixed afterwards.
  const std::array<double, 5> binom = {1.0, 4.0, 6.0, 4.0, 1.0};
  std::array<double, 8> h{};
  for (std::size_t i = 0; i < binom.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      h[i + j] += binom[i] * q[j].real();
    }
  }

  const double sum = std::accumulate(h.begin(), h.end(), 0.0);
  const double scale = std::sqrt(2.0) / sum;
  for (double& v : h) v *= scale;
  return h;
}

WaveletFilterPair build_db4_pair() {
  WaveletFilterPair pair{};
  pair.lowpass = build_db4_lowpass();
  for (int n = 0; n < 8; ++n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    pair.highpass[n] = sign * pair.lowpass[7 - n];
  }
  return pair;
}

// One periodized analysis step: circular correlation with h and g,
// downsampled by 2. Input length must be even.
void analysis_step(const std::vector<double>& x, const WaveletFilterPair& f,
                   std::vector<double>& approx, std::vector<double>& detail) {
  const std::size_t n = x.size();
  const std::size_t half = n / 2;
  approx.assign(half, 0.0);
  detail.assign(half, 0.0);
  for (std::size_t i = 0; i < half; ++i) {
    double a = 0.0;
    double d = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
      const double v = x[(2 * i + j) % n];
      a += f.lowpass[j] * v;
      d += f.highpass[j] * v;
    }
    approx[i] = a;
    detail[i] = d;
  }
}

// Adjoint of analysis_step; inverts it exactly for an orthonormal bank.
std::vector<double> synthesis_step(const std::vector<double>& approx,
                                   const std::vector<double>& detail,
                                   const WaveletFilterPair& f) {
  const std::size_t half = approx.size();
  const std::size_t n = half * 2;
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      x[(2 * i + j) % n] += f.lowpass[j] * approx[i] + f.highpass[j] * detail[i];
    }
  }
  return x;
}

struct SeriesStats {
  double mean_abs;
  double mean_square;
  double stddev;
};

SeriesStats series_stats(const std::vector<double>& c) {
  double sum = 0.0, sum_abs = 0.0, sum_sq = 0.0;
  for (double v : c) {
    sum += v;
    sum_abs += std::abs(v);
    sum_sq += v * v;
  }
  const double n = static_cast<double>(c.size());
  const double mean = sum / n;
  const double msq = sum_sq / n;
  const double var = std::max(0.0, msq - mean * mean);
  return {sum_abs / n, msq, std::sqrt(var)};
}

}  // namespace

const WaveletFilterPair& db4_filter_pair() {
  static const WaveletFilterPair pair = build_db4_pair();
  return pair;
}

std::size_t WaveletDecomposition::signal_length() const {
  return details.empty() ? approx.size() : details[0].size() * 2;
}

std::vector<std::size_t> WaveletDecomposition::level_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(details.size() + 1);
  for (const auto& d : details) out.push_back(d.size());
  out.push_back(approx.size());
  return out;
}

double WaveletDecomposition::coefficient_energy() const {
  double e = 0.0;
  for (const auto& d : details) {
    for (double v : d) e += v * v;
  }
  for (double v : approx) e += v * v;
  return e;
}

WaveletDecomposition dwt_decompose(std::span<const double> signal, int levels) {
  if (levels < 1) throw ValidationError("dwt levels must be >= 1");
  const std::size_t n = signal.size();
  const std::size_t divisor = std::size_t{1} << levels;
  if (n == 0 || n % divisor != 0) {
    throw ValidationError("signal length " + std::to_string(n) +
                          " is not divisible by 2^" + std::to_string(levels));
  }
  const auto& filters = db4_filter_pair();

  WaveletDecomposition out;
  out.details.resize(levels);
  std::vector<double> current(signal.begin(), signal.end());
  std::vector<double> approx;
  for (int level = 0; level < levels; ++level) {
    analysis_step(current, filters, approx, out.details[level]);
    current = approx;
  }
  out.approx = std::move(current);
  return out;
}

std::vector<double> idwt_reconstruct(const WaveletDecomposition& decomp) {
  const int levels = decomp.levels();
  if (levels < 1) throw ValidationError("decomposition has no detail levels");
  if (decomp.approx.size() != decomp.details[levels - 1].size()) {
    throw ValidationError("approx length does not match coarsest detail");
  }
  for (int level = levels - 1; level > 0; --level) {
    if (decomp.details[level - 1].size() != 2 * decomp.details[level].size()) {
      throw ValidationError("inconsistent detail level lengths");
    }
  }
  const auto& filters = db4_filter_pair();
  std::vector<double> current = decomp.approx;
  for (int level = levels - 1; level >= 0; --level) {
    current = synthesis_step(current, decomp.details[level], filters);
  }
  return current;
}

std::size_t feature_length(std::size_t selected_channels, FeatureMode mode,
                           int levels) {
  const std::size_t series =
      mode == FeatureMode::Subbands ? levels + 1 : levels;
  return selected_channels * series * kStatsPerSeries;
}

std::string feature_schema_id(std::span<const ChannelId> selected,
                              FeatureMode mode, int levels) {
  std::string id = "dwt-db4/l" + std::to_string(levels) + "/";
  id += mode == FeatureMode::Subbands ? "subbands" : "approximations";
  id += "/mav-msq-std/ch=";
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (i) id += ',';
    id += channel_label(selected[i]);
  }
  return id;
}

FeatureVector extract_features(const EegEpoch& epoch,
                               std::span<const ChannelId> selected,
                               FeatureMode mode, int levels) {
  if (selected.empty()) throw ValidationError("no channels selected");
  const std::size_t n = epoch.length();
  const std::size_t divisor = std::size_t{1} << levels;
  if (n == 0 || n % divisor != 0) {
    throw ValidationError("epoch length " + std::to_string(n) +
                          " is not divisible by 2^" + std::to_string(levels));
  }
  const auto& filters = db4_filter_pair();

  FeatureVector fv;
  fv.schema_id = feature_schema_id(selected, mode, levels);
  fv.values.reserve(feature_length(selected.size(), mode, levels));

  std::vector<double> approx, detail;
  for (ChannelId id : selected) {
    const auto row_index = static_cast<std::size_t>(id);
    if (row_index >= epoch.channel_count()) {
      throw SchemaError(std::string("channel ") +
                        std::string(channel_label(id)) +
                        " not present in epoch");
    }

    std::vector<double> current = epoch.samples[row_index];
    std::vector<SeriesStats> series;
    series.reserve(levels + 1);
    for (int level = 0; level < levels; ++level) {
      analysis_step(current, filters, approx, detail);
      current = approx;
      series.push_back(mode == FeatureMode::Subbands ? series_stats(detail)
                                                     : series_stats(current));
    }
    if (mode == FeatureMode::Subbands) series.push_back(series_stats(current));

    for (const SeriesStats& s : series) {
      fv.values.push_back(s.mean_abs);
      fv.values.push_back(s.mean_square);
      fv.values.push_back(s.stddev);
    }
  }
  return fv;
}

}  // namespace eegdrive
