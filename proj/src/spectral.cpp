#include "fanosim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fanosim/format.hpp"

namespace fanosim {

using std::numbers::pi;

double Spectrum::resolution() const { return 2 * pi / (M * dt); }
double Spectrum::nyquist() const { return pi / dt; }

Spectrum dft(const ExperimentResult& series) {
  series.validate();
  const int M = static_cast<int>(series.size());
  if (M == 0) throw std::invalid_argument("dft of an empty series");
  const double dt = series.t[0];
  if (!(dt > 0)) throw std::invalid_argument("dft needs t_1 = dt > 0");
  for (int j = 0; j < M; ++j)
    if (std::abs(series.t[j] - (j + 1) * dt) > 1e-9 * std::max(1.0, std::abs(series.t[j])))
      throw std::invalid_argument("dft needs a uniform grid t_j = j dt");

  double e_s = 0;
  for (int j = 0; j < M; ++j) e_s = std::max({e_s, series.std_re[j], series.std_im[j]});

  Spectrum s;
  s.M = M;
  s.dt = dt;
  std::vector<std::pair<double, Complex>> bins;
  bins.reserve(M);
  for (int l = 1; l <= M; ++l) {
    double eta = 2 * pi * l / (M * dt);
    Complex sum = 0;
    for (int j = 1; j <= M; ++j) sum += series.values[j - 1] * std::polar(1.0, eta * j * dt);
    if (2 * l > M) eta -= 2 * pi / dt;
    bins.emplace_back(eta, sum / static_cast<double>(M));
  }
  std::sort(bins.begin(), bins.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [eta, amp] : bins) {
    s.eta.push_back(eta);
    s.amplitude.push_back(amp);
  }
  s.std.assign(M, propagate_errors(e_s, M));
  return s;
}

double propagate_errors(double E_S, int M) {
  if (E_S < 0) throw std::invalid_argument("E_S must be >= 0");
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  return E_S / std::sqrt(static_cast<double>(M));
}

PeakReport find_peaks(const Spectrum& spec, int count, const PeakOptions& opts) {
  if (count < 0) throw std::invalid_argument("peak count must be >= 0");
  const int M = static_cast<int>(spec.amplitude.size());
  std::vector<Peak> maxima;
  for (int l = 0; l < M; ++l) {
    const double c = spec.amplitude[l].real();
    const double left = spec.amplitude[(l + M - 1) % M].real();
    const double right = spec.amplitude[(l + 1) % M].real();
    if (!(c > opts.min_height)) continue;
    if (M > 1 && !(c > left && c >= right)) continue;
    Peak p{spec.eta[l], c, spec.resolution(), l};
    if (opts.refine && M > 2) {
      // the real part of an off-grid line is skewed by its phase; |S~| is symmetric about it
      const double ml = std::abs(spec.amplitude[(l + M - 1) % M]);
      const double mc = std::abs(spec.amplitude[l]);
      const double mr = std::abs(spec.amplitude[(l + 1) % M]);
      const double denom = ml - 2 * mc + mr;
      if (denom < 0) {
        const double shift = std::clamp(0.5 * (ml - mr) / denom, -0.5, 0.5);
        p.frequency += shift * spec.resolution();
        p.weight = mc - 0.25 * (ml - mr) * shift;
      }
    }
    maxima.push_back(p);
  }
  std::stable_sort(maxima.begin(), maxima.end(), [](const Peak& a, const Peak& b) { return a.weight > b.weight; });
  PeakReport report;
  report.truncated = static_cast<int>(maxima.size()) < count;
  maxima.resize(std::min<std::size_t>(maxima.size(), static_cast<std::size_t>(count)));
  report.peaks = std::move(maxima);
  return report;
}

bool within_nyquist(double frequency, double dt) { return std::abs(frequency) < pi / dt; }

std::string to_csv(const Spectrum& s) {
  std::ostringstream os;
  os << "eta,re,im,std\n";
  for (std::size_t l = 0; l < s.eta.size(); ++l)
    os << format_fixed(s.eta[l]) << ',' << format_fixed(s.amplitude[l].real()) << ','
       << format_fixed(s.amplitude[l].imag()) << ',' << format_fixed(s.std[l]) << '\n';
  return os.str();
}

}  // namespace fanosim
