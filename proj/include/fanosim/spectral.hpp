#pragma once

#include <vector>

#include "fanosim/signal.hpp"

namespace fanosim {

/// S~(eta_l) = (1/M) sum_{j=1..M} S(t_j) exp(i eta_l t_j), t_j = j dt.
///
/// eta_l = 2 pi l/(M dt), l = 1..M, folded into (-pi/dt, pi/dt] and sorted, so
/// negative eigenvalues appear at their own value. The fold is an exact alias
/// because t_j is a multiple of dt.
struct Spectrum {
  std::vector<double> eta;
  std::vector<Complex> amplitude;
  std::vector<double> std;
  int M = 0;
  double dt = 0.0;

  double resolution() const;  // 2 pi/(M dt)
  double nyquist() const;     // pi/dt
};

// Requires t_j = j dt (uniform, t_1 = dt); throws std::invalid_argument otherwise.
Spectrum dft(const ExperimentResult& series);

// E_S / sqrt(M)
double propagate_errors(double E_S, int M);

struct Peak {
  double frequency = 0;
  double weight = 0;      // real part of the bin amplitude; interpolated |S~| when refined
  double resolution = 0;  // 2 pi/(M dt)
  int bin = 0;
};

struct PeakOptions {
  // bins whose real part is not above this are never peaks
  double min_height = 1e-12;
  // three-point parabolic interpolation of |S~| around each maximum
  bool refine = false;
};

struct PeakReport {
  std::vector<Peak> peaks;  // by descending weight
  bool truncated = false;   // fewer local maxima than requested
};

/// Local maxima of Re S~ on the periodic eta axis, largest `count` first.
PeakReport find_peaks(const Spectrum& spec, int count, const PeakOptions& opts = {});

// |lambda| < pi/dt
bool within_nyquist(double frequency, double dt);

// Header "eta,re,im,std", 9 decimals.
std::string to_csv(const Spectrum& s);

}  // namespace fanosim
