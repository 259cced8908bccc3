#include <numbers>
#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "fanosim/model.hpp"
#include "fanosim/spectral.hpp"
#include "fanosim/tolerances.hpp"

using namespace fanosim;
using doctest::Approx;
using std::numbers::pi;

namespace {

ExperimentResult series(int M, double dt, const std::function<Complex(double)>& f, double sigma = 0.0) {
  ExperimentResult r;
  for (int j = 1; j <= M; ++j) r.push_back(j * dt, f(j * dt), sigma, sigma);
  return r;
}

int bin_of(const Spectrum& s, double eta) {
  int best = 0;
  for (int l = 0; l < static_cast<int>(s.eta.size()); ++l)
    if (std::abs(s.eta[l] - eta) < std::abs(s.eta[best] - eta)) best = l;
  return best;
}

}  // namespace

TEST_CASE("constant signal gives a unit peak at zero") {
  Spectrum s = dft(series(64, 0.1, [](double) { return Complex(1.0); }));
  CHECK(s.M == 64);
  CHECK(s.eta.size() == 64);
  int zero = bin_of(s, 0.0);
  CHECK(std::abs(s.eta[zero]) < 1e-12);
  CHECK(std::abs(s.amplitude[zero] - 1.0) < tol::algebraic);
  for (int l = 0; l < 64; ++l)
    if (l != zero) CHECK(std::abs(s.amplitude[l]) < tol::algebraic);
  auto peaks = find_peaks(s, 1);
  REQUIRE(peaks.peaks.size() == 1);
  CHECK(std::abs(peaks.peaks[0].frequency) < 1e-12);
  CHECK_FALSE(peaks.truncated);
  CHECK(find_peaks(s, 3).truncated);
}

TEST_CASE("bins are centered, sorted and uniformly spaced") {
  Spectrum s = dft(series(128, 0.1, [](double) { return Complex(1.0); }));
  for (std::size_t l = 1; l < s.eta.size(); ++l) CHECK(s.eta[l] - s.eta[l - 1] == Approx(s.resolution()));
  CHECK(s.eta.front() > -pi / 0.1);
  CHECK(s.eta.back() == Approx(pi / 0.1));
  CHECK(s.resolution() == Approx(2 * pi / 12.8));
}

TEST_CASE("on-grid exponential lands in one bin") {
  const int M = 128;
  const double dt = 0.1;
  for (int m : {-40, -3, 1, 17, 64}) {
    const double eta_m = 2 * pi * m / (M * dt);
    Spectrum s = dft(series(M, dt, [&](double t) { return std::polar(1.0, -eta_m * t); }));
    int b = bin_of(s, eta_m);
    CHECK(std::abs(s.eta[b] - eta_m) < 1e-9);
    for (int l = 0; l < M; ++l) CHECK(std::abs(s.amplitude[l] - (l == b ? 1.0 : 0.0)) < tol::algebraic);
  }
}

TEST_CASE("two on-grid frequencies are recovered exactly") {
  const int M = 64;
  const double dt = 0.2;
  const double f1 = -2 * pi * 9 / (M * dt), f2 = -2 * pi * 2 / (M * dt);
  Spectrum s = dft(series(M, dt, [&](double t) { return 0.3 * std::polar(1.0, -f1 * t) + 0.7 * std::polar(1.0, -f2 * t); }));
  auto r = find_peaks(s, 2);
  REQUIRE(r.peaks.size() == 2);
  CHECK(r.peaks[0].frequency == Approx(f2));
  CHECK(r.peaks[0].weight == Approx(0.7));
  CHECK(r.peaks[1].frequency == Approx(f1));
  CHECK(r.peaks[1].weight == Approx(0.3));
  CHECK(r.peaks[0].resolution == Approx(2 * pi / (M * dt)));
  // on-grid: imaginary parts vanish
  for (const auto& a : s.amplitude) CHECK(std::abs(a.imag()) < tol::algebraic);
}

TEST_CASE("noiseless spectrum of the V = 0.5 model") {
  ModelParams p{-8.0, -2.0, 0.5, 1.0, 1};
  auto sp = one_particle_spectrum(p);
  Spectrum s = dft(series(128, 0.1, [&](double t) { return oracle_S(p, t); }));
  auto r = find_peaks(s, 2);
  REQUIRE(r.peaks.size() == 2);
  CHECK(std::abs(r.peaks[0].frequency - sp.energies[1]) < 0.5);
  CHECK(std::abs(r.peaks[1].frequency - sp.energies[0]) < 0.5);
  CHECK(std::abs(r.peaks[0].weight - sp.weights[1]) < 0.05);
  CHECK(std::abs(r.peaks[1].weight - sp.weights[0]) < 0.05);
  CHECK(within_nyquist(sp.energies[0], 0.1));
  CHECK_FALSE(within_nyquist(40.0, 0.1));

  // off-grid leakage is exactly the Dirichlet kernel of each line
  for (int l = 0; l < s.M; ++l) {
    Complex expected = 0;
    for (int i = 0; i < 2; ++i) {
      const double x = (s.eta[l] - sp.energies[i]) * s.dt;
      const double kernel = std::sin(s.M * x / 2) / (s.M * std::sin(x / 2));
      expected += sp.weights[i] * std::polar(kernel, (s.M + 1) * x / 2);
    }
    CHECK(std::abs(s.amplitude[l] - expected) < 1e-10);
  }
}

TEST_CASE("parabolic refinement moves toward the true frequency") {
  ModelParams p{-8.0, -2.0, 0.5, 1.0, 1};
  auto sp = one_particle_spectrum(p);
  Spectrum s = dft(series(128, 0.1, [&](double t) { return oracle_S(p, t); }));
  auto raw = find_peaks(s, 1);
  PeakOptions o;
  o.refine = true;
  auto fine = find_peaks(s, 1, o);
  CHECK(std::abs(fine.peaks[0].frequency - sp.energies[1]) < std::abs(raw.peaks[0].frequency - sp.energies[1]));
  CHECK(std::abs(fine.peaks[0].frequency - raw.peaks[0].frequency) <= 0.5 * s.resolution());
}

TEST_CASE("dft is linear") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g;
  ExperimentResult a = series(50, 0.1, [&](double) { return Complex(g(rng), g(rng)); });
  ExperimentResult b = series(50, 0.1, [&](double) { return Complex(g(rng), g(rng)); });
  const Complex ca(0.3, -1.2), cb(2.0, 0.5);
  ExperimentResult mix = a;
  for (std::size_t j = 0; j < mix.size(); ++j) mix.values[j] = ca * a.values[j] + cb * b.values[j];
  Spectrum sa = dft(a), sb = dft(b), sm = dft(mix);
  for (int l = 0; l < 50; ++l) CHECK(std::abs(sm.amplitude[l] - (ca * sa.amplitude[l] + cb * sb.amplitude[l])) < tol::algebraic);
}

TEST_CASE("Parseval under the 1/M normalization") {
  std::mt19937_64 rng(43);
  std::normal_distribution<double> g;
  for (int M : {1, 7, 64, 128}) {
    ExperimentResult r = series(M, 0.25, [&](double) { return Complex(g(rng), g(rng)); });
    double time_side = 0, freq_side = 0;
    for (auto v : r.values) time_side += std::norm(v);
    time_side /= M;
    for (auto a : dft(r).amplitude) freq_side += std::norm(a);
    CHECK(std::abs(time_side - freq_side) < 1e-10);
  }
}

TEST_CASE("dft rejects bad grids") {
  ExperimentResult r = series(10, 0.1, [](double) { return Complex(1.0); });
  r.t[4] += 0.01;
  CHECK_THROWS_AS(dft(r), std::invalid_argument);
  ExperimentResult shifted;
  for (int j = 0; j < 10; ++j) shifted.push_back(0.05 + 0.1 * j, 1.0);
  CHECK_THROWS_AS(dft(shifted), std::invalid_argument);
  CHECK_THROWS_AS(dft(ExperimentResult{}), std::invalid_argument);
}

TEST_CASE("propagate_errors") {
  CHECK(propagate_errors(0.04, 128) == Approx(0.0035355339).epsilon(1e-9));
  CHECK(propagate_errors(0.0, 128) == 0.0);
  CHECK(propagate_errors(0.04, 32) == Approx(0.0070710678).epsilon(1e-9));
  CHECK_THROWS(propagate_errors(-1.0, 4));
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> e(0.0, 1.0);
  std::uniform_int_distribution<int> m(1, 4096);
  for (int i = 0; i < 20; ++i) {
    double es = e(rng);
    int M = m(rng);
    CHECK(propagate_errors(es, M) == es / std::sqrt(static_cast<double>(M)));
  }
}

TEST_CASE("dft attaches propagated errors to every bin, independent of sample order") {
  ExperimentResult r = series(128, 0.1, [](double t) { return std::polar(1.0, -2.0 * t); }, 0.04);
  Spectrum s = dft(r);
  for (double e : s.std) CHECK(e == Approx(0.0035355339).epsilon(1e-9));
  ExperimentResult permuted = r;
  std::reverse(permuted.values.begin(), permuted.values.end());
  for (double e : dft(permuted).std) CHECK(e == s.std[0]);
}

TEST_CASE("spectrum CSV") {
  Spectrum s = dft(series(4, 0.5, [](double) { return Complex(1.0); }));
  std::string csv = to_csv(s);
  CHECK(csv.rfind("eta,re,im,std\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.find("-0.000000000") == std::string::npos);
}
