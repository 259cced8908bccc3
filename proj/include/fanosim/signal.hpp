#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fanosim/pauli.hpp"

namespace fanosim {

enum class RunMode { ideal, pulse };

std::string_view mode_name(RunMode m);
RunMode parse_mode(std::string_view s);

/// Sampled ancilla polarization <X_a> + i<Y_a> on a time grid, with
/// per-point standard deviations of the real and imaginary parts.
struct ExperimentResult {
  std::vector<double> t;
  std::vector<Complex> values;
  std::vector<double> std_re;
  std::vector<double> std_im;
  RunMode mode = RunMode::ideal;

  std::size_t size() const { return t.size(); }
  void push_back(double time, Complex value, double sre = 0.0, double sim = 0.0);
  // Throws std::invalid_argument unless sizes agree, t is strictly increasing and values are finite.
  void validate() const;
};

// Header "t,re,im,std_re,std_im,mode", 9 decimals.
std::string to_csv(const ExperimentResult& r);

/// t_j = t_start + j dt for j = 0..steps-1.
struct TimeGrid {
  double t_start = 0.1;
  double dt = 0.1;
  int steps = 15;

  std::vector<double> points() const;
  void validate() const;
};

}  // namespace fanosim
