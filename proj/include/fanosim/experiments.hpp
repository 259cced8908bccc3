#pragma once

#include <cstdint>
#include <optional>

#include "fanosim/compiler.hpp"
#include "fanosim/model.hpp"
#include "fanosim/molecule.hpp"
#include "fanosim/signal.hpp"

namespace fanosim {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct ExperimentOptions {
  RunMode mode = RunMode::ideal;
  // Gaussian noise added to re and im of every point; 0 disables
  double noise_std = 0.0;
  std::uint64_t seed = kDefaultSeed;
  double epsilon_pp = 1.0;
  SignalConvention convention = SignalConvention::consistent;
  // pulse mode only
  std::optional<Molecule> molecule;
  CompileOptions compile;
  // multiply the ancilla coherence by exp(-T / T2*) of the ancilla spin
  bool dephasing = false;
};

/// G(t) on every grid point: hoisted correlation network applied to the
/// prepared |+>_a |1 0>, ancilla polarization divided by the reference (the
/// polarization of the prepared state). Ideal mode runs the circuit on the
/// pseudo-pure state; pulse mode compiles against the molecule and evolves the
/// full register through the verifier.
ExperimentResult run_correlation_experiment(const ModelParams& p, const TimeGrid& grid,
                                            const ExperimentOptions& opts = {});

/// Same pipeline for S(t) with the spectrum network.
ExperimentResult run_spectrum_experiment(const ModelParams& p, const TimeGrid& grid,
                                         const ExperimentOptions& opts = {});

}  // namespace fanosim
