#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fanosim/circuit.hpp"
#include "fanosim/molecule.hpp"
#include "fanosim/pulse_sequence.hpp"

namespace fanosim {

class CompileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RefocusScheme {
  // Walsh-coded pi pairs inside every delay: all couplings above the threshold cancel exactly
  full,
  // one shared flip pattern for all other spins; fewer pulses, residual couplings left for optimize_delays
  economical,
  // only the target flip; other couplings evolve freely
  none,
};

struct CompileOptions {
  double pulse_duration = 1e-3;  // s
  PulseModel pulse_model = PulseModel::instantaneous;
  RefocusScheme scheme = RefocusScheme::full;
  // 0: shortest block reaching the angle; otherwise a fixed length (s) for every block
  double ising_block_duration = 0.0;
  // |J| at or below this (Hz) is not refocused
  double coupling_threshold_hz = 1.0;
  // at most 2^levels subsegments per delay half
  int max_refocus_levels = 3;
};

/// Lowers x/y rotations to RF pulses, z rotations to frame updates and Ising
/// gates to delay/pi-flip blocks.
///
/// Ising block for angle w on (j, k), with target = w/(pi J_jk) after folding w
/// into (-pi, pi]: delays dt1 = (D + target)/2 and dt2 = (D - target)/2 around a
/// pi flip of j, so the pair accumulates pi J (dt1 - dt2) = w. Throws CompileError
/// for unmappable qubits, uncoupled pairs or a block length shorter than |target|.
PulseSequence compile(const Circuit& c, const Molecule& m, const CompileOptions& opts = {});

/// Recomputes pulse phases, amplitudes and the final frame from the logical
/// content (pulse axes, virtual z angles, durations). Each frame-table entry
/// touched counts as one update.
void lower_phases(PulseSequence& seq, const Molecule& m);

// Sum over Ising blocks and unwanted pairs (not both spectators) of (pi J sum_seg s_u s_v d)^2.
double coupling_objective(const PulseSequence& seq, const Molecule& m);

struct OptimizeResult {
  PulseSequence sequence;
  double objective_before = 0.0;
  double objective_after = 0.0;
};

/// Coordinate descent on segment durations: each move shifts time between two
/// segments of the same half of a block, which leaves the target angle and the
/// block length unchanged, and is minimized exactly (the objective is quadratic).
OptimizeResult optimize_delays(const PulseSequence& seq, const Molecule& m, int max_sweeps = 100);

struct BudgetReport {
  int pulses = 0;
  int ising_blocks = 0;
  double duration = 0.0;
  double min_t2star = 0.0;
  std::vector<std::string> warnings;

  bool ok() const { return warnings.empty(); }
};

inline constexpr int kPulseBudget = 1000;
inline constexpr int kIsingBudget = 100;

BudgetReport budget_check(const PulseSequence& seq, const Molecule& m);

}  // namespace fanosim
