#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fanosim {

enum class PulseModel {
  instantaneous,  // delta pulses: no evolution time
  finite,         // the pulse duration elapses under the full internal Hamiltonian
};

/// RF pulse exp(-i A dur (cos phase X + sin phase Y)), a rotation by angle = 2 A dur.
/// `axis` is the logical rotation axis in the xy plane; `phase` = axis - frame(spin)
/// at the moment of the pulse.
struct Pulse {
  int spin = 0;
  double axis = 0.0;
  double angle = 0.0;
  double phase = 0.0;
  double amplitude = 0.0;  // rad/s
  double duration = 0.0;   // s
  bool refocusing = false;
  bool operator==(const Pulse&) const = default;
};

// Free evolution. `block`/`segment` link the delay to an Ising block, -1 otherwise.
struct Delay {
  double duration = 0.0;
  int block = -1;
  int segment = -1;
  bool operator==(const Delay&) const = default;
};

// Zero-duration z rotation, realized by advancing the spin's phase frame.
struct VirtualZ {
  int spin = 0;
  double angle = 0.0;
  bool operator==(const VirtualZ&) const = default;
};

using Event = std::variant<Pulse, Delay, VirtualZ>;

/// Part of an Ising block with a fixed flip pattern. signs[s] = +1 when spin s
/// has its block-start orientation during the segment, -1 when flipped.
struct IsingSegment {
  int half = 0;  // 0: before the target flip, 1: after
  double duration = 0.0;
  std::vector<int> signs;
  bool operator==(const IsingSegment&) const = default;
};

/// Delay/flip schedule realizing exp(-i angle/2 Z_j Z_k): the ZZ phase of a pair
/// accumulates pi J sum_seg s_j s_k duration.
struct IsingBlock {
  int spin_j = 0;
  int spin_k = 0;
  double angle = 0.0;
  double duration = 0.0;
  std::vector<IsingSegment> segments;
  bool operator==(const IsingBlock&) const = default;
};

struct PulseSequence {
  std::vector<std::string> spin_labels;
  // circuit qubit label and the spin carrying it; other spins are spectators
  std::vector<std::string> qubit_labels;
  std::vector<int> qubit_spins;
  PulseModel model = PulseModel::instantaneous;
  std::vector<Event> events;
  std::vector<IsingBlock> blocks;
  // phase frame per spin after the last event
  std::vector<double> frame;
  // number of frame-table updates made while lowering phases
  long frame_updates = 0;
  // sum of squared residual unwanted coupling angles (rad^2)
  double residual_error = 0.0;

  int n_spins() const { return static_cast<int>(spin_labels.size()); }
  bool is_active(int spin) const;
  // delays plus, for finite pulses, pulse durations
  double total_duration() const;
  int pulse_count() const;
  bool operator==(const PulseSequence&) const = default;
};

std::string_view model_name(PulseModel m);

// Line format, one event per line, documented in the README.
std::string serialize(const PulseSequence& s);
PulseSequence parse_pulse_sequence(std::string_view text);

}  // namespace fanosim
