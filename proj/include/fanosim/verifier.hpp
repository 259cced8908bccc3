#pragma once

#include "fanosim/circuit.hpp"
#include "fanosim/dense.hpp"
#include "fanosim/molecule.hpp"
#include "fanosim/pulse_sequence.hpp"

namespace fanosim {

/// Physical evolution of the whole sequence in the rotating frame of each spin's
/// carrier, with internal Hamiltonian sum pi nu_j Z_j + sum (pi J/2) Z_j Z_k.
/// Limited to 7 spins.
StateVector evolve(const PulseSequence& seq, const Molecule& m, const StateVector& physical_state);
// Same evolution as a dense matrix.
DenseOperator physical_unitary(const PulseSequence& seq, const Molecule& m);

/// Logical propagator: physical_unitary followed by the final frame rotation
/// prod Rz(frame_j). Equals the compiled circuit (embedded) up to global phase
/// and residual couplings.
DenseOperator sequence_unitary(const PulseSequence& seq, const Molecule& m);

/// Places a circuit-register state into the molecule register: circuit qubits on
/// their spins, every other spin in its basis state `Spin::state`.
StateVector embed_logical(const PulseSequence& seq, const Molecule& m, const StateVector& circuit_state);

struct Verification {
  StateVector final_state;  // logical frame, full molecule register
  StateVector ideal_state;
  double fidelity = 0.0;
};

Verification verify(const PulseSequence& seq, const Molecule& m, const Circuit& c, const StateVector& circuit_init);

}  // namespace fanosim
