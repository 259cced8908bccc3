#pragma once

#include "fanosim/circuit.hpp"

namespace fanosim {

/// rho = (1 - eps)/2^N I + eps |psi><psi|.
///
/// Unitaries leave the identity part alone, so only the pure part is evolved;
/// traceless observables see eps times the pure-state value.
struct PseudoPureState {
  double epsilon_pp = 1.0;
  StateVector pure_part;

  explicit PseudoPureState(StateVector pure, double epsilon = 1.0);
  int n_qubits() const { return qubit_count(pure_part.size()); }
  DenseOperator density() const;
};

PseudoPureState run(const Circuit& c, const PseudoPureState& init);

// U rho U^dag with the dense circuit matrix; reference path for the pseudo-pure shortcut.
DenseOperator evolve_density(const Circuit& c, const DenseOperator& rho);

// tr(rho obs)
Complex expectation(const PseudoPureState& state, const PauliSum& obs);
Complex expectation(const DenseOperator& rho, const PauliSum& obs);

// <X_a> + i <Y_a> = <2 sigma+_a>
Complex measure_ancilla(const StateVector& state, int ancilla = 0);
Complex measure_ancilla(const PseudoPureState& state, int ancilla = 0);

struct InitialPreparation {
  // |+>_a |1_1 0_2>, the input of the networks built without ancilla preparation
  StateVector state;
  // gate sequence taking the labeled state to the initial deviation
  Circuit circuit;
  // 1^a Z^1 1^2 and X^a 1^1 0^2, with 1 = |1><1|, 0 = |0><0|
  DenseOperator labeled_deviation;
  DenseOperator initial_deviation;
};

InitialPreparation prepare_initial();

}  // namespace fanosim
