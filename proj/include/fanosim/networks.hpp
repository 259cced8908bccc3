#pragma once

#include <string>

#include "fanosim/circuit.hpp"
#include "fanosim/model.hpp"

namespace fanosim {

// Basis change of the two-qubit reduction, on labels {"1", "2"}:
// U^dag H_bar U = lambda1 Z1 + lambda2 Z2 + const.
Circuit build_U(double theta);

// exp(-i H_bar t) up to a global phase, on labels {"1", "2"}: U^dag, then
// R_z^1(2 lambda1 t) R_z^2(2 lambda2 t) (time-dependent), then U.
Circuit build_evolution(double t, const DerivedParams& d);

// X on `target` when `control` is in |control_value>, built from x/y rotations,
// two Ising gates and a z rotation on the control. Equal to the controlled gate
// up to a global phase. Labels {control, target}.
Circuit build_cnot(const std::string& control, const std::string& target, int control_value);
// |0><0|_a (x) X_1 + |1><1|_a (x) I
Circuit build_cnot_a0();
// |0><0|_a (x) I + |1><1|_a (x) X_1
Circuit build_cnot_b1();

struct NetworkOptions {
  // R_y(pi/2) on the ancilla first, taking |0>_a to |+>_a. Off when the
  // input already carries the ancilla in x (see prepare_initial).
  bool prepare_ancilla = true;
  SignalConvention convention = SignalConvention::consistent;
};

/// Ancilla network for G(t) on labels {"a", "1", "2"}. Started from
/// |0>_a |1_1 0_2>, <X_a> + i<Y_a> at the output equals G(t).
Circuit build_correlation_network(double t, const DerivedParams& d, const NetworkOptions& opts = {});

/// Ancilla network for S(t): exp(i H Z_a t/2) as U^dag, two time-dependent
/// controlled-phase Ising gates, U, and a final ancilla z rotation carrying the
/// constant term. <X_a> + i<Y_a> equals oracle_S(t) under opts.convention.
Circuit build_spectrum_network(double t, const ModelParams& p, const DerivedParams& d,
                               const NetworkOptions& opts = {});

/// Replaces every time-dependent Ising gate R_zz(w) on (j, k) by
///   R_x^k(-pi/2) R_zz(-pi/2) R_y^k(-pi/2) R_z^k(w) R_y^k(pi/2) R_zz(pi/2) R_x^k(pi/2)
/// (time order), so only the virtual z angle depends on t. Time-dependent z
/// rotations are kept; time-dependent x/y rotations throw std::invalid_argument.
Circuit hoist_time_dependence(const Circuit& c);

/// Initialization on {"a", "1", "2"}: SWAP(a, 1) from three CNOTs, R_y^a(pi/2),
/// R_x^2(pi). Takes the labeled state 1^a Z^1 1^2 to X^a 1^1 0^2.
Circuit build_initialization();

}  // namespace fanosim
