#pragma once

#include <array>
#include <stdexcept>

#include "fanosim/pauli.hpp"

namespace fanosim {

/// Fano-Anderson ring: impurity level `epsilon`, conduction modes k_l = 2 pi l / n
/// with energies -2 tau cos k_l, and impurity coupling V to mode k_0 only.
/// `epsilon_k0` is set directly (the experiments choose it independently of tau).
struct ModelParams {
  double epsilon = -8.0;
  double epsilon_k0 = -2.0;
  double V = 4.0;
  double tau = 1.0;
  int n = 1;

  double mode_energy(int l) const;
};

struct DerivedParams {
  double E = 0;        // (epsilon + epsilon_k0) / 2
  double Delta = 0;    // (epsilon - epsilon_k0) / 2
  double Omega = 0;    // sqrt(Delta^2 + V^2)
  double lambda1 = 0;  // (E - Omega) / 2
  double lambda2 = 0;  // (E + Omega) / 2
  double delta = 0;    // (Delta + Omega) / V
  double theta = 0;    // atan(delta); cos(theta) = 1/sqrt(1 + delta^2)
};

class DegenerateCouplingError : public std::domain_error {
 public:
  DegenerateCouplingError() : std::domain_error("V = 0: delta and theta are undefined") {}
};

enum class DegeneratePolicy {
  reject,  // throw DegenerateCouplingError when V == 0
  limit,   // use the V -> 0+ limit of theta (0, pi/4 or pi/2 by the sign of Delta)
};

DerivedParams derive(const ModelParams& p, DegeneratePolicy policy = DegeneratePolicy::reject);

// Spin Hamiltonian on n+1 qubits (qubit 0 = impurity), through the Jordan-Wigner map.
PauliSum build_full_hamiltonian(const ModelParams& p);

// H_bar = eps/2 Z1 + eps_k0/2 Z2 + V/2 (X1 X2 + Y1 Y2) on qubits {0, 1}.
PauliSum reduce_two_qubit(const ModelParams& p);

// Closed-form one-particle sector of the n = 1 model: energies E -+ Omega and the
// weights |<phi|1P_i>|^2 of |phi> = |1_1 0_2> (fermion in k_0).
struct OneParticleSpectrum {
  std::array<double, 2> energies;
  std::array<double, 2> weights;
};
OneParticleSpectrum one_particle_spectrum(const ModelParams& p);

/// Which constant phase S(t) carries. `consistent` uses the constant E that the
/// Jordan-Wigner map actually produces, so spectral peaks sit on the one-particle
/// eigenvalues; `total_energy` uses exp(-i (eps + eps_k0) t).
enum class SignalConvention { consistent, total_energy };

// G(t) = <FS| b(t) b^dag(0) |FS> for one fermion in k_0 (n = 1), by dense evolution.
Complex oracle_G(const ModelParams& p, double t);
Complex closed_form_G(const ModelParams& p, double t);

// S(t) = <phi| exp(-i H t) |phi>, |phi> = |1_1 0_2>, by dense evolution.
Complex oracle_S(const ModelParams& p, double t, SignalConvention convention = SignalConvention::consistent);

}  // namespace fanosim
