#pragma once

#include <cstdint>
#include <set>

#include "fanosim/dense.hpp"
#include "fanosim/pauli.hpp"

namespace fanosim {

// Mode 0 is the impurity b; modes 1..n are the conduction modes k_0..k_{n-1}.
// Mode m lives on qubit m.
struct FermionOp {
  enum class Kind { creation, annihilation };
  int mode = 0;
  Kind kind = Kind::annihilation;

  static FermionOp create(int mode) { return {mode, Kind::creation}; }
  static FermionOp annihilate(int mode) { return {mode, Kind::annihilation}; }
};

/// Pauli form of a fermionic mode operator:
///   a_m  = (prod_{j<m} -Z_j) sigma-_m,   a_m^dag = (prod_{j<m} -Z_j) sigma+_m.
/// Occupied modes map to |0> (spin up). Throws std::out_of_range for m >= n_modes.
PauliSum jw_map(const FermionOp& op, int n_modes);

// Number operator a_m^dag a_m.
PauliSum jw_number(int mode, int n_modes);

struct OccupationState {
  std::set<int> occupied;
  int n_modes = 0;
};

enum class CreationOrder {
  // a^dag_{m_k} ... a^dag_{m_2} a^dag_{m_1} |vac>, lowest mode applied first
  ascending,
  // a^dag_{m_1} a^dag_{m_2} ... a^dag_{m_k} |vac>, highest mode applied first
  descending,
};

struct MappedBasisState {
  std::uint64_t index = 0;
  int sign = 1;
};

/// Computational basis state (and sign) reached by creating the occupied modes
/// on the mapped vacuum |11...1>.
MappedBasisState jw_state(const OccupationState& occ, CreationOrder order = CreationOrder::ascending);

StateVector to_state_vector(const MappedBasisState& s, int n_modes);

}  // namespace fanosim
