#include "fanosim/jordan_wigner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanosim {

PauliSum jw_map(const FermionOp& op, int n_modes) {
  if (op.mode < 0 || op.mode >= n_modes)
    throw std::out_of_range("fermion mode " + std::to_string(op.mode) + " outside 0.." +
                            std::to_string(n_modes - 1));
  PauliSum string = PauliSum::scalar(1.0);
  for (int j = 0; j < op.mode; ++j) string = string * PauliSum::single(j, Axis::Z, -1.0);
  auto ladder = op.kind == FermionOp::Kind::creation ? sigma_plus(op.mode) : sigma_minus(op.mode);
  return string * ladder;
}

PauliSum jw_number(int mode, int n_modes) {
  return jw_map(FermionOp::create(mode), n_modes) * jw_map(FermionOp::annihilate(mode), n_modes);
}

MappedBasisState jw_state(const OccupationState& occ, CreationOrder order) {
  if (occ.n_modes < 1 || occ.n_modes > 62) throw std::out_of_range("jw_state: unsupported mode count");
  std::vector<int> modes(occ.occupied.begin(), occ.occupied.end());
  for (int m : modes)
    if (m < 0 || m >= occ.n_modes) throw std::out_of_range("jw_state: occupied mode out of range");
  if (order == CreationOrder::descending) std::reverse(modes.begin(), modes.end());

  std::uint64_t index = (std::uint64_t{1} << occ.n_modes) - 1;  // vacuum: all |1>
  int sign = 1;
  for (int m : modes) {
    // each occupied qubit below m carries -Z = -1; empty ones give +1
    for (int j = 0; j < m; ++j)
      if ((index & qubit_mask(j, occ.n_modes)) == 0) sign = -sign;
    index &= ~qubit_mask(m, occ.n_modes);
  }
  return {index, sign};
}

StateVector to_state_vector(const MappedBasisState& s, int n_modes) {
  return static_cast<double>(s.sign) * basis_state(n_modes, s.index);
}

}  // namespace fanosim
