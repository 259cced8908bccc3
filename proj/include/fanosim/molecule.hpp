#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fanosim {

enum class SpinRole { ancilla, qubit1, qubit2, spectator };

std::string_view role_name(SpinRole r);  // "a", "1", "2", "spectator"

struct Spin {
  std::string label;
  double shift_hz = 0.0;  // offset from the spin's rotating-frame carrier
  double t2star_s = 1.0;
  SpinRole role = SpinRole::spectator;
  int state = 1;  // computational state held while the spin is not part of a circuit
};

/// Spin register with chemical shifts, T2* and a symmetric J matrix (Hz).
class Molecule {
 public:
  Molecule() = default;
  Molecule(std::vector<Spin> spins, Eigen::MatrixXd couplings);

  const std::vector<Spin>& spins() const { return spins_; }
  const Eigen::MatrixXd& couplings() const { return J_; }
  int size() const { return static_cast<int>(spins_.size()); }
  double coupling(int i, int j) const { return J_(i, j); }
  double min_t2star() const;

  // Index by spin label; throws std::out_of_range.
  int index_of(std::string_view label) const;
  // Spin holding a circuit qubit: labels "a", "1", "2" resolve through roles,
  // anything else must be a spin label. Empty when unmappable.
  std::optional<int> spin_for_qubit(std::string_view qubit_label) const;

 private:
  std::vector<Spin> spins_;
  Eigen::MatrixXd J_;
};

// Text format:
//   # fanosim molecule v1
//   spin C1 shift_hz=1200 t2star_s=0.8 role=1
//   spin H1 shift_hz=-300 t2star_s=1.1 role=spectator state=0
//   coupling C1 H1 41.5
std::string serialize(const Molecule& m);
Molecule parse_molecule(std::string_view text);

}  // namespace fanosim
