#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fanosim/dense.hpp"

namespace fanosim {

enum class GateKind { rot_x, rot_y, rot_z, ising_zz };

std::string_view gate_name(GateKind kind);

/// Elementary NMR gate on qubit indices of the owning circuit.
///   rot_mu(a)   = exp(-i a sigma_mu / 2)
///   ising_zz(w) = exp(-i w/2 Z_q0 Z_q1)
/// rot_z is realized as a virtual (phase-frame) rotation by the compiler.
/// `time_dependent` marks angles that vary with the simulated time t.
struct Gate {
  GateKind kind = GateKind::rot_x;
  double angle = 0.0;
  int q0 = 0;
  int q1 = -1;
  bool time_dependent = false;

  int arity() const { return kind == GateKind::ising_zz ? 2 : 1; }
  Gate inverse() const { return {kind, -angle, q0, q1, time_dependent}; }
  // Same kind and targets; angles are allowed to differ.
  bool same_shape(const Gate& other) const {
    return kind == other.kind && q0 == other.q0 && q1 == other.q1 && time_dependent == other.time_dependent;
  }
  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list (first gate acts first) on named qubits.
///
/// Label 0 is the most significant qubit of the dense register. The networks
/// use the labels "a" (ancilla), "1" (impurity) and "2" (mode k_0).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Gate>& gates() const { return gates_; }
  int n_qubits() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return gates_.empty(); }
  std::size_t size() const { return gates_.size(); }

  // Index of a label; throws std::out_of_range if absent.
  int index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;

  Circuit& add(const Gate& g);
  Circuit& rx(std::string_view q, double angle, bool td = false);
  Circuit& ry(std::string_view q, double angle, bool td = false);
  Circuit& rz(std::string_view q, double angle, bool td = false);
  Circuit& zz(std::string_view q0, std::string_view q1, double angle, bool td = false);

  // Appends `other`, matching qubits by label; every label of `other` must exist here.
  Circuit& append(const Circuit& other);

  // Reversed order, negated angles.
  Circuit inverse() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Gate> gates_;
};

DenseOperator gate_matrix(const Gate& g, int n_qubits);
Eigen::Matrix2cd rotation(Axis axis, double angle);

// Product G_last ... G_first.
DenseOperator dense(const Circuit& c);

StateVector run(const Circuit& c, const StateVector& state);

// Line format:
//   # fanosim circuit v1
//   qubits a 1 2
//   rx 1.5707963267948966 a
//   ising_zz -0.5 a 1 t        (trailing t: time-dependent)
std::string serialize(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace fanosim
