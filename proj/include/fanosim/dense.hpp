#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "fanosim/pauli.hpp"
#include "fanosim/tolerances.hpp"

namespace fanosim {

// Qubit 0 is the most significant bit of a basis index throughout the library,
// so |q0 q1 ... q_{N-1}> reads left to right as in the usual ket notation.
using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

// Number of qubits for a 2^N dimension; throws std::invalid_argument otherwise.
int qubit_count(Eigen::Index dimension);

// Bit mask of `qubit` inside a basis index of an n-qubit register.
inline std::uint64_t qubit_mask(int qubit, int n_qubits) {
  return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

Eigen::Matrix2cd pauli_matrix(Axis axis);

DenseOperator to_dense(const PauliString& p, int n_qubits);
DenseOperator to_dense(const PauliSum& op, int n_qubits);

/// exp(-i * scale * op) for Hermitian `op`, via a self-adjoint eigendecomposition.
///
/// This is the reference propagator that every gate decomposition is checked
/// against. Throws std::invalid_argument when ||op - op^dag|| exceeds
/// tol::hermiticity.
DenseOperator exp_hermitian(const DenseOperator& op, double scale);

StateVector act(const PauliString& p, const StateVector& state);
StateVector act(const PauliSum& op, const StateVector& state);

// <state| obs |state>, computed by acting with each Pauli string on the vector.
Complex expectation(const StateVector& state, const PauliSum& obs);

StateVector basis_state(int n_qubits, std::uint64_t index);

// Embeds a 2x2 operator acting on `qubit` into an n-qubit register.
DenseOperator embed(const Eigen::Matrix2cd& op, int qubit, int n_qubits);

template <typename DerivedA, typename DerivedB>
DenseOperator kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol = tol::unitarity) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - DenseOperator::Identity(u.rows(), u.cols())).norm() < tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = tol::hermiticity) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() < tol;
}

/// Frobenius distance between a and b after removing the best global phase.
template <typename DerivedA, typename DerivedB>
double phase_distance(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Complex overlap = (b.adjoint() * a).trace();
  Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).norm();
}

// |<a|b>|^2 for normalized vectors.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace fanosim
