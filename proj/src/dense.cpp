#include "fanosim/dense.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace fanosim {

int qubit_count(Eigen::Index dimension) {
  if (dimension < 1 || (dimension & (dimension - 1)) != 0)
    throw std::invalid_argument("dimension " + std::to_string(dimension) + " is not a power of two");
  int n = 0;
  while ((Eigen::Index{1} << n) < dimension) ++n;
  return n;
}

Eigen::Matrix2cd pauli_matrix(Axis axis) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  switch (axis) {
    case Axis::X: m << 0, 1, 1, 0; break;
    case Axis::Y: m << 0, -1i, 1i, 0; break;
    case Axis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

DenseOperator to_dense(const PauliString& p, int n_qubits) {
  if (p.max_qubit() >= n_qubits)
    throw std::out_of_range("Pauli string acts on qubit " + std::to_string(p.max_qubit()) +
                            " but the register has " + std::to_string(n_qubits) + " qubits");
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q) {
    auto it = p.factors().find(q);
    Eigen::Matrix2cd f = it == p.factors().end() ? Eigen::Matrix2cd::Identity().eval() : pauli_matrix(it->second);
    out = kron(out, f);
  }
  return p.phase() * out;
}

DenseOperator to_dense(const PauliSum& op, int n_qubits) {
  const auto dim = Eigen::Index{1} << n_qubits;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const auto& t : op.terms()) out += t.coefficient * to_dense(t.string, n_qubits);
  return out;
}

DenseOperator exp_hermitian(const DenseOperator& op, double scale) {
  if (!is_hermitian(op, tol::hermiticity))
    throw std::invalid_argument("exp_hermitian: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(op);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  Eigen::VectorXcd phases(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) phases(i) = std::polar(1.0, -scale * values(i));
  return vectors * phases.asDiagonal() * vectors.adjoint();
}

StateVector act(const PauliString& p, const StateVector& state) {
  const int n = qubit_count(state.size());
  if (p.max_qubit() >= n) throw std::out_of_range("Pauli string exceeds state register");
  std::uint64_t flip = 0;
  std::uint64_t zmask = 0;
  std::uint64_t ymask = 0;
  int y_count = 0;
  for (const auto& [q, a] : p.factors()) {
    auto m = qubit_mask(q, n);
    if (a == Axis::X || a == Axis::Y) flip |= m;
    if (a == Axis::Z) zmask |= m;
    if (a == Axis::Y) {
      ymask |= m;
      ++y_count;
    }
  }
  // Y = i X Z on each factor: Y|b> = i (-1)^b |1-b>.
  static constexpr Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex global = p.phase() * kI[y_count % 4];
  StateVector out(state.size());
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(state.size()); ++b) {
    int parity = std::popcount(b & (zmask | ymask)) & 1;
    out(static_cast<Eigen::Index>(b ^ flip)) = (parity ? -global : global) * state(static_cast<Eigen::Index>(b));
  }
  return out;
}

StateVector act(const PauliSum& op, const StateVector& state) {
  StateVector out = StateVector::Zero(state.size());
  for (const auto& t : op.terms()) out += t.coefficient * act(t.string, state);
  return out;
}

Complex expectation(const StateVector& state, const PauliSum& obs) {
  Complex total = 0.0;
  for (const auto& t : obs.terms()) total += t.coefficient * state.dot(act(t.string, state));
  return total;
}

StateVector basis_state(int n_qubits, std::uint64_t index) {
  StateVector s = StateVector::Zero(Eigen::Index{1} << n_qubits);
  s(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

DenseOperator embed(const Eigen::Matrix2cd& op, int qubit, int n_qubits) {
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (int q = 0; q < n_qubits; ++q)
    out = q == qubit ? kron(out, op) : kron(out, Eigen::Matrix2cd::Identity());
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(a.dot(b)); }

}  // namespace fanosim
