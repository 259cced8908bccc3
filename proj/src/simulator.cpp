#include "fanosim/simulator.hpp"

#include <stdexcept>

#include "fanosim/networks.hpp"

namespace fanosim {

PseudoPureState::PseudoPureState(StateVector pure, double epsilon) : epsilon_pp(epsilon), pure_part(std::move(pure)) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("pseudo-pure fraction must lie in (0, 1]");
  qubit_count(pure_part.size());
  if (std::abs(pure_part.norm() - 1.0) > tol::algebraic) throw std::invalid_argument("pure part is not normalized");
}

DenseOperator PseudoPureState::density() const {
  const auto dim = pure_part.size();
  return (1.0 - epsilon_pp) / static_cast<double>(dim) * DenseOperator::Identity(dim, dim) +
         epsilon_pp * pure_part * pure_part.adjoint();
}

PseudoPureState run(const Circuit& c, const PseudoPureState& init) {
  return PseudoPureState(run(c, init.pure_part), init.epsilon_pp);
}

DenseOperator evolve_density(const Circuit& c, const DenseOperator& rho) {
  const DenseOperator u = dense(c);
  if (u.rows() != rho.rows()) throw std::invalid_argument("density dimension does not match the circuit");
  return u * rho * u.adjoint();
}

Complex expectation(const DenseOperator& rho, const PauliSum& obs) {
  return (rho * to_dense(obs, qubit_count(rho.rows()))).trace();
}

Complex expectation(const PseudoPureState& state, const PauliSum& obs) {
  Complex identity_part = 0;
  for (const auto& t : obs.terms())
    if (t.string.is_identity()) identity_part += t.coefficient * t.string.phase();
  return state.epsilon_pp * expectation(state.pure_part, obs) + (1.0 - state.epsilon_pp) * identity_part;
}

namespace {
PauliSum ancilla_observable(int ancilla) {
  return PauliSum::single(ancilla, Axis::X) + PauliSum::single(ancilla, Axis::Y, Complex(0, 1));
}
}  // namespace

Complex measure_ancilla(const StateVector& state, int ancilla) {
  return expectation(state, ancilla_observable(ancilla));
}

Complex measure_ancilla(const PseudoPureState& state, int ancilla) {
  return expectation(state, ancilla_observable(ancilla));
}

InitialPreparation prepare_initial() {
  InitialPreparation prep;
  const double r = 1.0 / std::sqrt(2.0);
  prep.state = r * (basis_state(3, 0b010) + basis_state(3, 0b110));
  prep.circuit = build_initialization();
  const Eigen::Matrix2cd one = (Eigen::Matrix2cd() << 0, 0, 0, 1).finished();
  const Eigen::Matrix2cd zero = (Eigen::Matrix2cd() << 1, 0, 0, 0).finished();
  prep.labeled_deviation = kron(kron(one, pauli_matrix(Axis::Z)), one);
  prep.initial_deviation = kron(kron(pauli_matrix(Axis::X), one), zero);
  return prep;
}

}  // namespace fanosim
