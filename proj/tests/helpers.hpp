#pragma once

#include <random>

#include "fanosim/dense.hpp"
#include "fanosim/pauli.hpp"

namespace testing_helpers {

inline fanosim::StateVector random_state(int n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  fanosim::StateVector s(std::size_t{1} << n_qubits);
  for (auto& a : s) a = {g(rng), g(rng)};
  return s.normalized();
}

inline fanosim::PauliString random_string(int n_qubits, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::map<int, fanosim::Axis> f;
  for (int q = 0; q < n_qubits; ++q) {
    int a = pick(rng);
    if (a > 0) f[q] = static_cast<fanosim::Axis>(a - 1);
  }
  return fanosim::PauliString(f);
}

inline fanosim::PauliSum random_hermitian(int n_qubits, int n_terms, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  fanosim::PauliSum h;
  for (int i = 0; i < n_terms; ++i) h += fanosim::PauliSum(g(rng), random_string(n_qubits, rng));
  return h;
}

}  // namespace testing_helpers

#include "fanosim/circuit.hpp"

namespace testing_helpers {

inline fanosim::Circuit random_circuit(int n_qubits, int n_gates, std::mt19937_64& rng) {
  std::vector<std::string> labels;
  for (int q = 0; q < n_qubits; ++q) labels.push_back("q" + std::to_string(q));
  fanosim::Circuit c(labels);
  std::uniform_int_distribution<int> kind(0, n_qubits > 1 ? 3 : 2), qubit(0, n_qubits - 1);
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  for (int i = 0; i < n_gates; ++i) {
    auto k = static_cast<fanosim::GateKind>(kind(rng));
    int a = qubit(rng), b = -1;
    if (k == fanosim::GateKind::ising_zz) do b = qubit(rng); while (b == a);
    c.add({k, angle(rng), a, b});
  }
  return c;
}

}  // namespace testing_helpers
