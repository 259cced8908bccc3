#include "fanosim/verifier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fanosim {

namespace {

constexpr int kMaxSpins = 7;

void check(const PulseSequence& seq, const Molecule& m) {
  if (seq.n_spins() != m.size()) throw std::invalid_argument("sequence and molecule differ in spin count");
  if (m.size() > kMaxSpins) throw std::invalid_argument("dense verification is limited to 7 spins");
}

// Diagonal of the internal Hamiltonian, without the shift of `skip`.
Eigen::VectorXd internal_energies(const Molecule& m, int skip) {
  using std::numbers::pi;
  const int n = m.size();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXd d(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    auto z = [&](int s) { return (b >> (n - 1 - s)) & 1 ? -1.0 : 1.0; };
    double e = 0;
    for (int j = 0; j < n; ++j) {
      if (j != skip) e += pi * m.spins()[j].shift_hz * z(j);
      for (int k = j + 1; k < n; ++k) e += pi * m.coupling(j, k) / 2 * z(j) * z(k);
    }
    d(b) = e;
  }
  return d;
}

Eigen::VectorXcd free_phases(const Molecule& m, double dur) {
  Eigen::VectorXd e = internal_energies(m, -1);
  Eigen::VectorXcd d(e.size());
  for (Eigen::Index b = 0; b < e.size(); ++b) d(b) = std::polar(1.0, -e(b) * dur);
  return d;
}

DenseOperator pulse_unitary(const Pulse& p, const Molecule& m, PulseModel model) {
  const int n = m.size();
  Eigen::Matrix2cd axis = std::cos(p.phase) * pauli_matrix(Axis::X) + std::sin(p.phase) * pauli_matrix(Axis::Y);
  if (model == PulseModel::instantaneous) {
    Eigen::Matrix2cd r = std::cos(p.angle / 2) * Eigen::Matrix2cd::Identity() - Complex(0, std::sin(p.angle / 2)) * axis;
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (int q = 0; q < n; ++q) out = q == p.spin ? kron(out, r) : kron(out, Eigen::Matrix2cd::Identity());
    return out;
  }
  // Hermitian generator: rf term plus the internal Hamiltonian without the driven spin's offset
  DenseOperator h = p.amplitude * embed(axis, p.spin, n);
  h.diagonal() += internal_energies(m, p.spin).cast<Complex>();
  return exp_hermitian(h, p.duration);
}

DenseOperator frame_rotation(const PulseSequence& seq, int n) {
  DenseOperator f = DenseOperator::Identity(1, 1);
  for (int s = 0; s < n; ++s) {
    const double a = s < static_cast<int>(seq.frame.size()) ? seq.frame[s] : 0.0;
    Eigen::Matrix2cd rz = Eigen::Matrix2cd::Zero();
    rz(0, 0) = std::polar(1.0, -a / 2);
    rz(1, 1) = std::polar(1.0, a / 2);
    f = kron(f, rz);
  }
  return f;
}

void apply_single(StateVector& psi, const Eigen::Matrix2cd& r, int spin, int n) {
  const std::uint64_t mask = std::uint64_t{1} << (n - 1 - spin);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(psi.size()); ++b) {
    if (b & mask) continue;
    const auto i0 = static_cast<Eigen::Index>(b), i1 = static_cast<Eigen::Index>(b | mask);
    const Complex a0 = psi(i0), a1 = psi(i1);
    psi(i0) = r(0, 0) * a0 + r(0, 1) * a1;
    psi(i1) = r(1, 0) * a0 + r(1, 1) * a1;
  }
}

}  // namespace

StateVector evolve(const PulseSequence& seq, const Molecule& m, const StateVector& physical_state) {
  check(seq, m);
  const int n = m.size();
  if (physical_state.size() != (Eigen::Index{1} << n)) throw std::invalid_argument("state does not match the molecule");
  StateVector psi = physical_state;
  for (const auto& e : seq.events) {
    if (const auto* p = std::get_if<Pulse>(&e)) {
      if (seq.model == PulseModel::instantaneous) {
        Eigen::Matrix2cd axis = std::cos(p->phase) * pauli_matrix(Axis::X) + std::sin(p->phase) * pauli_matrix(Axis::Y);
        Eigen::Matrix2cd r = std::cos(p->angle / 2) * Eigen::Matrix2cd::Identity() - Complex(0, std::sin(p->angle / 2)) * axis;
        apply_single(psi, r, p->spin, n);
      } else {
        psi = pulse_unitary(*p, m, seq.model) * psi;
      }
    } else if (const auto* d = std::get_if<Delay>(&e)) {
      psi = free_phases(m, d->duration).cwiseProduct(psi);
    }
  }
  return psi;
}

DenseOperator physical_unitary(const PulseSequence& seq, const Molecule& m) {
  check(seq, m);
  const Eigen::Index dim = Eigen::Index{1} << m.size();
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (const auto& e : seq.events) {
    if (const auto* p = std::get_if<Pulse>(&e)) {
      u = pulse_unitary(*p, m, seq.model) * u;
    } else if (const auto* d = std::get_if<Delay>(&e)) {
      u = free_phases(m, d->duration).asDiagonal() * u;
    }
  }
  return u;
}

DenseOperator sequence_unitary(const PulseSequence& seq, const Molecule& m) {
  return frame_rotation(seq, m.size()) * physical_unitary(seq, m);
}

StateVector embed_logical(const PulseSequence& seq, const Molecule& m, const StateVector& circuit_state) {
  check(seq, m);
  const int nq = static_cast<int>(seq.qubit_spins.size());
  if (circuit_state.size() != (Eigen::Index{1} << nq))
    throw std::invalid_argument("circuit state does not match the sequence's qubit count");
  const int n = m.size();
  std::uint64_t fixed = 0;
  std::vector<bool> active(n, false);
  for (int s : seq.qubit_spins) active[s] = true;
  for (int s = 0; s < n; ++s)
    if (!active[s] && m.spins()[s].state) fixed |= std::uint64_t{1} << (n - 1 - s);
  StateVector out = StateVector::Zero(Eigen::Index{1} << n);
  for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(circuit_state.size()); ++c) {
    std::uint64_t b = fixed;
    for (int q = 0; q < nq; ++q)
      if ((c >> (nq - 1 - q)) & 1) b |= std::uint64_t{1} << (n - 1 - seq.qubit_spins[q]);
    out(static_cast<Eigen::Index>(b)) = circuit_state(static_cast<Eigen::Index>(c));
  }
  return out;
}

Verification verify(const PulseSequence& seq, const Molecule& m, const Circuit& c, const StateVector& circuit_init) {
  if (static_cast<int>(seq.qubit_labels.size()) != c.n_qubits())
    throw std::invalid_argument("sequence was compiled for a different register");
  for (int q = 0; q < c.n_qubits(); ++q)
    if (seq.qubit_labels[q] != c.labels()[q]) throw std::invalid_argument("sequence was compiled for a different register");
  Verification v;
  v.final_state = frame_rotation(seq, m.size()) * evolve(seq, m, embed_logical(seq, m, circuit_init));
  v.ideal_state = embed_logical(seq, m, run(c, circuit_init));
  v.fidelity = fidelity(v.ideal_state, v.final_state);
  return v;
}

}  // namespace fanosim
