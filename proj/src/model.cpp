#include "fanosim/model.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fanosim/dense.hpp"
#include "fanosim/jordan_wigner.hpp"

namespace fanosim {

namespace {

void require_single_site(const ModelParams& p, const char* what) {
  if (p.n != 1) throw std::invalid_argument(std::string(what) + " is defined for n = 1 only");
}

void require_normalized(const StateVector& s) {
  if (std::abs(s.norm() - 1.0) > tol::algebraic) throw std::logic_error("state is not normalized");
}

}  // namespace

double ModelParams::mode_energy(int l) const {
  if (l == 0) return epsilon_k0;
  return -2.0 * tau * std::cos(2.0 * std::numbers::pi * l / n);
}

DerivedParams derive(const ModelParams& p, DegeneratePolicy policy) {
  DerivedParams d;
  d.E = 0.5 * (p.epsilon + p.epsilon_k0);
  d.Delta = 0.5 * (p.epsilon - p.epsilon_k0);
  d.Omega = std::hypot(d.Delta, p.V);
  d.lambda1 = 0.5 * (d.E - d.Omega);
  d.lambda2 = 0.5 * (d.E + d.Omega);
  if (p.V == 0.0) {
    if (policy == DegeneratePolicy::reject) throw DegenerateCouplingError();
    d.delta = std::numeric_limits<double>::quiet_NaN();
    if (d.Delta < 0)
      d.theta = 0.0;
    else if (d.Delta > 0)
      d.theta = std::numbers::pi / 2;
    else
      d.theta = std::numbers::pi / 4;
    return d;
  }
  d.delta = (d.Delta + d.Omega) / p.V;
  d.theta = std::atan(d.delta);
  return d;
}

PauliSum build_full_hamiltonian(const ModelParams& p) {
  if (p.n < 1) throw std::invalid_argument("ring needs at least one site");
  const int modes = p.n + 1;
  auto create = [&](int m) { return jw_map(FermionOp::create(m), modes); };
  auto annihilate = [&](int m) { return jw_map(FermionOp::annihilate(m), modes); };

  PauliSum h = p.epsilon * jw_number(0, modes);
  for (int l = 0; l < p.n; ++l) h += p.mode_energy(l) * jw_number(l + 1, modes);
  h += p.V * (create(1) * annihilate(0) + create(0) * annihilate(1));
  return h;
}

PauliSum reduce_two_qubit(const ModelParams& p) {
  PauliSum h = PauliSum::single(0, Axis::Z, p.epsilon / 2);
  h += PauliSum::single(1, Axis::Z, p.epsilon_k0 / 2);
  auto xx = PauliString({{0, Axis::X}, {1, Axis::X}});
  auto yy = PauliString({{0, Axis::Y}, {1, Axis::Y}});
  h += PauliSum(p.V / 2, xx);
  h += PauliSum(p.V / 2, yy);
  return h;
}

OneParticleSpectrum one_particle_spectrum(const ModelParams& p) {
  const double E = 0.5 * (p.epsilon + p.epsilon_k0);
  const double Delta = 0.5 * (p.epsilon - p.epsilon_k0);
  const double Omega = std::hypot(Delta, p.V);
  if (Omega == 0.0) return {{E, E}, {0.5, 0.5}};
  return {{E - Omega, E + Omega}, {(Omega + Delta) / (2 * Omega), (Omega - Delta) / (2 * Omega)}};
}

Complex oracle_G(const ModelParams& p, double t) {
  require_single_site(p, "oracle_G");
  const DenseOperator h = to_dense(build_full_hamiltonian(p), 2);
  const DenseOperator T = exp_hermitian(h, t);
  const DenseOperator b = to_dense(jw_map(FermionOp::annihilate(0), 2), 2);
  const DenseOperator b_dag = b.adjoint();
  const StateVector fs = to_state_vector(jw_state({{1}, 2}), 2);
  require_normalized(fs);
  const DenseOperator b_t = T.adjoint() * b * T;
  return fs.dot(b_t * b_dag * fs);
}

Complex closed_form_G(const ModelParams& p, double t) {
  const double E = 0.5 * (p.epsilon + p.epsilon_k0);
  const double Delta = 0.5 * (p.epsilon - p.epsilon_k0);
  const double Omega = std::hypot(Delta, p.V);
  const double ratio = Omega == 0.0 ? 0.0 : Delta / Omega;
  return std::polar(1.0, -E * t) * Complex(std::cos(Omega * t), -ratio * std::sin(Omega * t));
}

Complex oracle_S(const ModelParams& p, double t, SignalConvention convention) {
  require_single_site(p, "oracle_S");
  const DenseOperator h = to_dense(build_full_hamiltonian(p), 2);
  const StateVector phi = basis_state(2, 0b10);
  require_normalized(phi);
  Complex s = phi.dot(exp_hermitian(h, t) * phi);
  if (convention == SignalConvention::total_energy) s *= std::polar(1.0, -0.5 * (p.epsilon + p.epsilon_k0) * t);
  return s;
}

}  // namespace fanosim
