#include "fanosim/networks.hpp"

#include <numbers>
#include <stdexcept>

namespace fanosim {

namespace {
constexpr double half_pi = std::numbers::pi / 2;
}

Circuit build_U(double theta) {
  Circuit u({"1", "2"});
  u.ry("2", -half_pi)
      .rx("1", half_pi)
      .zz("1", "2", -theta)
      .ry("2", half_pi)
      .rx("2", half_pi)
      .rx("1", -half_pi)
      .ry("1", -half_pi)
      .zz("1", "2", theta)
      .ry("1", half_pi)
      .rx("2", -half_pi);
  return u;
}

Circuit build_evolution(double t, const DerivedParams& d) {
  Circuit u = build_U(d.theta);
  Circuit c({"1", "2"});
  c.append(u.inverse());
  c.rz("1", 2 * d.lambda1 * t, true);
  c.rz("2", 2 * d.lambda2 * t, true);
  c.append(u);
  return c;
}

Circuit build_cnot(const std::string& control, const std::string& target, int control_value) {
  if (control_value != 0 && control_value != 1) throw std::invalid_argument("control value must be 0 or 1");
  const double s = control_value == 0 ? 1.0 : -1.0;
  Circuit c({control, target});
  c.rx(target, -half_pi)
      .zz(target, control, -s * half_pi)
      .ry(target, half_pi)
      .zz(target, control, s * half_pi)
      .rz(control, s * half_pi);
  return c;
}

Circuit build_cnot_a0() { return build_cnot("a", "1", 0); }
Circuit build_cnot_b1() { return build_cnot("a", "1", 1); }

Circuit build_correlation_network(double t, const DerivedParams& d, const NetworkOptions& opts) {
  Circuit c({"a", "1", "2"});
  if (opts.prepare_ancilla) c.ry("a", half_pi);
  c.append(build_cnot_b1());
  c.append(build_evolution(t, d));
  c.append(build_cnot_a0());
  return c;
}

Circuit build_spectrum_network(double t, const ModelParams& p, const DerivedParams& d,
                               const NetworkOptions& opts) {
  const double constant = opts.convention == SignalConvention::consistent ? d.E : p.epsilon + p.epsilon_k0;
  Circuit u = build_U(d.theta);
  Circuit c({"a", "1", "2"});
  if (opts.prepare_ancilla) c.ry("a", half_pi);
  c.append(u.inverse());
  // exp(i lambda Z_j Z_a t/2) = R_zz(-lambda t)
  c.zz("a", "1", -d.lambda1 * t, true);
  c.zz("a", "2", -d.lambda2 * t, true);
  c.append(u);
  c.rz("a", -constant * t, true);
  return c;
}

Circuit hoist_time_dependence(const Circuit& c) {
  Circuit out(c.labels());
  for (const Gate& g : c.gates()) {
    if (!g.time_dependent || g.kind == GateKind::rot_z) {
      out.add(g);
      continue;
    }
    if (g.kind != GateKind::ising_zz)
      throw std::invalid_argument("time-dependent " + std::string(gate_name(g.kind)) + " gate cannot be hoisted");
    const int k = g.q1;
    out.add({GateKind::rot_x, -half_pi, k});
    out.add({GateKind::ising_zz, -half_pi, g.q0, g.q1});
    out.add({GateKind::rot_y, -half_pi, k});
    out.add({GateKind::rot_z, g.angle, k, -1, true});
    out.add({GateKind::rot_y, half_pi, k});
    out.add({GateKind::ising_zz, half_pi, g.q0, g.q1});
    out.add({GateKind::rot_x, half_pi, k});
  }
  return out;
}

Circuit build_initialization() {
  Circuit c({"a", "1", "2"});
  c.append(build_cnot("a", "1", 1));
  c.append(build_cnot("1", "a", 1));
  c.append(build_cnot("a", "1", 1));
  c.ry("a", half_pi);
  c.rx("2", std::numbers::pi);
  return c;
}

}  // namespace fanosim
