#include "fanosim/compiler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fanosim {

using std::numbers::pi;

namespace {

double wrap(double a) {
  double r = std::remainder(a, 2 * pi);
  return r <= -pi ? r + 2 * pi : r;
}

bool relevant_pair(const PulseSequence& seq, int u, int v) { return seq.is_active(u) || seq.is_active(v); }

struct Assignment {
  std::vector<int> code;  // per spin, -1 for the target pair
  int levels = 0;
};

// Greedy Walsh-code colouring of the spins other than j, k.
Assignment assign_codes(const PulseSequence& seq, const Molecule& m, int j, int k, const CompileOptions& opts) {
  const int n = m.size();
  const double thr = opts.coupling_threshold_hz;
  auto edge = [&](int u, int v) { return std::abs(m.coupling(u, v)) > thr && relevant_pair(seq, u, v); };

  std::vector<bool> needs_flip(n, false), has_edge(n, false);
  for (int u = 0; u < n; ++u) {
    if (u == j || u == k) continue;
    needs_flip[u] = edge(u, j) || edge(u, k);
    for (int v = 0; v < n; ++v)
      if (v != u && v != j && v != k && edge(u, v)) has_edge[u] = true;
  }

  Assignment best;
  for (int levels = 0; levels <= std::max(0, opts.max_refocus_levels); ++levels) {
    const int codes = 1 << levels;
    Assignment a{std::vector<int>(n, 0), levels};
    a.code[j] = a.code[k] = -1;
    bool clean = true;
    for (int u = 0; u < n; ++u) {
      if (u == j || u == k) continue;
      if (!needs_flip[u] && !has_edge[u]) continue;
      double best_cost = std::numeric_limits<double>::infinity();
      int best_code = needs_flip[u] && codes > 1 ? 1 : 0;
      for (int c = needs_flip[u] ? 1 : 0; c < codes; ++c) {
        double cost = 0;
        for (int v = 0; v < u; ++v)
          if (v != j && v != k && a.code[v] == c && edge(u, v)) cost += m.coupling(u, v) * m.coupling(u, v);
        if (cost < best_cost) best_cost = cost, best_code = c;
        if (cost == 0) break;
      }
      if (needs_flip[u] && codes == 1) {
        clean = false;
        best_code = 0;
      } else if (best_cost > 0) {
        clean = false;
      }
      a.code[u] = best_code;
    }
    best = a;
    if (clean) break;
  }
  return best;
}

struct Emitter {
  PulseSequence& seq;
  const Molecule& m;
  const CompileOptions& opts;

  void pulse(int spin, double axis, double angle, bool refocusing) {
    Pulse p;
    p.spin = spin;
    p.axis = wrap(axis);
    p.angle = angle;
    p.duration = opts.pulse_duration;
    p.refocusing = refocusing;
    seq.events.emplace_back(p);
  }

  void rotation(int spin, Axis axis, double angle) {
    if (angle == 0.0) return;
    double phase = axis == Axis::X ? 0.0 : pi / 2;
    if (angle < 0) phase += pi;
    pulse(spin, phase, std::abs(angle), false);
  }

  void ising(int j, int k, double omega) {
    const int n = m.size();
    const double J = m.coupling(j, k);
    if (std::abs(J) < 1e-12)
      throw CompileError("spins " + m.spins()[j].label + " and " + m.spins()[k].label + " are not coupled");
    omega = wrap(omega);
    const double target = omega / (pi * J);
    const double D = opts.ising_block_duration > 0 ? opts.ising_block_duration : std::abs(target);
    if (D + 1e-15 < std::abs(target)) {
      std::ostringstream os;
      os << "Ising angle " << omega << " on " << m.spins()[j].label << "-" << m.spins()[k].label << " needs a block of "
         << std::abs(target) << " s, longer than " << D << " s";
      throw CompileError(os.str());
    }
    if (D == 0.0) return;
    const double half_len[2] = {std::max(0.0, (D + target) / 2), std::max(0.0, (D - target) / 2)};

    IsingBlock blk{j, k, omega, D, {}};
    auto base = [&](int half) {
      std::vector<int> s(n, 1);
      if (half == 1) s[j] = -1;
      return s;
    };

    if (opts.scheme == RefocusScheme::full) {
      Assignment a = assign_codes(seq, m, j, k, opts);
      const int sub = 1 << a.levels;
      for (int half = 0; half < 2; ++half) {
        if (half_len[half] <= 0) continue;
        for (int i = 0; i < sub; ++i) {
          auto s = base(half);
          for (int u = 0; u < n; ++u)
            if (a.code[u] > 0 && (std::popcount(static_cast<unsigned>(a.code[u] & i)) & 1)) s[u] = -1;
          blk.segments.push_back({half, half_len[half] / sub, s});
        }
      }
    } else if (opts.scheme == RefocusScheme::economical) {
      std::vector<bool> flip(n, false);
      for (int u = 0; u < n; ++u)
        if (u != j && u != k)
          for (int v = 0; v < n; ++v)
            if (v != u && std::abs(m.coupling(u, v)) > opts.coupling_threshold_hz && relevant_pair(seq, u, v)) flip[u] = true;
      const int longer = half_len[0] >= half_len[1] ? 0 : 1;
      for (int half = 0; half < 2; ++half) {
        if (half_len[half] <= 0) continue;
        const int parts = half == longer ? 2 : 1;
        for (int i = 0; i < parts; ++i) {
          auto s = base(half);
          const bool flipped = half != longer || i == 1;
          for (int u = 0; u < n; ++u)
            if (flip[u] && flipped) s[u] = -1;
          blk.segments.push_back({half, half_len[half] / parts, s});
        }
      }
    } else {
      for (int half = 0; half < 2; ++half)
        if (half_len[half] > 0) blk.segments.push_back({half, half_len[half], base(half)});
    }

    const int b = static_cast<int>(seq.blocks.size());
    std::vector<int> cur(n, 1);
    for (std::size_t g = 0; g < blk.segments.size(); ++g) {
      const auto& seg = blk.segments[g];
      for (int s = 0; s < n; ++s)
        if (seg.signs[s] != cur[s]) {
          pulse(s, 0.0, pi, true);
          cur[s] = seg.signs[s];
        }
      seq.events.emplace_back(Delay{seg.duration, b, static_cast<int>(g)});
    }
    for (int s = 0; s < n; ++s)
      if (cur[s] != 1) pulse(s, 0.0, pi, true);
    seq.blocks.push_back(std::move(blk));
  }
};

}  // namespace

PulseSequence compile(const Circuit& c, const Molecule& m, const CompileOptions& opts) {
  if (!(opts.pulse_duration > 0)) throw CompileError("pulse duration must be > 0");
  if (opts.ising_block_duration < 0) throw CompileError("Ising block duration must be >= 0");
  PulseSequence seq;
  seq.model = opts.pulse_model;
  for (const auto& s : m.spins()) seq.spin_labels.push_back(s.label);
  std::vector<int> spin_of(c.n_qubits());
  for (int q = 0; q < c.n_qubits(); ++q) {
    auto s = m.spin_for_qubit(c.labels()[q]);
    if (!s) throw CompileError("circuit qubit '" + c.labels()[q] + "' has no spin in the molecule");
    for (int p = 0; p < q; ++p)
      if (spin_of[p] == *s) throw CompileError("two circuit qubits map to spin " + m.spins()[*s].label);
    spin_of[q] = *s;
    seq.qubit_labels.push_back(c.labels()[q]);
    seq.qubit_spins.push_back(*s);
  }

  Emitter emit{seq, m, opts};
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::rot_x: emit.rotation(spin_of[g.q0], Axis::X, g.angle); break;
      case GateKind::rot_y: emit.rotation(spin_of[g.q0], Axis::Y, g.angle); break;
      case GateKind::rot_z: seq.events.emplace_back(VirtualZ{spin_of[g.q0], g.angle}); break;
      case GateKind::ising_zz: emit.ising(spin_of[g.q0], spin_of[g.q1], g.angle); break;
    }
  }
  lower_phases(seq, m);
  seq.residual_error = coupling_objective(seq, m);
  return seq;
}

void lower_phases(PulseSequence& seq, const Molecule& m) {
  const int n = m.size();
  if (seq.n_spins() != n) throw std::invalid_argument("sequence and molecule differ in spin count");
  std::vector<double> frame(n, 0.0);
  long updates = 0;
  auto drift = [&](int skip, double dur) {
    for (int s = 0; s < n; ++s) {
      if (s == skip) continue;
      frame[s] = wrap(frame[s] - 2 * pi * m.spins()[s].shift_hz * dur);
      ++updates;
    }
  };
  for (auto& e : seq.events) {
    if (auto* p = std::get_if<Pulse>(&e)) {
      p->phase = wrap(p->axis - frame[p->spin]);
      p->amplitude = p->duration > 0 ? p->angle / (2 * p->duration) : 0.0;
      if (seq.model == PulseModel::finite) drift(p->spin, p->duration);
    } else if (auto* d = std::get_if<Delay>(&e)) {
      drift(-1, d->duration);
    } else {
      auto& z = std::get<VirtualZ>(e);
      frame[z.spin] = wrap(frame[z.spin] + z.angle);
      ++updates;
    }
  }
  seq.frame = frame;
  seq.frame_updates = updates;
}

namespace {

struct PairTerm {
  int u, v;
  double J;
};

std::vector<PairTerm> unwanted_pairs(const PulseSequence& seq, const Molecule& m, const IsingBlock& blk) {
  std::vector<PairTerm> out;
  for (int u = 0; u < m.size(); ++u)
    for (int v = u + 1; v < m.size(); ++v) {
      if ((u == blk.spin_j && v == blk.spin_k) || (u == blk.spin_k && v == blk.spin_j)) continue;
      if (m.coupling(u, v) == 0.0 || !relevant_pair(seq, u, v)) continue;
      out.push_back({u, v, m.coupling(u, v)});
    }
  return out;
}

double block_objective(const IsingBlock& blk, const std::vector<PairTerm>& pairs) {
  double total = 0;
  for (const auto& p : pairs) {
    double exposure = 0;
    for (const auto& seg : blk.segments) exposure += seg.signs[p.u] * seg.signs[p.v] * seg.duration;
    const double angle = pi * p.J * exposure;
    total += angle * angle;
  }
  return total;
}

}  // namespace

double coupling_objective(const PulseSequence& seq, const Molecule& m) {
  double total = 0;
  for (const auto& blk : seq.blocks) total += block_objective(blk, unwanted_pairs(seq, m, blk));
  return total;
}

OptimizeResult optimize_delays(const PulseSequence& seq, const Molecule& m, int max_sweeps) {
  OptimizeResult r{seq, 0.0, 0.0};
  r.objective_before = coupling_objective(seq, m);
  for (auto& blk : r.sequence.blocks) {
    const auto pairs = unwanted_pairs(r.sequence, m, blk);
    if (pairs.empty()) continue;
    const int n_seg = static_cast<int>(blk.segments.size());
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      bool improved = false;
      for (int p = 0; p < n_seg; ++p)
        for (int q = p + 1; q < n_seg; ++q) {
          auto& sp = blk.segments[p];
          auto& sq = blk.segments[q];
          if (sp.half != sq.half) continue;
          // residual angles are linear in x when x moves from q to p
          double num = 0, den = 0;
          for (const auto& pr : pairs) {
            double exposure = 0;
            for (const auto& seg : blk.segments) exposure += seg.signs[pr.u] * seg.signs[pr.v] * seg.duration;
            const double r0 = pi * pr.J * exposure;
            const double slope = pi * pr.J * (sp.signs[pr.u] * sp.signs[pr.v] - sq.signs[pr.u] * sq.signs[pr.v]);
            num += r0 * slope;
            den += slope * slope;
          }
          if (den == 0.0) continue;
          const double x = std::clamp(-num / den, -sp.duration, sq.duration);
          const double gain = -(2 * num * x + den * x * x);
          if (gain > 1e-24 && std::abs(x) > 1e-15) {
            sp.duration += x;
            sq.duration -= x;
            if (sp.duration < 0) sp.duration = 0;
            if (sq.duration < 0) sq.duration = 0;
            improved = true;
          }
        }
      if (!improved) break;
    }
  }
  for (auto& e : r.sequence.events)
    if (auto* d = std::get_if<Delay>(&e); d && d->block >= 0)
      d->duration = r.sequence.blocks[d->block].segments[d->segment].duration;
  lower_phases(r.sequence, m);
  r.objective_after = coupling_objective(r.sequence, m);
  r.sequence.residual_error = r.objective_after;
  if (r.objective_after > r.objective_before) {
    // numerical noise only; keep the input
    r.sequence = seq;
    r.objective_after = r.objective_before;
  }
  return r;
}

BudgetReport budget_check(const PulseSequence& seq, const Molecule& m) {
  BudgetReport r;
  r.pulses = seq.pulse_count();
  r.ising_blocks = static_cast<int>(seq.blocks.size());
  r.duration = seq.total_duration();
  r.min_t2star = m.size() > 0 ? m.min_t2star() : 0.0;
  std::ostringstream os;
  if (r.pulses > kPulseBudget) r.warnings.push_back(std::to_string(r.pulses) + " pulses exceed the budget of " + std::to_string(kPulseBudget));
  if (r.ising_blocks > kIsingBudget)
    r.warnings.push_back(std::to_string(r.ising_blocks) + " Ising blocks exceed the budget of " + std::to_string(kIsingBudget));
  if (m.size() > 0 && r.duration > r.min_t2star) {
    os << "sequence duration " << r.duration << " s exceeds the shortest T2* (" << r.min_t2star << " s)";
    r.warnings.push_back(os.str());
  }
  return r;
}

}  // namespace fanosim
