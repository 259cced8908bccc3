// Acceptance checks 1-9. One PASS/FAIL line per criterion.
//
// Exit status: 0 once every criterion has been evaluated, whatever the verdicts;
// with --strict, the number of failed criteria. A report copy goes to --report.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "fanosim/compiler.hpp"
#include "fanosim/experiments.hpp"
#include "fanosim/io.hpp"
#include "fanosim/jordan_wigner.hpp"
#include "fanosim/networks.hpp"
#include "fanosim/simulator.hpp"
#include "fanosim/spectral.hpp"
#include "fanosim/verifier.hpp"
#include "helpers.hpp"

using namespace fanosim;
using std::numbers::pi;

namespace {

std::ostringstream report;
int failures = 0;

void line(int id, bool pass, const std::string& detail) {
  const std::string s = std::string(pass ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + ": " + detail;
  std::cout << s << "\n";
  report << s << "\n";
  if (!pass) ++failures;
}

void note(const std::string& s) {
  std::cout << "  " << s << "\n";
  report << "  " << s << "\n";
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string fixed(double v, int d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", d, v);
  return buf;
}

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Molecule fixture(const std::string& name) {
  return parse_molecule(read_file(std::string(FANOSIM_DATA_DIR) + "/molecules/" + name));
}

const ModelParams kSpectrumSet{.epsilon = -8, .epsilon_k0 = -2, .V = 0.5};
const TimeGrid kSpectrumGrid{0.1, 0.1, 128};

void criterion1() {
  double err = 0;
  const double secs = seconds([&] {
    for (auto [p, steps] : {std::pair{ModelParams{.epsilon = -8, .epsilon_k0 = -2, .V = 4}, 15},
                            std::pair{ModelParams{.epsilon = 0, .epsilon_k0 = -2, .V = 4}, 31}}) {
      const auto r = run_correlation_experiment(p, {0.1, 0.1, steps});
      for (std::size_t i = 0; i < r.size(); ++i) err = std::max(err, std::abs(r.values[i] - oracle_G(p, r.t[i])));
    }
  });
  line(1, err < 1e-9 && secs < 1.0,
       "correlation vs oracle, max |error| " + sci(err) + " over 15 + 31 points, " + fixed(secs * 1e3, 1) + " ms");
}

void criterion2() {
  double err = 0;
  const double secs = seconds([&] {
    const auto r = run_spectrum_experiment(kSpectrumSet, kSpectrumGrid);
    for (std::size_t i = 0; i < r.size(); ++i) err = std::max(err, std::abs(r.values[i] - oracle_S(kSpectrumSet, r.t[i])));
  });
  line(2, err < 1e-9 && secs < 1.0,
       "spectrum signal vs oracle, max |error| " + sci(err) + " over 128 points, " + fixed(secs * 1e3, 1) + " ms");
}

DenseOperator controlled(const Eigen::Matrix2cd& if0, const Eigen::Matrix2cd& if1) {
  const Eigen::Matrix2cd p0 = (Eigen::Matrix2cd() << 1, 0, 0, 0).finished();
  const Eigen::Matrix2cd p1 = (Eigen::Matrix2cd() << 0, 0, 0, 1).finished();
  return kron(p0, if0) + kron(p1, if1);
}

void criterion3() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10.0, 10.0), ut(-5.0, 5.0);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const ModelParams p{.epsilon = u(rng), .epsilon_k0 = u(rng), .V = u(rng)};
    const double t = ut(rng);
    const DenseOperator exact = exp_hermitian(to_dense(reduce_two_qubit(p), 2), t);
    worst = std::max(worst, phase_distance(dense(build_evolution(t, derive(p))), exact));
  }
  const Eigen::Matrix2cd x = pauli_matrix(Axis::X), id = Eigen::Matrix2cd::Identity();
  const double a = phase_distance(dense(build_cnot_a0()), controlled(x, id));
  const double b = phase_distance(dense(build_cnot_b1()), controlled(id, x));
  line(3, worst < 1e-10 && a < 1e-10 && b < 1e-10,
       "evolution decomposition worst " + sci(worst) + " over 50 draws, CNOT(a=0) " + sci(a) + ", CNOT(a=1) " + sci(b));
}

struct PeakCheck {
  bool pass = false;
  std::vector<Peak> peaks;
};

PeakCheck two_peaks(const ExperimentResult& r) {
  const double lambda[2] = {-8.0414, -1.9586};
  PeakCheck c;
  c.peaks = find_peaks(dft(r), 2).peaks;
  if (c.peaks.size() < 2) return c;
  bool hit[2] = {false, false};
  for (const auto& p : c.peaks)
    for (int k = 0; k < 2; ++k)
      if (std::abs(p.frequency - lambda[k]) < 0.5) hit[k] = true;
  c.pass = hit[0] && hit[1];
  return c;
}

std::string describe(const std::vector<Peak>& peaks) {
  std::string s;
  for (const auto& p : peaks) s += (s.empty() ? "" : ", ") + fixed(p.frequency, 4) + " (w " + fixed(p.weight, 4) + ")";
  return s;
}

void criterion4() {
  // eigenvalues (E -+ Omega) of the one-particle sector and the overlaps of |1 0>
  const auto sp = one_particle_spectrum(kSpectrumSet);
  PeakCheck noisy;
  bool weights_ok = false;
  std::string weights;
  const double secs = seconds([&] {
    ExperimentOptions o;
    o.noise_std = 0.04;
    o.seed = kDefaultSeed;
    noisy = two_peaks(run_spectrum_experiment(kSpectrumSet, kSpectrumGrid, o));

    const auto clean = find_peaks(dft(run_spectrum_experiment(kSpectrumSet, kSpectrumGrid)), 2).peaks;
    if (clean.size() == 2) {
      // match each eigenvalue to the nearest clean peak
      double w[2] = {0, 0};
      for (int k = 0; k < 2; ++k) {
        double best = 1e9;
        for (const auto& p : clean)
          if (std::abs(p.frequency - sp.energies[k]) < best) best = std::abs(p.frequency - sp.energies[k]), w[k] = p.weight;
      }
      weights_ok = std::abs(w[0] - 0.0068) < 0.05 && std::abs(w[1] - 0.9932) < 0.05;
      weights = fixed(w[0], 4) + " / " + fixed(w[1], 4);
    }
  });
  line(4, noisy.pass && weights_ok && secs < 5.0,
       "seed 42 peaks [" + describe(noisy.peaks) + "] vs -8.0414, -1.9586 within 0.5: " + (noisy.pass ? "yes" : "no") +
           "; noiseless weights " + weights + " vs 0.0068 / 0.9932: " + (weights_ok ? "yes" : "no") + "; " +
           fixed(secs * 1e3, 1) + " ms");
  note("eigenvalues " + fixed(sp.energies[0], 4) + ", " + fixed(sp.energies[1], 4) + "; overlaps " +
       fixed(sp.weights[0], 4) + ", " + fixed(sp.weights[1], 4));

  // how often the weak peak survives the noise, over seeds 0..999
  int ok = 0, dominant = 0, weak_rank_sum = 0, weak_found = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    ExperimentOptions o;
    o.noise_std = 0.04;
    o.seed = seed;
    const auto r = run_spectrum_experiment(kSpectrumSet, kSpectrumGrid, o);
    ok += two_peaks(r).pass;
    const auto all = find_peaks(dft(r), 128).peaks;
    dominant += !all.empty() && std::abs(all[0].frequency - sp.energies[1]) < 0.5;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (std::abs(all[i].frequency - sp.energies[0]) < 0.5) {
        weak_rank_sum += static_cast<int>(i) + 1;
        ++weak_found;
        break;
      }
  }
  note("seeds 0..999: dominant peak recovered in " + std::to_string(dominant) + "/1000 runs, both peaks in " +
       std::to_string(ok) + "/1000; mean rank of the weak peak " +
       fixed(weak_found ? static_cast<double>(weak_rank_sum) / weak_found : 0.0, 1) + " among local maxima");
  note("weak peak weight " + fixed(sp.weights[0], 4) + " vs per-bin noise std " + fixed(propagate_errors(0.04, 128), 4));
}

void criterion5() {
  const double v = propagate_errors(0.04, 128);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", v);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ue(1e-4, 1.0);
  std::uniform_int_distribution<int> um(1, 4096);
  bool exact = true;
  for (int i = 0; i < 20; ++i) {
    const double e = ue(rng);
    const int m = um(rng);
    exact &= propagate_errors(e, m) == e / std::sqrt(static_cast<double>(m));
  }
  line(5, std::string(buf) == "0.0035" && exact,
       "propagate_errors(0.04, 128) = " + fixed(v, 6) + " -> " + buf + "; E_S/sqrt(M) exact on 20 draws: " +
           (exact ? "yes" : "no"));
}

void criterion6() {
  double worst = 0;
  for (int n = 1; n <= 5; ++n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    std::vector<DenseOperator> a(n), ad(n);
    for (int m = 0; m < n; ++m) {
      a[m] = to_dense(jw_map(FermionOp::annihilate(m), n), n);
      ad[m] = to_dense(jw_map(FermionOp::create(m), n), n);
    }
    for (int i = 0; i < n; ++i) {
      worst = std::max(worst, (a[i] * a[i]).norm());
      worst = std::max(worst, (ad[i] * ad[i]).norm());
      for (int j = 0; j < n; ++j) {
        const DenseOperator delta = (i == j ? 1.0 : 0.0) * DenseOperator::Identity(dim, dim);
        worst = std::max(worst, (a[i] * ad[j] + ad[j] * a[i] - delta).norm());
        worst = std::max(worst, (a[i] * a[j] + a[j] * a[i]).norm());
        worst = std::max(worst, (ad[i] * ad[j] + ad[j] * ad[i]).norm());
      }
    }
  }
  int states = 0, mismatches = 0;
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
      OccupationState occ{{}, n};
      for (int m = 0; m < n; ++m)
        if (mask & (1u << m)) occ.occupied.insert(m);
      for (auto order : {CreationOrder::ascending, CreationOrder::descending}) {
        StateVector psi = basis_state(n, (std::uint64_t{1} << n) - 1);  // vacuum: all spins down
        std::vector<int> modes(occ.occupied.begin(), occ.occupied.end());
        if (order == CreationOrder::descending) std::reverse(modes.begin(), modes.end());
        for (int m : modes) psi = to_dense(jw_map(FermionOp::create(m), n), n) * psi;
        const StateVector mapped = to_state_vector(jw_state(occ, order), n);
        ++states;
        if ((psi - mapped).norm() > 1e-12) ++mismatches;
      }
    }
  }
  line(6, worst < 1e-12 && mismatches == 0,
       "anticommutators and nilpotency up to 5 modes, worst " + sci(worst) + "; jw_state matched " +
           std::to_string(states - mismatches) + "/" + std::to_string(states) + " operator-built states");
}

void criterion7() {
  std::mt19937_64 rng(7);
  double worst = 1.0;
  int runs = 0;
  for (auto [name, labels] : {std::pair{"two_spin.mol", std::vector<std::string>{"1", "2"}},
                              std::pair{"three_spin.mol", std::vector<std::string>{"a", "1", "2"}}}) {
    const Molecule m = fixture(name);
    const int n = static_cast<int>(labels.size());
    for (int trial = 0; trial < 20; ++trial) {
      const Circuit raw = testing_helpers::random_circuit(n, 16, rng);
      Circuit c(labels);
      for (const auto& g : raw.gates()) c.add(g);
      const auto seq = compile(c, m);
      worst = std::min(worst, verify(seq, m, c, testing_helpers::random_state(n, rng)).fidelity);
      ++runs;
    }
  }
  // the experiment networks themselves
  const Molecule m3 = fixture("three_spin.mol");
  NetworkOptions no;
  no.prepare_ancilla = false;
  const auto d = derive(kSpectrumSet);
  const auto init = prepare_initial().state;
  bool same_durations = true;
  std::vector<double> ref;
  for (int j = 1; j <= 128; ++j) {
    const Circuit c = hoist_time_dependence(build_spectrum_network(0.1 * j, kSpectrumSet, d, no));
    const auto seq = compile(c, m3);
    std::vector<double> durations;
    for (const auto& e : seq.events) {
      if (const auto* p = std::get_if<Pulse>(&e)) durations.push_back(-p->duration);
      if (const auto* dl = std::get_if<Delay>(&e)) durations.push_back(dl->duration);
    }
    if (j == 1) ref = durations;
    same_durations &= durations == ref;
    if (j % 16 == 0) {
      worst = std::min(worst, verify(seq, m3, c, init).fidelity);
      ++runs;
    }
  }
  line(7, worst >= 1 - 1e-8 && same_durations,
       "worst fidelity " + fixed(worst, 12) + " over " + std::to_string(runs) +
           " compiles (full refocusing); hoisted grid durations identical over 128 t: " + (same_durations ? "yes" : "no"));
}

void criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> nq(1, 4);
  std::uniform_real_distribution<double> ue(1e-6, 1.0);
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = nq(rng);
    const Circuit c = testing_helpers::random_circuit(n, 15, rng);
    const StateVector psi = testing_helpers::random_state(n, rng);
    const double eps = ue(rng);
    const PauliSum obs = testing_helpers::random_hermitian(n, 4, rng);
    PauliSum traceless;
    for (const auto& t : obs.terms())
      if (!t.string.factors().empty()) traceless += PauliSum(t.coefficient, t.string);
    const PseudoPureState rho(psi, eps);
    // dense density-matrix path against eps times the pure-state value
    const Complex mixed = expectation(DenseOperator(evolve_density(c, rho.density())), traceless);
    const Complex pure = expectation(run(c, psi), traceless);
    worst = std::max(worst, std::abs(mixed - eps * pure));
  }
  line(8, worst < 1e-12, "traceless expectations scale by eps_pp on 20 random circuits, worst error " + sci(worst));
}

void criterion9() {
  ExperimentOptions o;
  o.noise_std = 0.04;
  o.seed = kDefaultSeed;
  const auto noisy = run_spectrum_experiment(kSpectrumSet, kSpectrumGrid, o);
  const auto again = run_spectrum_experiment(kSpectrumSet, kSpectrumGrid, o);
  const auto clean = run_spectrum_experiment(kSpectrumSet, kSpectrumGrid);
  const Spectrum sn = dft(noisy), sc = dft(clean);
  double ss = 0;
  for (std::size_t l = 0; l < sn.amplitude.size(); ++l) ss += std::norm(sn.amplitude[l] - sc.amplitude[l]) / 2;
  const double bin_noise = std::sqrt(ss / sn.amplitude.size());
  const double predicted = sn.std.front();
  const auto top = find_peaks(sn, 1).peaks;
  const bool reproducible = to_csv(noisy) == to_csv(again);
  const bool bars = std::all_of(noisy.std_re.begin(), noisy.std_re.end(), [](double s) { return s == 0.04; });
  const bool main_peak = !top.empty() && std::abs(top[0].frequency - (-1.9586)) < 0.5;
  const bool svg = svg_spectrum(sn, top, "S").rfind("<svg", 0) == 0;
  const bool consistent = std::abs(bin_noise - predicted) < 0.3 * predicted;
  line(9, reproducible && bars && main_peak && svg && consistent,
       "seeded noise: reproducible " + std::string(reproducible ? "yes" : "no") + ", error bars 0.04 " +
           (bars ? "yes" : "no") + ", per-bin deviation " + fixed(bin_noise, 4) + " vs predicted " +
           fixed(predicted, 4) + ", dominant peak " + (top.empty() ? "none" : fixed(top[0].frequency, 4)));
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::string report_path;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0) strict = true;
    else if (std::strcmp(argv[i], "--report") == 0 && i + 1 < argc) report_path = argv[++i];
  }
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
  } catch (const std::exception& e) {
    std::cout << "acceptance run aborted: " << e.what() << "\n";
    return 100;
  }
  const std::string summary = std::to_string(9 - failures) + "/9 criteria pass";
  std::cout << summary << "\n";
  report << summary << "\n";
  if (!report_path.empty()) write_file_atomic(report_path, report.str());
  return strict ? failures : 0;
}
