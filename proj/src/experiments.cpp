#include "fanosim/experiments.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fanosim/networks.hpp"
#include "fanosim/simulator.hpp"
#include "fanosim/verifier.hpp"

namespace fanosim {

namespace {

template <class Build>
ExperimentResult run_experiment(const TimeGrid& grid, const ExperimentOptions& opts, Build build) {
  grid.validate();
  if (!(opts.noise_std >= 0) || !std::isfinite(opts.noise_std)) throw std::invalid_argument("noise std must be >= 0");
  if (opts.mode == RunMode::pulse && !opts.molecule) throw std::invalid_argument("pulse mode requires a molecule");

  const InitialPreparation prep = prepare_initial();
  const PseudoPureState init(prep.state, opts.epsilon_pp);
  const Complex reference = measure_ancilla(init);

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  ExperimentResult r;
  r.mode = opts.mode;
  for (double t : grid.points()) {
    const Circuit c = hoist_time_dependence(build(t));
    Complex value;
    if (opts.mode == RunMode::ideal) {
      value = measure_ancilla(run(c, init)) / reference;
    } else {
      const Molecule& m = *opts.molecule;
      const PulseSequence seq = compile(c, m, opts.compile);
      const Verification v = verify(seq, m, c, prep.state);
      const int a = *m.spin_for_qubit("a");
      // pseudo-pure scaling acts on the pure part only
      value = opts.epsilon_pp * measure_ancilla(v.final_state, a) / reference;
      if (opts.dephasing) value *= std::exp(-seq.total_duration() / m.spins()[a].t2star_s);
    }
    double sre = 0, sim = 0;
    if (opts.noise_std > 0) {
      const double dre = opts.noise_std * noise(rng);
      const double dim = opts.noise_std * noise(rng);
      value += Complex(dre, dim);
      sre = sim = opts.noise_std;
    }
    r.push_back(t, value, sre, sim);
  }
  return r;
}

}  // namespace

ExperimentResult run_correlation_experiment(const ModelParams& p, const TimeGrid& grid, const ExperimentOptions& opts) {
  const DerivedParams d = derive(p, DegeneratePolicy::limit);
  NetworkOptions no;
  no.prepare_ancilla = false;
  no.convention = opts.convention;
  return run_experiment(grid, opts, [&](double t) { return build_correlation_network(t, d, no); });
}

ExperimentResult run_spectrum_experiment(const ModelParams& p, const TimeGrid& grid, const ExperimentOptions& opts) {
  const DerivedParams d = derive(p, DegeneratePolicy::limit);
  NetworkOptions no;
  no.prepare_ancilla = false;
  no.convention = opts.convention;
  return run_experiment(grid, opts, [&](double t) { return build_spectrum_network(t, p, d, no); });
}

}  // namespace fanosim
