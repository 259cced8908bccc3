#include "fanosim/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "fanosim/compiler.hpp"
#include "fanosim/experiments.hpp"
#include "fanosim/format.hpp"
#include "fanosim/io.hpp"
#include "fanosim/jordan_wigner.hpp"
#include "fanosim/networks.hpp"
#include "fanosim/simulator.hpp"
#include "fanosim/spectral.hpp"
#include "fanosim/verifier.hpp"

namespace fanosim {

namespace {

struct ExperimentFlags {
  ModelParams model;
  TimeGrid grid;
  std::string mode = "ideal";
  std::string molecule;
  double noise_std = 0.0;
  std::optional<std::uint64_t> seed;
  double epsilon_pp = 1.0;
  std::string convention = "consistent";
  std::string out;
  std::string svg;
  bool oracle = false;
  bool dephasing = false;
};

struct CompileFlags {
  double pulse_duration = 1e-3;
  std::string pulse_model = "instantaneous";
  std::string scheme = "full";
  double block_duration = 0.0;
  double threshold = 1.0;
  int levels = 3;
  bool optimize = false;
};

const std::map<std::string, SignalConvention> kConventions{{"consistent", SignalConvention::consistent},
                                                           {"total_energy", SignalConvention::total_energy}};
const std::map<std::string, RefocusScheme> kSchemes{
    {"full", RefocusScheme::full}, {"economical", RefocusScheme::economical}, {"none", RefocusScheme::none}};
const std::map<std::string, PulseModel> kPulseModels{{"instantaneous", PulseModel::instantaneous},
                                                     {"finite", PulseModel::finite}};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& f) {
  cmd->add_option("--eps", f.model.epsilon, "impurity energy")->capture_default_str();
  cmd->add_option("--eps-k0", f.model.epsilon_k0, "conduction mode energy")->capture_default_str();
  cmd->add_option("--v", f.model.V, "hybridization")->capture_default_str();
  cmd->add_option("--t-start", f.grid.t_start, "first time point")->capture_default_str();
  cmd->add_option("--dt", f.grid.dt, "time step")->capture_default_str();
  cmd->add_option("--steps", f.grid.steps, "number of time points")->capture_default_str();
  cmd->add_option("--mode", f.mode, "ideal or pulse")->check(CLI::IsMember({"ideal", "pulse"}))->capture_default_str();
  cmd->add_option("--molecule", f.molecule, "molecule file (pulse mode)");
  cmd->add_option("--noise-std", f.noise_std, "Gaussian noise on re and im")->capture_default_str();
  cmd->add_option("--seed", f.seed, "noise seed");
  cmd->add_option("--epsilon-pp", f.epsilon_pp, "pseudo-pure purity")->capture_default_str();
  cmd->add_option("--convention", f.convention, "S(t) phase convention")
      ->check(CLI::IsMember({"consistent", "total_energy"}))
      ->capture_default_str();
  cmd->add_flag("--dephasing", f.dephasing, "damp pulse-mode coherence by exp(-T/T2*)");
  cmd->add_option("--out", f.out, "signal CSV (stdout when omitted)");
  cmd->add_option("--svg", f.svg, "signal plot");
  cmd->add_flag("--oracle", f.oracle, "write the exact-diagonalization signal instead");
}

void add_compile_flags(CLI::App* cmd, CompileFlags& f) {
  cmd->add_option("--pulse-duration", f.pulse_duration, "RF pulse length (s)")->capture_default_str();
  cmd->add_option("--pulse-model", f.pulse_model, "instantaneous or finite")
      ->check(CLI::IsMember({"instantaneous", "finite"}))
      ->capture_default_str();
  cmd->add_option("--scheme", f.scheme, "refocusing: full, economical or none")
      ->check(CLI::IsMember({"full", "economical", "none"}))
      ->capture_default_str();
  cmd->add_option("--block-duration", f.block_duration, "fixed Ising block length (s), 0 for shortest")
      ->capture_default_str();
  cmd->add_option("--coupling-threshold", f.threshold, "couplings at or below this (Hz) are not refocused")
      ->capture_default_str();
  cmd->add_option("--refocus-levels", f.levels, "at most 2^levels refocusing subsegments")->capture_default_str();
  cmd->add_flag("--optimize", f.optimize, "optimize delays after compiling");
}

CompileOptions to_options(const CompileFlags& f) {
  CompileOptions o;
  o.pulse_duration = f.pulse_duration;
  o.pulse_model = kPulseModels.at(f.pulse_model);
  o.scheme = kSchemes.at(f.scheme);
  o.ising_block_duration = f.block_duration;
  o.coupling_threshold_hz = f.threshold;
  o.max_refocus_levels = f.levels;
  return o;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty())
    out << content;
  else
    write_file_atomic(path, content);
}

ExperimentOptions experiment_options(const ExperimentFlags& f, const CompileFlags& c, std::ostream& err) {
  f.grid.validate();
  ExperimentOptions o;
  o.mode = parse_mode(f.mode);
  o.noise_std = f.noise_std;
  o.epsilon_pp = f.epsilon_pp;
  o.convention = kConventions.at(f.convention);
  o.dephasing = f.dephasing;
  o.compile = to_options(c);
  if (o.mode == RunMode::pulse) {
    if (f.molecule.empty()) throw std::invalid_argument("--mode pulse requires --molecule");
    o.molecule = parse_molecule(read_file(f.molecule));
  }
  if (f.seed) {
    o.seed = *f.seed;
  } else if (f.noise_std > 0) {
    err << "noise seed " << o.seed << " (default)\n";
  }
  return o;
}

ExperimentResult oracle_result(const ExperimentFlags& f, bool spectrum) {
  f.grid.validate();
  ExperimentResult r;
  const auto conv = kConventions.at(f.convention);
  for (double t : f.grid.points()) r.push_back(t, spectrum ? oracle_S(f.model, t, conv) : oracle_G(f.model, t));
  return r;
}

int cmd_correlation(const ExperimentFlags& f, const CompileFlags& c, std::ostream& out, std::ostream& err) {
  const ExperimentResult r =
      f.oracle ? oracle_result(f, false) : run_correlation_experiment(f.model, f.grid, experiment_options(f, c, err));
  emit(f.out, to_csv(r), out);
  if (!f.svg.empty()) write_file_atomic(f.svg, svg_signal(r, "G(t)"));
  return 0;
}

int cmd_spectrum(const ExperimentFlags& f, const CompileFlags& c, const std::string& spectrum_out, int n_peaks,
                 bool refine, std::ostream& out, std::ostream& err) {
  const ExperimentResult r =
      f.oracle ? oracle_result(f, true) : run_spectrum_experiment(f.model, f.grid, experiment_options(f, c, err));
  emit(f.out, to_csv(r), out);
  if (r.size() == 0) return 0;
  Spectrum s = dft(r);
  if (!spectrum_out.empty()) write_file_atomic(spectrum_out, to_csv(s));
  const PeakReport rep = find_peaks(s, n_peaks, PeakOptions{.refine = refine});
  if (!f.svg.empty()) {
    write_file_atomic(f.svg, svg_signal(r, "S(t)"));
    const auto dot = f.svg.rfind('.');
    const std::string spec_svg = (dot == std::string::npos ? f.svg : f.svg.substr(0, dot)) + "_spectrum.svg";
    write_file_atomic(spec_svg, svg_spectrum(s, rep.peaks, "Re S~(eta)"));
  }
  // the report goes to stderr when the signal occupies stdout
  std::ostream& rep_out = f.out.empty() ? err : out;
  const double bin_std = s.std.empty() ? 0.0 : s.std.front();
  rep_out << "M " << s.M << ", dt " << format_fixed(s.dt, 4) << ", resolution " << format_fixed(s.resolution(), 4)
          << ", per-bin std " << format_fixed(bin_std, 4) << "\n";
  for (std::size_t i = 0; i < rep.peaks.size(); ++i) {
    const auto& p = rep.peaks[i];
    rep_out << "peak " << i + 1 << ": eta = " << format_fixed(p.frequency, 4) << " +- "
            << format_fixed(p.resolution, 2) << ", weight = " << format_fixed(p.weight, 4) << "\n";
  }
  if (rep.truncated) rep_out << "fewer than " << n_peaks << " local maxima\n";
  return 0;
}

Circuit load_circuit(const std::string& path) { return parse_circuit(read_file(path)); }

int cmd_compile(const std::string& circuit, const std::string& molecule, const std::string& out_path,
                const CompileFlags& f, std::ostream& out, std::ostream& err) {
  const Circuit c = load_circuit(circuit);
  const Molecule m = parse_molecule(read_file(molecule));
  PulseSequence seq = compile(c, m, to_options(f));
  std::ostream& info = out_path.empty() ? err : out;
  if (f.optimize) {
    const auto r = optimize_delays(seq, m);
    info << "objective " << format_double(r.objective_before) << " -> " << format_double(r.objective_after) << "\n";
    seq = r.sequence;
  }
  emit(out_path, serialize(seq), out);
  const BudgetReport b = budget_check(seq, m);
  info << "pulses " << b.pulses << "\nising_blocks " << b.ising_blocks << "\nduration_s " << format_double(b.duration)
       << "\nresidual " << format_double(seq.residual_error) << "\n";
  for (const auto& w : b.warnings) info << "warning: " << w << "\n";
  return 0;
}

StateVector initial_state(const Circuit& c, const std::string& init) {
  if (init == "prepared") {
    if (c.labels() != std::vector<std::string>{"a", "1", "2"})
      throw std::invalid_argument("--init prepared needs the register a 1 2");
    return prepare_initial().state;
  }
  std::uint64_t index = 0;
  const auto [ptr, ec] = std::from_chars(init.data(), init.data() + init.size(), index, 2);
  if (ec != std::errc{} || ptr != init.data() + init.size() || static_cast<int>(init.size()) != c.n_qubits())
    throw std::invalid_argument("--init must be 'prepared' or a bit string of length " + std::to_string(c.n_qubits()));
  return basis_state(c.n_qubits(), index);
}

int cmd_verify(const std::string& circuit, const std::string& molecule, const std::string& sequence,
               const std::string& init, double min_fidelity, const CompileFlags& f, std::ostream& out) {
  const Circuit c = load_circuit(circuit);
  const Molecule m = parse_molecule(read_file(molecule));
  PulseSequence seq;
  if (sequence.empty()) {
    seq = compile(c, m, to_options(f));
    if (f.optimize) seq = optimize_delays(seq, m).sequence;
  } else {
    seq = parse_pulse_sequence(read_file(sequence));
  }
  const Verification v = verify(seq, m, c, initial_state(c, init));
  out << "fidelity " << format_double(v.fidelity) << "\n";
  out << "infidelity " << format_double(1.0 - v.fidelity) << "\n";
  return v.fidelity >= min_fidelity ? 0 : 1;
}

FermionOp parse_fermion(const std::string& token, int n) {
  std::string s = token;
  bool dagger = false;
  for (const std::string suffix : {"+", "^dag", "†"})
    if (s.size() > suffix.size() && s.ends_with(suffix)) {
      s.resize(s.size() - suffix.size());
      dagger = true;
      break;
    }
  int mode = -1;
  if (s == "b") {
    mode = 0;
  } else if (s.size() > 1 && s[0] == 'c') {
    int l = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), l);
    if (ec == std::errc{} && ptr == s.data() + s.size() && l >= 0 && l < n) mode = l + 1;
  }
  if (mode < 0) throw std::invalid_argument("unknown operator '" + token + "' (use b, b+, c0, c0+, ... c" +
                                            std::to_string(n - 1) + ")");
  return dagger ? FermionOp::create(mode) : FermionOp::annihilate(mode);
}

// Qubits print 1-based: qubit 1 carries the impurity.
std::string describe(const FermionOp& op) {
  std::string s;
  for (int j = 0; j < op.mode; ++j) s += "-σz on qubit " + std::to_string(j + 1) + ", ";
  s += op.kind == FermionOp::Kind::creation ? "σ₊" : "σ₋";
  return s + " on qubit " + std::to_string(op.mode + 1);
}

std::string pauli_form(const PauliSum& op) {
  std::string s;
  const PauliSum canonical = op.simplified();
  for (const auto& t : canonical.terms()) {
    const double re = t.coefficient.real(), im = t.coefficient.imag();
    std::string coeff = std::abs(im) < 1e-15 ? format_double(re) : std::abs(re) < 1e-15 ? format_double(im) + "i"
                                                                   : "(" + format_double(re) + (im < 0 ? "" : "+") + format_double(im) + "i)";
    if (!s.empty()) s += coeff[0] == '-' ? " - " : " + ";
    if (!s.empty() && coeff[0] == '-') coeff.erase(0, 1);
    s += coeff;
    for (const auto& [q, a] : t.string.factors()) s += std::string(" ") + "XYZ"[static_cast<int>(a)] + std::to_string(q + 1);
  }
  return s;
}

int cmd_jw(const std::vector<std::string>& ops, int n, const std::string& occupied, std::ostream& out) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
  for (const auto& token : ops) {
    const FermionOp op = parse_fermion(token, n);
    out << token << " -> " << describe(op) << "\n";
    out << "  = " << pauli_form(jw_map(op, n + 1)) << "\n";
  }
  if (!occupied.empty()) {
    OccupationState occ{{}, n + 1};
    std::stringstream ss(occupied);
    for (std::string item; std::getline(ss, item, ',');) {
      const FermionOp op = parse_fermion(item, n);
      occ.occupied.insert(op.mode);
    }
    const auto st = jw_state(occ);
    std::string bits;
    for (int q = 0; q <= n; ++q) bits += ((st.index >> (n - q)) & 1) ? '1' : '0';
    out << "state " << (st.sign < 0 ? "-" : "+") << "|" << bits << ">\n";
  }
  return 0;
}

int cmd_circuit(const std::string& kind, const ExperimentFlags& f, double t, bool hoist, bool no_prep,
                std::ostream& out) {
  NetworkOptions no;
  no.prepare_ancilla = !no_prep;
  no.convention = kConventions.at(f.convention);
  const DerivedParams d = derive(f.model, DegeneratePolicy::limit);
  Circuit c({"a", "1", "2"});
  if (kind == "correlation")
    c = build_correlation_network(t, d, no);
  else if (kind == "spectrum")
    c = build_spectrum_network(t, f.model, d, no);
  else if (kind == "evolution")
    c = build_evolution(t, d);
  else
    c = build_initialization();
  if (hoist) c = hoist_time_dependence(c);
  emit(f.out, serialize(c), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fano-Anderson impurity model on an NMR quantum simulator", "fanosim"};
  app.set_config("--config", "", "TOML/INI file of option values; command-line flags take precedence");
  app.require_subcommand(1);

  ExperimentFlags corr;
  corr.model.V = 4.0;
  CompileFlags corr_c;
  auto* c_corr = app.add_subcommand("correlation", "G(t) on a time grid");
  add_experiment_flags(c_corr, corr);
  add_compile_flags(c_corr, corr_c);

  ExperimentFlags spec;
  spec.model.V = 0.5;
  spec.grid = {0.1, 0.1, 128};
  spec.noise_std = 0.04;
  CompileFlags spec_c;
  std::string spectrum_out;
  int n_peaks = 2;
  bool refine = false;
  auto* c_spec = app.add_subcommand("spectrum", "S(t), its DFT and the dominant peaks");
  add_experiment_flags(c_spec, spec);
  add_compile_flags(c_spec, spec_c);
  c_spec->add_option("--spectrum-out", spectrum_out, "spectrum CSV");
  c_spec->add_option("--peaks", n_peaks, "number of peaks to report")->capture_default_str()->check(CLI::PositiveNumber);
  c_spec->add_flag("--refine", refine, "parabolic interpolation of the peak positions");

  std::string circuit_path, molecule_path, out_path, sequence_path, init = "prepared";
  double min_fidelity = 0.0;
  CompileFlags comp_c;
  auto* c_comp = app.add_subcommand("compile", "lower a circuit file to a pulse sequence");
  c_comp->add_option("--circuit", circuit_path, "circuit file")->required();
  c_comp->add_option("--molecule", molecule_path, "molecule file")->required();
  c_comp->add_option("--out", out_path, "sequence file (stdout when omitted)");
  add_compile_flags(c_comp, comp_c);

  CompileFlags ver_c;
  auto* c_ver = app.add_subcommand("verify", "simulate a pulse sequence and report the fidelity");
  c_ver->add_option("--circuit", circuit_path, "circuit file")->required();
  c_ver->add_option("--molecule", molecule_path, "molecule file")->required();
  c_ver->add_option("--sequence", sequence_path, "sequence file (compiled on the fly when omitted)");
  c_ver->add_option("--init", init, "'prepared' or a basis bit string over the circuit qubits")->capture_default_str();
  c_ver->add_option("--min-fidelity", min_fidelity, "exit 1 below this fidelity")->capture_default_str();
  add_compile_flags(c_ver, ver_c);

  std::vector<std::string> jw_ops;
  int jw_n = 1;
  std::string occupied;
  auto* c_jw = app.add_subcommand("jw", "Jordan-Wigner images of b, b+, c0, c0+, ...");
  c_jw->add_option("ops", jw_ops, "operators");
  c_jw->add_option("--n", jw_n, "number of conduction modes")->capture_default_str();
  c_jw->add_option("--occupied", occupied, "comma-separated occupied modes, e.g. b,c0");

  ExperimentFlags circ;
  std::string kind;
  double circ_t = 0.0;
  bool hoist = false, no_prep = false;
  auto* c_circ = app.add_subcommand("circuit", "print a network in circuit text form");
  c_circ->add_option("kind", kind, "correlation, spectrum, evolution or initialization")
      ->required()
      ->check(CLI::IsMember({"correlation", "spectrum", "evolution", "initialization"}));
  c_circ->add_option("--t", circ_t, "time")->capture_default_str();
  c_circ->add_option("--eps", circ.model.epsilon)->capture_default_str();
  c_circ->add_option("--eps-k0", circ.model.epsilon_k0)->capture_default_str();
  c_circ->add_option("--v", circ.model.V)->capture_default_str();
  c_circ->add_option("--convention", circ.convention)->check(CLI::IsMember({"consistent", "total_energy"}));
  c_circ->add_flag("--hoist", hoist, "move time dependence into virtual z rotations");
  c_circ->add_flag("--no-prep", no_prep, "omit the ancilla R_y(pi/2)");
  c_circ->add_option("--out", circ.out, "circuit file (stdout when omitted)");

  std::vector<const char*> argv{"fanosim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*c_corr) return cmd_correlation(corr, corr_c, out, err);
    if (*c_spec) return cmd_spectrum(spec, spec_c, spectrum_out, n_peaks, refine, out, err);
    if (*c_comp) return cmd_compile(circuit_path, molecule_path, out_path, comp_c, out, err);
    if (*c_ver) return cmd_verify(circuit_path, molecule_path, sequence_path, init, min_fidelity, ver_c, out);
    if (*c_jw) return cmd_jw(jw_ops, jw_n, occupied, out);
    if (*c_circ) return cmd_circuit(kind, circ, circ_t, hoist, no_prep, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace fanosim
