#include "fanosim/pulse_sequence.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "fanosim/format.hpp"

namespace fanosim {

std::string_view model_name(PulseModel m) { return m == PulseModel::instantaneous ? "instantaneous" : "finite"; }

double PulseSequence::total_duration() const {
  double t = 0;
  for (const auto& e : events) {
    if (const auto* d = std::get_if<Delay>(&e)) t += d->duration;
    else if (const auto* p = std::get_if<Pulse>(&e); p && model == PulseModel::finite) t += p->duration;
  }
  return t;
}

bool PulseSequence::is_active(int spin) const {
  for (int s : qubit_spins)
    if (s == spin) return true;
  return false;
}

int PulseSequence::pulse_count() const {
  int n = 0;
  for (const auto& e : events) n += std::holds_alternative<Pulse>(e);
  return n;
}

std::string serialize(const PulseSequence& s) {
  std::ostringstream os;
  auto f = [](double v) { return format_double(v); };
  os << "# fanosim pulse sequence v1\nspins";
  for (const auto& l : s.spin_labels) os << ' ' << l;
  os << "\nqubits";
  for (std::size_t q = 0; q < s.qubit_labels.size(); ++q) os << ' ' << s.qubit_labels[q] << '=' << s.spin_labels[s.qubit_spins[q]];
  os << "\nmodel " << model_name(s.model) << '\n';
  os << "residual_error " << f(s.residual_error) << '\n';
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const auto& blk = s.blocks[b];
    os << "block " << b << ' ' << s.spin_labels[blk.spin_j] << ' ' << s.spin_labels[blk.spin_k] << ' ' << f(blk.angle) << ' '
       << f(blk.duration) << '\n';
    for (std::size_t g = 0; g < blk.segments.size(); ++g) {
      const auto& seg = blk.segments[g];
      os << "segment " << b << ' ' << g << ' ' << seg.half << ' ' << f(seg.duration) << ' ';
      for (int sign : seg.signs) os << (sign > 0 ? '+' : '-');
      os << '\n';
    }
  }
  for (const auto& e : s.events) {
    if (const auto* p = std::get_if<Pulse>(&e)) {
      os << "pulse " << s.spin_labels[p->spin] << " axis=" << f(p->axis) << " angle=" << f(p->angle) << " phase=" << f(p->phase)
         << " amp=" << f(p->amplitude) << " dur=" << f(p->duration) << (p->refocusing ? " refocus" : "") << '\n';
    } else if (const auto* d = std::get_if<Delay>(&e)) {
      os << "delay " << f(d->duration);
      if (d->block >= 0) os << " block=" << d->block << " seg=" << d->segment;
      os << '\n';
    } else {
      const auto& z = std::get<VirtualZ>(e);
      os << "vz " << s.spin_labels[z.spin] << ' ' << f(z.angle) << '\n';
    }
  }
  os << "frame";
  for (double v : s.frame) os << ' ' << f(v);
  os << "\nframe_updates " << s.frame_updates << '\n';
  return os.str();
}

PulseSequence parse_pulse_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  PulseSequence s;
  std::string line;
  int line_no = 0;
  bool have_spins = false;
  auto fail = [&](const std::string& why) -> void {
    throw std::runtime_error("pulse sequence line " + std::to_string(line_no) + ": " + why);
  };
  auto spin = [&](const std::string& l) {
    for (std::size_t i = 0; i < s.spin_labels.size(); ++i)
      if (s.spin_labels[i] == l) return static_cast<int>(i);
    fail("unknown spin '" + l + "'");
    return -1;
  };
  auto to_int = [&](const std::string& v) {
    double d = parse_double(v);
    if (d != static_cast<int>(d)) fail("expected an integer, got '" + v + "'");
    return static_cast<int>(d);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    try {
      const std::string& kind = tok[0];
      if (kind == "spins") {
        s.spin_labels.assign(tok.begin() + 1, tok.end());
        have_spins = true;
        continue;
      }
      if (!have_spins) fail("record before the spins line");
      if (kind == "qubits") {
        s.qubit_labels.clear();
        s.qubit_spins.clear();
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto eq = tok[i].find('=');
          if (eq == std::string::npos) fail("expected qubit=spin, got '" + tok[i] + "'");
          s.qubit_labels.push_back(tok[i].substr(0, eq));
          s.qubit_spins.push_back(spin(tok[i].substr(eq + 1)));
        }
      } else if (kind == "model") {
        if (tok.size() != 2) fail("model needs one value");
        if (tok[1] == "instantaneous") s.model = PulseModel::instantaneous;
        else if (tok[1] == "finite") s.model = PulseModel::finite;
        else fail("unknown pulse model '" + tok[1] + "'");
      } else if (kind == "residual_error") {
        if (tok.size() != 2) fail("residual_error needs one value");
        s.residual_error = parse_double(tok[1]);
      } else if (kind == "block") {
        if (tok.size() != 6) fail("block needs id, two spins, angle and duration");
        if (to_int(tok[1]) != static_cast<int>(s.blocks.size())) fail("blocks must be numbered consecutively");
        s.blocks.push_back({spin(tok[2]), spin(tok[3]), parse_double(tok[4]), parse_double(tok[5]), {}});
      } else if (kind == "segment") {
        if (tok.size() != 6) fail("segment needs block, index, half, duration and signs");
        int b = to_int(tok[1]);
        if (b < 0 || b >= static_cast<int>(s.blocks.size())) fail("segment of an unknown block");
        auto& blk = s.blocks[b];
        if (to_int(tok[2]) != static_cast<int>(blk.segments.size())) fail("segments must be numbered consecutively");
        IsingSegment seg{to_int(tok[3]), parse_double(tok[4]), {}};
        if (tok[5].size() != s.spin_labels.size()) fail("sign pattern length differs from the spin count");
        for (char c : tok[5]) {
          if (c != '+' && c != '-') fail("sign pattern must use + and -");
          seg.signs.push_back(c == '+' ? 1 : -1);
        }
        blk.segments.push_back(seg);
      } else if (kind == "pulse") {
        if (tok.size() < 2) fail("pulse needs a spin");
        Pulse p;
        p.spin = spin(tok[1]);
        std::map<std::string, double> kv;
        for (std::size_t i = 2; i < tok.size(); ++i) {
          if (tok[i] == "refocus") {
            p.refocusing = true;
            continue;
          }
          auto eq = tok[i].find('=');
          if (eq == std::string::npos) fail("expected key=value, got '" + tok[i] + "'");
          kv[tok[i].substr(0, eq)] = parse_double(tok[i].substr(eq + 1));
        }
        for (const char* k : {"axis", "angle", "phase", "amp", "dur"})
          if (!kv.count(k)) fail(std::string("pulse missing ") + k);
        if (kv.size() != 5) fail("unknown pulse field");
        p.axis = kv["axis"];
        p.angle = kv["angle"];
        p.phase = kv["phase"];
        p.amplitude = kv["amp"];
        p.duration = kv["dur"];
        if (p.duration < 0) fail("negative pulse duration");
        s.events.emplace_back(p);
      } else if (kind == "delay") {
        if (tok.size() != 2 && tok.size() != 4) fail("delay needs a duration and optionally block= seg=");
        Delay d{parse_double(tok[1]), -1, -1};
        if (d.duration < 0) fail("negative delay");
        if (tok.size() == 4) {
          if (tok[2].rfind("block=", 0) != 0 || tok[3].rfind("seg=", 0) != 0) fail("expected block= seg=");
          d.block = to_int(tok[2].substr(6));
          d.segment = to_int(tok[3].substr(4));
        }
        s.events.emplace_back(d);
      } else if (kind == "vz") {
        if (tok.size() != 3) fail("vz needs a spin and an angle");
        s.events.emplace_back(VirtualZ{spin(tok[1]), parse_double(tok[2])});
      } else if (kind == "frame") {
        s.frame.clear();
        for (std::size_t i = 1; i < tok.size(); ++i) s.frame.push_back(parse_double(tok[i]));
        if (s.frame.size() != s.spin_labels.size()) fail("frame length differs from the spin count");
      } else if (kind == "frame_updates") {
        if (tok.size() != 2) fail("frame_updates needs one value");
        s.frame_updates = to_int(tok[1]);
      } else {
        fail("unknown record '" + kind + "'");
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (!have_spins) throw std::runtime_error("pulse sequence has no spins line");
  if (s.frame.empty()) s.frame.assign(s.spin_labels.size(), 0.0);
  for (const auto& e : s.events)
    if (const auto* d = std::get_if<Delay>(&e); d && d->block >= 0) {
      if (d->block >= static_cast<int>(s.blocks.size()) || d->segment < 0 ||
          d->segment >= static_cast<int>(s.blocks[d->block].segments.size()))
        throw std::runtime_error("pulse sequence: delay refers to a missing block segment");
    }
  return s;
}

}  // namespace fanosim
