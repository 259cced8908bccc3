#include "fanosim/molecule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fanosim/format.hpp"

namespace fanosim {

std::string_view role_name(SpinRole r) {
  switch (r) {
    case SpinRole::ancilla: return "a";
    case SpinRole::qubit1: return "1";
    case SpinRole::qubit2: return "2";
    case SpinRole::spectator: return "spectator";
  }
  return "?";
}

namespace {

SpinRole parse_role(std::string_view s) {
  if (s == "a") return SpinRole::ancilla;
  if (s == "1") return SpinRole::qubit1;
  if (s == "2") return SpinRole::qubit2;
  if (s == "spectator") return SpinRole::spectator;
  throw std::invalid_argument("unknown role '" + std::string(s) + "'");
}

}  // namespace

Molecule::Molecule(std::vector<Spin> spins, Eigen::MatrixXd couplings) : spins_(std::move(spins)), J_(std::move(couplings)) {
  const auto n = static_cast<Eigen::Index>(spins_.size());
  if (J_.rows() != n || J_.cols() != n) throw std::invalid_argument("coupling matrix size does not match spin count");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (J_(i, i) != 0.0) throw std::invalid_argument("coupling matrix must have a zero diagonal");
    for (Eigen::Index j = 0; j < n; ++j)
      if (J_(i, j) != J_(j, i) || !std::isfinite(J_(i, j))) throw std::invalid_argument("coupling matrix must be symmetric and finite");
  }
  for (std::size_t i = 0; i < spins_.size(); ++i) {
    const Spin& s = spins_[i];
    if (s.label.empty()) throw std::invalid_argument("spin without a label");
    if (!(s.t2star_s > 0.0)) throw std::invalid_argument("T2* of " + s.label + " must be > 0");
    if (!std::isfinite(s.shift_hz)) throw std::invalid_argument("shift of " + s.label + " is not finite");
    if (s.state != 0 && s.state != 1) throw std::invalid_argument("state of " + s.label + " must be 0 or 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (spins_[j].label == s.label) throw std::invalid_argument("duplicate spin label " + s.label);
      if (spins_[j].shift_hz == s.shift_hz) throw std::invalid_argument("spins " + spins_[j].label + " and " + s.label + " share a chemical shift");
      if (s.role != SpinRole::spectator && spins_[j].role == s.role)
        throw std::invalid_argument("role " + std::string(role_name(s.role)) + " assigned twice");
    }
  }
}

double Molecule::min_t2star() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : spins_) m = std::min(m, s.t2star_s);
  return m;
}

int Molecule::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < spins_.size(); ++i)
    if (spins_[i].label == label) return static_cast<int>(i);
  throw std::out_of_range("no spin labelled '" + std::string(label) + "'");
}

std::optional<int> Molecule::spin_for_qubit(std::string_view qubit_label) const {
  std::optional<SpinRole> role;
  if (qubit_label == "a") role = SpinRole::ancilla;
  else if (qubit_label == "1") role = SpinRole::qubit1;
  else if (qubit_label == "2") role = SpinRole::qubit2;
  for (std::size_t i = 0; i < spins_.size(); ++i) {
    if (role ? spins_[i].role == *role : spins_[i].label == qubit_label) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string serialize(const Molecule& m) {
  std::ostringstream os;
  os << "# fanosim molecule v1\n";
  for (const auto& s : m.spins()) {
    os << "spin " << s.label << " shift_hz=" << format_double(s.shift_hz) << " t2star_s=" << format_double(s.t2star_s)
       << " role=" << role_name(s.role);
    if (s.role == SpinRole::spectator) os << " state=" << s.state;
    os << '\n';
  }
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (m.coupling(i, j) != 0.0)
        os << "coupling " << m.spins()[i].label << ' ' << m.spins()[j].label << ' ' << format_double(m.coupling(i, j)) << '\n';
  return os.str();
}

Molecule parse_molecule(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Spin> spins;
  struct Pending {
    std::string a, b;
    double j;
    int line;
  };
  std::vector<Pending> couplings;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) -> void {
    throw std::runtime_error("molecule line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "spin") {
        if (tok.size() < 2) fail("spin needs a label");
        Spin s;
        s.label = tok[1];
        bool have_shift = false, have_t2 = false;
        for (std::size_t i = 2; i < tok.size(); ++i) {
          auto eq = tok[i].find('=');
          if (eq == std::string::npos) fail("expected key=value, got '" + tok[i] + "'");
          std::string key = tok[i].substr(0, eq), value = tok[i].substr(eq + 1);
          if (key == "shift_hz") s.shift_hz = parse_double(value), have_shift = true;
          else if (key == "t2star_s") s.t2star_s = parse_double(value), have_t2 = true;
          else if (key == "role") s.role = parse_role(value);
          else if (key == "state") {
            if (value != "0" && value != "1") fail("state must be 0 or 1");
            s.state = value == "0" ? 0 : 1;
          } else fail("unknown key '" + key + "'");
        }
        if (!have_shift || !have_t2) fail("spin needs shift_hz and t2star_s");
        spins.push_back(s);
      } else if (tok[0] == "coupling") {
        if (tok.size() != 4) fail("coupling needs two labels and a value");
        couplings.push_back({tok[1], tok[2], parse_double(tok[3]), line_no});
      } else {
        fail("unknown record '" + tok[0] + "'");
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(spins.size()), static_cast<Eigen::Index>(spins.size()));
  auto find = [&](const std::string& l, int at) {
    for (std::size_t i = 0; i < spins.size(); ++i)
      if (spins[i].label == l) return static_cast<Eigen::Index>(i);
    throw std::runtime_error("molecule line " + std::to_string(at) + ": unknown spin '" + l + "'");
  };
  for (const auto& c : couplings) {
    auto i = find(c.a, c.line), j = find(c.b, c.line);
    if (i == j) throw std::runtime_error("molecule line " + std::to_string(c.line) + ": self coupling");
    J(i, j) = J(j, i) = c.j;
  }
  try {
    return Molecule(std::move(spins), std::move(J));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("molecule: ") + e.what());
  }
}

}  // namespace fanosim
