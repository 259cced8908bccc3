#include "fanosim/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fanosim/format.hpp"

namespace fanosim {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::rot_x: return "rx";
    case GateKind::rot_y: return "ry";
    case GateKind::rot_z: return "rz";
    case GateKind::ising_zz: return "ising_zz";
  }
  return "?";
}

Circuit::Circuit(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty() || labels_[i].find_first_of(" \t\n") != std::string::npos)
      throw std::invalid_argument("invalid qubit label '" + labels_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[i] == labels_[j]) throw std::invalid_argument("duplicate qubit label " + labels_[i]);
  }
}

int Circuit::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown qubit label '" + std::string(label) + "'");
  return static_cast<int>(it - labels_.begin());
}

bool Circuit::has_label(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Circuit& Circuit::add(const Gate& g) {
  if (!std::isfinite(g.angle)) throw std::invalid_argument("gate angle is not finite");
  auto valid = [&](int q) { return q >= 0 && q < n_qubits(); };
  if (!valid(g.q0)) throw std::out_of_range("gate target outside the circuit");
  if (g.arity() == 2) {
    if (!valid(g.q1)) throw std::out_of_range("gate target outside the circuit");
    if (g.q0 == g.q1) throw std::invalid_argument("ising_zz needs two distinct qubits");
  } else if (g.q1 != -1) {
    throw std::invalid_argument("single-qubit gate with a second target");
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::rx(std::string_view q, double angle, bool td) {
  return add({GateKind::rot_x, angle, index_of(q), -1, td});
}
Circuit& Circuit::ry(std::string_view q, double angle, bool td) {
  return add({GateKind::rot_y, angle, index_of(q), -1, td});
}
Circuit& Circuit::rz(std::string_view q, double angle, bool td) {
  return add({GateKind::rot_z, angle, index_of(q), -1, td});
}
Circuit& Circuit::zz(std::string_view q0, std::string_view q1, double angle, bool td) {
  return add({GateKind::ising_zz, angle, index_of(q0), index_of(q1), td});
}

Circuit& Circuit::append(const Circuit& other) {
  std::vector<int> map(other.labels_.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = index_of(other.labels_[i]);
  for (Gate g : other.gates_) {
    g.q0 = map[g.q0];
    if (g.q1 >= 0) g.q1 = map[g.q1];
    add(g);
  }
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(labels_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->inverse());
  return out;
}

Eigen::Matrix2cd rotation(Axis axis, double angle) {
  const Complex c = std::cos(angle / 2), s(0, -std::sin(angle / 2));
  return c * Eigen::Matrix2cd::Identity() + s * pauli_matrix(axis);
}

namespace {

Axis axis_of(GateKind k) {
  switch (k) {
    case GateKind::rot_x: return Axis::X;
    case GateKind::rot_y: return Axis::Y;
    default: return Axis::Z;
  }
}

// In-place application on a state vector; every gate touches pairs of amplitudes or phases only.
void apply_gate(const Gate& g, int n, StateVector& s) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (g.kind == GateKind::ising_zz) {
    const std::uint64_t m0 = qubit_mask(g.q0, n), m1 = qubit_mask(g.q1, n);
    const Complex same = std::polar(1.0, -g.angle / 2), diff = std::polar(1.0, g.angle / 2);
    for (std::uint64_t i = 0; i < dim; ++i) s[i] *= (((i & m0) != 0) == ((i & m1) != 0)) ? same : diff;
    return;
  }
  const std::uint64_t m = qubit_mask(g.q0, n);
  const Eigen::Matrix2cd r = rotation(axis_of(g.kind), g.angle);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & m) continue;
    const Complex a0 = s[i], a1 = s[i | m];
    s[i] = r(0, 0) * a0 + r(0, 1) * a1;
    s[i | m] = r(1, 0) * a0 + r(1, 1) * a1;
  }
}

}  // namespace

DenseOperator gate_matrix(const Gate& g, int n_qubits) {
  const auto dim = Eigen::Index{1} << n_qubits;
  DenseOperator out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    StateVector col = StateVector::Unit(dim, c);
    apply_gate(g, n_qubits, col);
    out.col(c) = col;
  }
  return out;
}

DenseOperator dense(const Circuit& c) {
  const auto dim = Eigen::Index{1} << c.n_qubits();
  DenseOperator out = DenseOperator::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector v = out.col(col);
    for (const auto& g : c.gates()) apply_gate(g, c.n_qubits(), v);
    out.col(col) = v;
  }
  return out;
}

StateVector run(const Circuit& c, const StateVector& state) {
  if (state.size() != (Eigen::Index{1} << c.n_qubits()))
    throw std::invalid_argument("state dimension does not match the circuit's qubit labels");
  StateVector s = state;
  for (const auto& g : c.gates()) apply_gate(g, c.n_qubits(), s);
  return s;
}

std::string serialize(const Circuit& c) {
  std::ostringstream os;
  os << "# fanosim circuit v1\nqubits";
  for (const auto& l : c.labels()) os << ' ' << l;
  os << '\n';
  for (const auto& g : c.gates()) {
    os << gate_name(g.kind) << ' ' << format_double(g.angle) << ' ' << c.labels()[g.q0];
    if (g.q1 >= 0) os << ' ' << c.labels()[g.q1];
    if (g.time_dependent) os << " t";
    os << '\n';
  }
  return os.str();
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_qubits = false;
  Circuit c;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("circuit line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] == "qubits") {
      if (have_qubits) fail("repeated qubits line");
      c = Circuit(std::vector<std::string>(tok.begin() + 1, tok.end()));
      have_qubits = true;
      continue;
    }
    if (!have_qubits) fail("gate before the qubits line");
    GateKind kind;
    if (tok[0] == "rx") kind = GateKind::rot_x;
    else if (tok[0] == "ry") kind = GateKind::rot_y;
    else if (tok[0] == "rz") kind = GateKind::rot_z;
    else if (tok[0] == "ising_zz") kind = GateKind::ising_zz;
    else fail("unknown gate '" + tok[0] + "'");
    const std::size_t targets = kind == GateKind::ising_zz ? 2 : 1;
    if (tok.size() < 2 + targets || tok.size() > 3 + targets) fail("wrong number of fields");
    bool td = false;
    if (tok.size() == 3 + targets) {
      if (tok.back() != "t") fail("unexpected trailing field '" + tok.back() + "'");
      td = true;
    }
    double angle = 0;
    try {
      angle = parse_double(tok[1]);
    } catch (const std::exception&) {
      fail("bad angle '" + tok[1] + "'");
    }
    try {
      Gate g{kind, angle, c.index_of(tok[2]), targets == 2 ? c.index_of(tok[3]) : -1, td};
      c.add(g);
    } catch (const std::out_of_range& e) {
      fail(e.what());
    }
  }
  if (!have_qubits) throw std::runtime_error("circuit has no qubits line");
  return c;
}

}  // namespace fanosim
