#include "fanosim/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fanosim {

namespace {

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Product of two single-qubit Paulis: returns (axis or nullopt for identity, phase exponent).
struct AxisProduct {
  bool identity;
  Axis axis;
  int phase;
};

AxisProduct multiply_axes(Axis a, Axis b) {
  if (a == b) return {true, Axis::X, 0};
  auto ia = static_cast<int>(a);
  auto ib = static_cast<int>(b);
  auto ic = 3 - ia - ib;
  // cyclic (X,Y), (Y,Z), (Z,X) give +i
  bool cyclic = (ib - ia + 3) % 3 == 1;
  return {false, static_cast<Axis>(ic), cyclic ? 1 : 3};
}

}  // namespace

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::map<int, Axis> factors, int phase_exponent)
    : factors_(std::move(factors)), phase_(((phase_exponent % 4) + 4) % 4) {}

PauliString PauliString::single(int qubit, Axis axis) { return PauliString({{qubit, axis}}, 0); }

Complex PauliString::phase() const { return kPhases[phase_]; }

int PauliString::max_qubit() const { return factors_.empty() ? -1 : factors_.rbegin()->first; }

PauliString operator*(const PauliString& lhs, const PauliString& rhs) {
  std::map<int, Axis> out = lhs.factors_;
  int phase = lhs.phase_ + rhs.phase_;
  for (const auto& [q, b] : rhs.factors_) {
    auto it = out.find(q);
    if (it == out.end()) {
      out.emplace(q, b);
      continue;
    }
    auto prod = multiply_axes(it->second, b);
    phase += prod.phase;
    if (prod.identity)
      out.erase(it);
    else
      it->second = prod.axis;
  }
  return PauliString(std::move(out), phase);
}

std::string PauliString::to_string() const {
  std::ostringstream os;
  static const char* prefix[4] = {"", "i", "-", "-i"};
  os << prefix[phase_];
  if (factors_.empty()) {
    os << "I";
    return os.str();
  }
  bool first = true;
  for (const auto& [q, a] : factors_) {
    if (!first) os << ' ';
    os << axis_char(a) << q;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) { return os << p.to_string(); }

PauliSum::PauliSum(Complex coefficient, PauliString string) {
  terms_.push_back({coefficient, std::move(string)});
}

int PauliSum::max_qubit() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.string.max_qubit());
  return m;
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  *this = simplified();
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& rhs) { return *this += rhs * Complex(-1.0); }

PauliSum& PauliSum::operator*=(Complex c) {
  for (auto& t : terms_) t.coefficient *= c;
  *this = simplified();
  return *this;
}

PauliSum operator*(const PauliSum& lhs, const PauliSum& rhs) {
  PauliSum out;
  out.terms_.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_)
      out.terms_.push_back({a.coefficient * b.coefficient, a.string * b.string});
  return out.simplified();
}

PauliSum PauliSum::adjoint() const {
  PauliSum out;
  for (const auto& t : terms_) {
    // Pauli strings are Hermitian; only the phase conjugates.
    out.terms_.push_back({std::conj(t.coefficient * t.string.phase()), t.string.unsigned_string()});
  }
  return out.simplified();
}

PauliSum PauliSum::simplified(double cutoff) const {
  std::vector<Term> folded;
  folded.reserve(terms_.size());
  for (const auto& t : terms_)
    folded.push_back({t.coefficient * t.string.phase(), t.string.unsigned_string()});
  std::stable_sort(folded.begin(), folded.end(),
                   [](const Term& a, const Term& b) { return a.string.key_less(b.string); });
  PauliSum out;
  for (auto& t : folded) {
    if (!out.terms_.empty() && out.terms_.back().string == t.string)
      out.terms_.back().coefficient += t.coefficient;
    else
      out.terms_.push_back(std::move(t));
  }
  std::erase_if(out.terms_, [cutoff](const Term& t) { return std::abs(t.coefficient) <= cutoff; });
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  auto s = simplified();
  return std::all_of(s.terms_.begin(), s.terms_.end(),
                     [tol](const Term& t) { return std::abs(t.coefficient.imag()) <= tol; });
}

Complex PauliSum::coefficient_of(const PauliString& key) const {
  auto s = simplified();
  auto k = key.unsigned_string();
  for (const auto& t : s.terms_)
    if (t.string == k) return t.coefficient / key.phase();
  return 0.0;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    os << '(' << t.coefficient.real();
    if (t.coefficient.imag() != 0.0) os << (t.coefficient.imag() < 0 ? "-" : "+") << std::abs(t.coefficient.imag()) << 'i';
    os << ")*" << t.string;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PauliSum& p) { return os << p.to_string(); }

PauliSum sigma_plus(int qubit) {
  return PauliSum::single(qubit, Axis::X, 0.5) + PauliSum::single(qubit, Axis::Y, Complex(0, 0.5));
}

PauliSum sigma_minus(int qubit) {
  return PauliSum::single(qubit, Axis::X, 0.5) + PauliSum::single(qubit, Axis::Y, Complex(0, -0.5));
}

}  // namespace fanosim
