#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fanosim {

using Complex = std::complex<double>;

enum class Axis : std::uint8_t { X, Y, Z };

char axis_char(Axis a);

/// Tensor product of single-qubit Pauli factors with a phase i^k.
///
/// Qubits not present in the factor map carry the identity. The phase is
/// kept as an exponent of i so that products stay exact.
class PauliString {
 public:
  PauliString() = default;
  PauliString(std::map<int, Axis> factors, int phase_exponent = 0);

  static PauliString identity() { return {}; }
  static PauliString single(int qubit, Axis axis);

  const std::map<int, Axis>& factors() const { return factors_; }
  // i^phase_exponent, exponent in {0,1,2,3}
  int phase_exponent() const { return phase_; }
  Complex phase() const;
  bool is_identity() const { return factors_.empty(); }
  // Largest qubit index, or -1 for the identity.
  int max_qubit() const;

  // Same factors, phase reset to +1.
  PauliString unsigned_string() const { return PauliString(factors_, 0); }

  friend PauliString operator*(const PauliString& lhs, const PauliString& rhs);
  friend bool operator==(const PauliString& a, const PauliString& b) = default;
  // Ordering on factors only (phase ignored); used as the canonical key.
  bool key_less(const PauliString& other) const { return factors_ < other.factors_; }

  std::string to_string() const;

 private:
  std::map<int, Axis> factors_;
  int phase_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PauliString& p);

/// Linear combination of Pauli strings.
///
/// After simplify() every term carries a phase-free string, strings are
/// unique and sorted, and terms with |coefficient| below the cutoff are
/// dropped.
class PauliSum {
 public:
  struct Term {
    Complex coefficient;
    PauliString string;
  };

  PauliSum() = default;
  PauliSum(Complex coefficient, PauliString string);
  static PauliSum scalar(Complex c) { return {c, PauliString::identity()}; }
  static PauliSum single(int qubit, Axis axis, Complex c = 1.0) {
    return {c, PauliString::single(qubit, axis)};
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int max_qubit() const;

  PauliSum& operator+=(const PauliSum& rhs);
  PauliSum& operator-=(const PauliSum& rhs);
  PauliSum& operator*=(Complex c);

  friend PauliSum operator+(PauliSum lhs, const PauliSum& rhs) { return lhs += rhs; }
  friend PauliSum operator-(PauliSum lhs, const PauliSum& rhs) { return lhs -= rhs; }
  friend PauliSum operator*(PauliSum lhs, Complex c) { return lhs *= c; }
  friend PauliSum operator*(Complex c, PauliSum rhs) { return rhs *= c; }
  friend PauliSum operator*(const PauliSum& lhs, const PauliSum& rhs);

  PauliSum adjoint() const;
  // Canonical form: phases folded into coefficients, duplicates merged.
  PauliSum simplified(double cutoff = 1e-14) const;
  // True when every canonical coefficient is real within tol.
  bool is_hermitian(double tol = 1e-12) const;
  // Coefficient of the given (phase-free) string in canonical form; 0 if absent.
  Complex coefficient_of(const PauliString& s) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const PauliSum& p);

// σ± = (X ± iY)/2 with |0> = spin up: σ+ = |0><1|.
PauliSum sigma_plus(int qubit);
PauliSum sigma_minus(int qubit);

}  // namespace fanosim
