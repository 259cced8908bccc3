#pragma once

namespace fanosim::tol {

// Exact algebraic identities (Pauli products, Kronecker expansion, norms).
inline constexpr double algebraic = 1e-12;
// Gate decompositions compared against the eigendecomposition oracle.
inline constexpr double decomposition = 1e-10;
// Admission test for Hermitian input to exp_hermitian.
inline constexpr double hermiticity = 1e-10;
// Unitarity of composed circuits.
inline constexpr double unitarity = 1e-11;
// Ideal-mode experiment vs. model oracle.
inline constexpr double oracle = 1e-9;

}  // namespace fanosim::tol
