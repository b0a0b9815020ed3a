#pragma once

#include "dickson/field.hpp"
#include "dickson/polynomial.hpp"

namespace dickson {

/// x^m f(x + a/x) for monic f of degree m >= 1; the result is monic,
/// a-self-reciprocal and of degree 2m.
Polynomial phi(const Polynomial& f, const FieldElement& a);

/// Inverse of phi. Writing g = b_m x^m + sum_{i<m} b_{2m-i} (x^(2m-i) + a^(m-i) x^i),
/// returns b_m + sum_{i<m} b_{2m-i} D_{m-i}(x, a).
Polynomial psi(const Polynomial& g, const FieldElement& a);

/// psi(phi(f)) = f and phi(psi(phi(f))) = phi(f).
bool phi_psi_roundtrip(const Polynomial& f, const FieldElement& a);

/// phi(fg) = phi(f) phi(g) and psi(phi(f) phi(g)) = f g.
bool phi_psi_multiplicative(const Polynomial& f, const Polynomial& g, const FieldElement& a);

}  // namespace dickson
