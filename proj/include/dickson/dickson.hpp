#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dickson/field.hpp"
#include "dickson/polynomial.hpp"

namespace dickson {

enum class Kind { First, Second };

std::string_view to_string(Kind kind);

/// D_n(x, a) from D_0 = 2, D_1 = x, D_j = x D_{j-1} - a D_{j-2}. For n <= 64
/// the result is cross-checked against the closed coefficient formula.
Polynomial dickson_first(std::uint64_t n, const FieldElement& a);

/// E_n(x, a) from E_0 = 1, E_1 = x, E_j = x E_{j-1} - a E_{j-2}.
Polynomial dickson_second(std::uint64_t n, const FieldElement& a);

Polynomial dickson_poly(Kind kind, std::uint64_t n, const FieldElement& a);

/// D_0(x, a), ..., D_n(x, a) in one pass of the recurrence.
std::vector<Polynomial> dickson_first_sequence(std::uint64_t n, const FieldElement& a);

/// Closed coefficient formulas, sum over i <= n/2 of
///   n/(n-i) * C(n-i, i) * (-a)^i x^(n-2i)   (first kind)
///   C(n-i, i) * (-a)^i x^(n-2i)             (second kind)
/// with the integer coefficients formed exactly before reduction mod p.
/// Limited to n <= 64.
Polynomial dickson_first_explicit(std::uint64_t n, const FieldElement& a);
Polynomial dickson_second_explicit(std::uint64_t n, const FieldElement& a);

/// Evaluates the functional equations at `samples` seeded points y of F_{q^2}^*:
///   D_n(y + a/y) = y^n + a^n / y^n
///   E_n(y + a/y) (y - a/y) = y^(n+1) - a^(n+1) / y^(n+1)   (skipping y^2 = a)
bool waring_check(Kind kind, std::uint64_t n, const FieldElement& a, unsigned samples, std::uint64_t seed);

/// First kind only: gcd(n, q-1) = 1 when a = 0, gcd(n, q^2-1) = 1 otherwise.
bool is_permutation(Kind kind, std::uint64_t n, const FieldElement& a);

}  // namespace dickson
