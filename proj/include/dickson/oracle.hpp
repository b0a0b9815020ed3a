#pragma once

#include <cstdint>
#include <vector>

#include "dickson/polynomial.hpp"

// General-purpose factorization machinery over F_q. It knows nothing about
// Dickson polynomials and serves as the independent reference for the engine.
namespace dickson::oracle {

/// The F_q-linear map h -> h^q mod f, stored as the images of 1, x, ..., x^(m-1).
class FrobeniusMap {
public:
    explicit FrobeniusMap(const Polynomial& modulus);

    Polynomial apply(const Polynomial& h) const;
    const Polynomial& modulus() const { return modulus_; }

private:
    Polynomial modulus_;
    std::vector<std::vector<Code>> columns_;
};

/// Rabin test: x^(q^m) = x mod f and gcd(x^(q^(m/r)) - x, f) = 1 for primes r | m.
bool is_irreducible(const Polynomial& f);

/// f = prod g_i^i with g_i squarefree, pairwise coprime; input made monic.
std::vector<Factor> squarefree_decompose(const Polynomial& f);

/// Complete factorization into monic irreducibles in canonical order. The seed
/// drives equal-degree splitting only; the result does not depend on it.
Factorization factor(const Polynomial& f, std::uint64_t seed = 1);

/// Multiplicative order of x modulo an irreducible f with f(0) != 0.
std::uint64_t exponent(const Polynomial& f);

/// Irreducibility of f(x^n) decided from the exponent of f.
bool composition_irreducible(const Polynomial& f, std::uint64_t n);

}  // namespace dickson::oracle
