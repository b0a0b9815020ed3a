#pragma once

// Brute-force references used by the tests. They rely on nothing but ring
// arithmetic and exhaustive search, so they stay independent of the oracle
// and the engine.

#include <cstdint>
#include <random>
#include <vector>

#include "dickson/field.hpp"
#include "dickson/polynomial.hpp"

namespace dickson::testing {

// The i-th monic polynomial of degree d, coefficients below d read as base-q digits.
inline Polynomial nth_monic(const FieldPtr& F, std::size_t d, std::uint64_t i) {
    std::vector<Code> c(d + 1, 0);
    for (std::size_t j = 0; j < d; ++j) {
        c[j] = i % F->order();
        i /= F->order();
    }
    c[d] = 1;
    return Polynomial(F, std::move(c));
}

inline std::uint64_t count_monic(const FieldPtr& F, std::size_t d) {
    std::uint64_t n = 1;
    for (std::size_t j = 0; j < d; ++j) n *= F->order();
    return n;
}

inline std::size_t deg_of(const Polynomial& f) { return f.degree().value_or(0); }

// Trial division by every monic polynomial, smallest degree first.
inline Factorization brute_factor(const Polynomial& f) {
    Factorization out{FieldElement(f.field(), f.lead()), {}};
    auto rest = make_monic(f);
    for (std::size_t d = 1; 2 * d <= deg_of(rest); ++d) {
        const auto total = count_monic(f.field(), d);
        for (std::uint64_t i = 0; i < total && 2 * d <= deg_of(rest); ++i) {
            const auto g = nth_monic(f.field(), d, i);
            for (;;) {
                auto [quo, r] = divrem(rest, g);
                if (!r.is_zero()) break;
                out.factors.push_back({g, 1});
                rest = quo;
            }
        }
    }
    if (deg_of(rest) >= 1) out.factors.push_back({rest, 1});
    return canonicalize(std::move(out));
}

inline bool brute_is_irreducible(const Polynomial& f) {
    const auto fact = brute_factor(f);
    return fact.factors.size() == 1 && fact.factors[0].multiplicity == 1;
}

inline Code horner(const Polynomial& f, Code x) {
    const auto& F = *f.field();
    Code acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs()[i]);
    return acc;
}

inline bool brute_is_permutation(const Polynomial& f) {
    const auto q = f.field()->order();
    std::vector<bool> hit(q, false);
    for (Code x = 0; x < q; ++x) {
        const auto y = horner(f, x);
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

inline Polynomial random_monic(const FieldPtr& F, std::size_t d, std::mt19937_64& rng) {
    std::vector<Code> c(d + 1);
    for (auto& v : c) v = rng() % F->order();
    c[d] = 1;
    return Polynomial(F, std::move(c));
}

inline Code random_nonzero(const FieldPtr& F, std::mt19937_64& rng) { return 1 + rng() % (F->order() - 1); }

// Monic a-self-reciprocal polynomial of degree 2m from free top-half coefficients.
inline Polynomial random_self_reciprocal(const FieldPtr& F, std::size_t m, Code a, std::mt19937_64& rng) {
    std::vector<Code> c(2 * m + 1, 0);
    c[2 * m] = 1;
    for (std::size_t j = m; j < 2 * m; ++j) c[j] = rng() % F->order();
    for (std::size_t i = 0; i < m; ++i) c[i] = F->mul(c[2 * m - i], F->pow(a, m - i));
    return Polynomial(F, std::move(c));
}

// f(b x)
inline Polynomial scale_variable(const Polynomial& f, Code b) {
    const auto& F = *f.field();
    std::vector<Code> c = f.coeffs();
    Code bp = 1;
    for (auto& v : c) {
        v = F.mul(v, bp);
        bp = F.mul(bp, b);
    }
    return Polynomial(f.field(), std::move(c));
}

inline std::vector<FieldPtr> small_fields(std::uint64_t max_q) {
    std::vector<FieldPtr> out;
    for (std::uint64_t q = 2; q <= max_q; ++q) {
        std::uint64_t p = 2;
        while (q % p != 0) ++p;
        unsigned k = 0;
        auto r = q;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r == 1) out.push_back(Field::create(p, k));
    }
    return out;
}

}  // namespace dickson::testing
