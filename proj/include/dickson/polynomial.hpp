#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dickson/field.hpp"

namespace dickson {

/// Dense univariate polynomial over a single field. Coefficients are stored in
/// ascending degree with trailing zeros trimmed; the zero polynomial is empty.
class Polynomial {
public:
    explicit Polynomial(FieldPtr field);
    Polynomial(FieldPtr field, std::vector<Code> coeffs);

    static Polynomial constant(FieldPtr field, Code c);
    static Polynomial monomial(FieldPtr field, Code c, std::size_t degree);
    static Polynomial x(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Code>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Code lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    Polynomial scaled(Code c) const;
    /// Multiplies by x^k.
    Polynomial shifted(std::size_t k) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend bool operator==(const Polynomial& f, const Polynomial& g);

private:
    void trim();

    FieldPtr field_;
    std::vector<Code> coeffs_;
};

struct DivRem {
    Polynomial quot;
    Polynomial rem;
};

DivRem divrem(const Polynomial& f, const Polynomial& g);
Polynomial rem(const Polynomial& f, const Polynomial& g);
/// Exact quotient; raises InternalInconsistency if g does not divide f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, std::uint64_t e);
Polynomial pow_mod(const Polynomial& f, std::uint64_t e, const Polynomial& m);
Polynomial mul_mod(const Polynomial& f, const Polynomial& g, const Polynomial& m);
Code eval(const Polynomial& f, Code point);
FieldElement eval(const Polynomial& f, const FieldElement& point);
Polynomial derivative(const Polynomial& f);
Polynomial make_monic(const Polynomial& f);
/// f(g(x)).
Polynomial compose(const Polynomial& f, const Polynomial& g);

/// f*_a(x) = x^n f(a/x) / f(0): roots alpha map to a/alpha.
Polynomial a_reciprocal(const Polynomial& f, const FieldElement& a);
bool is_a_self_reciprocal(const Polynomial& f, const FieldElement& a);

/// Degree first, then coefficient codes compared from the constant term upward.
bool canonical_less(const Polynomial& f, const Polynomial& g);

struct Factor {
    Polynomial poly;
    std::uint64_t multiplicity;
};

/// lead * prod(poly_i ^ multiplicity_i), factors monic.
struct Factorization {
    FieldElement lead;
    std::vector<Factor> factors;

    Polynomial expand() const;
    std::uint64_t total_degree() const;
};

/// Sorts canonically and merges repeated factors. Idempotent.
Factorization canonicalize(Factorization fact);
bool operator==(const Factorization& a, const Factorization& b);

/// "c*x^d" terms joined by '+', descending, codes as coefficients; "0" for zero.
std::string to_text(const Polynomial& f);
/// Accepts the to_text format plus omitted "1*" and "^1".
Polynomial parse_polynomial(const FieldPtr& field, std::string_view text);
/// e.g. "x^1 * (1*x^2+4)^1"; the factor x prints bare, a non-unit lead prefixes.
std::string to_text(const Factorization& fact);

}  // namespace dickson
