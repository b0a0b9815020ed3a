#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dickson {

/// Canonical integer encoding of a field element: sum of c_i * p^i over the
/// power-basis coordinates c_i. All orderings and tie-breaks use it.
using Code = std::uint64_t;

/// Largest field a caller may construct directly.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;
/// Quadratic extensions of the largest admissible base field still fit here.
inline constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 40;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * @brief The finite field F_q with q = p^k, represented as F_p[x]/(m(x)).
 *
 * Instances are immutable and shared through FieldPtr. Fields of order up to
 * kMaxFieldOrder with k > 1 carry log/antilog tables; larger extension fields
 * fall back to schoolbook multiplication on coordinates.
 */
class Field {
    struct Token {};

public:
    /// Builds F_{p^k}. Without a modulus (k > 1) the lexicographically smallest
    /// monic irreducible of degree k is used, comparing coefficients from the
    /// constant term upward. The modulus is given in ascending order including
    /// its leading 1, e.g. {1, 1, 1} for x^2 + x + 1.
    static FieldPtr create(std::uint64_t p, unsigned k,
                           std::optional<std::vector<Code>> modulus = std::nullopt);

    /// Same as create() but with an explicit order limit; used for F_{q^2}.
    static FieldPtr create_bounded(std::uint64_t p, unsigned k,
                                   std::optional<std::vector<Code>> modulus, std::uint64_t limit);

    Field(Token, std::uint64_t p, unsigned k, std::vector<Code> modulus);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t order() const { return q_; }
    /// Ascending coefficients of the monic modulus, empty for prime fields.
    const std::vector<Code>& modulus() const { return modulus_; }
    std::string name() const;

    bool contains(Code c) const { return c < q_; }
    bool same_as(const Field& other) const;

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code div(Code a, Code b) const;
    Code pow(Code a, std::uint64_t e) const;

    /// Image of an integer in the prime subfield.
    Code from_int(std::int64_t v) const;

    std::vector<std::uint64_t> coords(Code c) const;
    Code from_coords(std::span<const std::uint64_t> coords) const;

    /// Smallest-code generator of the multiplicative group.
    Code primitive_root() const { return generator_; }
    /// Distinct primes of q - 1.
    const std::vector<std::uint64_t>& group_order_primes() const { return group_primes_; }

    std::uint64_t mult_order(Code e) const;
    bool is_square(Code e) const;
    /// Square root with the smaller canonical code.
    Code sqrt(Code e) const;
    /// The gcd(d, q-1) solutions of x^d = 1, as successive powers of
    /// g^((q-1)/gcd(d, q-1)) for the fixed primitive root g.
    std::vector<Code> elements_of_order_dividing(std::uint64_t d) const;

private:
    Code mul_coords(Code a, Code b) const;
    Code find_generator() const;
    void build_tables();
    Code tonelli_shanks(Code e) const;

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<Code> modulus_;
    std::vector<std::uint64_t> pow_p_;
    std::vector<std::uint64_t> group_primes_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    Code generator_ = 1;
};

/// A field element bound to its field. Arithmetic between elements of
/// different fields raises MixedFields.
class FieldElement {
public:
    FieldElement(FieldPtr field, Code code);

    const FieldPtr& field() const { return field_; }
    Code code() const { return code_; }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
    friend bool operator==(const FieldElement& x, const FieldElement& y);

private:
    FieldPtr field_;
    Code code_;
};

/// Throws MixedFields unless both fields describe the same F_q.
void require_same_field(const Field& a, const Field& b);

std::uint64_t mult_order(const FieldElement& e);
bool is_square(const FieldElement& e);
FieldElement sqrt(const FieldElement& e);
std::vector<FieldElement> elements_of_order_dividing(const FieldPtr& field, std::uint64_t d);

/// Parses "p^k" or a prime power "q".
struct FieldSpec {
    std::uint64_t p;
    unsigned k;
};
FieldSpec parse_field_spec(const std::string& text);

}  // namespace dickson
