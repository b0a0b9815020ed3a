#pragma once

#include <optional>
#include <vector>

#include "dickson/field.hpp"
#include "dickson/polynomial.hpp"

namespace dickson {

/**
 * @brief F_{q^2} viewed over F_q.
 *
 * The extension is F_p[x]/(m'(x)) with m' the smallest irreducible of degree
 * 2k. The base generator maps to the smallest-code root of the base modulus in
 * the extension; for prime bases the embedding is the identity on codes.
 */
class ExtensionView {
public:
    /// quadratic_extension
    static ExtensionView over(FieldPtr base);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& ext() const { return ext_; }

    Code embed(Code c) const;
    FieldElement embed(const FieldElement& e) const;
    /// Preimage under embed, or nullopt if the element lies outside the base.
    std::optional<Code> restrict(Code c) const;
    /// beta -> beta^q
    Code frobenius(Code c) const;
    FieldElement frobenius(const FieldElement& e) const;

    Polynomial embed(const Polynomial& f) const;
    std::optional<Polynomial> restrict(const Polynomial& f) const;
    Polynomial frobenius(const Polynomial& f) const;

private:
    ExtensionView(FieldPtr base, FieldPtr ext, std::vector<std::vector<std::uint64_t>> basis);

    FieldPtr base_;
    FieldPtr ext_;
    // coordinates over F_p of theta^i, i < k, with theta the image of the base generator
    std::vector<std::vector<std::uint64_t>> basis_;
};

}  // namespace dickson
