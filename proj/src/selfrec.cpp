#include "dickson/selfrec.hpp"

#include "dickson/dickson.hpp"
#include "dickson/error.hpp"

namespace dickson {

namespace {

void require_parameter(const Polynomial& f, const FieldElement& a) {
    require_same_field(*f.field(), *a.field());
    if (a.is_zero()) fail(ErrorCode::ZeroParameter, "the transform parameter a must be nonzero");
}

}  // namespace

Polynomial phi(const Polynomial& f, const FieldElement& a) {
    require_parameter(f, a);
    if (!f.is_monic()) fail(ErrorCode::NotMonic, "phi needs a monic polynomial");
    const auto m = f.coeffs().size() - 1;
    if (m < 1) fail(ErrorCode::InvalidDegree, "phi needs degree >= 1");
    const auto& field = f.field();
    // R_i = R_{i+1} (x^2 + a) + f_i x^(m-i), R_m = f_m
    const Polynomial quad(field, {a.code(), 0, 1});
    auto acc = Polynomial::constant(field, f.coeff(m));
    for (std::size_t i = m; i-- > 0;) {
        acc = acc * quad + Polynomial::monomial(field, f.coeff(i), m - i);
    }
    return acc;
}

Polynomial psi(const Polynomial& g, const FieldElement& a) {
    require_parameter(g, a);
    if (!g.is_monic()) fail(ErrorCode::NotMonic, "psi needs a monic polynomial");
    const auto deg = g.coeffs().size() - 1;
    if (deg % 2 != 0) fail(ErrorCode::OddDegree, "psi needs an even degree");
    if (deg == 0) fail(ErrorCode::InvalidDegree, "psi needs degree >= 2");
    if (g.coeff(0) == 0 || !is_a_self_reciprocal(g, a)) {
        fail(ErrorCode::NotSelfReciprocal, "psi needs an a-self-reciprocal polynomial");
    }
    const auto m = deg / 2;
    const auto d = dickson_first_sequence(m, a);
    auto acc = Polynomial::constant(g.field(), g.coeff(m));
    for (std::size_t i = 0; i < m; ++i) acc = acc + d[m - i].scaled(g.coeff(2 * m - i));
    return acc;
}

bool phi_psi_roundtrip(const Polynomial& f, const FieldElement& a) {
    const auto g = phi(f, a);
    const auto back = psi(g, a);
    return back == f && phi(back, a) == g;
}

bool phi_psi_multiplicative(const Polynomial& f, const Polynomial& g, const FieldElement& a) {
    const auto pf = phi(f, a);
    const auto pg = phi(g, a);
    return phi(f * g, a) == pf * pg && psi(pf * pg, a) == f * g;
}

}  // namespace dickson
