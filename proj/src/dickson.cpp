#include "dickson/dickson.hpp"

#include <random>

#include "dickson/error.hpp"
#include "dickson/extension.hpp"
#include "dickson/numtheory.hpp"

namespace dickson {

namespace {

constexpr std::uint64_t kExplicitLimit = 64;

using Wide = unsigned __int128;

Wide binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Wide r = 1;
    for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

void require_degree(std::uint64_t n) {
    if (n < 1) fail(ErrorCode::InvalidDegree, "Dickson degree must be at least 1");
}

// x * prev - a * prevprev
Polynomial recurrence_step(const Polynomial& prev, const Polynomial& prevprev, Code a) {
    return prev.shifted(1) - prevprev.scaled(a);
}

Polynomial recurrence(std::uint64_t n, const FieldElement& a, Code seed0) {
    const auto& field = a.field();
    auto prevprev = Polynomial::constant(field, seed0);
    auto prev = Polynomial::x(field);
    for (std::uint64_t j = 2; j <= n; ++j) {
        auto next = recurrence_step(prev, prevprev, a.code());
        prevprev = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

Polynomial explicit_formula(std::uint64_t n, const FieldElement& a, bool first_kind) {
    require_degree(n);
    if (n > kExplicitLimit) fail(ErrorCode::Unsupported, "closed coefficient formula is limited to n <= 64");
    const auto& F = *a.field();
    const auto p = F.characteristic();
    std::vector<Code> coeffs(n + 1, 0);
    const auto minus_a = F.neg(a.code());
    Code sign_pow = 1;
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
        Wide c = binomial(n - i, i);
        if (first_kind) c = c * n / (n - i);
        const auto reduced = static_cast<Code>(c % p);
        coeffs[n - 2 * i] = F.mul(F.from_int(static_cast<std::int64_t>(reduced)), sign_pow);
        sign_pow = F.mul(sign_pow, minus_a);
    }
    return Polynomial(a.field(), std::move(coeffs));
}

}  // namespace

std::string_view to_string(Kind kind) { return kind == Kind::First ? "first" : "second"; }

Polynomial dickson_first(std::uint64_t n, const FieldElement& a) {
    require_degree(n);
    auto d = recurrence(n, a, a.field()->from_int(2));
    if (n <= kExplicitLimit && !(d == explicit_formula(n, a, true))) {
        fail(ErrorCode::InternalInconsistency, "D_n recurrence disagrees with the coefficient formula");
    }
    return d;
}

Polynomial dickson_second(std::uint64_t n, const FieldElement& a) {
    require_degree(n);
    auto e = recurrence(n, a, 1);
    if (n <= kExplicitLimit && !(e == explicit_formula(n, a, false))) {
        fail(ErrorCode::InternalInconsistency, "E_n recurrence disagrees with the coefficient formula");
    }
    return e;
}

Polynomial dickson_poly(Kind kind, std::uint64_t n, const FieldElement& a) {
    return kind == Kind::First ? dickson_first(n, a) : dickson_second(n, a);
}

std::vector<Polynomial> dickson_first_sequence(std::uint64_t n, const FieldElement& a) {
    const auto& field = a.field();
    std::vector<Polynomial> seq;
    seq.reserve(n + 1);
    seq.push_back(Polynomial::constant(field, field->from_int(2)));
    if (n >= 1) seq.push_back(Polynomial::x(field));
    for (std::uint64_t j = 2; j <= n; ++j) seq.push_back(recurrence_step(seq[j - 1], seq[j - 2], a.code()));
    return seq;
}

Polynomial dickson_first_explicit(std::uint64_t n, const FieldElement& a) { return explicit_formula(n, a, true); }
Polynomial dickson_second_explicit(std::uint64_t n, const FieldElement& a) { return explicit_formula(n, a, false); }

bool waring_check(Kind kind, std::uint64_t n, const FieldElement& a, unsigned samples, std::uint64_t seed) {
    const auto view = ExtensionView::over(a.field());
    const auto& K = *view.ext();
    const auto poly = view.embed(dickson_poly(kind, n, a));
    const auto ak = view.embed(a.code());
    std::mt19937_64 rng(seed);
    for (unsigned s = 0; s < samples; ++s) {
        Code y = 0;
        while (y == 0) y = rng() % K.order();
        const auto a_over_y = K.div(ak, y);
        const auto arg = K.add(y, a_over_y);
        if (kind == Kind::First) {
            const auto rhs = K.add(K.pow(y, n), K.pow(a_over_y, n));
            if (eval(poly, arg) != rhs) return false;
        } else {
            const auto denom = K.sub(y, a_over_y);
            if (denom == 0) continue;
            const auto rhs = K.sub(K.pow(y, n + 1), K.pow(a_over_y, n + 1));
            if (K.mul(eval(poly, arg), denom) != rhs) return false;
        }
    }
    return true;
}

bool is_permutation(Kind kind, std::uint64_t n, const FieldElement& a) {
    if (kind != Kind::First) fail(ErrorCode::Unsupported, "permutation criterion is implemented for the first kind only");
    require_degree(n);
    const auto q = a.field()->order();
    if (a.is_zero()) return nt::gcd(n, q - 1) == 1;
    return nt::gcd(n, q * q - 1) == 1;
}

}  // namespace dickson
