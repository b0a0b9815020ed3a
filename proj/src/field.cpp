#include "dickson/field.hpp"

#include <algorithm>
#include <charconv>

#include "dickson/error.hpp"
#include "dickson/numtheory.hpp"
#include "dickson/oracle.hpp"
#include "dickson/polynomial.hpp"

namespace dickson {

namespace {

std::uint64_t field_order_or_throw(std::uint64_t p, unsigned k, std::uint64_t limit) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "extension degree must be at least 1");
    if (p > limit) fail(ErrorCode::FieldTooLarge, std::to_string(p) + " exceeds the field size bound " + std::to_string(limit));
    if (!nt::is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    const auto q = nt::checked_pow(p, k, limit);
    if (q == 0) {
        fail(ErrorCode::FieldTooLarge,
             std::to_string(p) + "^" + std::to_string(k) + " exceeds the field size bound " + std::to_string(limit));
    }
    return q;
}

bool irreducible_over_prime_field(std::uint64_t p, const std::vector<Code>& monic) {
    auto prime_field = Field::create(p, 1);
    return oracle::is_irreducible(Polynomial(prime_field, monic));
}

// Candidates are visited with the constant term as the most significant digit,
// which realises the "compare from the constant term upward" ordering.
std::vector<Code> smallest_irreducible(std::uint64_t p, unsigned k) {
    const auto count = nt::checked_pow(p, k, kMaxExtensionOrder);
    std::vector<Code> poly(k + 1, 0);
    poly[k] = 1;
    for (std::uint64_t m = 0; m < count; ++m) {
        auto rest = m;
        for (unsigned i = 0; i < k; ++i) {
            poly[k - 1 - i] = rest % p;
            rest /= p;
        }
        if (poly[0] == 0) continue;
        if (irreducible_over_prime_field(p, poly)) return poly;
    }
    fail(ErrorCode::InternalInconsistency, "no irreducible polynomial found");
}

}  // namespace

FieldPtr Field::create(std::uint64_t p, unsigned k, std::optional<std::vector<Code>> modulus) {
    return create_bounded(p, k, std::move(modulus), kMaxFieldOrder);
}

FieldPtr Field::create_bounded(std::uint64_t p, unsigned k, std::optional<std::vector<Code>> modulus,
                               std::uint64_t limit) {
    field_order_or_throw(p, k, limit);
    std::vector<Code> mod;
    if (modulus) {
        if (k == 1) fail(ErrorCode::InvalidArgument, "a modulus is only meaningful for k > 1");
        mod = *modulus;
        if (mod.size() != k + 1 || mod.back() != 1) {
            fail(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(k));
        }
        for (auto c : mod) {
            if (c >= p) fail(ErrorCode::InvalidArgument, "modulus coefficient out of range");
        }
        if (!irreducible_over_prime_field(p, mod)) {
            fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
        }
    } else if (k > 1) {
        mod = smallest_irreducible(p, k);
    }
    return std::make_shared<const Field>(Token{}, p, k, std::move(mod));
}

Field::Field(Token, std::uint64_t p, unsigned k, std::vector<Code> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
    pow_p_.reserve(k_);
    for (unsigned i = 0; i < k_; ++i) {
        pow_p_.push_back(q_);
        q_ *= p_;
    }
    group_primes_ = nt::prime_divisors(q_ - 1);
    generator_ = find_generator();
    if (k_ > 1 && q_ <= kMaxFieldOrder) build_tables();
}

std::string Field::name() const {
    if (k_ == 1) return "F_" + std::to_string(p_);
    return "F_" + std::to_string(p_) + "^" + std::to_string(k_);
}

bool Field::same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

Code Field::add(Code a, Code b) const {
    if (k_ == 1) {
        const auto s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    Code r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        const auto d = (a % p_ + b % p_) % p_;
        r += d * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Code Field::neg(Code a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    Code r = 0;
    for (unsigned i = 0; i < k_; ++i) {
        const auto d = a % p_;
        if (d != 0) r += (p_ - d) * pow_p_[i];
        a /= p_;
    }
    return r;
}

Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Code Field::mul(Code a, Code b) const {
    if (k_ == 1) return (a * b) % p_;
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_coords(a, b);
}

Code Field::mul_coords(Code a, Code b) const {
    const auto ca = coords(a);
    const auto cb = coords(b);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    for (std::size_t d = prod.size() - 1; d >= k_; --d) {
        const auto lead = prod[d];
        if (lead == 0) continue;
        for (unsigned i = 0; i < k_; ++i) {
            const auto sub = (lead * modulus_[i]) % p_;
            prod[d - k_ + i] = (prod[d - k_ + i] + p_ - sub) % p_;
        }
        prod[d] = 0;
    }
    return from_coords(std::span<const std::uint64_t>(prod.data(), k_));
}

Code Field::inv(Code a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + name());
    if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

Code Field::div(Code a, Code b) const { return mul(a, inv(b)); }

Code Field::pow(Code a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (!log_.empty()) {
        const auto l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[l];
    }
    Code result = 1;
    Code base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

Code Field::from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    auto r = v % p;
    if (r < 0) r += p;
    return static_cast<Code>(r);
}

std::vector<std::uint64_t> Field::coords(Code c) const {
    std::vector<std::uint64_t> out(k_);
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = c % p_;
        c /= p_;
    }
    return out;
}

Code Field::from_coords(std::span<const std::uint64_t> coords) const {
    Code r = 0;
    for (std::size_t i = 0; i < coords.size() && i < k_; ++i) r += (coords[i] % p_) * pow_p_[i];
    return r;
}

Code Field::find_generator() const {
    if (q_ == 2) return 1;
    for (Code g = 2; g < q_; ++g) {
        bool primitive = true;
        for (auto r : group_primes_) {
            if (pow(g, (q_ - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    fail(ErrorCode::InternalInconsistency, "no primitive root in " + name());
}

void Field::build_tables() {
    std::vector<std::uint32_t> log(q_, 0);
    std::vector<std::uint32_t> exp(2 * (q_ - 1), 0);
    Code x = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        exp[i] = static_cast<std::uint32_t>(x);
        exp[i + q_ - 1] = static_cast<std::uint32_t>(x);
        log[x] = static_cast<std::uint32_t>(i);
        x = mul_coords(x, generator_);
    }
    log_ = std::move(log);
    exp_ = std::move(exp);
}

std::uint64_t Field::mult_order(Code e) const {
    if (e == 0) fail(ErrorCode::ZeroElement, "zero has no multiplicative order");
    auto d = q_ - 1;
    for (auto r : group_primes_) {
        while (d % r == 0 && pow(e, d / r) == 1) d /= r;
    }
    return d;
}

bool Field::is_square(Code e) const {
    if (p_ == 2 || e == 0) return true;
    return pow(e, (q_ - 1) / 2) == 1;
}

Code Field::tonelli_shanks(Code e) const {
    auto odd = q_ - 1;
    unsigned s = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++s;
    }
    // The primitive root is a non-residue.
    auto m = s;
    auto c = pow(generator_, odd);
    auto t = pow(e, odd);
    auto r = pow(e, (odd + 1) / 2);
    while (t != 1) {
        unsigned i = 0;
        auto t2 = t;
        while (t2 != 1) {
            t2 = mul(t2, t2);
            ++i;
        }
        auto b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

Code Field::sqrt(Code e) const {
    if (e == 0) return 0;
    if (p_ == 2) return pow(e, q_ / 2);
    if (!is_square(e)) fail(ErrorCode::NotASquare, std::to_string(e) + " is not a square in " + name());
    const auto r = (q_ % 4 == 3) ? pow(e, (q_ + 1) / 4) : tonelli_shanks(e);
    if (mul(r, r) != e) fail(ErrorCode::InternalInconsistency, "square root check failed");
    return std::min(r, neg(r));
}

std::vector<Code> Field::elements_of_order_dividing(std::uint64_t d) const {
    if (d == 0) fail(ErrorCode::InvalidArgument, "order bound must be positive");
    const auto count = nt::gcd(d, q_ - 1);
    const auto step = pow(generator_, (q_ - 1) / count);
    std::vector<Code> out;
    out.reserve(count);
    Code x = 1;
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(x);
        x = mul(x, step);
    }
    return out;
}

void require_same_field(const Field& a, const Field& b) {
    if (!a.same_as(b)) fail(ErrorCode::MixedFields, "elements of " + a.name() + " and " + b.name() + " mixed");
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
    if (!field_->contains(code_)) {
        fail(ErrorCode::InvalidArgument, "code " + std::to_string(code_) + " is not an element of " + field_->name());
    }
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return {x.field_, x.field_->add(x.code_, y.code_)};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return {x.field_, x.field_->sub(x.code_, y.code_)};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return {x.field_, x.field_->mul(x.code_, y.code_)};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    require_same_field(*x.field_, *y.field_);
    return {x.field_, x.field_->div(x.code_, y.code_)};
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.code_ == y.code_ && x.field_->same_as(*y.field_);
}

std::uint64_t mult_order(const FieldElement& e) { return e.field()->mult_order(e.code()); }
bool is_square(const FieldElement& e) { return e.field()->is_square(e.code()); }
FieldElement sqrt(const FieldElement& e) { return {e.field(), e.field()->sqrt(e.code())}; }

std::vector<FieldElement> elements_of_order_dividing(const FieldPtr& field, std::uint64_t d) {
    std::vector<FieldElement> out;
    for (auto c : field->elements_of_order_dividing(d)) out.emplace_back(field, c);
    return out;
}

FieldSpec parse_field_spec(const std::string& text) {
    auto parse_uint = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
            fail(ErrorCode::ParseError, "malformed field spec '" + text + "'");
        }
        return v;
    };
    const auto caret = text.find('^');
    if (caret == std::string::npos) {
        // a bare prime power q is read as p^k
        const auto q = parse_uint(text);
        if (q > kMaxExtensionOrder) return {q, 1};
        const auto primes = nt::prime_divisors(q);
        if (primes.size() != 1) return {q, 1};
        unsigned k = 0;
        for (auto r = q; r > 1; r /= primes[0]) ++k;
        return {primes[0], k};
    }
    const std::string_view view(text);
    const auto k = parse_uint(view.substr(caret + 1));
    if (k == 0 || k > 64) fail(ErrorCode::ParseError, "malformed extension degree in '" + text + "'");
    return {parse_uint(view.substr(0, caret)), static_cast<unsigned>(k)};
}

}  // namespace dickson
