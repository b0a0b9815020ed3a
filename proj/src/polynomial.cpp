#include "dickson/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dickson/error.hpp"

namespace dickson {

namespace {

void require_same(const Polynomial& f, const Polynomial& g) { require_same_field(*f.field(), *g.field()); }

// Products of two residues below 2^20 stay below 2^40, so up to 2^23 of them
// can be summed in 64 bits before reducing.
constexpr std::uint64_t kLazyPrimeLimit = std::uint64_t{1} << 20;
constexpr std::size_t kLazyTermLimit = std::size_t{1} << 23;

}  // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_) {
        if (!field_->contains(c)) {
            fail(ErrorCode::InvalidArgument, "coefficient " + std::to_string(c) + " is not in " + field_->name());
        }
    }
    trim();
}

Polynomial Polynomial::constant(FieldPtr field, Code c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::monomial(FieldPtr field, Code c, std::size_t degree) {
    std::vector<Code> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Polynomial Polynomial::scaled(Code c) const {
    Polynomial r(field_);
    if (c == 0) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (auto a : coeffs_) r.coeffs_.push_back(field_->mul(a, c));
    return r;
}

Polynomial Polynomial::shifted(std::size_t k) const {
    Polynomial r(field_);
    if (is_zero()) return r;
    r.coeffs_.assign(k, 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_);
    r.coeffs_.reserve(coeffs_.size());
    for (auto a : coeffs_) r.coeffs_.push_back(field_->neg(a));
    return r;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    require_same(f, g);
    const auto& F = *f.field_;
    Polynomial r(f.field_);
    r.coeffs_.resize(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = F.add(f.coeff(i), g.coeff(i));
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    require_same(f, g);
    const auto& F = *f.field_;
    Polynomial r(f.field_);
    r.coeffs_.resize(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = F.sub(f.coeff(i), g.coeff(i));
    r.trim();
    return r;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    require_same(f, g);
    Polynomial r(f.field_);
    if (f.is_zero() || g.is_zero()) return r;
    const auto& F = *f.field_;
    const auto n = f.coeffs_.size() + g.coeffs_.size() - 1;
    if (F.degree() == 1 && F.characteristic() < kLazyPrimeLimit &&
        std::min(f.coeffs_.size(), g.coeffs_.size()) < kLazyTermLimit) {
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            const auto a = f.coeffs_[i];
            if (a == 0) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) acc[i + j] += a * g.coeffs_[j];
        }
        const auto p = F.characteristic();
        r.coeffs_.resize(n);
        for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = acc[i] % p;
    } else {
        r.coeffs_.assign(n, 0);
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            const auto a = f.coeffs_[i];
            if (a == 0) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
                r.coeffs_[i + j] = F.add(r.coeffs_[i + j], F.mul(a, g.coeffs_[j]));
            }
        }
    }
    r.trim();
    return r;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.coeffs_ == g.coeffs_ && f.field_->same_as(*g.field_);
}

DivRem divrem(const Polynomial& f, const Polynomial& g) {
    require_same(f, g);
    if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    const auto& F = *f.field();
    auto rem = f.coeffs();
    const auto& div = g.coeffs();
    const auto dg = div.size() - 1;
    if (rem.size() < div.size()) return {Polynomial(f.field()), f};
    const auto lead_inv = F.inv(div.back());
    std::vector<Code> quot(rem.size() - dg, 0);
    for (std::size_t i = rem.size(); i-- > dg;) {
        const auto c = rem[i];
        if (c == 0) continue;
        const auto factor = F.mul(c, lead_inv);
        quot[i - dg] = factor;
        const auto nf = F.neg(factor);
        for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] = F.add(rem[i - dg + j], F.mul(nf, div[j]));
    }
    rem.resize(dg);
    return {Polynomial(f.field(), std::move(quot)), Polynomial(f.field(), std::move(rem))};
}

Polynomial rem(const Polynomial& f, const Polynomial& g) { return divrem(f, g).rem; }

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) fail(ErrorCode::InternalInconsistency, "inexact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    require_same(f, g);
    auto a = f;
    auto b = g;
    while (!b.is_zero()) {
        auto r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

Polynomial pow(const Polynomial& f, std::uint64_t e) {
    auto result = Polynomial::constant(f.field(), 1);
    auto base = f;
    while (e != 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

Polynomial mul_mod(const Polynomial& f, const Polynomial& g, const Polynomial& m) { return rem(f * g, m); }

Polynomial pow_mod(const Polynomial& f, std::uint64_t e, const Polynomial& m) {
    if (m.is_zero()) fail(ErrorCode::DivisionByZero, "pow_mod with zero modulus");
    auto result = rem(Polynomial::constant(f.field(), 1), m);
    auto base = rem(f, m);
    while (e != 0) {
        if (e & 1) result = mul_mod(result, base, m);
        e >>= 1;
        if (e != 0) base = mul_mod(base, base, m);
    }
    return result;
}

Code eval(const Polynomial& f, Code point) {
    const auto& F = *f.field();
    Code acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = F.add(F.mul(acc, point), *it);
    return acc;
}

FieldElement eval(const Polynomial& f, const FieldElement& point) {
    require_same_field(*f.field(), *point.field());
    return {f.field(), eval(f, point.code())};
}

Polynomial derivative(const Polynomial& f) {
    const auto& F = *f.field();
    std::vector<Code> d;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        d.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i % F.characteristic())), f.coeffs()[i]));
    }
    return Polynomial(f.field(), std::move(d));
}

Polynomial make_monic(const Polynomial& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return f.scaled(f.field()->inv(f.lead()));
}

Polynomial compose(const Polynomial& f, const Polynomial& g) {
    require_same(f, g);
    Polynomial acc(f.field());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * g + Polynomial::constant(f.field(), *it);
    }
    return acc;
}

Polynomial a_reciprocal(const Polynomial& f, const FieldElement& a) {
    require_same_field(*f.field(), *a.field());
    if (!f.is_monic()) fail(ErrorCode::NotMonic, "a-reciprocal needs a monic polynomial");
    if (f.coeff(0) == 0) fail(ErrorCode::ZeroConstantTerm, "a-reciprocal needs f(0) != 0");
    if (a.is_zero()) fail(ErrorCode::ZeroParameter, "a-reciprocal needs a != 0");
    const auto& F = *f.field();
    const auto n = f.coeffs().size() - 1;
    const auto inv_f0 = F.inv(f.coeff(0));
    // coefficient of x^(n-i) is f_i * a^i / f(0)
    std::vector<Code> out(n + 1, 0);
    Code a_pow = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        out[n - i] = F.mul(F.mul(f.coeff(i), a_pow), inv_f0);
        a_pow = F.mul(a_pow, a.code());
    }
    return Polynomial(f.field(), std::move(out));
}

bool is_a_self_reciprocal(const Polynomial& f, const FieldElement& a) { return a_reciprocal(f, a) == f; }

bool canonical_less(const Polynomial& f, const Polynomial& g) {
    if (f.coeffs().size() != g.coeffs().size()) return f.coeffs().size() < g.coeffs().size();
    return f.coeffs() < g.coeffs();
}

Polynomial Factorization::expand() const {
    auto acc = Polynomial::constant(lead.field(), lead.code());
    for (const auto& [poly, mult] : factors) acc = acc * pow(poly, mult);
    return acc;
}

std::uint64_t Factorization::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [poly, mult] : factors) d += mult * poly.degree().value_or(0);
    return d;
}

Factorization canonicalize(Factorization fact) {
    std::stable_sort(fact.factors.begin(), fact.factors.end(),
                     [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
    std::vector<Factor> merged;
    for (auto& f : fact.factors) {
        if (!merged.empty() && merged.back().poly == f.poly) {
            merged.back().multiplicity += f.multiplicity;
        } else {
            merged.push_back(std::move(f));
        }
    }
    fact.factors = std::move(merged);
    return fact;
}

bool operator==(const Factorization& a, const Factorization& b) {
    if (!(a.lead == b.lead) || a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        if (!(a.factors[i].poly == b.factors[i].poly) || a.factors[i].multiplicity != b.factors[i].multiplicity) {
            return false;
        }
    }
    return true;
}

std::string to_text(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const auto c = f.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        out += std::to_string(c);
        if (i > 0) out += "*x^" + std::to_string(i);
    }
    return out;
}

Polynomial parse_polynomial(const FieldPtr& field, std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    auto bad = [&](const std::string& why) -> void {
        fail(ErrorCode::ParseError, "cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    if (s.empty()) bad("empty input");

    auto parse_uint = [&](std::string_view part) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) bad("bad number '" + std::string(part) + "'");
        return v;
    };

    std::vector<Code> coeffs;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find('+', start);
        if (end == std::string::npos) end = s.size();
        const std::string_view term(s.data() + start, end - start);
        if (term.empty()) bad("empty term");

        Code c = 1;
        std::size_t degree = 0;
        const auto xpos = term.find('x');
        if (xpos == std::string_view::npos) {
            c = parse_uint(term);
        } else {
            auto head = term.substr(0, xpos);
            if (!head.empty()) {
                if (head.back() != '*') bad("expected '*' before x");
                c = parse_uint(head.substr(0, head.size() - 1));
            }
            auto tail = term.substr(xpos + 1);
            if (tail.empty()) {
                degree = 1;
            } else {
                if (tail.front() != '^') bad("expected '^' after x");
                degree = parse_uint(tail.substr(1));
            }
        }
        if (!field->contains(c)) bad("coefficient " + std::to_string(c) + " not in " + field->name());
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
        coeffs[degree] = field->add(coeffs[degree], c);
        start = end + 1;
    }
    return Polynomial(field, std::move(coeffs));
}

std::string to_text(const Factorization& fact) {
    std::string out;
    if (fact.lead.code() != 1 || fact.factors.empty()) out = std::to_string(fact.lead.code());
    for (const auto& [poly, mult] : fact.factors) {
        if (!out.empty()) out += " * ";
        const bool is_x = poly.coeffs().size() == 2 && poly.coeff(0) == 0 && poly.coeff(1) == 1;
        out += is_x ? "x" : "(" + to_text(poly) + ")";
        out += "^" + std::to_string(mult);
    }
    return out;
}

}  // namespace dickson
