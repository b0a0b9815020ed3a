#include "dickson/oracle.hpp"

#include <algorithm>
#include <random>

#include "dickson/error.hpp"
#include "dickson/numtheory.hpp"

namespace dickson::oracle {

namespace {

std::size_t deg(const Polynomial& f) { return f.coeffs().size() - 1; }

Polynomial x_of(const Polynomial& f) { return Polynomial::x(f.field()); }

// x^j mod f for j = 0 .. count-1, each obtained from the previous by one shift.
std::vector<Polynomial> shifted_powers(const Polynomial& f, std::size_t stride, std::size_t count) {
    const auto& F = *f.field();
    const auto m = deg(f);
    std::vector<Code> cur(m, 0);
    cur[0] = 1;
    std::vector<Polynomial> out;
    out.reserve(count);
    out.emplace_back(f.field(), cur);
    for (std::size_t i = 1; i < count; ++i) {
        for (std::size_t step = 0; step < stride; ++step) {
            const auto top = cur[m - 1];
            for (std::size_t j = m - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top != 0) {
                const auto nt = F.neg(top);
                for (std::size_t j = 0; j < m; ++j) cur[j] = F.add(cur[j], F.mul(nt, f.coeff(j)));
            }
        }
        out.emplace_back(f.field(), cur);
    }
    return out;
}

// A random polynomial of degree < bound that is not constant.
Polynomial random_poly(const FieldPtr& field, std::size_t bound, std::mt19937_64& rng) {
    const auto q = field->order();
    for (;;) {
        std::vector<Code> c(bound);
        for (auto& v : c) v = rng() % q;
        Polynomial r(field, std::move(c));
        if (r.degree().value_or(0) >= 1) return r;
    }
}

// Coefficient-wise c -> c^(q/p) undoes the Frobenius x -> x^p on a p-th power.
Polynomial pth_root(const Polynomial& f) {
    const auto& F = *f.field();
    const auto p = F.characteristic();
    const auto e = F.order() / p;
    std::vector<Code> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(F.pow(f.coeffs()[i], e));
    return Polynomial(f.field(), std::move(out));
}

struct DegreeBlock {
    Polynomial product;
    std::size_t degree;
};

std::vector<DegreeBlock> distinct_degree(const Polynomial& s) {
    std::vector<DegreeBlock> out;
    if (deg(s) == 1) return {{s, 1}};
    const FrobeniusMap frob(s);
    const auto x = x_of(s);
    auto rest = s;
    auto h = x;
    std::size_t d = 0;
    while (deg(rest) >= 2 * (d + 1)) {
        ++d;
        h = frob.apply(h);
        auto g = gcd(rest, h - x);
        if (deg(g) > 0) {
            rest = exact_div(rest, g);
            out.push_back({std::move(g), d});
        }
    }
    if (deg(rest) > 0) {
        const auto dr = deg(rest);
        out.push_back({std::move(rest), dr});
    }
    return out;
}

void equal_degree(const Polynomial& h, std::size_t d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
    if (deg(h) == d) {
        out.push_back(h);
        return;
    }
    const auto& F = *h.field();
    const auto q = F.order();
    for (;;) {
        const auto r = random_poly(h.field(), deg(h), rng);
        Polynomial probe(h.field());
        if (q % 2 == 1) {
            // r^((q^d - 1)/2) = (r * r^q * ... * r^(q^(d-1)))^((q-1)/2)
            auto conj = r;
            auto norm = r;
            for (std::size_t i = 1; i < d; ++i) {
                conj = pow_mod(conj, q, h);
                norm = mul_mod(norm, conj, h);
            }
            probe = pow_mod(norm, (q - 1) / 2, h) - Polynomial::constant(h.field(), 1);
        } else {
            // absolute trace r + r^2 + ... + r^(2^(k d - 1))
            const auto rounds = static_cast<std::size_t>(F.degree()) * d;
            auto term = rem(r, h);
            probe = term;
            for (std::size_t i = 1; i < rounds; ++i) {
                term = mul_mod(term, term, h);
                probe = probe + term;
            }
        }
        auto g = gcd(h, probe);
        const auto dg = g.degree().value_or(0);
        if (dg > 0 && dg < deg(h)) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_div(h, g), d, rng, out);
            return;
        }
    }
}

std::uint64_t group_order_for(const Polynomial& f) {
    const auto q = f.field()->order();
    const auto m = static_cast<unsigned>(deg(f));
    const auto qm = nt::checked_pow(q, m, kMaxExtensionOrder);
    if (qm == 0) fail(ErrorCode::FieldTooLarge, "q^m exceeds the supported bound for exponent computation");
    return qm - 1;
}

}  // namespace

FrobeniusMap::FrobeniusMap(const Polynomial& modulus) : modulus_(make_monic(modulus)) {
    if (modulus_.degree().value_or(0) < 1) fail(ErrorCode::InvalidArgument, "Frobenius map needs a modulus of degree >= 1");
    const auto m = deg(modulus_);
    const auto q = modulus_.field()->order();
    std::vector<Polynomial> cols;
    if (q <= 2 * m) {
        cols = shifted_powers(modulus_, q, m);
    } else {
        const auto xq = pow_mod(x_of(modulus_), q, modulus_);
        cols.push_back(Polynomial::constant(modulus_.field(), 1));
        for (std::size_t i = 1; i < m; ++i) cols.push_back(mul_mod(cols.back(), xq, modulus_));
    }
    columns_.reserve(m);
    for (auto& c : cols) {
        auto v = c.coeffs();
        v.resize(m, 0);
        columns_.push_back(std::move(v));
    }
}

Polynomial FrobeniusMap::apply(const Polynomial& h) const {
    const auto& F = *modulus_.field();
    const auto m = columns_.size();
    const auto reduced = h.coeffs().size() > m ? rem(h, modulus_) : h;
    const auto& hc = reduced.coeffs();
    if (F.degree() == 1 && F.characteristic() < (std::uint64_t{1} << 20)) {
        const auto p = F.characteristic();
        std::vector<std::uint64_t> acc(m, 0);
        for (std::size_t i = 0; i < hc.size(); ++i) {
            const auto c = hc[i];
            if (c == 0) continue;
            const auto& col = columns_[i];
            for (std::size_t j = 0; j < m; ++j) acc[j] += c * col[j];
            if ((i & 0xFFFF) == 0xFFFF) {
                for (auto& a : acc) a %= p;
            }
        }
        std::vector<Code> out(m);
        for (std::size_t j = 0; j < m; ++j) out[j] = acc[j] % p;
        return Polynomial(modulus_.field(), std::move(out));
    }
    std::vector<Code> out(m, 0);
    for (std::size_t i = 0; i < hc.size(); ++i) {
        const auto c = hc[i];
        if (c == 0) continue;
        const auto& col = columns_[i];
        for (std::size_t j = 0; j < m; ++j) {
            if (col[j] != 0) out[j] = F.add(out[j], F.mul(c, col[j]));
        }
    }
    return Polynomial(modulus_.field(), std::move(out));
}

bool is_irreducible(const Polynomial& f) {
    if (f.is_zero() || deg(f) < 1) fail(ErrorCode::InvalidDegree, "irreducibility test needs degree >= 1");
    const auto g = make_monic(f);
    const auto m = deg(g);
    if (m == 1) return true;
    if (g.coeff(0) == 0) return false;
    const auto primes = nt::prime_divisors(m);
    const FrobeniusMap frob(g);
    const auto x = x_of(g);
    auto h = x;
    for (std::size_t j = 1; j <= m; ++j) {
        h = frob.apply(h);
        for (auto r : primes) {
            if (j == m / r && !gcd(h - x, g).is_one()) return false;
        }
    }
    return h == x;
}

std::vector<Factor> squarefree_decompose(const Polynomial& f) {
    if (f.degree().value_or(0) < 1) fail(ErrorCode::InvalidDegree, "squarefree decomposition needs degree >= 1");
    const auto monic = make_monic(f);
    const auto p = monic.field()->characteristic();
    std::vector<Factor> out;
    auto append_pth = [&](const Polynomial& c) {
        for (auto& [g, i] : squarefree_decompose(pth_root(c))) out.push_back({std::move(g), i * p});
    };

    const auto df = derivative(monic);
    if (df.is_zero()) {
        append_pth(monic);
    } else {
        auto c = gcd(monic, df);
        auto w = exact_div(monic, c);
        std::uint64_t i = 1;
        while (!w.is_one()) {
            auto y = gcd(w, c);
            auto z = exact_div(w, y);
            if (z.degree().value_or(0) > 0) out.push_back({std::move(z), i});
            ++i;
            c = exact_div(c, y);
            w = std::move(y);
        }
        if (!c.is_one()) append_pth(c);
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.multiplicity < b.multiplicity; });
    return out;
}

Factorization factor(const Polynomial& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorCode::InvalidDegree, "cannot factor the zero polynomial");
    Factorization out{FieldElement(f.field(), f.lead()), {}};
    if (deg(f) == 0) return out;
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : squarefree_decompose(f)) {
        for (const auto& block : distinct_degree(part)) {
            std::vector<Polynomial> pieces;
            equal_degree(block.product, block.degree, rng, pieces);
            for (auto& piece : pieces) out.factors.push_back({std::move(piece), mult});
        }
    }
    return canonicalize(std::move(out));
}

std::uint64_t exponent(const Polynomial& f) {
    if (f.degree().value_or(0) < 1) fail(ErrorCode::InvalidDegree, "exponent needs degree >= 1");
    if (f.coeff(0) == 0) fail(ErrorCode::ZeroConstantTerm, "exponent needs f(0) != 0");
    if (!is_irreducible(f)) fail(ErrorCode::NotIrreducible, "exponent needs an irreducible polynomial");
    const auto g = make_monic(f);
    const auto x = x_of(g);
    auto e = group_order_for(g);
    for (auto r : nt::prime_divisors(e)) {
        while (e % r == 0 && pow_mod(x, e / r, g).is_one()) e /= r;
    }
    return e;
}

bool composition_irreducible(const Polynomial& f, std::uint64_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "composition degree must be positive");
    const auto e = exponent(f);
    const auto qm1 = group_order_for(f);
    return e % nt::rad(n) == 0 && nt::gcd(n, qm1 / e) == 1 && (n % 4 != 0 || qm1 % 4 == 0);
}

}  // namespace dickson::oracle
