#include "dickson/engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dickson/error.hpp"
#include "dickson/numtheory.hpp"
#include "dickson/oracle.hpp"
#include "dickson/selfrec.hpp"

namespace dickson::engine {

namespace {

using Exclusions = std::vector<std::pair<std::uint64_t, Code>>;

// b^deg(g) g(x / b)
Polynomial rescale(const Polynomial& g, const FieldElement& b) {
    const auto& K = *g.field();
    const auto d = g.coeffs().size() - 1;
    std::vector<Code> out(d + 1);
    Code bp = 1;
    for (std::size_t i = d + 1; i-- > 0;) {
        out[i] = K.mul(g.coeff(i), bp);
        bp = K.mul(bp, b.code());
    }
    return Polynomial(g.field(), std::move(out));
}

Polynomial binomial(const FieldPtr& K, std::uint64_t t, Code alpha) {
    auto coeffs = std::vector<Code>(t + 1, 0);
    coeffs[0] = K->neg(alpha);
    coeffs[t] = 1;
    return Polynomial(K, std::move(coeffs));
}

// D_t(x, a) - b^t (alpha + alpha^-1)
Polynomial template_factor(const Polynomial& dt, std::uint64_t t, const FieldElement& alpha, const FieldElement& b) {
    const auto& K = *dt.field();
    const auto shift = K.mul(K.pow(b.code(), t), K.add(alpha.code(), K.inv(alpha.code())));
    return dt - Polynomial::constant(dt.field(), shift);
}

// Stay-in-F_q condition in terms of alpha: b^t (alpha + alpha^-1) is fixed by
// beta -> beta^q. With b in F_q, or t even, this is alpha^(q-1) = 1 or
// alpha^(q+1) = 1; otherwise b^(q-1) = -1 flips it to alpha^(q-1) = -1 or
// alpha^(q+1) = -1.
bool predicted_in_base(const FieldElement& alpha, std::uint64_t t, bool b_in_base, std::uint64_t q) {
    const auto& K = *alpha.field();
    const auto minus_one = K.neg(1);
    const auto up = K.pow(alpha.code(), q + 1);
    const auto down = K.pow(alpha.code(), q - 1);
    if (b_in_base || t % 2 == 0) return down == 1 || up == 1;
    return down == minus_one || up == minus_one;
}

struct Setup {
    FieldPtr field;
    std::uint64_t q;
    std::optional<ExtensionView> owned_view;
    const ExtensionView* view = nullptr;
};

const ExtensionView& ensure_view(Setup& s, const Options& options) {
    if (s.view) return *s.view;
    if (options.view && options.view->base()->same_as(*s.field)) {
        s.view = options.view;
    } else {
        s.owned_view.emplace(ExtensionView::over(s.field));
        s.view = &*s.owned_view;
    }
    return *s.view;
}

Result assemble_result(CaseTag tag, const FieldPtr& field, std::vector<Candidate> cands,
                       const std::vector<std::uint64_t>& mults) {
    std::vector<std::size_t> order(cands.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return canonical_less(cands[i].poly, cands[j].poly); });
    Result r{Factorization{FieldElement(field, 1), {}}, FactorReport{tag, {}}};
    for (auto i : order) {
        if (!r.factorization.factors.empty() && r.factorization.factors.back().poly == cands[i].poly) {
            fail(ErrorCode::InternalInconsistency, "engine produced a repeated factor");
        }
        r.factorization.factors.push_back({cands[i].poly, mults[i]});
        r.report.entries.push_back(cands[i].entry);
    }
    return r;
}

void verify(Kind kind, std::uint64_t n, const FieldElement& a, const Result& r, const Options& options) {
    if (!options.check && !options.oracle_check) return;
    const auto target = dickson_poly(kind, n, a);
    if (r.factorization.total_degree() != n) {
        fail(ErrorCode::VerificationFailed, "factor degrees do not add up to n");
    }
    if (!(r.factorization.expand() == target)) {
        fail(ErrorCode::VerificationFailed, "product of factors does not reproduce the Dickson polynomial");
    }
    if (options.oracle_check && !(oracle::factor(target, options.seed) == r.factorization)) {
        fail(ErrorCode::VerificationFailed, "engine and oracle factorizations differ");
    }
}

Result degenerate(const FieldElement& a, std::uint64_t n) {
    ReportEntry e;
    e.special = Special::LinearX;
    return assemble_result(CaseTag::Degenerate_AZero, a.field(), {{Polynomial::x(a.field()), e}}, {n});
}

void check_degree_sum(const std::vector<BinomialPair>& pairs, std::uint64_t expected) {
    std::uint64_t sum = 0;
    for (const auto& p : pairs) sum += p.t;
    if (sum != expected) {
        fail(ErrorCode::InternalInconsistency,
             "binomial factors cover degree " + std::to_string(sum) + ", expected " + std::to_string(expected));
    }
}

// Odd characteristic: split y^N - target over K, pull back, descend when K = F_{q^2}.
Result odd_characteristic(Kind kind, std::uint64_t n, const FieldElement& a, CaseTag tag, bool work_in_base,
                          const Options& options) {
    Setup s{a.field(), a.field()->order(), std::nullopt, nullptr};
    const ExtensionView* view = work_in_base ? nullptr : &ensure_view(s, options);
    const auto K = work_in_base ? s.field : view->ext();
    const FieldElement a_k = work_in_base ? a : view->embed(a);
    auto b = sqrt(a_k);
    if (options.flip_root) b = -b;

    const bool first = kind == Kind::First;
    const auto N = first ? 2 * n : 2 * (n + 1);
    const FieldElement target(K, first ? K->neg(1) : 1);
    const auto span = first ? 4 * n : N;
    const auto tmax = span / nt::gcd(span, K->order() - 1);

    const auto pairs = enumerate_binomial_pairs(N, target, tmax);
    check_degree_sum(pairs, N);
    Exclusions exclusions;
    if (!first) exclusions = {{1, 1}, {1, K->neg(1)}};
    auto cands = assemble_from_pairs(pairs, a_k, b, exclusions);
    if (!work_in_base) cands = descend(cands, *view, is_square(a));

    std::vector<std::uint64_t> mults(cands.size(), 1);
    auto r = assemble_result(tag, s.field, std::move(cands), mults);
    verify(kind, n, a, r, options);
    return r;
}

// Characteristic 2, odd m: factors of F_m(x/b) b^deg, where D_m(x, 1) = x F_m(x)^2,
// read off the binomial factors of y^m - 1 other than y - 1.
std::vector<Candidate> char2_core(std::uint64_t m, const FieldElement& a, const FieldElement& b) {
    const auto& field = a.field();
    const auto q = field->order();
    const FieldElement one(field, 1);
    const auto pairs = enumerate_binomial_pairs(m, one, m / nt::gcd(m, q - 1));
    check_degree_sum(pairs, m);
    auto cands = assemble_from_pairs(pairs, a, b, {{1, 1}});

    // F_m from the even-index coefficients of D_m(x, 1) / x, each square-rooted.
    const auto dm = dickson_first(m, one);
    std::vector<Code> fm;
    for (std::size_t i = 1; i < dm.coeffs().size(); i += 2) fm.push_back(field->sqrt(dm.coeff(i)));
    const Polynomial f_m(field, std::move(fm));
    if (!(Polynomial::x(field) * f_m * f_m == dm)) {
        fail(ErrorCode::InternalInconsistency, "D_m(x, 1) is not x F_m(x)^2");
    }
    if (m > 1) {
        const auto lhs = Polynomial(field, {1, 1}) * phi(f_m, one);
        if (!(lhs == Polynomial(field, {1}) + Polynomial::monomial(field, 1, m))) {
            fail(ErrorCode::InternalInconsistency, "(x + 1) phi(F_m) != x^m + 1");
        }
    }
    auto product = Polynomial::constant(field, 1);
    for (const auto& c : cands) product = product * c.poly;
    if (!(product == rescale(f_m, b))) {
        fail(ErrorCode::InternalInconsistency, "assembled factors do not multiply to F_m");
    }
    return cands;
}

Result char2_first(std::uint64_t n, const FieldElement& a, const Options& options) {
    const auto [r, s] = nt::split_two(n);
    const auto b = sqrt(a);
    auto cands = char2_core(s, a, b);
    std::vector<std::uint64_t> mults(cands.size(), std::uint64_t{2} << r);
    ReportEntry x_entry;
    x_entry.special = Special::LinearX;
    cands.push_back({Polynomial::x(a.field()), x_entry});
    mults.push_back(std::uint64_t{1} << r);
    auto result = assemble_result(CaseTag::Char2_First, a.field(), std::move(cands), mults);
    verify(Kind::First, n, a, result, options);
    return result;
}

Result char2_second(std::uint64_t n, const FieldElement& a, const Options& options) {
    const auto [r, m] = nt::split_two(n + 1);
    const auto b = sqrt(a);
    auto cands = char2_core(m, a, b);
    std::vector<std::uint64_t> mults(cands.size(), std::uint64_t{2} << r);
    if (r > 0) {
        ReportEntry x_entry;
        x_entry.special = Special::PthPowerPart;
        cands.push_back({Polynomial::x(a.field()), x_entry});
        mults.push_back((std::uint64_t{1} << r) - 1);
    }
    auto result = assemble_result(CaseTag::Char2_Second, a.field(), std::move(cands), mults);
    verify(Kind::Second, n, a, result, options);
    return result;
}

}  // namespace

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::FirstKind_SquareA_Q1mod4OrOddN: return "FirstKind_SquareA_Q1mod4OrOddN";
        case CaseTag::FirstKind_SquareA_Q3mod4EvenN: return "FirstKind_SquareA_Q3mod4EvenN";
        case CaseTag::FirstKind_NonSquareA: return "FirstKind_NonSquareA";
        case CaseTag::SecondKind_SquareA_Main: return "SecondKind_SquareA_Main";
        case CaseTag::SecondKind_SquareA_Q3mod4OddN: return "SecondKind_SquareA_Q3mod4OddN";
        case CaseTag::SecondKind_NonSquareA: return "SecondKind_NonSquareA";
        case CaseTag::Char2_First: return "Char2_First";
        case CaseTag::Char2_Second: return "Char2_Second";
        case CaseTag::Degenerate_AZero: return "Degenerate_AZero";
    }
    return "unknown";
}

std::string_view to_string(Special special) {
    switch (special) {
        case Special::None: return "none";
        case Special::SelfReciprocalBinomial: return "SelfReciprocalBinomial";
        case Special::LinearX: return "LinearX";
        case Special::PthPowerPart: return "PthPowerPart";
    }
    return "unknown";
}

CaseTag classify(Kind kind, std::uint64_t n, const FieldElement& a) {
    if (n < 1) fail(ErrorCode::InvalidDegree, "Dickson degree must be at least 1");
    if (a.is_zero()) return CaseTag::Degenerate_AZero;
    const auto& F = *a.field();
    const auto q = F.order();
    const bool first = kind == Kind::First;
    auto governing = first ? n : n + 1;
    if (F.characteristic() == 2) governing = nt::split_two(governing).s;
    for (auto r : nt::prime_divisors(governing)) {
        if ((q - 1) % r != 0) {
            fail(ErrorCode::RadConditionViolated,
                 "prime " + std::to_string(r) + " does not divide q-1=" + std::to_string(q - 1));
        }
    }
    if (F.characteristic() == 2) return first ? CaseTag::Char2_First : CaseTag::Char2_Second;
    const bool square = is_square(a);
    const bool q1 = q % 4 == 1;
    if (first) {
        if (!square) return CaseTag::FirstKind_NonSquareA;
        return (q1 || n % 2 == 1) ? CaseTag::FirstKind_SquareA_Q1mod4OrOddN : CaseTag::FirstKind_SquareA_Q3mod4EvenN;
    }
    if (!square) return CaseTag::SecondKind_NonSquareA;
    return (q1 || n % 2 == 0) ? CaseTag::SecondKind_SquareA_Main : CaseTag::SecondKind_SquareA_Q3mod4OddN;
}

std::vector<BinomialPair> enumerate_binomial_pairs(std::uint64_t N, const FieldElement& target, std::uint64_t tmax) {
    const auto& K = target.field();
    const auto group = K->order() - 1;
    std::vector<BinomialPair> out;
    for (auto t : nt::divisors(tmax)) {
        if (N % t != 0) continue;
        const auto M = N / t;
        const auto rad_t = nt::rad(t);
        const auto candidates =
            target.code() == 1 ? K->elements_of_order_dividing(M) : K->elements_of_order_dividing(2 * M);
        for (auto alpha : candidates) {
            if (K->pow(alpha, M) != target.code()) continue;
            const auto ord = K->mult_order(alpha);
            if (ord % rad_t != 0 || nt::gcd(t, group / ord) != 1) continue;
            out.push_back({t, FieldElement(K, alpha)});
        }
    }
    return out;
}

std::vector<Candidate> assemble_from_pairs(const std::vector<BinomialPair>& pairs, const FieldElement& a,
                                           const FieldElement& b, const Exclusions& exclusions) {
    std::map<std::pair<std::uint64_t, Code>, std::size_t> index;
    for (std::size_t i = 0; i < pairs.size(); ++i) index[{pairs[i].t, pairs[i].alpha.code()}] = i;
    std::vector<bool> used(pairs.size(), false);
    for (const auto& ex : exclusions) {
        if (auto it = index.find(ex); it != index.end()) used[it->second] = true;
    }

    std::map<std::uint64_t, Polynomial> dickson_cache;
    auto d_t = [&](std::uint64_t t) -> const Polynomial& {
        auto it = dickson_cache.find(t);
        if (it == dickson_cache.end()) it = dickson_cache.emplace(t, dickson_first(t, a)).first;
        return it->second;
    };

    const auto& K = a.field();
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (used[i]) continue;
        const auto& [t, alpha] = pairs[i];
        const auto alpha_inv = alpha.inv();
        used[i] = true;
        ReportEntry entry;
        entry.t = t;
        entry.b = b;
        if (alpha == alpha_inv) {
            // y^t - alpha is its own 1-reciprocal; psi_1 of it is the factor.
            if (t % 2 != 0) fail(ErrorCode::InternalInconsistency, "self-paired binomial of odd degree");
            entry.alpha = alpha;
            entry.special = Special::SelfReciprocalBinomial;
            out.push_back({rescale(psi(binomial(K, t, alpha.code()), FieldElement(K, 1)), b), entry});
            continue;
        }
        const auto partner = index.find({t, alpha_inv.code()});
        if (partner == index.end()) {
            fail(ErrorCode::InternalInconsistency, "binomial y^t - alpha has no reciprocal partner with the same t");
        }
        if (used[partner->second]) fail(ErrorCode::InternalInconsistency, "reciprocal partner already consumed");
        used[partner->second] = true;
        const auto& rep = alpha.code() < alpha_inv.code() ? alpha : alpha_inv;
        entry.alpha = rep;
        out.push_back({template_factor(d_t(t), t, rep, b), entry});
    }
    return out;
}

std::vector<Candidate> descend(const std::vector<Candidate>& factors, const ExtensionView& view, bool b_in_base) {
    const auto q = view.base()->order();
    std::map<std::vector<Code>, std::size_t> index;
    for (std::size_t i = 0; i < factors.size(); ++i) index[factors[i].poly.coeffs()] = i;
    std::vector<bool> consumed(factors.size(), false);
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (consumed[i]) continue;
        consumed[i] = true;
        const auto& g = factors[i].poly;
        const auto conj = view.frobenius(g);
        const bool fixed = conj == g;
        const auto& entry = factors[i].entry;
        if (entry.special == Special::None && entry.alpha && entry.t &&
            predicted_in_base(*entry.alpha, *entry.t, b_in_base, q) != fixed) {
            fail(ErrorCode::InternalInconsistency, "Frobenius coefficient test contradicts the alpha condition");
        }
        auto descended = entry;
        Polynomial over_k = g;
        if (!fixed) {
            const auto partner = index.find(conj.coeffs());
            if (partner == index.end() || consumed[partner->second]) {
                fail(ErrorCode::InternalInconsistency, "Frobenius conjugate factor missing");
            }
            consumed[partner->second] = true;
            over_k = g * conj;
            descended.descended = true;
        }
        auto base_poly = view.restrict(over_k);
        if (!base_poly) fail(ErrorCode::InternalInconsistency, "descended factor is not defined over F_q");
        out.push_back({std::move(*base_poly), descended});
    }
    return out;
}

Result factor_first_kind(std::uint64_t n, const FieldElement& a, const Options& options) {
    const auto tag = classify(Kind::First, n, a);
    if (tag == CaseTag::Degenerate_AZero) {
        auto r = degenerate(a, n);
        verify(Kind::First, n, a, r, options);
        return r;
    }
    if (tag == CaseTag::Char2_First) return char2_first(n, a, options);
    return odd_characteristic(Kind::First, n, a, tag, tag == CaseTag::FirstKind_SquareA_Q1mod4OrOddN, options);
}

Result factor_second_kind(std::uint64_t n, const FieldElement& a, const Options& options) {
    const auto tag = classify(Kind::Second, n, a);
    if (tag == CaseTag::Degenerate_AZero) {
        auto r = degenerate(a, n);
        verify(Kind::Second, n, a, r, options);
        return r;
    }
    if (tag == CaseTag::Char2_Second) return char2_second(n, a, options);
    return odd_characteristic(Kind::Second, n, a, tag, tag == CaseTag::SecondKind_SquareA_Main, options);
}

Result factor_dickson(Kind kind, std::uint64_t n, const FieldElement& a, const Options& options) {
    return kind == Kind::First ? factor_first_kind(n, a, options) : factor_second_kind(n, a, options);
}

bool b_independence_check(Kind kind, std::uint64_t n, const FieldElement& a) {
    Options plain;
    Options flipped;
    flipped.flip_root = true;
    return factor_dickson(kind, n, a, plain).factorization == factor_dickson(kind, n, a, flipped).factorization;
}

Polynomial reexpand(const ReportEntry& entry, const FieldElement& a, const ExtensionView* view) {
    const auto& base = a.field();
    if (entry.special == Special::LinearX || entry.special == Special::PthPowerPart) return Polynomial::x(base);
    if (!entry.t || !entry.alpha || !entry.b) fail(ErrorCode::InvalidArgument, "report entry lacks t, alpha or b");
    const auto& K = entry.alpha->field();
    const bool in_base = K->same_as(*base);
    if (!in_base && !view) fail(ErrorCode::InvalidArgument, "extension entry needs an ExtensionView");
    const FieldElement a_k = in_base ? a : view->embed(a);

    Polynomial g(K);
    if (entry.special == Special::SelfReciprocalBinomial) {
        g = rescale(psi(binomial(K, *entry.t, entry.alpha->code()), FieldElement(K, 1)), *entry.b);
    } else {
        g = template_factor(dickson_first(*entry.t, a_k), *entry.t, *entry.alpha, *entry.b);
    }
    if (entry.descended) {
        if (in_base) fail(ErrorCode::InvalidArgument, "descended entry with alpha in the base field");
        g = g * view->frobenius(g);
    }
    if (in_base) return g;
    auto r = view->restrict(g);
    if (!r) fail(ErrorCode::InternalInconsistency, "re-expanded factor is not defined over F_q");
    return *r;
}

}  // namespace dickson::engine
