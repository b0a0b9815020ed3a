// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dickson/dickson.hpp"
#include "dickson/engine.hpp"
#include "dickson/error.hpp"
#include "dickson/extension.hpp"
#include "dickson/field.hpp"
#include "dickson/oracle.hpp"
#include "dickson/polynomial.hpp"
#include "dickson/selfrec.hpp"
#include "support.hpp"

namespace {

using namespace dickson;
using namespace dickson::testing;

// Sweep manifest for criteria 1, 2, 7 and 8.
constexpr std::uint64_t kSweepOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49};
constexpr std::uint64_t kSweepNMax = 200;
constexpr std::uint64_t kExhaustiveAMaxQ = 27;
constexpr std::size_t kSampledACount = 20;
constexpr std::uint64_t kSampledASeed = 20240601;
constexpr std::uint64_t kOracleSeed = 7;
constexpr double kSweepBudgetSeconds = 600.0;

// Criterion 3.
constexpr std::uint64_t kTransformNMax = 128;
// Criterion 4.
constexpr int kRoundTripSamples = 1000;
constexpr int kMultiplicativeSamples = 500;
constexpr int kTransferSamples = 200;
constexpr std::size_t kRoundTripMaxM = 12;
constexpr std::uint64_t kTransformSeed = 31337;
// Criterion 5.
constexpr int kIdentitySamples = 200;
constexpr std::uint64_t kIdentitySeed = 4242;
// Criterion 9.
constexpr std::uint64_t kPermutationNMax = 30;
constexpr std::uint64_t kPermutationMaxQ = 27;
// Criterion 10.
constexpr std::size_t kCompositionMaxDeg = 3;
constexpr std::uint64_t kCompositionNMax = 16;
constexpr std::uint64_t kCompositionOrders[] = {3, 5, 7, 9};

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o) {
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

FieldPtr field_of_order(std::uint64_t q) {
    for (auto& F : small_fields(q)) {
        if (F->order() == q) return F;
    }
    throw std::runtime_error("no field of order " + std::to_string(q));
}

std::vector<Code> sweep_parameters(const Field& F) {
    std::vector<Code> as;
    if (F.order() <= kExhaustiveAMaxQ) {
        for (Code c = 1; c < F.order(); ++c) as.push_back(c);
        return as;
    }
    std::mt19937_64 rng(kSampledASeed);
    std::set<Code> picked;
    while (picked.size() < std::min<std::size_t>(kSampledACount, F.order() - 1)) picked.insert(1 + rng() % (F.order() - 1));
    return {picked.begin(), picked.end()};
}

struct SweepStats {
    std::uint64_t instances = 0;
    std::uint64_t oracle_mismatch = 0;
    std::uint64_t reconstruction_fail = 0;
    std::uint64_t factors_checked = 0;
    std::uint64_t b_cases = 0;
    std::uint64_t b_mismatch = 0;
    std::uint64_t template_factors = 0;
    std::uint64_t template_fail = 0;
    std::string first_problem;
    double seconds = 0;
};

void note(SweepStats& s, const std::string& what) {
    if (s.first_problem.empty()) s.first_problem = what;
}

SweepStats run_sweep() {
    SweepStats s;
    const auto start = std::chrono::steady_clock::now();
    for (auto q : kSweepOrders) {
        const auto F = field_of_order(q);
        std::optional<ExtensionView> view;
        if (F->characteristic() != 2) view.emplace(ExtensionView::over(F));
        engine::Options opt;
        opt.view = view ? &*view : nullptr;
        opt.seed = kOracleSeed;
        for (auto kind : {Kind::First, Kind::Second}) {
            for (std::uint64_t n = 1; n <= kSweepNMax; ++n) {
                for (auto c : sweep_parameters(*F)) {
                    const FieldElement a(F, c);
                    try {
                        (void)engine::classify(kind, n, a);
                    } catch (const Error& e) {
                        if (e.code() == ErrorCode::RadConditionViolated) continue;
                        throw;
                    }
                    ++s.instances;
                    const auto label = F->name() + " " + std::string(to_string(kind)) + " n=" + std::to_string(n) +
                                       " a=" + std::to_string(c);
                    const auto target = dickson_poly(kind, n, a);
                    std::optional<engine::Result> result;
                    try {
                        result = engine::factor_dickson(kind, n, a, opt);
                    } catch (const Error& e) {
                        ++s.oracle_mismatch;
                        ++s.reconstruction_fail;
                        note(s, label + ": engine threw " + e.what());
                        continue;
                    }
                    const auto& r = *result;

                    // criterion 1
                    if (!(r.factorization == oracle::factor(target, kOracleSeed))) {
                        ++s.oracle_mismatch;
                        note(s, label + ": engine != oracle");
                    }
                    // criterion 2
                    bool ok = r.factorization.expand() == target && r.factorization.total_degree() == n;
                    for (const auto& f : r.factorization.factors) {
                        ++s.factors_checked;
                        ok = ok && oracle::is_irreducible(f.poly);
                    }
                    if (!ok) {
                        ++s.reconstruction_fail;
                        note(s, label + ": reconstruction or irreducibility");
                    }
                    if (F->characteristic() == 2) continue;
                    // criterion 7
                    if (is_square(a)) {
                        ++s.b_cases;
                        auto flipped = opt;
                        flipped.flip_root = true;
                        if (!(engine::factor_dickson(kind, n, a, flipped).factorization == r.factorization)) {
                            ++s.b_mismatch;
                            note(s, label + ": b-dependence");
                        }
                    }
                    // criterion 8
                    for (std::size_t i = 0; i < r.factorization.factors.size(); ++i) {
                        ++s.template_factors;
                        if (!(engine::reexpand(r.report.entries[i], a, opt.view) == r.factorization.factors[i].poly)) {
                            ++s.template_fail;
                            note(s, label + ": template re-expansion");
                        }
                    }
                }
            }
        }
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

std::string suffix(const std::string& problem) { return problem.empty() ? "" : " (first: " + problem + ")"; }

// Criterion 3
Outcome transform_identities() {
    const std::vector<FieldPtr> fields = {Field::create(5, 1), Field::create(7, 1), Field::create(2, 3),
                                          Field::create(3, 2), Field::create(13, 1)};
    std::uint64_t checks = 0, bad = 0;
    for (const auto& F : fields) {
        for (Code c = 1; c < F->order(); ++c) {
            const FieldElement a(F, c);
            const auto x2_minus_a = Polynomial(F, {F->neg(c), 0, 1});
            auto d = dickson_first_sequence(kTransformNMax, a);
            for (std::uint64_t n = 1; n <= kTransformNMax; ++n) {
                const auto an = F->pow(c, n);
                const auto d_rhs = Polynomial::monomial(F, 1, 2 * n) + Polynomial::constant(F, an);
                const auto e_rhs = Polynomial::monomial(F, 1, 2 * (n + 1)) - Polynomial::constant(F, F->mul(an, c));
                checks += 2;
                if (!(phi(d[n], a) == d_rhs)) ++bad;
                if (!(phi(dickson_second(n, a), a) * x2_minus_a == e_rhs)) ++bad;
            }
        }
    }
    return {bad == 0, std::to_string(bad) + " failures in " + std::to_string(checks) +
                          " identities (F_5, F_7, F_2^3, F_3^2, F_13; n <= 128; all a)"};
}

// Criterion 4
Outcome roundtrip_and_multiplicativity() {
    const std::vector<FieldPtr> fields = {Field::create(2, 1), Field::create(3, 1), Field::create(2, 2),
                                          Field::create(5, 1), Field::create(7, 1), Field::create(3, 2),
                                          Field::create(11, 1)};
    std::mt19937_64 rng(kTransformSeed);
    auto pick = [&]() { return fields[rng() % fields.size()]; };
    int bad_rt = 0, bad_mul = 0, bad_transfer = 0;
    for (int i = 0; i < kRoundTripSamples; ++i) {
        const auto F = pick();
        const FieldElement a(F, random_nonzero(F, rng));
        const auto m = 1 + rng() % kRoundTripMaxM;
        const auto f = random_monic(F, m, rng);
        const auto g = random_self_reciprocal(F, m, a.code(), rng);
        if (!(psi(phi(f, a), a) == f) || !(phi(psi(g, a), a) == g)) ++bad_rt;
    }
    for (int i = 0; i < kMultiplicativeSamples; ++i) {
        const auto F = pick();
        const FieldElement a(F, random_nonzero(F, rng));
        const auto f = random_monic(F, 1 + rng() % 6, rng);
        const auto g = random_monic(F, 1 + rng() % 6, rng);
        const auto pf = phi(f, a), pg = phi(g, a);
        if (!(phi(f * g, a) == pf * pg) || !(psi(pf * pg, a) == f * g)) ++bad_mul;
    }
    int transfer_done = 0;
    while (transfer_done < kTransferSamples) {
        const auto F = pick();
        const FieldElement a(F, random_nonzero(F, rng));
        const auto m = 1 + rng() % 3;
        if (transfer_done % 2 == 0) {
            // irreducible self-reciprocal of degree 2m -> psi image irreducible
            const auto g = random_self_reciprocal(F, m, a.code(), rng);
            if (!oracle::is_irreducible(g)) continue;
            if (!oracle::is_irreducible(psi(g, a))) ++bad_transfer;
        } else {
            // irreducible non-self-reciprocal h -> psi(h h*) irreducible
            const auto h = random_monic(F, m, rng);
            if (h.coeff(0) == 0 || !oracle::is_irreducible(h) || is_a_self_reciprocal(h, a)) continue;
            if (!oracle::is_irreducible(psi(h * a_reciprocal(h, a), a))) ++bad_transfer;
        }
        ++transfer_done;
    }
    const bool pass = bad_rt == 0 && bad_mul == 0 && bad_transfer == 0;
    return {pass, "round-trip " + std::to_string(bad_rt) + "/" + std::to_string(kRoundTripSamples) + ", multiplicative " +
                      std::to_string(bad_mul) + "/" + std::to_string(kMultiplicativeSamples) + ", transfer " +
                      std::to_string(bad_transfer) + "/" + std::to_string(kTransferSamples) + " failures"};
}

// Criterion 5
Outcome dickson_identities() {
    std::vector<FieldPtr> fields;
    for (auto& F : small_fields(49)) {
        if (F->order() >= 3) fields.push_back(F);
    }
    std::mt19937_64 rng(kIdentitySeed);
    std::map<int, int> bad;
    int total = 0;
    for (int s = 0; s < kIdentitySamples; ++s) {
        const auto F = fields[rng() % fields.size()];
        const auto p = F->characteristic();
        const FieldElement a(F, random_nonzero(F, rng));
        const FieldElement b(F, random_nonzero(F, rng));
        const auto x = Polynomial::x(F);
        const auto m = 1 + rng() % 12;
        const auto n = 1 + rng() % 12;
        const auto r = static_cast<unsigned>(rng() % 3);
        std::uint64_t pr = 1;
        for (unsigned i = 0; i < r && n * pr * p <= 600; ++i) pr *= p;
        const auto b2a = b * b * a;
        const auto bn = F->pow(b.code(), n);
        total += 7;

        // (i)
        if (!(dickson_first(m * n, a) == compose(dickson_first(m, a.pow(n)), dickson_first(n, a)))) ++bad[1];
        // (ii)
        if (!(dickson_first(n * pr, a) == pow(dickson_first(n, a), pr))) ++bad[2];
        // (iii)
        if (!(dickson_first(n, a).scaled(bn) == scale_variable(dickson_first(n, b2a), b.code()))) ++bad[3];
        // (iv)
        if (!(scale_variable(dickson_first(n, a), b.inv().code()).scaled(bn) == dickson_first(n, b2a))) ++bad[4];
        // (v): n + 1 = (m + 1) p^r
        {
            const auto big = (m + 1) * pr - 1;
            Polynomial rhs = pow(dickson_second(m, a), pr);
            if (p == 2) {
                rhs = rhs * pow(x, pr - 1);
            } else {
                const auto quad = x * x - Polynomial::constant(F, F->mul(F->from_int(4), a.code()));
                rhs = rhs * pow(quad, (pr - 1) / 2);
            }
            if (!(dickson_second(big, a) == rhs)) ++bad[5];
        }
        // (vi)
        if (!(dickson_second(n, a).scaled(bn) == scale_variable(dickson_second(n, b2a), b.code()))) ++bad[6];
        // (vii)
        if (!(scale_variable(dickson_second(n, a), b.inv().code()).scaled(bn) == dickson_second(n, b2a))) ++bad[7];
    }
    int failures_total = 0;
    std::string items;
    for (auto& [item, count] : bad) {
        failures_total += count;
        items += " item" + std::to_string(item) + "=" + std::to_string(count);
    }
    return {failures_total == 0,
            std::to_string(failures_total) + " failures in " + std::to_string(total) + " identity checks" + items};
}

// Criterion 6
Outcome pinned_instances() {
    struct Pin {
        std::uint64_t p;
        unsigned k;
        Kind kind;
        std::uint64_t n;
        Code a;
        const char* expected;
    };
    // Frozen from brute-force trial division.
    const Pin pins[] = {
        {7, 1, Kind::First, 3, 1, "x^1 * (1*x^2+4)^1"},
        {5, 1, Kind::First, 4, 1, "(1*x^4+1*x^2+2)^1"},
        {7, 1, Kind::First, 2, 1, "(1*x^1+3)^1 * (1*x^1+4)^1"},
        {2, 2, Kind::First, 3, 1, "x^1 * (1*x^1+1)^2"},
        {5, 1, Kind::Second, 3, 1, "x^1 * (1*x^2+3)^1"},
    };
    int bad = 0;
    std::string detail;
    for (const auto& pin : pins) {
        const auto F = Field::create(pin.p, pin.k);
        const FieldElement a(F, pin.a);
        const auto target = dickson_poly(pin.kind, pin.n, a);
        const auto reference = brute_factor(target);
        const auto engine_out = engine::factor_dickson(pin.kind, pin.n, a).factorization;
        const bool ok = to_text(reference) == pin.expected && to_text(engine_out) == pin.expected &&
                        engine_out == reference && oracle::factor(target) == reference;
        if (!ok) {
            ++bad;
            detail += " " + F->name() + " n=" + std::to_string(pin.n) + " got " + to_text(engine_out);
        }
    }
    return {bad == 0, std::to_string(bad) + " of 5 pinned instances differ" + detail};
}

// Criterion 9
Outcome permutation_criterion() {
    std::uint64_t checks = 0, bad = 0;
    for (const auto& F : small_fields(kPermutationMaxQ)) {
        for (Code c = 0; c < F->order(); ++c) {
            const FieldElement a(F, c);
            const auto seq = dickson_first_sequence(kPermutationNMax, a);
            for (std::uint64_t n = 1; n <= kPermutationNMax; ++n) {
                ++checks;
                if (is_permutation(Kind::First, n, a) != brute_is_permutation(seq[n])) ++bad;
            }
        }
    }
    return {bad == 0, std::to_string(bad) + " disagreements in " + std::to_string(checks) + " (n <= 30, all a, q <= 27)"};
}

// Criterion 10
Outcome composition_grid() {
    std::uint64_t checks = 0, bad = 0;
    for (auto q : kCompositionOrders) {
        const auto F = field_of_order(q);
        for (std::size_t d = 1; d <= kCompositionMaxDeg; ++d) {
            for (std::uint64_t i = 0; i < count_monic(F, d); ++i) {
                const auto f = nth_monic(F, d, i);
                if (f.coeff(0) == 0 || !oracle::is_irreducible(f)) continue;
                for (std::uint64_t n = 1; n <= kCompositionNMax; ++n) {
                    ++checks;
                    const auto xn = Polynomial::monomial(F, 1, n);
                    if (oracle::composition_irreducible(f, n) != oracle::is_irreducible(compose(f, xn))) ++bad;
                }
            }
        }
    }
    return {bad == 0, std::to_string(bad) + " disagreements in " + std::to_string(checks) +
                          " (deg f <= 3, n <= 16, q in {3,5,7,9})"};
}

}  // namespace

int main() {
    const auto sweep = run_sweep();
    const auto sweep_note = std::to_string(sweep.instances) + " instances in " +
                            std::to_string(static_cast<int>(sweep.seconds)) + " s";
    report(1, "oracle-equivalence sweep",
           {sweep.oracle_mismatch == 0 && sweep.seconds <= kSweepBudgetSeconds,
            std::to_string(sweep.oracle_mismatch) + " mismatches, " + sweep_note + " (budget 600 s)" +
                suffix(sweep.first_problem)});
    report(2, "reconstruction and irreducibility",
           {sweep.reconstruction_fail == 0, std::to_string(sweep.reconstruction_fail) + " failures over " +
                                                std::to_string(sweep.instances) + " instances, " +
                                                std::to_string(sweep.factors_checked) + " factors"});
    report(3, "transform identities", transform_identities());
    report(4, "round-trip, multiplicativity, irreducibility transfer", roundtrip_and_multiplicativity());
    report(5, "Dickson identity suite", dickson_identities());
    report(6, "pinned instances", pinned_instances());
    report(7, "b-independence",
           {sweep.b_mismatch == 0,
            std::to_string(sweep.b_mismatch) + " mismatches over " + std::to_string(sweep.b_cases) + " square-a instances"});
    report(8, "template re-expansion",
           {sweep.template_fail == 0 && sweep.template_factors > 0,
            std::to_string(sweep.template_fail) + " of " + std::to_string(sweep.template_factors) +
                " odd-characteristic factors fail to re-expand"});
    report(9, "permutation criterion", permutation_criterion());
    report(10, "composition irreducibility predicate", composition_grid());
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
