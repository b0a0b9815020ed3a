#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dickson/dickson.hpp"
#include "dickson/extension.hpp"
#include "dickson/field.hpp"
#include "dickson/polynomial.hpp"

// Constructive factorization of D_n(x, a) and E_n(x, a) when every prime of n
// (first kind) or n + 1 (second kind) divides q - 1. The factors are read off
// the binomial factors of y^(2n) + 1, resp. y^(2(n+1)) - 1, over F_q or
// F_{q^2}, paired with their reciprocals, pulled back through psi and, when the
// work happened in F_{q^2}, merged with their Frobenius conjugates.
namespace dickson::engine {

enum class CaseTag {
    FirstKind_SquareA_Q1mod4OrOddN,
    FirstKind_SquareA_Q3mod4EvenN,
    FirstKind_NonSquareA,
    SecondKind_SquareA_Main,
    SecondKind_SquareA_Q3mod4OddN,
    SecondKind_NonSquareA,
    Char2_First,
    Char2_Second,
    Degenerate_AZero,
};

std::string_view to_string(CaseTag tag);

enum class Special {
    None,
    /// psi of an irreducible 1-self-reciprocal binomial, y^2 + 1.
    SelfReciprocalBinomial,
    LinearX,
    /// the x^(2^r - 1) part of a second-kind polynomial in characteristic 2.
    PthPowerPart,
};

std::string_view to_string(Special special);

/// One irreducible factor y^t - alpha of the binomial being split.
struct BinomialPair {
    std::uint64_t t;
    FieldElement alpha;
};

/// How a factor was produced. alpha and b live in the working field K, which
/// is either F_q or F_{q^2} (see alpha->field()).
struct ReportEntry {
    std::optional<std::uint64_t> t;
    std::optional<FieldElement> alpha;
    std::optional<FieldElement> b;
    bool descended = false;
    Special special = Special::None;
};

/// Entries run parallel to Factorization::factors.
struct FactorReport {
    CaseTag tag;
    std::vector<ReportEntry> entries;
};

struct Result {
    Factorization factorization;
    FactorReport report;
};

/// A factor over the working field together with its provenance.
struct Candidate {
    Polynomial poly;
    ReportEntry entry;
};

struct Options {
    /// Assert lead * prod f_i^m_i == D_n / E_n and the degree sum.
    bool check = false;
    /// Additionally compare against oracle::factor.
    bool oracle_check = false;
    std::uint64_t seed = 1;
    /// Use -b instead of b for the square root of a.
    bool flip_root = false;
    /// Reused instead of rebuilding F_{q^2} when supplied.
    const ExtensionView* view = nullptr;
};

/// Case selection; raises RadConditionViolated naming the offending prime.
CaseTag classify(Kind kind, std::uint64_t n, const FieldElement& a);

/// All (t, alpha) with t | tmax, t | N, alpha^(N/t) = target, rad(t) | ord(alpha)
/// and gcd(t, (|K|-1)/ord(alpha)) = 1, in primitive-root order per t.
std::vector<BinomialPair> enumerate_binomial_pairs(std::uint64_t N, const FieldElement& target, std::uint64_t tmax);

/// Groups {alpha, alpha^-1} into D_t(x, a) - b^t (alpha + alpha^-1); a self-paired
/// binomial becomes b^deg * psi_1(y^t - alpha)(x / b). Pairs listed in
/// `exclusions` as (t, alpha code) are dropped. a and b must live in K.
std::vector<Candidate> assemble_from_pairs(const std::vector<BinomialPair>& pairs, const FieldElement& a,
                                           const FieldElement& b,
                                           const std::vector<std::pair<std::uint64_t, Code>>& exclusions);

/// Maps F_{q^2} factors to F_q: Frobenius-fixed factors are restricted, the
/// rest are multiplied with their conjugate. b_in_base tells whether b lies in
/// F_q, which selects the stay-in-F_q condition checked against the
/// coefficient test.
std::vector<Candidate> descend(const std::vector<Candidate>& factors, const ExtensionView& view, bool b_in_base);

Result factor_first_kind(std::uint64_t n, const FieldElement& a, const Options& options = {});
Result factor_second_kind(std::uint64_t n, const FieldElement& a, const Options& options = {});
Result factor_dickson(Kind kind, std::uint64_t n, const FieldElement& a, const Options& options = {});

/// Engine output under b and -b agrees.
bool b_independence_check(Kind kind, std::uint64_t n, const FieldElement& a);

/// Rebuilds a factor over F_q from its report entry alone.
Polynomial reexpand(const ReportEntry& entry, const FieldElement& a, const ExtensionView* view);

}  // namespace dickson::engine
