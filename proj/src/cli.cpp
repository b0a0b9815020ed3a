#include "dickson/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dickson/dickson.hpp"
#include "dickson/engine.hpp"
#include "dickson/error.hpp"
#include "dickson/extension.hpp"
#include "dickson/field.hpp"
#include "dickson/numtheory.hpp"
#include "dickson/oracle.hpp"

namespace dickson::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Args {
    std::string field;
    std::string modulus;
    std::string kind = "first";
    std::uint64_t n = 0;
    std::uint64_t a = 1;
    std::uint64_t seed = 1;
    bool verify = false;
    bool check_product = false;
    std::string format = "text";
    std::uint64_t n_max = 0;
    bool all_a = false;
};

// Accepts c0,...,c_{k-1} (leading 1 implied) or c0,...,c_k.
std::optional<std::vector<Code>> parse_modulus(const std::string& text, unsigned k) {
    if (text.empty()) return std::nullopt;
    std::vector<Code> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad modulus coefficient '" + item + "'");
        }
    }
    if (out.size() == k) out.push_back(1);
    return out;
}

FieldPtr build_field(const Args& args) {
    const auto spec = parse_field_spec(args.field);
    return Field::create(spec.p, spec.k, parse_modulus(args.modulus, spec.k));
}

Kind parse_kind(const std::string& s) { return s == "second" ? Kind::Second : Kind::First; }

Json field_json(const Field& F) {
    Json j;
    j["p"] = F.characteristic();
    j["k"] = F.degree();
    j["modulus"] = F.degree() == 1 ? std::vector<Code>{0, 1} : F.modulus();
    return j;
}

std::string level_of(const engine::ReportEntry& e, const Field& base) {
    if (!e.alpha) return "base";
    return e.alpha->field()->same_as(base) ? "base" : "extension";
}

Json result_json(const Field& F, Kind kind, std::uint64_t n, Code a, const engine::Result& r) {
    Json j;
    j["field"] = field_json(F);
    j["kind"] = std::string(to_string(kind));
    j["n"] = n;
    j["a"] = a;
    j["lead"] = r.factorization.lead.code();
    Json factors = Json::array();
    for (std::size_t i = 0; i < r.factorization.factors.size(); ++i) {
        const auto& [poly, mult] = r.factorization.factors[i];
        const auto& e = r.report.entries[i];
        Json f;
        f["poly"] = to_text(poly);
        f["mult"] = mult;
        f["t"] = e.t ? Json(*e.t) : Json(nullptr);
        f["alpha"] = e.alpha ? Json(e.alpha->code()) : Json(nullptr);
        f["descended"] = e.descended;
        f["special"] = std::string(engine::to_string(e.special));
        f["b"] = e.b ? Json(e.b->code()) : Json(nullptr);
        f["level"] = level_of(e, F);
        factors.push_back(std::move(f));
    }
    j["factors"] = std::move(factors);
    j["case"] = std::string(engine::to_string(r.report.tag));
    return j;
}

void print_text(std::ostream& out, const Field& F, const engine::Result& r) {
    out << to_text(r.factorization) << '\n';
    out << "case: " << engine::to_string(r.report.tag) << '\n';
    for (std::size_t i = 0; i < r.factorization.factors.size(); ++i) {
        const auto& [poly, mult] = r.factorization.factors[i];
        const auto& e = r.report.entries[i];
        out << "factor " << i + 1 << ": " << to_text(poly) << " mult=" << mult;
        if (e.t) out << " t=" << *e.t;
        if (e.alpha) out << " alpha=" << e.alpha->code();
        if (e.b) out << " b=" << e.b->code();
        out << " level=" << level_of(e, F) << " descended=" << (e.descended ? "true" : "false")
            << " special=" << engine::to_string(e.special) << '\n';
    }
}

int cmd_factor(const Args& args, std::ostream& out) {
    const auto F = build_field(args);
    const auto kind = parse_kind(args.kind);
    const FieldElement a(F, args.a);
    engine::Options opt;
    opt.check = args.verify;
    opt.oracle_check = args.verify;
    opt.seed = args.seed;
    const auto r = engine::factor_dickson(kind, args.n, a, opt);
    if (args.format == "json") {
        out << result_json(*F, kind, args.n, args.a, r).dump(2) << '\n';
    } else {
        print_text(out, *F, r);
    }
    if (args.check_product) {
        const bool ok = r.factorization.expand() == dickson_poly(kind, args.n, a);
        out << "product check: " << (ok ? "ok" : "MISMATCH") << '\n';
        if (!ok) return kMismatch;
    }
    return kOk;
}

int cmd_verify(const Args& args, std::ostream& out) {
    const auto F = build_field(args);
    const auto kind = parse_kind(args.kind);
    const FieldElement a(F, args.a);
    engine::Options opt;
    opt.seed = args.seed;
    const auto r = engine::factor_dickson(kind, args.n, a, opt);
    const auto target = dickson_poly(kind, args.n, a);
    const auto reference = oracle::factor(target, args.seed);
    const bool product_ok = r.factorization.expand() == target;
    const bool agree = product_ok && reference == r.factorization;
    out << "engine: " << to_text(r.factorization) << '\n';
    out << "oracle: " << to_text(reference) << '\n';
    out << "verdict: " << (agree ? "agree" : "MISMATCH") << '\n';
    return agree ? kOk : kMismatch;
}

int cmd_dickson(const Args& args, std::ostream& out) {
    const auto F = build_field(args);
    out << to_text(dickson_poly(parse_kind(args.kind), args.n, FieldElement(F, args.a))) << '\n';
    return kOk;
}

int cmd_pp_test(const Args& args, std::ostream& out) {
    const auto F = build_field(args);
    const FieldElement a(F, args.a);
    const auto q = F->order();
    const auto modulus = a.is_zero() ? q - 1 : q * q - 1;
    const bool perm = is_permutation(Kind::First, args.n, a);
    out << "gcd(" << args.n << ", " << (a.is_zero() ? "q-1" : "q^2-1") << ") = " << nt::gcd(args.n, modulus) << '\n';
    out << "permutation: " << (perm ? "true" : "false") << '\n';
    return kOk;
}

int cmd_table(const Args& args, std::ostream& out) {
    const auto F = build_field(args);
    const auto kind = parse_kind(args.kind);
    std::vector<Code> as;
    if (args.all_a) {
        for (Code c = 1; c < F->order(); ++c) as.push_back(c);
    } else {
        as.push_back(FieldElement(F, args.a).code());
    }
    std::optional<ExtensionView> view;
    engine::Options opt;
    opt.seed = args.seed;
    opt.check = args.verify;
    opt.oracle_check = args.verify;
    for (std::uint64_t n = 1; n <= args.n_max; ++n) {
        for (auto c : as) {
            const FieldElement a(F, c);
            try {
                (void)engine::classify(kind, n, a);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::RadConditionViolated) continue;
                throw;
            }
            if (!view && F->characteristic() != 2) {
                view.emplace(ExtensionView::over(F));
                opt.view = &*view;
            }
            const auto r = engine::factor_dickson(kind, n, a, opt);
            out << result_json(*F, kind, n, c, r).dump() << '\n';
        }
    }
    return kOk;
}

void add_field_options(CLI::App* cmd, Args& args) {
    cmd->add_option("--field", args.field, "p or p^k")->required();
    cmd->add_option("--modulus", args.modulus, "ascending coefficients c0,c1,... of the defining polynomial");
}

void add_kind(CLI::App* cmd, Args& args) {
    cmd->add_option("--kind", args.kind, "first or second")->check(CLI::IsMember({"first", "second"}));
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dickson polynomial factorization over finite fields", "dickson"};
    app.require_subcommand(1);
    Args args;

    auto* factor = app.add_subcommand("factor", "factor D_n(x, a) or E_n(x, a)");
    add_field_options(factor, args);
    add_kind(factor, args);
    factor->add_option("--n", args.n, "degree")->required();
    factor->add_option("--a", args.a, "parameter as an element code")->required();
    factor->add_flag("--verify", args.verify, "check the result against the generic factorizer");
    factor->add_option("--format", args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    factor->add_option("--seed", args.seed, "seed for the generic factorizer");
    factor->add_flag("--check-product", args.check_product, "re-multiply the factors and compare");

    auto* verify = app.add_subcommand("verify", "compare the constructive factorization with the generic one");
    add_field_options(verify, args);
    add_kind(verify, args);
    verify->add_option("--n", args.n, "degree")->required();
    verify->add_option("--a", args.a, "parameter as an element code")->required();
    verify->add_option("--seed", args.seed, "seed for the generic factorizer");

    auto* dickson = app.add_subcommand("dickson", "print D_n(x, a) or E_n(x, a)");
    add_field_options(dickson, args);
    add_kind(dickson, args);
    dickson->add_option("--n", args.n, "degree")->required();
    dickson->add_option("--a", args.a, "parameter as an element code")->required();

    auto* pp = app.add_subcommand("pp-test", "decide whether D_n(x, a) permutes F_q");
    add_field_options(pp, args);
    pp->add_option("--n", args.n, "degree")->required();
    pp->add_option("--a", args.a, "parameter as an element code")->required();

    auto* table = app.add_subcommand("table", "one JSON line per factorizable (n, a)");
    add_field_options(table, args);
    add_kind(table, args);
    table->add_option("--n-max", args.n_max, "largest degree")->required();
    table->add_flag("--all-a", args.all_a, "iterate over every nonzero a");
    table->add_option("--a", args.a, "parameter when --all-a is absent");
    table->add_flag("--verify", args.verify, "check every record against the generic factorizer");
    table->add_option("--seed", args.seed, "seed for the generic factorizer");

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*factor) return cmd_factor(args, out);
        if (*verify) return cmd_verify(args, out);
        if (*dickson) return cmd_dickson(args, out);
        if (*pp) return cmd_pp_test(args, out);
        if (*table) return cmd_table(args, out);
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        if (e.code() == ErrorCode::VerificationFailed) return kMismatch;
        if (e.code() == ErrorCode::ParseError) return kUsage;
        return kDomainError;
    }
    return kUsage;
}

}  // namespace dickson::cli
