#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "dickson/cli.hpp"

using dickson::cli::run;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("factor text output") {
    const auto r = call({"factor", "--field", "7", "--kind", "first", "--n", "3", "--a", "1"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "x^1 * (1*x^2+4)^1");
    CHECK(r.out.find("case: FirstKind_SquareA_Q1mod4OrOddN") != std::string::npos);
}

TEST_CASE("rad violation is a domain error naming the prime") {
    const auto r = call({"factor", "--field", "7", "--kind", "first", "--n", "5", "--a", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("prime 5 does not divide q-1=6") != std::string::npos);
}

TEST_CASE("verify") {
    const auto r = call({"verify", "--field", "5", "--kind", "first", "--n", "4", "--a", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: agree") != std::string::npos);
    CHECK(call({"verify", "--field", "3^2", "--kind", "second", "--n", "7", "--a", "5"}).code == 0);
}

TEST_CASE("factor --verify and --check-product") {
    const auto r = call({"factor", "--field", "2^3", "--kind", "second", "--n", "13", "--a", "5", "--verify",
                         "--check-product"});
    CHECK(r.code == 0);
    CHECK(r.out.find("product check: ok") != std::string::npos);
}

TEST_CASE("json output schema") {
    const auto r = call({"factor", "--field", "3", "--kind", "first", "--n", "4", "--a", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["field"]["p"] == 3);
    CHECK(j["field"]["k"] == 1);
    CHECK(j["field"]["modulus"].is_array());
    CHECK(j["kind"] == "first");
    CHECK(j["n"] == 4);
    CHECK(j["a"] == 2);
    CHECK(j["lead"] == 1);
    CHECK(j["case"] == "FirstKind_NonSquareA");
    REQUIRE(j["factors"].size() == 1);
    const auto& f = j["factors"][0];
    for (const char* key : {"poly", "mult", "t", "alpha", "descended", "special", "b", "level"}) CHECK(f.contains(key));
    CHECK(f["poly"] == "1*x^4+1*x^2+2");
    CHECK(f["descended"] == true);
    CHECK(f["level"] == "extension");
}

TEST_CASE("identical arguments give identical output") {
    const std::vector<std::string> args = {"factor", "--field", "5^2", "--kind", "second", "--n", "23",
                                           "--a", "7", "--format", "json", "--seed", "9"};
    CHECK(call(args).out == call(args).out);
}

TEST_CASE("dickson and pp-test") {
    const auto d = call({"dickson", "--field", "7", "--kind", "first", "--n", "5", "--a", "1"});
    CHECK(d.code == 0);
    CHECK(first_line(d.out) == "1*x^5+2*x^3+5*x^1");
    const auto e = call({"dickson", "--field", "7", "--kind", "second", "--n", "3", "--a", "1"});
    CHECK(first_line(e.out) == "1*x^3+5*x^1");

    const auto yes = call({"pp-test", "--field", "5", "--n", "7", "--a", "1"});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("permutation: true") != std::string::npos);
    const auto no = call({"pp-test", "--field", "7", "--n", "3", "--a", "0"});
    CHECK(no.out.find("permutation: false") != std::string::npos);
}

TEST_CASE("table streams one record per valid (n, a)") {
    const auto r = call({"table", "--field", "5", "--kind", "first", "--n-max", "10", "--all-a"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        const auto n = j["n"].get<int>();
        // rad(n) | 4 means n is a power of two
        CHECK((n & (n - 1)) == 0);
        ++count;
    }
    CHECK(count == 4 * 4);  // n in {1, 2, 4, 8}, four values of a
}

TEST_CASE("modulus option") {
    const auto r = call({"factor", "--field", "2^2", "--modulus", "1,1,1", "--kind", "first", "--n", "3", "--a", "1"});
    CHECK(r.code == 0);
    CHECK(call({"factor", "--field", "2^2", "--modulus", "1,0,1", "--kind", "first", "--n", "3", "--a", "1"}).code == 1);
    CHECK(call({"factor", "--field", "2^2", "--modulus", "1,x", "--kind", "first", "--n", "3", "--a", "1"}).code == 3);
}

TEST_CASE("usage and domain errors") {
    CHECK(call({}).code == 3);
    CHECK(call({"factor", "--field", "7", "--n", "3"}).code == 3);
    CHECK(call({"factor", "--field", "7", "--kind", "third", "--n", "3", "--a", "1"}).code == 3);
    CHECK(call({"factor", "--field", "7", "--kind", "first", "--n", "x", "--a", "1"}).code == 3);
    CHECK(call({"bogus"}).code == 3);
    CHECK(call({"factor", "--field", "6", "--kind", "first", "--n", "3", "--a", "1"}).code == 1);
    CHECK(call({"factor", "--field", "7", "--kind", "first", "--n", "3", "--a", "9"}).code == 1);
    CHECK(call({"factor", "--field", "7", "--kind", "first", "--n", "0", "--a", "1"}).code == 1);
    CHECK(call({"factor", "--field", "7^9", "--kind", "first", "--n", "3", "--a", "1"}).code == 1);
    CHECK(call({"pp-test", "--field", "7", "--n", "3", "--a", "1", "--kind", "second"}).code == 3);
    const auto help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("factor") != std::string::npos);
}
