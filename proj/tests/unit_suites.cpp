#include <doctest.h>

#include "padiclab/suites.hpp"

using namespace padiclab;

namespace {

const SuiteCheck* find_check(const SuiteReport& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.desc.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

nlohmann::json without_elapsed(SuiteReport r) {
    r.elapsed_ms = 0;
    return r.to_json();
}

}  // namespace

TEST_CASE("cubic suite at desk scale") {
    SuiteReport r = cubic_suite(64);
    CHECK(r.pass());
    CHECK(r.name == "cubic");
    CHECK(find_check(r, "a_0") != nullptr);
    CHECK_THROWS_AS(cubic_suite(4), usage_error);
}

TEST_CASE("fuss-catalan suite three-way equality") {
    for (unsigned long p : {2ul, 3ul}) {
        SuiteReport r = fuss_catalan_suite(p, 60);
        INFO(r.to_json().dump(2));
        CHECK(r.pass());
    }
    CHECK_THROWS_AS(fuss_catalan_suite(4, 60), usage_error);
}

TEST_CASE("pth-root suite") {
    SuiteReport r = pth_root_suite(2, 600, Rational(1, 50));
    INFO(r.to_json().dump(2));
    CHECK(r.pass());
}

TEST_CASE("wild suite at p = 3") {
    SuiteReport r = wild_suite(3, 200);
    INFO(r.to_json().dump(2));
    CHECK(r.pass());
}

TEST_CASE("wild suite at p = 2: unit coefficients are the powers of two") {
    // v_2(a_n) = S_2(n) - 1 here, so the tail window [N/2, N] holds exactly
    // one unit coefficient; the suite reports the count as data
    SuiteReport r = wild_suite(2, 200);
    INFO(r.to_json().dump(2));
    CHECK(r.pass());
    const SuiteCheck* block = find_check(r, "unit coefficients recur in every dyadic block");
    REQUIRE(block != nullptr);
    CHECK(block->pass);
    const SuiteCheck* window = find_check(r, "unit coefficients in the tail window");
    REQUIRE(window != nullptr);
    CHECK(window->observed == "1");
}

TEST_CASE("gamma suite with the quadratic rule") {
    SuiteReport r = gamma_suite(gamma_rule_parse("n^2"), 4096);
    INFO(r.to_json().dump(2));
    CHECK(r.pass());
}

TEST_CASE("gamma suite with an affine rule") {
    SuiteReport r = gamma_suite(gamma_rule_parse("affine:0,2"), 2048);
    INFO(r.to_json().dump(2));
    CHECK(r.pass());
}

TEST_CASE("beta suite") {
    SuiteReport r1 = beta_suite(Rational(1), 2);
    INFO(r1.to_json().dump(2));
    CHECK(r1.pass());
    SuiteReport rh = beta_suite(Rational(1, 2), 2);
    CHECK(rh.pass());
    CHECK_THROWS_AS(beta_suite(Rational(1), 4), usage_error);
    CHECK_THROWS_AS(beta_suite(Rational(-1), 1), usage_error);
}

TEST_CASE("power lemma suite") {
    SuiteReport r = power_lemma_suite(3, 64);
    INFO(r.to_json().dump(2));
    CHECK(r.pass());
    CHECK_THROWS_AS(power_lemma_suite(7, 64), usage_error);
}

TEST_CASE("binomial pair suite") {
    SuiteReport r = binomial_pair_suite(Rational(1), Rational(3), Rational(1, 3), Rational(1, 5),
                                        2, 200);
    INFO(r.to_json().dump(2));
    CHECK(r.pass());

    CHECK_THROWS_AS(binomial_pair_suite(Rational(1), Rational(1), Rational(1, 3), Rational(1, 5),
                                        2, 200),
                    usage_error);
    CHECK_THROWS_AS(binomial_pair_suite(Rational(1), Rational(3), Rational(2), Rational(5), 2, 200),
                    usage_error);
    CHECK_THROWS_AS(binomial_pair_suite(Rational(1), Rational(2), Rational(1, 3), Rational(1, 5),
                                        2, 200),
                    usage_error);
}

TEST_CASE("gamma rule parsing and rejection") {
    CHECK(gamma_rule_parse("n^2")->exponent(3) == 9);
    CHECK(gamma_rule_parse("affine:1,3")->exponent(2) == 10);
    CHECK(gamma_rule_parse("beta:1")->exponent(3) == 2059);
    CHECK(gamma_rule_parse("list:0,4,7+tail:2")->exponent(4) == 11);
    CHECK_THROWS_AS(gamma_rule_parse("list:0,1+tail:0"), usage_error);
    CHECK_THROWS_AS(gamma_rule_parse("list:3,2+tail:1"), usage_error);
    CHECK_THROWS_AS(gamma_rule_parse("affine:-1,2"), usage_error);
    CHECK_THROWS_AS(gamma_rule_parse("squares"), usage_error);
    // beta rule overflows past the computable range when pulled
    auto rule = gamma_rule_parse("beta:1");
    CHECK_THROWS_AS(rule->exponent(4), usage_error);
}

TEST_CASE("suite reports are deterministic") {
    CHECK(without_elapsed(cubic_suite(32)) == without_elapsed(cubic_suite(32)));
    CHECK(without_elapsed(gamma_suite(gamma_rule_parse("n^2"), 512)) ==
          without_elapsed(gamma_suite(gamma_rule_parse("n^2"), 512)));
    CHECK(without_elapsed(beta_suite(Rational(1), 2)) ==
          without_elapsed(beta_suite(Rational(1), 2)));
}

TEST_CASE("suite json shape") {
    nlohmann::json j = beta_suite(Rational(1), 1).to_json();
    CHECK(j.contains("name"));
    CHECK(j.contains("prime"));
    CHECK(j.contains("order"));
    CHECK(j.contains("checks"));
    CHECK(j.contains("elapsed_ms"));
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("desc"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("observed"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("provenance"));
    }
}
