#pragma once

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "padiclab/gamma_rule.hpp"
#include "padiclab/rational.hpp"

namespace padiclab {

struct SuiteCheck {
    std::string desc;
    std::string expected;
    std::string observed;
    bool pass = false;
    std::string provenance;
};

/// One executable reproduction; overall pass iff every check passes.
/// Identical inputs produce identical reports apart from elapsed_ms.
struct SuiteReport {
    std::string name;
    unsigned long prime = 2;
    long order = 0;
    std::vector<SuiteCheck> checks;
    long elapsed_ms = 0;

    bool pass() const;
    nlohmann::json to_json() const;
};

/// y^3 - 3y = 2 - x expanded at y(0) = 2: 2-integrality, branch data, and the
/// Chebyshev-polynomial closed form (checked through min(N, 200)).
SuiteReport cubic_suite(long N);

/// y^p(y+1) = x at y(0) = -1: Newton lifting, the quadratic recurrence and
/// the Fuss-Catalan closed form agree; coefficients are integers; branch
/// containment verdict "inside".
SuiteReport fuss_catalan_suite(unsigned long p, long N);

/// (1+x)^{1/p}: radius estimate within slope_tol of -p/(p-1); the branch
/// point sits strictly outside the radius.
SuiteReport pth_root_suite(unsigned long p, long N, const Rational& slope_tol = Rational(1, 50));

/// y^{p-1}(y-1) = x at y(0) = 1: integrality, recurring unit coefficients
/// (radius-one evidence), branch valuation -p, verdict "radius smaller than
/// branch distance".
SuiteReport wild_suite(unsigned long p, long N);

/// gamma pair built from the rule's even/odd exponents: exact values at
/// m = 2^{a_j}, the carry lower bound at every m <= N, the recurrence
/// valuation identity for m <= min(N, 10^4), and boundary flags.
SuiteReport gamma_suite(const std::shared_ptr<const ExponentRule>& rule, long N);

/// Growth sequence a_0 = 1, a_{n+1} = a_n + ceil(beta 2^{a_n}): the ratio
/// (a_{j+1} - a_j)/2^{a_j} equals v_2(a_m)/m at m = 2^{a_j} and approximates
/// beta within 2^{-a_j}.
SuiteReport beta_suite(const Rational& beta, int j_max);

/// (1 + 4 delta)^{2^k} = 1 + 2^{k+1} Delta with Delta in 2Z[[x]], for sample
/// delta series, k <= k_max, plus the binomial-valuation step
/// v_2(binom(2^k, m)) + 2m >= k + 2.
SuiteReport power_lemma_suite(int k_max, long N);

/// c_m = sum_{r+s=m} a^r b^s binom(alpha, r) binom(beta, s) for p-units
/// a != b: reports the tail-window minimum valuation and its recurring
/// witnesses (evidence that c_m does not tend to 0).
SuiteReport binomial_pair_suite(const Rational& a, const Rational& b, const Rational& alpha,
                                const Rational& beta, unsigned long p, long N);

}  // namespace padiclab
