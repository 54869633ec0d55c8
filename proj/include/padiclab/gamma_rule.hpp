#pragma once

#include <memory>
#include <string>

#include "padiclab/digits.hpp"

namespace padiclab {

/// Parse an exponent-rule description:
///   "n^2"                     a_n = n^2
///   "affine:<c>,<g>"          a_0 = c, a_{n+1} = a_n + g (n+1)
///   "beta:<rational>"         a_0 = 1, a_{n+1} = a_n + ceil(beta 2^{a_n})
///   "list:<ints>+tail:<g>"    explicit prefix, then constant gap g
/// Rules must be strictly increasing and non-negative; a rule whose values
/// leave the computable range throws usage_error when that index is pulled.
std::shared_ptr<const ExponentRule> gamma_rule_parse(const std::string& text);

/// The "beta:" rule builder; doubly exponential, guarded.
std::shared_ptr<const ExponentRule> beta_exponent_rule(const Rational& beta);

/// Largest exponent value a rule may produce (digit positions are scanned
/// one by one, so values beyond this are not computable here).
constexpr long long kExponentCap = 1ll << 20;

}  // namespace padiclab
