#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "padiclab/rational.hpp"
#include "padiclab/valuation.hpp"

namespace padiclab {

/// Generator of a strictly increasing sequence of non-negative exponents
/// a_0 < a_1 < ... used to describe sparse 2-adic integers sum 2^{a_i}.
/// Monotonicity is checked as terms are pulled; a violation throws
/// usage_error. Instances memoize and are meant for single-owner use,
/// not concurrent sharing.
class ExponentRule {
public:
    ExponentRule(std::string description, std::function<long long(std::size_t)> gen);

    long long exponent(std::size_t i) const;
    const std::string& description() const { return desc_; }

private:
    std::string desc_;
    std::function<long long(std::size_t)> gen_;
    mutable std::vector<long long> memo_;
};

/// Description of a p-adic integer by its base-p digit stream. Digits are
/// computed on demand and memoized (single-owner; clone per thread when
/// fanning out).
class PadicIntegerSpec {
public:
    /// gamma = n >= 0.
    static PadicIntegerSpec non_negative_integer(const Int& n, unsigned long p);
    /// gamma = -n for n > 0.
    static PadicIntegerSpec negative_integer(const Int& n, unsigned long p);
    /// gamma = num/den with p coprime to den.
    static PadicIntegerSpec p_rational(const Int& num, const Int& den, unsigned long p);
    /// gamma = sum_i 2^{rule(i)}; p = 2 only.
    static PadicIntegerSpec sparse_exponents(std::shared_ptr<const ExponentRule> rule);

    unsigned long prime() const { return p_; }

    /// Base-p digit at position i, in [0, p-1].
    unsigned long digit(std::size_t i) const;

    /// True when gamma is a plain integer n >= 0 (finite digit expansion).
    bool is_non_negative_integer() const { return kind_ == Kind::NonNegative; }
    const Int& integer_value() const { return num_; }

private:
    enum class Kind { NonNegative, Negative, PRational, Sparse };

    PadicIntegerSpec(Kind kind, unsigned long p) : kind_(kind), p_(p) {}

    Kind kind_;
    unsigned long p_;
    Int num_ = 0;
    Int den_ = 1;
    std::shared_ptr<const ExponentRule> rule_;

    // digit cache for the rational kinds: state_ is the remaining value
    // whose digit stream continues after the cached prefix
    mutable std::vector<unsigned long> digit_memo_;
    mutable Int state_ = 0;
};

/// v_p(binomial(gamma, m)) for a p-adic integer gamma and m >= 0, as the
/// number of borrows of the base-p subtraction gamma - m (equivalently the
/// carries of m + (gamma - m)). Returns +infinity exactly when gamma is a
/// non-negative integer smaller than m, so that the binomial vanishes.
Valuation padic_binom_val(const PadicIntegerSpec& gamma, const Int& m);

/// v_p(gamma - m): index of the first nonzero digit of gamma - m.
/// +infinity iff gamma equals m as a non-negative integer.
Valuation padic_sub_val(const PadicIntegerSpec& gamma, const Int& m);

}  // namespace padiclab
