#include "padiclab/digits.hpp"

#include <algorithm>

namespace padiclab {

namespace {
// Positions scanned past the top digit of m before giving up. Every legal
// stream has a nonzero digit in reach long before this.
constexpr std::size_t kDigitScanCap = 1u << 24;
}  // namespace

ExponentRule::ExponentRule(std::string description, std::function<long long(std::size_t)> gen)
    : desc_(std::move(description)), gen_(std::move(gen)) {}

long long ExponentRule::exponent(std::size_t i) const {
    while (memo_.size() <= i) {
        long long next = gen_(memo_.size());
        if (next < 0) throw usage_error("exponent rule produced a negative exponent");
        if (!memo_.empty() && next <= memo_.back())
            throw usage_error("exponent rule is not strictly increasing at index " +
                              std::to_string(memo_.size()));
        memo_.push_back(next);
    }
    return memo_[i];
}

PadicIntegerSpec PadicIntegerSpec::non_negative_integer(const Int& n, unsigned long p) {
    if (!is_prime(p)) throw usage_error("p is not prime");
    if (n < 0) throw usage_error("non_negative_integer: negative value");
    PadicIntegerSpec s(Kind::NonNegative, p);
    s.num_ = n;
    s.state_ = n;
    return s;
}

PadicIntegerSpec PadicIntegerSpec::negative_integer(const Int& n, unsigned long p) {
    if (!is_prime(p)) throw usage_error("p is not prime");
    if (n <= 0) throw usage_error("negative_integer: n must be positive (gamma = -n)");
    PadicIntegerSpec s(Kind::Negative, p);
    s.num_ = -n;
    s.state_ = -n;
    return s;
}

PadicIntegerSpec PadicIntegerSpec::p_rational(const Int& num, const Int& den, unsigned long p) {
    if (!is_prime(p)) throw usage_error("p is not prime");
    if (den == 0) throw usage_error("p_rational: zero denominator");
    Rational q(num, den);  // reduces and fixes the sign of the denominator
    if (mpz_divisible_ui_p(q.den().get_mpz_t(), p))
        throw usage_error("p_rational: denominator not coprime to p");
    if (q.is_integer())
        return q.num() >= 0 ? non_negative_integer(q.num(), p) : negative_integer(-q.num(), p);
    PadicIntegerSpec s(Kind::PRational, p);
    s.num_ = q.num();
    s.den_ = q.den();
    s.state_ = q.num();
    return s;
}

PadicIntegerSpec PadicIntegerSpec::sparse_exponents(std::shared_ptr<const ExponentRule> rule) {
    if (!rule) throw usage_error("sparse_exponents: null rule");
    PadicIntegerSpec s(Kind::Sparse, 2);
    s.rule_ = std::move(rule);
    return s;
}

unsigned long PadicIntegerSpec::digit(std::size_t i) const {
    if (kind_ == Kind::Sparse) {
        // 1 exactly at the rule's exponents
        std::size_t k = 0;
        for (;; ++k) {
            long long e = rule_->exponent(k);
            if (e == static_cast<long long>(i)) return 1;
            if (e > static_cast<long long>(i)) return 0;
        }
    }
    // digit d solves state == d (mod p) after clearing den: d = state * den^{-1} mod p
    while (digit_memo_.size() <= i) {
        Int pz(static_cast<long>(p_));
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), den_.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw internal_error("digit: denominator not invertible mod p");
        Int d = (state_ % pz) * inv % pz;
        if (d < 0) d += pz;
        digit_memo_.push_back(d.get_ui());
        state_ = (state_ - d * den_) / pz;
    }
    return digit_memo_[i];
}

namespace {

std::vector<unsigned long> digits_of(const Int& m, unsigned long p) {
    std::vector<unsigned long> d;
    Int q = m;
    while (q > 0) {
        Int r;
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p);
        d.push_back(r.get_ui());
    }
    return d;
}

}  // namespace

Valuation padic_binom_val(const PadicIntegerSpec& gamma, const Int& m) {
    if (m < 0) throw usage_error("padic_binom_val: m must be non-negative");
    if (m == 0) return Valuation(Rational(0));
    if (gamma.is_non_negative_integer() && gamma.integer_value() < m)
        return Valuation::infinity();  // binomial(gamma, m) = 0

    // count borrows of gamma - m in base p; the chain past the top digit of m
    // ends at the next nonzero digit of gamma
    unsigned long p = gamma.prime();
    auto md = digits_of(m, p);
    long borrows = 0;
    unsigned long borrow = 0;
    for (std::size_t i = 0;; ++i) {
        if (i >= md.size() && borrow == 0) break;
        if (i > md.size() + kDigitScanCap)
            throw internal_error("padic_binom_val: digit stream did not absorb the borrow");
        unsigned long g = gamma.digit(i);
        unsigned long sub = (i < md.size() ? md[i] : 0) + borrow;
        if (g < sub) {
            borrow = 1;
            ++borrows;
        } else {
            borrow = 0;
        }
    }
    return Valuation(Rational(borrows));
}

Valuation padic_sub_val(const PadicIntegerSpec& gamma, const Int& m) {
    if (m < 0) throw usage_error("padic_sub_val: m must be non-negative");
    if (gamma.is_non_negative_integer() && gamma.integer_value() == m)
        return Valuation::infinity();

    unsigned long p = gamma.prime();
    auto md = digits_of(m, p);
    unsigned long borrow = 0;
    for (std::size_t i = 0;; ++i) {
        if (i > md.size() + kDigitScanCap)
            throw internal_error("padic_sub_val: no nonzero digit found");
        unsigned long g = gamma.digit(i);
        unsigned long sub = (i < md.size() ? md[i] : 0) + borrow;
        unsigned long r;
        if (g < sub) {
            r = g + p - sub;
            borrow = 1;
        } else {
            r = g - sub;
            borrow = 0;
        }
        if (r != 0) return Valuation(Rational(static_cast<long>(i)));
    }
}

}  // namespace padiclab
