#pragma once

#include <vector>

#include "padiclab/bivar_poly.hpp"
#include "padiclab/rational.hpp"

namespace padiclab {

/// Power series truncated at an explicit inclusive order N: coefficients
/// a_0..a_N, trailing zeros retained. Every operation returns the minimum
/// guaranteed-correct order; orders are never inferred.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order) : a_(check_order(order) + 1, Rational(0)) {}
    TruncatedSeries(std::vector<Rational> coeffs)
        : a_(std::move(coeffs)) {
        if (a_.empty()) throw usage_error("TruncatedSeries: empty coefficient list");
    }

    long order() const { return static_cast<long>(a_.size()) - 1; }
    const Rational& coeff(long n) const { return a_.at(static_cast<std::size_t>(n)); }
    void set_coeff(long n, const Rational& c) { a_.at(static_cast<std::size_t>(n)) = c; }
    const std::vector<Rational>& coeffs() const { return a_; }

    TruncatedSeries truncated(long new_order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.a_ == b.a_;
    }

    /// Largest numerator/denominator bit length over the coefficients.
    std::size_t max_coeff_bits() const;

private:
    static long check_order(long order) {
        if (order < 0) throw usage_error("TruncatedSeries: negative order");
        return order;
    }
    std::vector<Rational> a_;
};

/// Cauchy product truncated at the minimum of the operand orders.
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// s^q by repeated squaring mod x^{order+1}; q >= 1.
TruncatedSeries pow(const TruncatedSeries& s, unsigned q);

/// Coefficient n becomes a_n mu^n (substitution x -> mu x).
TruncatedSeries rescale(const TruncatedSeries& s, const Rational& mu);

/// Taylor shift: output coefficient r is sum_{m=r}^{N} a_m binom(m, r) x0^{m-r},
/// the expansion of s around x0 truncated at order M <= order(s).
TruncatedSeries recenter(const TruncatedSeries& s, const Rational& x0, long M);

/// 1/s mod x^{order+1}; requires a unit (nonzero) constant term.
TruncatedSeries inverse(const TruncatedSeries& s);

/// sum_q c_q(x) s(x)^q mod x^{order(s)+1}.
TruncatedSeries eval_poly_at_series(const BivarPoly& f, const TruncatedSeries& s);

/// Unique series s with s(0) = y0 and f(x, s(x)) = O(x^{N+1}), lifted by the
/// Newton iteration s <- s - f(x,s)/f_Y(x,s) with the correct order doubling
/// each step, all arithmetic mod x^{N+1}. Requires f(0, y0) = 0 and
/// f_Y(0, y0) != 0; the error distinguishes "not a root" from "multiple root".
TruncatedSeries hensel_expand(const BivarPoly& f, const Rational& y0, long N);

/// Same series as hensel_expand(f, 0, N) computed coefficient by coefficient
/// from the recurrence a_n = -[x^n] f(x, s_n(x)). Requires the normalized
/// shape f(0,0) = 0 and f_Y(0,0) = 1; the error names the failing coefficient.
TruncatedSeries recurrence_expand(const BivarPoly& f, long N);

/// Shift Y by the simple root y0 and divide by the unit f_Y(0, y0), producing
/// the normalized input recurrence_expand expects; the root series of f at y0
/// is y0 + recurrence_expand(normalize_at_root(f, y0), N).
BivarPoly normalize_at_root(const BivarPoly& f, const Rational& y0);

/// True iff f(x, s(x)) vanishes identically through order(s).
bool verify_root(const BivarPoly& f, const TruncatedSeries& s);

}  // namespace padiclab
