#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "padiclab/errors.hpp"

namespace padiclab {

using Int = mpz_class;

/// Arbitrary-precision fraction, always reduced, denominator >= 1.
/// Zero is canonically 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(const Int& n) : v_(n) {}
    // unevaluated gmp integer expressions (a + b, a * b, ...)
    template <class U>
    Rational(const __gmp_expr<mpz_t, U>& e) : v_(Int(e)) {}  // NOLINT
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw usage_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Accepts "n" or "n/d" with optional leading '-'.
    static Rational from_string(const std::string& text);

    const Int num() const { return Int(v_.get_num()); }
    const Int den() const { return Int(v_.get_den()); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw usage_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// q^e for any integer e; 0^negative is an error.
    Rational pow(long e) const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// max(bits(num), bits(den)); coefficient-size statistic.
    std::size_t bit_length() const {
        return std::max(mpz_sizeinbase(v_.get_num().get_mpz_t(), 2),
                        mpz_sizeinbase(v_.get_den().get_mpz_t(), 2));
    }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// binomial(n, k) for arbitrary integer n and k >= 0, via the falling
/// factorial n(n-1)...(n-k+1)/k!; binomial(n, 0) = 1 for every n.
Int binomial_int(const Int& n, unsigned long k);

/// n! valuation-free helper: p-adic valuation of n! by Legendre's formula
/// sum_{i>=1} floor(n/p^i). Used as an independent test oracle as well.
Int factorial_valuation(const Int& n, unsigned long p);

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool is_prime(unsigned long p);

}  // namespace padiclab
