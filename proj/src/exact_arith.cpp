#include "padiclab/exact_arith.hpp"

namespace padiclab {

namespace {

void require_prime(unsigned long p) {
    if (!is_prime(p)) throw usage_error("p = " + std::to_string(p) + " is not prime");
}

std::vector<unsigned long> base_p_digits(const Int& n, unsigned long p) {
    std::vector<unsigned long> digits;
    Int q = n;
    while (q > 0) {
        Int r;
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p);
        digits.push_back(r.get_ui());
    }
    return digits;
}

}  // namespace

long vp_int(const Int& n, unsigned long p) {
    if (n == 0) throw usage_error("vp_int: zero has infinite valuation");
    Int reduced;
    Int pz(static_cast<long>(p));
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Valuation vp(const Rational& q, unsigned long p) {
    require_prime(p);
    if (q.is_zero()) return Valuation::infinity();
    return Valuation(Rational(vp_int(q.num(), p) - vp_int(q.den(), p)));
}

Int digit_sum(const Int& n, unsigned long p) {
    require_prime(p);
    if (n < 0) throw usage_error("digit_sum: negative argument");
    Int s = 0;
    for (unsigned long d : base_p_digits(n, p)) s += static_cast<long>(d);
    return s;
}

Valuation kummer_binom_val(const Int& n, const Int& m, unsigned long p) {
    require_prime(p);
    if (m < 0 || n < 0) throw usage_error("kummer_binom_val: negative argument");
    if (m > n) throw usage_error("kummer_binom_val: m > n");

    // carry count of m + (n-m) in base p
    auto md = base_p_digits(m, p);
    auto rd = base_p_digits(n - m, p);
    std::size_t len = std::max(md.size(), rd.size());
    long carries = 0;
    unsigned long carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        unsigned long a = i < md.size() ? md[i] : 0;
        unsigned long b = i < rd.size() ? rd[i] : 0;
        unsigned long t = a + b + carry;
        carry = t >= p ? 1 : 0;
        carries += static_cast<long>(carry);
    }

    Int by_digits = digit_sum(m, p) + digit_sum(n - m, p) - digit_sum(n, p);
    if (by_digits % static_cast<long>(p - 1) != 0 ||
        by_digits / static_cast<long>(p - 1) != carries) {
        throw internal_error("kummer_binom_val: carry count and digit-sum formula disagree");
    }
    return Valuation(Rational(carries));
}

Rational binom_series_coeff(const Rational& beta, unsigned long m) {
    Rational num(1);
    for (unsigned long i = 0; i < m; ++i) num *= beta - Rational(static_cast<long>(i));
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), m);
    return num / Rational(fact);
}

Valuation gauss_valuation(const std::vector<Rational>& coeffs, unsigned long p) {
    require_prime(p);
    Valuation best = Valuation::infinity();
    for (const auto& c : coeffs) best = min(best, vp(c, p));
    return best;
}

}  // namespace padiclab
