#include "padiclab/rational.hpp"

namespace padiclab {

Rational Rational::from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text), Int(1));
        return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw usage_error("not a rational literal: '" + text + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw usage_error("Rational: 0 to a negative power");
        return Rational(0);
    }
    unsigned long ae = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Int n = pow_int(num(), ae);
    Int d = pow_int(den(), ae);
    return e < 0 ? Rational(d, n) : Rational(n, d);
}

Int binomial_int(const Int& n, unsigned long k) {
    if (n >= 0) {
        Int r;
        mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
        return r;
    }
    // falling factorial for negative upper index
    Int num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= n - static_cast<long>(i);
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    return num / fact;
}

Int factorial_valuation(const Int& n, unsigned long p) {
    Int total = 0;
    Int q = n;
    while (q > 0) {
        q /= static_cast<long>(p);
        total += q;
    }
    return total;
}

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    Int n(static_cast<long>(p));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

}  // namespace padiclab
