#pragma once

#include <vector>

#include "padiclab/rational.hpp"
#include "padiclab/valuation.hpp"

namespace padiclab {

/// p-adic valuation of a rational; vp(0) = +infinity.
/// Throws usage_error unless p is prime.
Valuation vp(const Rational& q, unsigned long p);

/// Valuation of a nonzero integer, as a plain count.
long vp_int(const Int& n, unsigned long p);

/// S_p(n): sum of the base-p digits of n >= 0.
Int digit_sum(const Int& n, unsigned long p);

/// v_p(binomial(n, m)) for 0 <= m <= n, computed both as the carry count
/// of the base-p addition m + (n-m) and by the digit-sum formula
/// (S_p(m) + S_p(n-m) - S_p(n)) / (p-1); the two must agree.
Valuation kummer_binom_val(const Int& n, const Int& m, unsigned long p);

/// binomial(beta, m) = beta(beta-1)...(beta-m+1)/m! for rational beta.
Rational binom_series_coeff(const Rational& beta, unsigned long m);

/// min of coefficient valuations; +infinity on the empty/zero list.
Valuation gauss_valuation(const std::vector<Rational>& coeffs, unsigned long p);

}  // namespace padiclab
