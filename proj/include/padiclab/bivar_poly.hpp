#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "padiclab/rational.hpp"

namespace padiclab {

/// Exact bivariate polynomial f(X, Y) = sum c_{qj} X^j Y^q as a sparse
/// coefficient map. Zero coefficients are never stored.
class BivarPoly {
public:
    BivarPoly() = default;

    static BivarPoly constant(const Rational& c);
    static BivarPoly monomial(const Rational& c, int xdeg, int ydeg);

    bool is_zero() const { return c_.empty(); }
    /// Degree in Y; -1 for the zero polynomial.
    int deg_y() const;
    /// Degree in X; -1 for the zero polynomial.
    int deg_x() const;

    /// Coefficient of X^j Y^q (zero when absent).
    Rational coeff(int xdeg, int ydeg) const;
    void set_coeff(int xdeg, int ydeg, const Rational& c);

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { a += b; return a; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { a -= b; return a; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly pow(unsigned e) const;

    BivarPoly scaled(const Rational& c) const;

    /// Substitute Y -> Y + y0.
    BivarPoly shift_y(const Rational& y0) const;

    /// Formal derivative with respect to Y.
    BivarPoly partial_y() const;

    /// c_q(X) as a dense coefficient vector (empty when q exceeds deg_y).
    std::vector<Rational> coeff_in_x(int ydeg) const;

    Rational eval(const Rational& x, const Rational& y) const;

    /// Canonical printer; parse(to_string()) round-trips.
    std::string to_string() const;

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    /// (ydeg, xdeg) -> coefficient, ordered by Y-degree then X-degree.
    const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }

private:
    std::map<std::pair<int, int>, Rational> c_;
};

/// Parse the polynomial grammar: INT, '/', 'X', 'Y', '^', '*', '+', '-',
/// '(', ')'; rationals as INT or INT/INT; no implicit multiplication;
/// exponents are non-negative INT; whitespace ignored.
BivarPoly parse_poly(const std::string& text);

/// Res_Y(f, df/dY) as a univariate polynomial in X (dense, index = X-degree),
/// computed by fraction-free subresultant elimination. Vanishes exactly where
/// f(x0, .) has a multiple root or drops degree. Requires deg_y(f) >= 1.
std::vector<Rational> discriminant_y(const BivarPoly& f);

/// Res_Y(f, g) for univariate-in-Y inputs with X-polynomial coefficients.
std::vector<Rational> resultant_y(const BivarPoly& f, const BivarPoly& g);

}  // namespace padiclab
