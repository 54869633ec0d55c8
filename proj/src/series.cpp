#include "padiclab/series.hpp"

#include <algorithm>

namespace padiclab {

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
    if (new_order > order()) throw usage_error("truncated: cannot extend the order");
    std::vector<Rational> c(a_.begin(), a_.begin() + new_order + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (long i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    long n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (long i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

std::size_t TruncatedSeries::max_coeff_bits() const {
    std::size_t m = 0;
    for (const auto& c : a_) m = std::max(m, c.bit_length());
    return m;
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    long n = std::min(s.order(), t.order());
    TruncatedSeries r(n);
    for (long i = 0; i <= n; ++i) {
        if (s.coeff(i).is_zero()) continue;
        for (long j = 0; i + j <= n; ++j) {
            if (t.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + s.coeff(i) * t.coeff(j));
        }
    }
    return r;
}

TruncatedSeries pow(const TruncatedSeries& s, unsigned q) {
    if (q == 0) {
        TruncatedSeries one(s.order());
        one.set_coeff(0, Rational(1));
        return one;
    }
    TruncatedSeries result(s.order());
    result.set_coeff(0, Rational(1));
    TruncatedSeries base = s;
    while (q) {
        if (q & 1) result = mul(result, base);
        q >>= 1;
        if (q) base = mul(base, base);
    }
    return result;
}

TruncatedSeries rescale(const TruncatedSeries& s, const Rational& mu) {
    TruncatedSeries r(s.order());
    Rational power(1);
    for (long n = 0; n <= s.order(); ++n) {
        r.set_coeff(n, s.coeff(n) * power);
        power *= mu;
    }
    return r;
}

TruncatedSeries recenter(const TruncatedSeries& s, const Rational& x0, long M) {
    if (M > s.order()) throw usage_error("recenter: output order exceeds input order");
    const long N = s.order();
    TruncatedSeries r(M);
    for (long row = 0; row <= M; ++row) {
        // sum_{m=row}^{N} a_m binom(m, row) x0^{m-row}
        Rational acc(0);
        Rational weight(1);  // binom(m, row) x0^{m-row}, advanced in m
        for (long m = row; m <= N; ++m) {
            acc += s.coeff(m) * weight;
            weight *= Rational(m + 1) * x0 / Rational(m + 1 - row);
        }
        r.set_coeff(row, acc);
    }
    return r;
}

TruncatedSeries inverse(const TruncatedSeries& s) {
    if (s.coeff(0).is_zero()) throw usage_error("inverse: constant term is zero");
    const long N = s.order();
    // Newton iteration g <- g(2 - s g), doubling the correct order
    TruncatedSeries g(0);
    g.set_coeff(0, Rational(1) / s.coeff(0));
    long correct = 1;
    while (correct <= N) {
        long next = std::min(2 * correct, N + 1);
        TruncatedSeries gg(next - 1);
        for (long i = 0; i < correct; ++i) gg.set_coeff(i, g.coeff(i));
        TruncatedSeries sg = mul(s.truncated(next - 1), gg);
        TruncatedSeries two(next - 1);
        two.set_coeff(0, Rational(2));
        g = mul(gg, two - sg);
        correct = next;
    }
    return g;
}

TruncatedSeries eval_poly_at_series(const BivarPoly& f, const TruncatedSeries& s) {
    const long N = s.order();
    int d = f.deg_y();
    TruncatedSeries acc(N);
    // Horner in Y with truncated-series coefficients
    for (int q = d; q >= 0; --q) {
        if (q != d) acc = mul(acc, s);
        for (const auto& [k, v] : f.terms()) {
            if (k.first != q || k.second > N) continue;
            acc.set_coeff(k.second, acc.coeff(k.second) + v);
        }
    }
    return acc;
}

TruncatedSeries hensel_expand(const BivarPoly& f, const Rational& y0, long N) {
    if (N < 0) throw usage_error("hensel_expand: negative order");
    Rational f0 = f.eval(Rational(0), y0);
    if (!f0.is_zero())
        throw usage_error("hensel_expand: y0 is not a root of f(0, Y)");
    BivarPoly fy = f.partial_y();
    if (fy.eval(Rational(0), y0).is_zero())
        throw usage_error("hensel_expand: y0 is a multiple root of f(0, Y) at x = 0");

    TruncatedSeries s(0);
    s.set_coeff(0, y0);
    long correct = 1;  // coefficients below this index are final
    while (correct <= N) {
        long next = std::min(2 * correct, N + 1);
        TruncatedSeries cur(next - 1);
        for (long i = 0; i < correct; ++i) cur.set_coeff(i, s.coeff(i));
        TruncatedSeries fs = eval_poly_at_series(f, cur);
        TruncatedSeries fys = eval_poly_at_series(fy, cur);
        s = cur - mul(fs, inverse(fys));
        correct = next;
    }
    return s;
}

BivarPoly normalize_at_root(const BivarPoly& f, const Rational& y0) {
    Rational unit = f.partial_y().eval(Rational(0), y0);
    if (!f.eval(Rational(0), y0).is_zero() || unit.is_zero())
        throw usage_error("normalize_at_root: y0 is not a simple root of f(0, Y)");
    return f.shift_y(y0).scaled(Rational(1) / unit);
}

TruncatedSeries recurrence_expand(const BivarPoly& f, long N) {
    if (N < 0) throw usage_error("recurrence_expand: negative order");
    if (!f.coeff(0, 0).is_zero())
        throw usage_error("recurrence_expand: c_0(0) = " + f.coeff(0, 0).to_string() +
                          ", expected 0");
    if (f.coeff(0, 1) != Rational(1))
        throw usage_error("recurrence_expand: c_1(0) = " + f.coeff(0, 1).to_string() +
                          ", expected 1");

    const int d = std::max(f.deg_y(), 1);
    // powers[q][k] = [x^k] s(x)^q; since a_0 = 0, [x^n] s^q for q >= 2 only
    // involves a_1..a_{n-1}, so each row can be extended before a_n is known
    std::vector<std::vector<Rational>> powers(d + 1);
    for (int q = 0; q <= d; ++q) powers[q].assign(1, q == 0 ? Rational(1) : Rational(0));

    for (long n = 1; n <= N; ++n) {
        for (int q = 2; q <= d; ++q) {
            Rational acc(0);
            for (long i = 1; i < n; ++i) {
                const Rational& ai = powers[1][i];
                if (!ai.is_zero() && !powers[q - 1][n - i].is_zero())
                    acc += ai * powers[q - 1][n - i];
            }
            powers[q].push_back(acc);
        }
        // a_n = -[x^n] f(x, s_n(x)): the q = 1 term contributes c_{1j} a_{n-j}
        // for j >= 1 and the higher-q terms come from the cached powers
        Rational an(0);
        for (const auto& [k, v] : f.terms()) {
            auto [q, j] = k;
            if (j > n) continue;
            if (q == 0) {
                if (j == n) an += v;
            } else if (q == 1) {
                if (j >= 1) an += v * powers[1][n - j];
            } else {
                an += v * powers[q][n - j];
            }
        }
        an = -an;
        powers[1].push_back(an);
        if (static_cast<long>(powers[1].size()) != n + 1)
            throw internal_error("recurrence_expand: power table out of step");
    }
    TruncatedSeries s(N);
    for (long n = 1; n <= N; ++n) s.set_coeff(n, powers[1][n]);
    return s;
}

bool verify_root(const BivarPoly& f, const TruncatedSeries& s) {
    TruncatedSeries fs = eval_poly_at_series(f, s);
    for (long n = 0; n <= fs.order(); ++n)
        if (!fs.coeff(n).is_zero()) return false;
    return true;
}

}  // namespace padiclab
