#include "padiclab/bivar_poly.hpp"

#include <algorithm>
#include <cctype>

namespace padiclab {

BivarPoly BivarPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const Rational& c, int xdeg, int ydeg) {
    BivarPoly f;
    if (xdeg < 0 || ydeg < 0) throw usage_error("monomial: negative degree");
    if (!c.is_zero()) f.c_[{ydeg, xdeg}] = c;
    return f;
}

int BivarPoly::deg_y() const { return c_.empty() ? -1 : c_.rbegin()->first.first; }

int BivarPoly::deg_x() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.second);
    return d;
}

Rational BivarPoly::coeff(int xdeg, int ydeg) const {
    auto it = c_.find({ydeg, xdeg});
    return it == c_.end() ? Rational(0) : it->second;
}

void BivarPoly::set_coeff(int xdeg, int ydeg, const Rational& c) {
    if (xdeg < 0 || ydeg < 0) throw usage_error("set_coeff: negative degree");
    if (c.is_zero())
        c_.erase({ydeg, xdeg});
    else
        c_[{ydeg, xdeg}] = c;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [k, v] : c_) r.c_[k] = -v;
    return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [k, v] : o.c_) {
        auto [it, inserted] = c_.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) { return *this += -o; }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            auto [it, inserted] = r.c_.try_emplace(k, va * vb);
            if (!inserted) it->second += va * vb;
        }
    for (auto it = r.c_.begin(); it != r.c_.end();)
        it = it->second.is_zero() ? r.c_.erase(it) : std::next(it);
    return r;
}

BivarPoly BivarPoly::pow(unsigned e) const {
    BivarPoly r = constant(Rational(1));
    BivarPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BivarPoly BivarPoly::scaled(const Rational& c) const {
    BivarPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : c_) r.c_[k] = v * c;
    return r;
}

BivarPoly BivarPoly::shift_y(const Rational& y0) const {
    if (y0.is_zero()) return *this;
    BivarPoly r;
    for (const auto& [k, v] : c_) {
        auto [q, j] = k;
        // (Y + y0)^q expanded term by term
        Rational scale(1);  // binom(q, t) * y0^t slides down from t = 0
        for (int t = 0; t <= q; ++t) {
            r += monomial(v * scale, j, q - t);
            scale *= Rational(q - t) * y0 / Rational(t + 1);
        }
    }
    return r;
}

BivarPoly BivarPoly::partial_y() const {
    BivarPoly r;
    for (const auto& [k, v] : c_) {
        auto [q, j] = k;
        if (q > 0) r.c_[{q - 1, j}] = v * Rational(q);
    }
    return r;
}

std::vector<Rational> BivarPoly::coeff_in_x(int ydeg) const {
    std::vector<Rational> out;
    for (const auto& [k, v] : c_) {
        if (k.first != ydeg) continue;
        if (static_cast<int>(out.size()) <= k.second) out.resize(k.second + 1, Rational(0));
        out[k.second] = v;
    }
    return out;
}

Rational BivarPoly::eval(const Rational& x, const Rational& y) const {
    Rational total(0);
    for (const auto& [k, v] : c_) total += v * x.pow(k.second) * y.pow(k.first);
    return total;
}

std::string BivarPoly::to_string() const {
    if (c_.empty()) return "0";
    // descending Y-degree, then descending X-degree
    std::vector<std::pair<std::pair<int, int>, Rational>> terms(c_.begin(), c_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second > b.first.second;
    });
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms) {
        auto [q, j] = k;
        Rational a = v.abs();
        if (first) {
            if (v.sign() < 0) out += "-";
            first = false;
        } else {
            out += v.sign() < 0 ? " - " : " + ";
        }
        std::string part;
        bool unit = (a == Rational(1)) && (j > 0 || q > 0);
        if (!unit) part = a.to_string();
        auto append_var = [&part](char var, int e) {
            if (e == 0) return;
            if (!part.empty()) part += "*";
            part += var;
            if (e > 1) part += "^" + std::to_string(e);
        };
        append_var('X', j);
        append_var('Y', q);
        out += part;
    }
    return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    BivarPoly parse() {
        BivarPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    BivarPoly expr() {
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sign = -1;
        }
        BivarPoly r = term().scaled(Rational(sign));
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            BivarPoly t = term();
            r += (c == '-') ? -t : t;
        }
        return r;
    }

    BivarPoly term() {
        BivarPoly r = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            r = r * factor();
        }
        return r;
    }

    BivarPoly factor() {
        BivarPoly base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            unsigned e = read_exponent();
            return base.pow(e);
        }
        return base;
    }

    BivarPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            BivarPoly r = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            return r;
        }
        if (c == 'X') {
            get();
            return BivarPoly::monomial(Rational(1), 1, 0);
        }
        if (c == 'Y') {
            get();
            return BivarPoly::monomial(Rational(1), 0, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_int();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected integer after '/'");
                Int den = read_int();
                if (den == 0) fail("zero denominator");
                return BivarPoly::constant(Rational(num, den));
            }
            return BivarPoly::constant(Rational(num));
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    Int read_int() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Int(s_.substr(start, pos_ - start));
    }

    unsigned read_exponent() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("exponent must be a non-negative integer");
        Int e = read_int();
        if (e > 4096) fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

BivarPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------
// resultants

namespace {

// dense univariate over Z, index = X-degree
using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

ZPoly zp_sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zp_trim(a);
    return a;
}

// exact division; the quotient is known to lie in Z[X]
ZPoly zp_divexact(ZPoly a, const ZPoly& b) {
    if (b.empty()) throw internal_error("zp_divexact: division by zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw internal_error("zp_divexact: not divisible (degree)");
    ZPoly q(a.size() - b.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (a.size() < b.size() + k || a[b.size() - 1 + k] == 0) continue;
        Int c = a[b.size() - 1 + k];
        if (!mpz_divisible_p(c.get_mpz_t(), b.back().get_mpz_t()))
            throw internal_error("zp_divexact: not divisible (coefficient)");
        q[k] = c / b.back();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + k] -= q[k] * b[i];
    }
    zp_trim(a);
    if (!a.empty()) throw internal_error("zp_divexact: nonzero remainder");
    return q;
}

// Determinant by fraction-free Bareiss elimination; entries stay in Z[X]
// because each division by the previous pivot is exact (the intermediate
// entries are subresultant-type minors).
ZPoly bareiss_det(std::vector<std::vector<ZPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return {Int(1)};
    int sign = 1;
    ZPoly prev{Int(1)};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].empty()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].empty()) ++swap_row;
            if (swap_row == n) return {};  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ZPoly num = zp_sub(zp_mul(m[i][j], m[k][k]), zp_mul(m[i][k], m[k][j]));
                m[i][j] = num.empty() ? ZPoly{} : zp_divexact(num, prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    ZPoly det = m[n - 1][n - 1];
    if (sign < 0 && !det.empty())
        for (auto& c : det) c = -c;
    return det;
}

// coefficients of f in Y as Z[X] rows, plus the denominator cleared
std::pair<std::vector<ZPoly>, Int> integer_rows(const BivarPoly& f) {
    int d = f.deg_y();
    Int lcm = 1;
    for (const auto& [k, v] : f.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
    std::vector<ZPoly> rows(d + 1);
    for (const auto& [k, v] : f.terms()) {
        auto [q, j] = k;
        auto& row = rows[q];
        if (static_cast<int>(row.size()) <= j) row.resize(j + 1, Int(0));
        row[j] = v.num() * (lcm / v.den());
    }
    for (auto& row : rows) zp_trim(row);
    return {rows, lcm};
}

}  // namespace

std::vector<Rational> resultant_y(const BivarPoly& f, const BivarPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    int m = f.deg_y();
    int l = g.deg_y();
    auto [fa, df] = integer_rows(f);
    auto [ga, dg] = integer_rows(g);

    // Sylvester matrix, rows of f-coefficients shifted l times then g shifted m times
    std::size_t n = static_cast<std::size_t>(m + l);
    std::vector<std::vector<ZPoly>> s(n, std::vector<ZPoly>(n));
    for (int i = 0; i < l; ++i)
        for (int t = 0; t <= m; ++t) s[i][i + t] = fa[m - t];
    for (int i = 0; i < m; ++i)
        for (int t = 0; t <= l; ++t) s[l + i][i + t] = ga[l - t];

    ZPoly det = bareiss_det(s);

    // undo the denominator clearing: Res(df*f, dg*g) = df^l dg^m Res(f, g)
    Rational scale = Rational(Int(1), pow_int(df, l) * pow_int(dg, m));
    std::vector<Rational> out(det.size());
    for (std::size_t i = 0; i < det.size(); ++i) out[i] = Rational(det[i]) * scale;
    return out;
}

std::vector<Rational> discriminant_y(const BivarPoly& f) {
    if (f.deg_y() < 1) throw usage_error("discriminant_y: degree in Y must be at least 1");
    return resultant_y(f, f.partial_y());
}

}  // namespace padiclab
