#include "padiclab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "padiclab/exact_arith.hpp"
#include "padiclab/radius.hpp"

namespace padiclab {

bool SuiteReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks) {
        checks_json.push_back({{"desc", c.desc},
                               {"expected", c.expected},
                               {"observed", c.observed},
                               {"pass", c.pass},
                               {"provenance", c.provenance}});
    }
    return {{"name", name},
            {"prime", prime},
            {"order", order},
            {"checks", checks_json},
            {"elapsed_ms", elapsed_ms},
            {"pass", pass()}};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch {
    Clock::time_point start = Clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
};

void add_check(SuiteReport& r, const std::string& desc, const std::string& expected,
               const std::string& observed, const std::string& provenance) {
    r.checks.push_back({desc, expected, observed, expected == observed, provenance});
}

std::string fmt_branch(const BranchData& b) {
    std::string out = "zero^" + std::to_string(b.zero_multiplicity) + " {";
    for (std::size_t i = 0; i < b.valuations.size(); ++i)
        out += (i ? "," : "") + b.valuations[i].to_string();
    return out + "}";
}

// first index with v_p < 0, or "none"
std::string first_negative(const ValuationProfile& pr) {
    for (long n = 0; n <= pr.order(); ++n)
        if (pr.v[n] < Valuation(Rational(0))) return "index " + std::to_string(n);
    return "none";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void require_prime_arg(unsigned long p) {
    if (!is_prime(p)) throw usage_error("suite: p = " + std::to_string(p) + " is not prime");
}

}  // namespace

SuiteReport cubic_suite(long N) {
    if (N < 8) throw usage_error("cubic_suite: N must be at least 8");
    Stopwatch sw;
    SuiteReport r{"cubic", 2, N, {}, 0};

    BivarPoly f = parse_poly("Y^3 - 3*Y + X - 2");
    TruncatedSeries s = hensel_expand(f, Rational(2), N);
    add_check(r, "a_0", "2", s.coeff(0).to_string(), "initial value");
    add_check(r, "a_1", "-1/9", s.coeff(1).to_string(), "one Newton step by hand");

    ValuationProfile pr = profile(s, 2);
    add_check(r, "v_2(a_n) >= 0 for n <= " + std::to_string(N), "none", first_negative(pr),
              "2-integrality of the lift");

    BranchData b = branch_point_valuations(f, 2);
    add_check(r, "branch valuations", "zero^1 {2}", fmt_branch(b), "discriminant roots 0 and 4");

    // closed form sum_n 2 binom(1/3, n) u^n T_n(-u/2) restricted to u^2 = x:
    // the coefficient of x^K collapses to
    //   (-1)^K sum_{m=0}^{K} binom(1/3, K+m) (binom(K, m) + binom(K-1, K-m))
    const long M = std::min<long>(N, 200);
    std::vector<Rational> third(2 * M + 1);
    third[0] = Rational(1);
    for (long t = 0; t < 2 * M; ++t)
        third[t + 1] = third[t] * (Rational(1, 3) - Rational(t)) / Rational(t + 1);
    long first_mismatch = -1;
    for (long K = 0; K <= M && first_mismatch < 0; ++K) {
        Rational acc(0);
        for (long m = 0; m <= K; ++m)
            acc += third[K + m] *
                   Rational(Int(binomial_int(Int(K), m) + binomial_int(Int(K - 1), K - m)));
        if (K % 2 == 1) acc = -acc;
        if (acc != s.coeff(K)) first_mismatch = K;
    }
    add_check(r, "Chebyshev closed form equals the lift for n <= " + std::to_string(M), "none",
              first_mismatch < 0 ? "none" : "index " + std::to_string(first_mismatch),
              "explicit formula");

    r.elapsed_ms = sw.ms();
    return r;
}

SuiteReport fuss_catalan_suite(unsigned long p, long N) {
    require_prime_arg(p);
    if (N < 8) throw usage_error("fuss_catalan_suite: N must be at least 8");
    Stopwatch sw;
    SuiteReport r{"fuss-catalan", p, N, {}, 0};

    // the sign of a_n alternates only for odd p: substituting Y -> Y - 1
    // turns the equation into (-1)^p t (1-t)^p = x, so a_1 = (-1)^p
    const bool odd_p = p % 2 == 1;
    BivarPoly f = parse_poly("Y^" + std::to_string(p) + "*(Y + 1) - X");
    TruncatedSeries s = hensel_expand(f, Rational(-1), N);
    add_check(r, "a_0", "-1", s.coeff(0).to_string(), "initial value");
    add_check(r, "a_1 = (-1)^p", odd_p ? "-1" : "1", s.coeff(1).to_string(),
              "one Newton step; the catalogued -1 holds for odd p");
    add_check(r, "a_2", std::to_string(p), s.coeff(2).to_string(), "closed form at n = 2");

    // route 2: coefficient recurrence after normalizing the root to the origin
    TruncatedSeries viaRec = recurrence_expand(normalize_at_root(f, Rational(-1)), N);
    long mismatch = -1;
    for (long n = 1; n <= N && mismatch < 0; ++n)
        if (viaRec.coeff(n) != s.coeff(n)) mismatch = n;
    add_check(r, "Newton lift equals the coefficient recurrence", "none",
              mismatch < 0 ? "none" : "index " + std::to_string(mismatch), "cross-oracle");

    // route 3: the quadratic recurrence a_{n+1} = (1/n) sum a_i a_{n-i+1} (i(p+1)-1)
    std::vector<Rational> quad(N + 1);
    quad[0] = Rational(-1);
    if (N >= 1) quad[1] = Rational(odd_p ? -1 : 1);
    for (long n = 1; n + 1 <= N; ++n) {
        Rational acc(0);
        for (long i = 1; i <= n; ++i)
            acc += quad[i] * quad[n - i + 1] *
                   Rational(i * static_cast<long>(p + 1) - 1);
        quad[n + 1] = acc / Rational(n);
    }
    mismatch = -1;
    for (long n = 0; n <= N && mismatch < 0; ++n)
        if (quad[n] != s.coeff(n)) mismatch = n;
    add_check(r, "quadratic recurrence route agrees", "none",
              mismatch < 0 ? "none" : "index " + std::to_string(mismatch), "cross-oracle");

    // route 4: closed form |a_n| = binom((p+1)n - 1, n) / ((p+1)n - 1), with
    // the (-1)^n sign for odd p
    mismatch = -1;
    for (long n = 1; n <= N && mismatch < 0; ++n) {
        Int top = Int(static_cast<long>(p + 1)) * n - 1;
        Rational cf = Rational(binomial_int(top, static_cast<unsigned long>(n))) / Rational(top);
        if (odd_p && n % 2 == 1) cf = -cf;
        if (cf != s.coeff(n)) mismatch = n;
    }
    add_check(r, "Fuss-Catalan closed form agrees", "none",
              mismatch < 0 ? "none" : "index " + std::to_string(mismatch), "closed form");

    bool all_int = true;
    for (long n = 0; n <= N; ++n) all_int = all_int && s.coeff(n).is_integer();
    add_check(r, "all coefficients are integers", "yes", yesno(all_int), "integrality of the lift");

    ValuationProfile pr = profile(s, p);
    add_check(r, "v_p(a_n) >= 0 for n <= " + std::to_string(N), "none", first_negative(pr),
              "integrality of the lift");

    ContainmentVerdict cv = branch_containment(f, pr);
    add_check(r, "branch containment verdict", "inside", cv.verdict,
              "certified radius bound vs branch valuations");
    add_check(r, "nonzero branch valuation", "{" + std::to_string(p) + "}",
              "{" + (cv.branch.valuations.size() == 1 ? cv.branch.valuations[0].to_string()
                                                      : fmt_branch(cv.branch)) +
                  "}",
              "discriminant root valuation");

    r.elapsed_ms = sw.ms();
    return r;
}

SuiteReport pth_root_suite(unsigned long p, long N, const Rational& slope_tol) {
    require_prime_arg(p);
    if (N < 32) throw usage_error("pth_root_suite: N must be at least 32");
    Stopwatch sw;
    SuiteReport r{"pth-root", p, N, {}, 0};

    TruncatedSeries s(N);
    Rational c(1);
    s.set_coeff(0, c);
    for (long n = 0; n < N; ++n) {
        c = c * (Rational(1, static_cast<long>(p)) - Rational(n)) / Rational(n + 1);
        s.set_coeff(n + 1, c);
    }
    add_check(r, "a_0", "1", s.coeff(0).to_string(), "binomial coefficient");
    add_check(r, "a_1", Rational(1, static_cast<long>(p)).to_string(), s.coeff(1).to_string(),
              "binomial coefficient");

    ValuationProfile pr = profile(s, p);
    RadiusEstimate est = radius_estimate(pr);
    Rational target(-static_cast<long>(p), static_cast<long>(p - 1));
    add_check(r, "tail hull slope within " + slope_tol.to_string() + " of " + target.to_string(),
              "yes", yesno((est.hull_slope_tail - target).abs() <= slope_tol),
              "observed " + est.hull_slope_tail.to_string());
    add_check(r, "window min ratio within " + slope_tol.to_string() + " of " + target.to_string(),
              "yes", yesno((est.window_min_ratio - target).abs() <= slope_tol),
              "observed " + est.window_min_ratio.to_string());

    BivarPoly f = parse_poly("Y^" + std::to_string(p) + " - 1 - X");
    ContainmentVerdict cv = branch_containment(f, pr, slope_tol);
    add_check(r, "branch containment verdict", "branch_outside_radius", cv.verdict,
              "branch at valuation 0 vs sub-unit radius estimate");

    r.elapsed_ms = sw.ms();
    return r;
}

SuiteReport wild_suite(unsigned long p, long N) {
    require_prime_arg(p);
    if (N < 32) throw usage_error("wild_suite: N must be at least 32");
    Stopwatch sw;
    SuiteReport r{"wild", p, N, {}, 0};

    BivarPoly f = parse_poly("Y^" + std::to_string(p - 1) + "*(Y - 1) - X");
    add_check(r, "f_Y(0, 1)", "1", f.partial_y().eval(Rational(0), Rational(1)).to_string(),
              "unit simple root");
    TruncatedSeries s = hensel_expand(f, Rational(1), N);
    add_check(r, "a_0", "1", s.coeff(0).to_string(), "initial value");

    ValuationProfile pr = profile(s, p);
    add_check(r, "v_p(a_n) >= 0 for n <= " + std::to_string(N), "none", first_negative(pr),
              "integrality of the lift");

    // radius-one evidence: unit coefficients recur at every dyadic scale
    bool every_block = true;
    std::string bad_block;
    for (long lo = 1; lo <= N; lo *= 2) {
        long hi = std::min(N, 2 * lo - 1);
        bool found = false;
        for (long n = lo; n <= hi && !found; ++n) found = pr.v[n] == Valuation(Rational(0));
        if (!found) {
            every_block = false;
            bad_block = "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
            break;
        }
    }
    add_check(r, "unit coefficients recur in every dyadic block", "yes",
              every_block ? "yes" : "no, first empty block " + bad_block,
              "radius-one evidence");

    // the unit indices form a sparse self-similar set (powers of 2 at p = 2),
    // so the window count is data, not a threshold
    long window_start = (N + 1) / 2;
    long units_in_tail = 0;
    for (long n = window_start; n <= N; ++n)
        if (pr.v[n] == Valuation(Rational(0))) ++units_in_tail;
    r.checks.push_back({"unit coefficients in the tail window [" + std::to_string(window_start) +
                            "," + std::to_string(N) + "]",
                        "(reported)", std::to_string(units_in_tail), true,
                        "radius-one evidence at window scale"});

    BranchData b = branch_point_valuations(f, p);
    bool has_minus_p = std::find(b.valuations.begin(), b.valuations.end(),
                                 Rational(-static_cast<long>(p))) != b.valuations.end();
    add_check(r, "branch valuation -" + std::to_string(p) + " present", "yes", yesno(has_minus_p),
              "discriminant root valuation");
    add_check(r, "zero-root multiplicity of the discriminant", std::to_string(p - 2),
              std::to_string(b.zero_multiplicity), "direct resultant computation");

    ContainmentVerdict cv = branch_containment(f, pr);
    add_check(r, "branch containment verdict", "radius_smaller_than_branch_distance", cv.verdict,
              "unit-scale radius vs branch at valuation -" + std::to_string(p));

    r.elapsed_ms = sw.ms();
    return r;
}

SuiteReport gamma_suite(const std::shared_ptr<const ExponentRule>& rule, long N) {
    if (!rule) throw usage_error("gamma_suite: null rule");
    if (N < 16) throw usage_error("gamma_suite: N must be at least 16");
    Stopwatch sw;
    SuiteReport r{"gamma", 2, N, {}, 0};

    auto even = std::make_shared<ExponentRule>(
        rule->description() + "[even]",
        [rule](std::size_t i) { return rule->exponent(2 * i); });
    auto odd = std::make_shared<ExponentRule>(
        rule->description() + "[odd]",
        [rule](std::size_t i) { return rule->exponent(2 * i + 1); });
    PadicIntegerSpec g1 = PadicIntegerSpec::sparse_exponents(even);
    PadicIntegerSpec g2 = PadicIntegerSpec::sparse_exponents(odd);

    std::vector<long> v(N + 1);
    for (long m = 0; m <= N; ++m) {
        Valuation w = padic_binom_val(g1, Int(m)) + padic_binom_val(g2, Int(m));
        v[m] = w.value().num().get_si();
    }

    // (a) exact values at m = 2^{a_j}
    std::string bad;
    for (std::size_t j = 0;; ++j) {
        long long aj = rule->exponent(j);
        if (aj > 62 || (1ll << aj) > N) break;
        long m = static_cast<long>(1ll << aj);
        long expect = static_cast<long>(rule->exponent(j + 1) - aj);
        if (v[m] != expect) {
            bad = "m = " + std::to_string(m) + ": " + std::to_string(v[m]) + " != " +
                  std::to_string(expect);
            break;
        }
    }
    add_check(r, "v_2(a_m) = a_{j+1} - a_j at m = 2^{a_j}", "none", bad.empty() ? "none" : bad,
              "digit-carry identity");

    // (b) carry lower bound at every m: v >= a_{M+1} - a_M with M the
    // bracketing index of the combined partial sums
    bad.clear();
    {
        std::vector<long long> exps;
        std::vector<Int> partial;  // partial[i] = sum_{t<=i} 2^{a_t}
        auto ensure = [&](const Int& m) {
            while (partial.empty() || partial.back() < m) {
                exps.push_back(rule->exponent(exps.size()));
                Int nxt = partial.empty() ? Int(0) : partial.back();
                Int term;
                mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(exps.back()));
                partial.push_back(nxt + term);
            }
        };
        for (long m = 1; m <= N; ++m) {
            ensure(Int(m));
            std::size_t M = 0;
            while (partial[M] < m) ++M;
            ensure(Int(m) + 1);  // make a_{M+1} available
            if (exps.size() <= M + 1) exps.push_back(rule->exponent(exps.size()));
            long bound = static_cast<long>(exps[M + 1] - exps[M]);
            if (v[m] < bound) {
                bad = "m = " + std::to_string(m) + ": " + std::to_string(v[m]) + " < " +
                      std::to_string(bound);
                break;
            }
        }
    }
    add_check(r, "v_2(a_m) >= a_{M+1} - a_M for every m <= " + std::to_string(N), "none",
              bad.empty() ? "none" : bad, "carry lower bound");

    // (c) recurrence valuation identity (m+1)^2 a_{m+1} = (g1 - m)(g2 - m) a_m
    bad.clear();
    long id_limit = std::min<long>(N - 1, 10000);
    for (long m = 0; m <= id_limit; ++m) {
        long lhs = 2 * vp_int(Int(m + 1), 2) + v[m + 1];
        long rhs = padic_sub_val(g1, Int(m)).value().num().get_si() +
                   padic_sub_val(g2, Int(m)).value().num().get_si() + v[m];
        if (lhs != rhs) {
            bad = "m = " + std::to_string(m) + ": " + std::to_string(lhs) + " != " +
                  std::to_string(rhs);
            break;
        }
    }
    add_check(r, "recurrence valuation identity for m <= " + std::to_string(id_limit), "none",
              bad.empty() ? "none" : bad, "exact identity");

    // (d) boundary flags
    ValuationProfile pr;
    pr.p = 2;
    for (long m = 0; m <= N; ++m) pr.v.push_back(Valuation(Rational(v[m])));
    BoundaryVerdict bv = boundary_and_transcendence(pr);
    add_check(r, "closed-unit-disk convergence evidence", "yes",
              yesno(bv.convergence_on_closed_unit_disk_evidence), "tail valuation growth");
    add_check(r, "liminf v/n = 0 evidence", "yes", yesno(bv.liminf_zero_evidence),
              "window min ratio " + bv.window_min_ratio.to_string());
    std::string witnesses;
    for (std::size_t i = 0; i < bv.liminf_witnesses.size() && i < 8; ++i)
        witnesses += (i ? "," : "") + std::to_string(bv.liminf_witnesses[i]);
    add_check(r, "transcendence-style flag", "yes", yesno(bv.transcendence_flag),
              "witnesses " + witnesses);

    r.elapsed_ms = sw.ms();
    return r;
}

SuiteReport beta_suite(const Rational& beta, int j_max) {
    if (beta <= Rational(0)) throw usage_error("beta_suite: beta must be positive");
    if (j_max < 0) throw usage_error("beta_suite: j_max must be non-negative");
    Stopwatch sw;
    SuiteReport r{"beta", 2, j_max, {}, 0};

    auto rule = beta_exponent_rule(beta);
    rule->exponent(static_cast<std::size_t>(j_max) + 1);  // overflow guard fires here

    if (beta == Rational(1) && j_max >= 2) {
        std::string prefix;
        for (int j = 0; j <= 3; ++j)
            prefix += (j ? "," : "") + std::to_string(rule->exponent(j));
        add_check(r, "sequence prefix", "1,3,11,2059", prefix, "growth recursion");
    }

    auto even = std::make_shared<ExponentRule>(
        "beta[even]", [rule](std::size_t i) { return rule->exponent(2 * i); });
    auto odd = std::make_shared<ExponentRule>(
        "beta[odd]", [rule](std::size_t i) { return rule->exponent(2 * i + 1); });
    PadicIntegerSpec g1 = PadicIntegerSpec::sparse_exponents(even);
    PadicIntegerSpec g2 = PadicIntegerSpec::sparse_exponents(odd);

    for (int j = 0; j <= j_max; ++j) {
        long long aj = rule->exponent(j);
        long long gap = rule->exponent(j + 1) - aj;
        Int m;
        mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(aj));
        Valuation w = padic_binom_val(g1, m) + padic_binom_val(g2, m);
        add_check(r, "v_2(a_m) at m = 2^" + std::to_string(aj), std::to_string(gap),
                  w.to_string(), "digit-carry identity");
        // ratio = v_2(a_m)/m = gap / 2^{a_j}, within 2^{-a_j} of beta
        Rational ratio = Rational(Int(static_cast<long>(gap)), m);
        Rational err = (ratio - beta).abs();
        add_check(r, "ratio at j = " + std::to_string(j) + " within 2^-" + std::to_string(aj) +
                         " of " + beta.to_string(),
                  "yes", yesno(err <= Rational(Int(1), m)),
                  "observed ratio " + ratio.to_string());
    }

    r.elapsed_ms = sw.ms();
    return r;
}

SuiteReport power_lemma_suite(int k_max, long N) {
    if (k_max < 0 || k_max > 6) throw usage_error("power_lemma_suite: k_max must be in [0, 6]");
    if (N < 8) throw usage_error("power_lemma_suite: N must be at least 8");
    Stopwatch sw;
    SuiteReport r{"power", 2, N, {}, 0};

    // v_2(binom(2^k, m)) + 2m >= k + 2 for 1 <= m <= 2^k
    std::string bad;
    for (int k = 0; k <= k_max && bad.empty(); ++k) {
        Int top = pow_int(Int(2), static_cast<unsigned long>(k));
        for (Int m = 1; m <= top; ++m) {
            Rational w = kummer_binom_val(top, m, 2).value() + Rational(2) * Rational(m);
            if (w < Rational(k + 2)) {
                bad = "k = " + std::to_string(k) + ", m = " + m.get_str();
                break;
            }
        }
    }
    add_check(r, "v_2(binom(2^k, m)) + 2m >= k + 2", "none", bad.empty() ? "none" : bad,
              "carry count");

    // catalogued square
    TruncatedSeries lin(2);
    lin.set_coeff(0, Rational(1));
    lin.set_coeff(1, Rational(4));
    TruncatedSeries sq = pow(lin, 2);
    add_check(r, "(1 + 4x)^2", "1 + 8x + 16x^2",
              sq.coeff(0).to_string() + " + " + sq.coeff(1).to_string() + "x + " +
                  sq.coeff(2).to_string() + "x^2",
              "direct expansion");

    // divisibility shape for sample delta series
    auto shape_ok = [N](const TruncatedSeries& s, int k) -> std::string {
        TruncatedSeries S = pow(s, 1u << k);
        if (S.coeff(0) != Rational(1)) return "constant term " + S.coeff(0).to_string();
        for (long n = 1; n <= N; ++n) {
            if (S.coeff(n).is_zero()) continue;
            if (vp(S.coeff(n), 2) < Valuation(Rational(k + 2)))
                return "k = " + std::to_string(k) + ", index " + std::to_string(n);
        }
        return "none";
    };

    // sample 1: delta = x
    TruncatedSeries s1(N);
    s1.set_coeff(0, Rational(1));
    s1.set_coeff(1, Rational(4));
    // sample 2: delta with coefficient 2^{v_2(a_n) + 1} taken from the
    // gamma-pair valuations for the rule n^2 (doubled into 2Z)
    auto rule = gamma_rule_parse("n^2");
    auto even = std::make_shared<ExponentRule>(
        "n^2[even]", [rule](std::size_t i) { return rule->exponent(2 * i); });
    auto odd = std::make_shared<ExponentRule>(
        "n^2[odd]", [rule](std::size_t i) { return rule->exponent(2 * i + 1); });
    PadicIntegerSpec g1 = PadicIntegerSpec::sparse_exponents(even);
    PadicIntegerSpec g2 = PadicIntegerSpec::sparse_exponents(odd);
    TruncatedSeries s2(N);
    s2.set_coeff(0, Rational(1));
    for (long n = 1; n <= N; ++n) {
        long w = (padic_binom_val(g1, Int(n)) + padic_binom_val(g2, Int(n))).value().num().get_si();
        s2.set_coeff(n, Rational(4) * Rational(2).pow(w + 1));
    }

    for (int k = 0; k <= k_max; ++k) {
        add_check(r, "shape 1 + 2^{k+1} Delta, Delta in 2Z[[x]], sample x, k = " +
                         std::to_string(k),
                  "none", shape_ok(s1, k), "exact expansion");
        add_check(r, "shape 1 + 2^{k+1} Delta, Delta in 2Z[[x]], valuation-profile sample, k = " +
                         std::to_string(k),
                  "none", shape_ok(s2, k), "exact expansion");
    }

    r.elapsed_ms = sw.ms();
    return r;
}

SuiteReport binomial_pair_suite(const Rational& a, const Rational& b, const Rational& alpha,
                                const Rational& beta, unsigned long p, long N) {
    require_prime_arg(p);
    if (N < 32) throw usage_error("binomial_pair_suite: N must be at least 32");
    if (a == b) throw usage_error("binomial_pair_suite: a and b must differ");
    if (vp(a, p) != Valuation(Rational(0)) || vp(b, p) != Valuation(Rational(0)))
        throw usage_error("binomial_pair_suite: a and b must be p-units");
    auto is_natural = [](const Rational& q) { return q.is_integer() && q >= Rational(0); };
    if (is_natural(alpha) && is_natural(beta))
        throw usage_error("binomial_pair_suite: alpha and beta must not both be natural numbers");
    if (mpz_divisible_ui_p(alpha.den().get_mpz_t(), p) || mpz_divisible_ui_p(beta.den().get_mpz_t(), p))
        throw usage_error("binomial_pair_suite: alpha and beta must be p-adic integers");
    Stopwatch sw;
    SuiteReport r{"binomial-pair", p, N, {}, 0};

    // A_r = a^r binom(alpha, r), B_s = b^s binom(beta, s)
    std::vector<Rational> A(N + 1), B(N + 1);
    A[0] = B[0] = Rational(1);
    for (long t = 0; t < N; ++t) {
        A[t + 1] = A[t] * a * (alpha - Rational(t)) / Rational(t + 1);
        B[t + 1] = B[t] * b * (beta - Rational(t)) / Rational(t + 1);
    }
    ValuationProfile pr;
    pr.p = p;
    for (long m = 0; m <= N; ++m) {
        Rational c(0);
        for (long t = 0; t <= m; ++t) c += A[t] * B[m - t];
        pr.v.push_back(vp(c, p));
    }

    long start = (N + 1) / 2;
    Valuation tail = Valuation::infinity(), head = Valuation::infinity();
    for (long m = 1; m < start; ++m) head = min(head, pr.v[m]);
    std::vector<long> witnesses;
    for (long m = start; m <= N; ++m) {
        if (pr.v[m] < tail) {
            tail = pr.v[m];
            witnesses.assign(1, m);
        } else if (pr.v[m] == tail) {
            witnesses.push_back(m);
        }
    }
    std::string wit;
    for (std::size_t i = 0; i < witnesses.size() && i < 8; ++i)
        wit += (i ? "," : "") + std::to_string(witnesses[i]);
    add_check(r, "tail-window minimum valuation did not grow", "yes", yesno(tail <= head),
              "tail min " + tail.to_string() + " vs head min " + head.to_string() +
                  ", witnesses " + wit);
    add_check(r, "tail-window minimum is recurring", "yes", yesno(witnesses.size() >= 2),
              "non-convergence evidence, " + std::to_string(witnesses.size()) + " witnesses");

    r.elapsed_ms = sw.ms();
    return r;
}

}  // namespace padiclab
