// Acceptance suite: one line per criterion, exit code = number of failures.

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "padiclab/exact_arith.hpp"
#include "padiclab/radius.hpp"
#include "padiclab/suites.hpp"
#include "support/schema_check.hpp"

using namespace padiclab;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

long run_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

void require_suite(Outcome& out, const SuiteReport& r, long budget_ms) {
    for (const auto& c : r.checks)
        out.require(c.pass, r.name + " p=" + std::to_string(r.prime) + ": " + c.desc + " -> " +
                                 c.observed + " (expected " + c.expected + ")");
    out.require(r.elapsed_ms <= budget_ms,
                r.name + " p=" + std::to_string(r.prime) + ": runtime " +
                    std::to_string(r.elapsed_ms) + " ms over budget " +
                    std::to_string(budget_ms) + " ms");
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(PADICLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    res.exit_code = WEXITSTATUS(pclose(pipe));
    return res;
}

// ---------------------------------------------------------------- criteria

Outcome criterion1_cubic() {
    Outcome out;
    SuiteReport r;
    long ms = run_ms([&] { r = cubic_suite(512); });
    require_suite(out, r, 10000);
    out.require(ms <= 10000, "cubic total runtime " + std::to_string(ms) + " ms over 10 s");
    return out;
}

Outcome criterion2_fuss_catalan() {
    Outcome out;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        SuiteReport r = fuss_catalan_suite(p, 500);
        require_suite(out, r, 10000);
        // the criterion pins a_1 = -1 for every p; the expansion of
        // Y^2 (Y+1) - X at y(0) = -1 has a_1 = +1 (substitute Y -> Y - 1:
        // the sign (-1)^p makes the alternation odd-p-only), so this is
        // expected to fail at p = 2 with the true value displayed
        for (const auto& c : r.checks) {
            if (c.desc.rfind("a_1", 0) == 0)
                out.require(c.observed == "-1",
                            "p=" + std::to_string(p) + ": a_1 = " + c.observed +
                                ", criterion expects -1");
        }
    }
    return out;
}

Outcome criterion3_pth_root() {
    Outcome out;
    long total = 0;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        SuiteReport r = pth_root_suite(p, 2000, Rational(1, 50));
        total += r.elapsed_ms;
        require_suite(out, r, 20000);
    }
    out.require(total <= 20000, "pth-root total runtime " + std::to_string(total) + " ms over 20 s");
    return out;
}

Outcome criterion4_wild() {
    Outcome out;
    long total = 0;
    for (unsigned long p : {2ul, 3ul}) {
        SuiteReport r = wild_suite(p, 1000);
        total += r.elapsed_ms;
        require_suite(out, r, 30000);
        // the criterion wants at least 20 unit coefficients in the tail
        // window; the unit indices of these series form sparse self-similar
        // sets (exactly the powers of 2 at p = 2, a base-3 analogue at
        // p = 3), so any half-order window holds O(1) of them and this
        // threshold is expected to fail at both primes
        for (const auto& c : r.checks) {
            if (c.desc.rfind("unit coefficients in the tail window", 0) == 0)
                out.require(std::stol(c.observed) >= 20,
                            "p=" + std::to_string(p) + ": " + c.observed +
                                " unit coefficients in the tail window, criterion expects >= 20");
        }
    }
    out.require(total <= 30000, "wild total runtime " + std::to_string(total) + " ms over 30 s");
    return out;
}

Outcome criterion5_gamma() {
    Outcome out;
    SuiteReport r;
    long ms = run_ms([&] { r = gamma_suite(gamma_rule_parse("n^2"), 1L << 17); });
    require_suite(out, r, 30000);
    out.require(ms <= 30000, "gamma runtime " + std::to_string(ms) + " ms over 30 s");

    // the catalogued checkpoint values 2n+1 at m = 2^{n^2}, n = 1..4
    auto rule = gamma_rule_parse("n^2");
    auto even = std::make_shared<ExponentRule>(
        "even", [rule](std::size_t i) { return rule->exponent(2 * i); });
    auto odd = std::make_shared<ExponentRule>(
        "odd", [rule](std::size_t i) { return rule->exponent(2 * i + 1); });
    PadicIntegerSpec g1 = PadicIntegerSpec::sparse_exponents(even);
    PadicIntegerSpec g2 = PadicIntegerSpec::sparse_exponents(odd);
    for (long n = 1; n <= 4; ++n) {
        Int m = pow_int(Int(2), static_cast<unsigned long>(n * n));
        Valuation v = padic_binom_val(g1, m) + padic_binom_val(g2, m);
        out.require(v == Valuation(Rational(2 * n + 1)),
                    "v_2 at m = 2^(" + std::to_string(n) + "^2): " + v.to_string() +
                        " != " + std::to_string(2 * n + 1));
    }
    return out;
}

Outcome criterion6_beta() {
    Outcome out;
    require_suite(out, beta_suite(Rational(1), 2), 10000);
    require_suite(out, beta_suite(Rational(1, 2), 2), 10000);
    return out;
}

Outcome criterion7_oracles() {
    Outcome out;

    // Kummer vs the Legendre factorial oracle, exact, n <= 500
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        bool ok = true;
        for (long n = 0; n <= 500 && ok; ++n) {
            for (long m = 0; m <= n; ++m) {
                Int expect = factorial_valuation(Int(n), p) - factorial_valuation(Int(m), p) -
                             factorial_valuation(Int(n - m), p);
                if (kummer_binom_val(Int(n), Int(m), p) != Valuation(Rational(expect))) {
                    out.require(false, "kummer oracle mismatch at n=" + std::to_string(n) +
                                           " m=" + std::to_string(m) + " p=" + std::to_string(p));
                    ok = false;
                    break;
                }
            }
        }
    }

    // branch valuations vs 200 random factored products
    std::mt19937 rng(240817);
    std::uniform_int_distribution<int> nfac(1, 5);
    std::uniform_int_distribution<long> unit(1, 40);
    std::uniform_int_distribution<int> expo(-6, 6);
    std::uniform_int_distribution<int> zeros(0, 2);
    const std::array<unsigned long, 3> primes{2, 3, 5};
    for (int iter = 0; iter < 200; ++iter) {
        unsigned long p = primes[iter % primes.size()];
        BivarPoly g = BivarPoly::constant(Rational(1));
        std::vector<Rational> expect;
        int k = zeros(rng);
        for (int i = 0; i < k; ++i) g = g * BivarPoly::monomial(Rational(1), 1, 0);
        int n = nfac(rng);
        for (int i = 0; i < n; ++i) {
            long a = unit(rng), b = unit(rng);
            while (a % static_cast<long>(p) == 0) ++a;
            while (b % static_cast<long>(p) == 0) ++b;
            Rational root = Rational(a, b) * Rational(static_cast<long>(p)).pow(expo(rng));
            expect.push_back(vp(root, p).value());
            g = g * (BivarPoly::monomial(Rational(1), 1, 0) - BivarPoly::constant(root));
        }
        std::sort(expect.begin(), expect.end());
        BranchData got = branch_point_valuations(BivarPoly::monomial(Rational(1), 0, 2) - g, p);
        if (got.zero_multiplicity != k || got.valuations != expect) {
            out.require(false, "branch oracle mismatch at iteration " + std::to_string(iter));
            break;
        }
    }

    // Newton lifting vs the coefficient recurrence on every suite polynomial
    struct Case {
        std::string poly;
        Rational y0;
    };
    std::vector<Case> cases = {
        {"Y^3 - 3*Y + X - 2", Rational(2)},    {"Y^2*(Y + 1) - X", Rational(-1)},
        {"Y^3*(Y + 1) - X", Rational(-1)},     {"Y^5*(Y + 1) - X", Rational(-1)},
        {"Y^2 - 1 - X", Rational(1)},          {"Y^3 - 1 - X", Rational(1)},
        {"Y^5 - 1 - X", Rational(1)},          {"Y^1*(Y - 1) - X", Rational(1)},
        {"Y^2*(Y - 1) - X", Rational(1)},      {"Y^2 + Y - 8*X", Rational(0)},
        {"Y^2 + Y - 27*X", Rational(0)},
    };
    for (const auto& c : cases) {
        BivarPoly f = parse_poly(c.poly);
        TruncatedSeries lift = hensel_expand(f, c.y0, 256);
        TruncatedSeries rec = recurrence_expand(normalize_at_root(f, c.y0), 256);
        bool same = lift.coeff(0) == c.y0;
        for (long n = 1; n <= 256 && same; ++n) same = lift.coeff(n) == rec.coeff(n);
        out.require(same, "lift/recurrence mismatch for " + c.poly);
    }
    return out;
}

Outcome criterion8_bdr() {
    Outcome out;
    for (unsigned long p : {2ul, 3ul}) {
        long cube = static_cast<long>(p * p * p);
        BivarPoly f = parse_poly("Y^2 + Y - " + std::to_string(cube) + "*X");
        TruncatedSeries s = recurrence_expand(f, 500);
        BdrCertificate cert = bdr_certificate(f, s, p);
        out.require(cert.eta == Rational(1),
                    "p=" + std::to_string(p) + ": eta = " + cert.eta.to_string() + " != 1");
        out.require(cert.epsilon == Rational(1, 3),
                    "p=" + std::to_string(p) + ": eps = " + cert.epsilon.to_string() + " != 1/3");
        out.require(cert.degree_x == 1, "p=" + std::to_string(p) + ": D != 1");
        out.require(cert.certified && !cert.first_violation,
                    "p=" + std::to_string(p) + ": inequality violated at m = " +
                        (cert.first_violation ? std::to_string(*cert.first_violation) : "?"));
    }
    return out;
}

Outcome criterion9_power_lemma() {
    Outcome out;
    require_suite(out, power_lemma_suite(4, 256), 30000);
    return out;
}

Outcome criterion10_cli() {
    Outcome out;
    json schema;
    {
        std::ifstream f(PADICLAB_SCHEMA_PATH);
        out.require(f.good(), "schema file missing");
        if (!f.good()) return out;
        schema = json::parse(f);
    }
    auto validated = [&](const std::string& command, const std::string& args) -> json {
        CliResult r = run_cli(args);
        out.require(r.exit_code == 0, command + ": exit " + std::to_string(r.exit_code));
        json j;
        try {
            j = json::parse(r.out);
        } catch (const std::exception&) {
            out.require(false, command + ": output is not JSON");
            return j;
        }
        std::string err;
        out.require(schema_check::validate(schema["commands"][command], j, err),
                    command + ": schema violation " + err);
        return j;
    };

    validated("expand", "expand --poly \"Y^2 - 1 - X\" --y0 1 --order 16 --prime 2");
    json branch = validated("branch", "branch --poly \"Y^3 - 3*Y + X - 2\" --prime 2");
    if (branch.is_object()) {
        out.require(branch["zero_multiplicity"] == 1 && branch["valuations"] == json::array({2}),
                    "branch: catalogued cubic data mismatch");
    }
    validated("radius", "radius --poly \"Y^2 - 1 - X\" --y0 1 --order 64 --prime 2");
    validated("kummer", "kummer --n 4 --m 2 --prime 2");
    validated("gamma", "gamma --rule n^2 --order 256");
    validated("verify", "verify --suite beta");

    // profile CSV round-trip through the CLI emitter
    std::string path = "/tmp/padiclab_acceptance_profile.csv";
    CliResult r = run_cli("gamma --rule n^2 --order 128 --profile-out " + path);
    out.require(r.exit_code == 0, "gamma --profile-out failed");
    {
        std::ifstream f(path);
        out.require(f.good(), "profile CSV not written");
        if (f.good()) {
            ValuationProfile back = read_profile_csv(f, 2);
            auto rule = gamma_rule_parse("n^2");
            auto even = std::make_shared<ExponentRule>(
                "even", [rule](std::size_t i) { return rule->exponent(2 * i); });
            auto odd = std::make_shared<ExponentRule>(
                "odd", [rule](std::size_t i) { return rule->exponent(2 * i + 1); });
            PadicIntegerSpec g1 = PadicIntegerSpec::sparse_exponents(even);
            PadicIntegerSpec g2 = PadicIntegerSpec::sparse_exponents(odd);
            bool same = back.order() == 128;
            for (long m = 0; m <= 128 && same; ++m)
                same = back.v[m] == padic_binom_val(g1, Int(m)) + padic_binom_val(g2, Int(m));
            out.require(same, "profile CSV round-trip mismatch");
        }
        std::remove(path.c_str());
    }

    // shipped defaults must verify end to end
    CliResult all = run_cli("verify --suite all");
    out.require(all.exit_code == 0, "verify --suite all exited " + std::to_string(all.exit_code));
    return out;
}

}  // namespace

int main() {
    struct Entry {
        std::string name;
        std::function<Outcome()> run;
    };
    std::vector<Entry> criteria = {
        {"1: cubic reproduction, N=512, p=2 (integrality, closed form, branch data)",
         criterion1_cubic},
        {"2: Fuss-Catalan reproduction, p in {2,3,5}, N=500 (three routes, integers)",
         criterion2_fuss_catalan},
        {"3: p-th root radius, p in {2,3,5}, N=2000 (tail slope, branch outside)",
         criterion3_pth_root},
        {"4: wild reproduction, p in {2,3}, N=1000 (integrality, units, branch -p)",
         criterion4_wild},
        {"5: gamma pair with rule n^2, N=2^17 (exact checkpoints, bound, identity)",
         criterion5_gamma},
        {"6: beta growth, beta in {1, 1/2}, j_max=2 (ratio within rounding error)",
         criterion6_beta},
        {"7: oracle suites (Kummer/Legendre, factored branch data, lift/recurrence)",
         criterion7_oracles},
        {"8: valuation-growth certificate on Y^2 + Y - p^3 X, p in {2,3} (eta=1, eps=1/3)",
         criterion8_bdr},
        {"9: power shape 1 + 2^{k+1} Delta, k <= 4, N=256 (exact divisibility)",
         criterion9_power_lemma},
        {"10: CLI contract (profile CSV round-trip, verify --suite all, JSON schema)",
         criterion10_cli},
    };

    int failures = 0;
    for (const auto& entry : criteria) {
        Outcome out;
        long ms = run_ms([&] { out = entry.run(); });
        std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "criterion " << entry.name << " ("
                  << ms << " ms)\n";
        for (const auto& note : out.notes) std::cout << "       - " << note << "\n";
        if (!out.pass) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failed\n");
    return failures;
}
