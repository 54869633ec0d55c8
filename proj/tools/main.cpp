#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "padiclab/exact_arith.hpp"
#include "padiclab/gamma_rule.hpp"
#include "padiclab/radius.hpp"
#include "padiclab/suites.hpp"

using nlohmann::json;
using namespace padiclab;

namespace {

json valuation_json(const Valuation& v) {
    if (v.is_infinite()) return json("inf");
    const Rational& q = v.value();
    if (q.is_integer() && q.num().fits_slong_p()) return json(q.num().get_si());
    return json(q.to_string());
}

json rational_json(const Rational& q) {
    if (q.is_integer() && q.num().fits_slong_p()) return json(q.num().get_si());
    return json(q.to_string());
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::trunc);
    if (!f) throw io_error("cannot open '" + out_path + "' for writing");
    f << j.dump(2) << "\n";
    if (!f) throw io_error("write to '" + out_path + "' failed");
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::trunc);
    if (!f) throw io_error("cannot open '" + out_path + "' for writing");
    f << text;
    if (!f) throw io_error("write to '" + out_path + "' failed");
}

void emit_profile(const ValuationProfile& pr, const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    write_profile_csv(pr, f);
    if (!f) throw io_error("write to '" + path + "' failed");
}

json estimate_json(const RadiusEstimate& est) {
    return {{"hull_slope_tail", est.hull_slope_tail.to_string()},
            {"window_min_ratio", est.window_min_ratio.to_string()},
            {"certified_min_ratio", est.certified_min_ratio.to_string()},
            {"window_start", est.window_start},
            {"polynomial_tail", est.polynomial_tail}};
}

json boundary_json(const BoundaryVerdict& bv) {
    json witnesses = json::array();
    for (long w : bv.liminf_witnesses) witnesses.push_back(w);
    return {{"convergence_on_closed_unit_disk_evidence", bv.convergence_on_closed_unit_disk_evidence},
            {"liminf_zero_evidence", bv.liminf_zero_evidence},
            {"transcendence_flag", bv.transcendence_flag},
            {"polynomial_convention", bv.polynomial_convention},
            {"window_min_ratio", bv.window_min_ratio.to_string()},
            {"witnesses", witnesses}};
}

json branch_json(const BranchData& b) {
    json vals = json::array();
    for (const auto& v : b.valuations) vals.push_back(rational_json(v));
    json drops = json::array();
    for (const auto& v : b.leading_drop_valuations) drops.push_back(rational_json(v));
    return {{"zero_multiplicity", b.zero_multiplicity},
            {"valuations", vals},
            {"leading_drop_valuations", drops}};
}

struct VerifyJob {
    std::string suite;
    unsigned long prime = 2;
    long order = 0;
};

int run_verify(const std::string& suite, std::optional<unsigned long> prime,
               std::optional<long> order, const Rational& slope_tol, const std::string& rule_text,
               const std::optional<Rational>& beta_override, const std::string& out_path) {
    std::vector<SuiteReport> reports;
    auto want = [&suite](const std::string& name) { return suite == "all" || suite == name; };
    bool matched = false;

    if (want("cubic")) {
        matched = true;
        reports.push_back(cubic_suite(order.value_or(512)));
    }
    if (want("fuss-catalan")) {
        matched = true;
        std::vector<unsigned long> primes = prime ? std::vector<unsigned long>{*prime}
                                                  : std::vector<unsigned long>{2, 3, 5};
        for (unsigned long p : primes) reports.push_back(fuss_catalan_suite(p, order.value_or(500)));
    }
    if (want("pth-root")) {
        matched = true;
        std::vector<unsigned long> primes = prime ? std::vector<unsigned long>{*prime}
                                                  : std::vector<unsigned long>{2, 3, 5};
        for (unsigned long p : primes)
            reports.push_back(pth_root_suite(p, order.value_or(2000), slope_tol));
    }
    if (want("wild")) {
        matched = true;
        std::vector<unsigned long> primes = prime ? std::vector<unsigned long>{*prime}
                                                  : std::vector<unsigned long>{2, 3};
        for (unsigned long p : primes) reports.push_back(wild_suite(p, order.value_or(500)));
    }
    if (want("gamma")) {
        matched = true;
        reports.push_back(gamma_suite(gamma_rule_parse(rule_text), order.value_or(1L << 17)));
    }
    if (want("beta")) {
        matched = true;
        std::vector<Rational> betas = beta_override ? std::vector<Rational>{*beta_override}
                                                    : std::vector<Rational>{Rational(1), Rational(1, 2)};
        for (const auto& b : betas)
            reports.push_back(beta_suite(b, static_cast<int>(order.value_or(2))));
    }
    if (want("power")) {
        matched = true;
        reports.push_back(power_lemma_suite(4, order.value_or(256)));
    }
    if (want("binomial-pair")) {
        matched = true;
        reports.push_back(binomial_pair_suite(Rational(1), Rational(3), Rational(1, 3),
                                              Rational(1, 5), prime.value_or(2),
                                              order.value_or(500)));
    }
    if (!matched) throw usage_error("unknown suite '" + suite + "'");

    bool all_pass = true;
    json arr = json::array();
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass();
        arr.push_back(r.to_json());
    }
    emit(json{{"command", "verify"}, {"suite", suite}, {"pass", all_pass}, {"reports", arr}},
         out_path);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic expansion and radius-of-convergence toolkit"};
    app.require_subcommand(1);

    std::string poly_text, y0_text = "0", format = "json", out_path, profile_out;
    std::string suite, rule_text = "n^2", n_text, m_text, beta_text, tol_text = "1/50";
    unsigned long prime = 2;
    long order = 0;
    bool prime_given = false, order_given = false, beta_given = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
    };

    auto* expand = app.add_subcommand("expand", "expand an algebraic root as a power series");
    expand->add_option("--poly", poly_text, "polynomial f(X, Y)")->required();
    expand->add_option("--y0", y0_text, "simple root of f(0, Y)")->required();
    expand->add_option("--order", order, "truncation order N")->required();
    expand->add_option("--prime", prime, "prime for the valuation column");
    expand->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_common(expand);

    auto* branch = app.add_subcommand("branch", "branch-point valuation data");
    branch->add_option("--poly", poly_text, "polynomial f(X, Y)")->required();
    branch->add_option("--prime", prime, "prime")->required();
    add_common(branch);

    auto* radius = app.add_subcommand("radius", "radius estimates, boundary flags, containment");
    radius->add_option("--poly", poly_text, "polynomial f(X, Y)")->required();
    radius->add_option("--y0", y0_text, "simple root of f(0, Y)")->required();
    radius->add_option("--order", order, "truncation order N")->required();
    radius->add_option("--prime", prime, "prime")->required();
    radius->add_option("--slope-tol", tol_text, "rational tolerance for slope verdicts");
    radius->add_option("--profile-out", profile_out, "also write the profile CSV here");
    add_common(radius);

    auto* verify = app.add_subcommand("verify", "run a reproduction suite");
    verify->add_option("--suite", suite, "cubic|fuss-catalan|pth-root|wild|gamma|beta|power|binomial-pair|all")
        ->required();
    verify->add_option("--prime", prime, "prime override");
    verify->add_option("--order", order, "order override (j_max for the beta suite)");
    verify->add_option("--gamma-rule", rule_text, "exponent rule for the gamma suite");
    verify->add_option("--beta", beta_text, "growth parameter for the beta suite");
    verify->add_option("--slope-tol", tol_text, "rational tolerance for slope verdicts");
    add_common(verify);

    auto* kummer = app.add_subcommand("kummer", "v_p of a binomial coefficient");
    kummer->add_option("--n", n_text, "upper index")->required();
    kummer->add_option("--m", m_text, "lower index")->required();
    kummer->add_option("--prime", prime, "prime")->required();
    add_common(kummer);

    auto* gamma = app.add_subcommand("gamma", "gamma-pair valuation profile for an exponent rule");
    gamma->add_option("--rule", rule_text, "exponent rule")->required();
    gamma->add_option("--order", order, "largest index N")->required();
    gamma->add_option("--profile-out", profile_out, "write the profile CSV here");
    add_common(gamma);

    try {
        app.parse(argc, argv);
        prime_given = verify->count("--prime") > 0;
        order_given = verify->count("--order") > 0;
        beta_given = verify->count("--beta") > 0;

        if (expand->parsed()) {
            BivarPoly f = parse_poly(poly_text);
            TruncatedSeries s = hensel_expand(f, Rational::from_string(y0_text), order);
            ValuationProfile pr = profile(s, prime);
            if (format == "csv") {
                std::ostringstream csv;
                csv << "n,num,den,vp_num,vp_den,inf\n";
                for (long n = 0; n <= order; ++n) {
                    csv << n << "," << s.coeff(n).num().get_str() << ","
                        << s.coeff(n).den().get_str() << ",";
                    if (pr.v[n].is_infinite())
                        csv << ",,1\n";
                    else
                        csv << pr.v[n].value().num().get_str() << ","
                            << pr.v[n].value().den().get_str() << ",0\n";
                }
                emit_text(csv.str(), out_path);
            } else {
                json coeffs = json::array();
                for (long n = 0; n <= order; ++n) {
                    coeffs.push_back({{"n", n},
                                      {"num", s.coeff(n).num().get_str()},
                                      {"den", s.coeff(n).den().get_str()},
                                      {"vp", valuation_json(pr.v[n])}});
                }
                emit(json{{"command", "expand"},
                          {"poly", f.to_string()},
                          {"y0", y0_text},
                          {"prime", prime},
                          {"order", order},
                          {"max_coeff_bits", s.max_coeff_bits()},
                          {"coefficients", coeffs}},
                     out_path);
            }
            return 0;
        }
        if (branch->parsed()) {
            BivarPoly f = parse_poly(poly_text);
            BranchData b = branch_point_valuations(f, prime);
            json j = branch_json(b);
            j["command"] = "branch";
            j["poly"] = f.to_string();
            j["prime"] = prime;
            emit(j, out_path);
            return 0;
        }
        if (radius->parsed()) {
            BivarPoly f = parse_poly(poly_text);
            Rational tol = Rational::from_string(tol_text);
            TruncatedSeries s = hensel_expand(f, Rational::from_string(y0_text), order);
            ValuationProfile pr = profile(s, prime);
            if (!profile_out.empty()) emit_profile(pr, profile_out);
            json j{{"command", "radius"},
                   {"poly", f.to_string()},
                   {"y0", y0_text},
                   {"prime", prime},
                   {"order", order},
                   {"max_coeff_bits", s.max_coeff_bits()},
                   {"estimate", estimate_json(radius_estimate(pr))},
                   {"boundary", boundary_json(boundary_and_transcendence(pr, tol))}};
            if (f.deg_y() >= 2) {
                ContainmentVerdict cv = branch_containment(f, pr, tol);
                j["containment"] = {{"verdict", cv.verdict},
                                    {"all_branches_strictly_inside", cv.all_branches_strictly_inside},
                                    {"bracket_lower_holds", cv.bracket_lower_holds},
                                    {"bracket_upper_holds", cv.bracket_upper_holds},
                                    {"certified_min_ratio", cv.certified_min_ratio.to_string()},
                                    {"branch", branch_json(cv.branch)}};
            } else {
                j["containment"] = nullptr;
            }
            emit(j, out_path);
            return 0;
        }
        if (verify->parsed()) {
            return run_verify(suite,
                              prime_given ? std::optional<unsigned long>(prime) : std::nullopt,
                              order_given ? std::optional<long>(order) : std::nullopt,
                              Rational::from_string(tol_text), rule_text,
                              beta_given ? std::optional<Rational>(Rational::from_string(beta_text))
                                         : std::nullopt,
                              out_path);
        }
        if (kummer->parsed()) {
            Int n(n_text), m(m_text);
            Valuation v = kummer_binom_val(n, m, prime);
            emit(json{{"command", "kummer"},
                      {"n", n.get_str()},
                      {"m", m.get_str()},
                      {"prime", prime},
                      {"valuation", valuation_json(v)},
                      {"digit_sum_n", digit_sum(n, prime).get_str()}},
                 out_path);
            return 0;
        }
        if (gamma->parsed()) {
            auto rule = gamma_rule_parse(rule_text);
            auto even = std::make_shared<ExponentRule>(
                rule->description() + "[even]",
                [rule](std::size_t i) { return rule->exponent(2 * i); });
            auto odd = std::make_shared<ExponentRule>(
                rule->description() + "[odd]",
                [rule](std::size_t i) { return rule->exponent(2 * i + 1); });
            PadicIntegerSpec g1 = PadicIntegerSpec::sparse_exponents(even);
            PadicIntegerSpec g2 = PadicIntegerSpec::sparse_exponents(odd);
            ValuationProfile pr;
            pr.p = 2;
            for (long mi = 0; mi <= order; ++mi)
                pr.v.push_back(padic_binom_val(g1, Int(mi)) + padic_binom_val(g2, Int(mi)));
            if (!profile_out.empty()) emit_profile(pr, profile_out);
            json checkpoints = json::array();
            for (std::size_t j = 0;; ++j) {
                long long aj = rule->exponent(j);
                if (aj > 62 || (1ll << aj) > order) break;
                long mi = static_cast<long>(1ll << aj);
                checkpoints.push_back({{"j", j},
                                       {"a_j", aj},
                                       {"m", mi},
                                       {"v", valuation_json(pr.v[mi])}});
            }
            emit(json{{"command", "gamma"},
                      {"rule", rule->description()},
                      {"prime", 2},
                      {"order", order},
                      {"checkpoints", checkpoints},
                      {"boundary", boundary_json(boundary_and_transcendence(pr))}},
                 out_path);
            return 0;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "ERROR:usage:" << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "ERROR:parse:" << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "ERROR:usage:" << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "ERROR:io:" << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ERROR:internal:" << e.what() << "\n";
        return 2;
    }
}
