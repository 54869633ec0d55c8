#include "padiclab/gamma_rule.hpp"

#include <vector>

namespace padiclab {

namespace {

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw usage_error("gamma rule: bad " + what + " '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace

std::shared_ptr<const ExponentRule> beta_exponent_rule(const Rational& beta) {
    if (beta <= Rational(0)) throw usage_error("beta rule: beta must be positive");
    auto seq = std::make_shared<std::vector<long long>>();
    seq->push_back(1);
    auto gen = [beta, seq](std::size_t i) -> long long {
        while (seq->size() <= i) {
            long long a = seq->back();
            // ceil(beta * 2^a), exactly
            Int shifted;
            mpz_mul_2exp(shifted.get_mpz_t(), beta.num().get_mpz_t(),
                         static_cast<unsigned long>(a));
            Int step;
            mpz_cdiv_q(step.get_mpz_t(), shifted.get_mpz_t(), beta.den().get_mpz_t());
            Int next = Int(static_cast<long>(a)) + step;
            if (next > static_cast<long>(kExponentCap))
                throw usage_error("beta rule: exponent at index " + std::to_string(seq->size()) +
                                  " exceeds the computable range");
            seq->push_back(next.get_si());
        }
        return (*seq)[i];
    };
    return std::make_shared<ExponentRule>("beta:" + beta.to_string(), gen);
}

std::shared_ptr<const ExponentRule> gamma_rule_parse(const std::string& text) {
    if (text == "n^2") {
        return std::make_shared<ExponentRule>("n^2", [](std::size_t i) {
            long long n = static_cast<long long>(i);
            if (n > (1ll << 10)) throw usage_error("gamma rule: index out of computable range");
            return n * n;
        });
    }
    if (text.rfind("affine:", 0) == 0) {
        auto parts = split(text.substr(7), ',');
        if (parts.size() != 2) throw usage_error("gamma rule: affine wants 'affine:<c>,<g>'");
        long long c = parse_ll(parts[0], "offset");
        long long g = parse_ll(parts[1], "gap");
        if (c < 0) throw usage_error("gamma rule: affine offset must be non-negative");
        if (g < 1) throw usage_error("gamma rule: affine gap must be positive");
        return std::make_shared<ExponentRule>(text, [c, g](std::size_t i) {
            long long n = static_cast<long long>(i);
            long long v = c + g * n * (n + 1) / 2;
            if (v > kExponentCap) throw usage_error("gamma rule: index out of computable range");
            return v;
        });
    }
    if (text.rfind("beta:", 0) == 0) {
        return beta_exponent_rule(Rational::from_string(text.substr(5)));
    }
    if (text.rfind("list:", 0) == 0) {
        std::string rest = text.substr(5);
        std::size_t tail = rest.find("+tail:");
        if (tail == std::string::npos)
            throw usage_error("gamma rule: list wants 'list:<ints>+tail:<g>'");
        auto items = split(rest.substr(0, tail), ',');
        long long g = parse_ll(rest.substr(tail + 6), "tail gap");
        auto prefix = std::make_shared<std::vector<long long>>();
        for (const auto& it : items) prefix->push_back(parse_ll(it, "list entry"));
        if (prefix->empty()) throw usage_error("gamma rule: empty list");
        if (prefix->front() < 0) throw usage_error("gamma rule: negative exponent");
        for (std::size_t i = 1; i < prefix->size(); ++i)
            if ((*prefix)[i] <= (*prefix)[i - 1])
                throw usage_error("gamma rule: list not strictly increasing");
        if (g < 1) throw usage_error("gamma rule: tail gap must be positive");
        return std::make_shared<ExponentRule>(text, [prefix, g](std::size_t i) {
            if (i < prefix->size()) return (*prefix)[i];
            long long k = static_cast<long long>(i - prefix->size()) + 1;
            long long v = prefix->back() + g * k;
            if (v > kExponentCap) throw usage_error("gamma rule: index out of computable range");
            return v;
        });
    }
    throw usage_error("gamma rule: unrecognized rule '" + text + "'");
}

}  // namespace padiclab
