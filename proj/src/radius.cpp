#include "padiclab/radius.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "padiclab/exact_arith.hpp"

namespace padiclab {

ValuationProfile profile(const TruncatedSeries& s, unsigned long p) {
    ValuationProfile pr;
    pr.p = p;
    pr.v.reserve(s.order() + 1);
    for (long n = 0; n <= s.order(); ++n) pr.v.push_back(vp(s.coeff(n), p));
    return pr;
}

namespace {

long tail_window_start(long order) { return (order + 1) / 2; }

// min of v_n / n over [from, to], with the argmin indices
std::pair<std::optional<Rational>, std::vector<long>> min_ratio(const ValuationProfile& pr,
                                                                long from, long to) {
    std::optional<Rational> best;
    std::vector<long> argmin;
    for (long n = std::max(from, 1L); n <= to; ++n) {
        if (pr.v[n].is_infinite()) continue;
        Rational r = pr.v[n].value() / Rational(n);
        if (!best || r < *best) {
            best = r;
            argmin.assign(1, n);
        } else if (r == *best) {
            argmin.push_back(n);
        }
    }
    return {best, argmin};
}

Valuation min_valuation(const ValuationProfile& pr, long from, long to) {
    Valuation m = Valuation::infinity();
    for (long n = from; n <= to; ++n) m = min(m, pr.v[n]);
    return m;
}

}  // namespace

RadiusEstimate radius_estimate(const ValuationProfile& pr) {
    long finite = 0;
    for (const auto& v : pr.v) finite += v.is_infinite() ? 0 : 1;
    if (finite < 16) throw usage_error("radius_estimate: need at least 16 finite points");

    const long N = pr.order();
    RadiusEstimate est;
    est.window_start = tail_window_start(N);

    auto [wmin, wargs] = min_ratio(pr, est.window_start, N);
    if (!wmin) {
        est.polynomial_tail = true;
        est.window_min_ratio = Rational(0);
    } else {
        est.window_min_ratio = *wmin;
    }
    auto [cmin, cargs] = min_ratio(pr, 1, N);
    est.certified_min_ratio = cmin ? *cmin : Rational(0);

    std::vector<std::pair<long, Valuation>> pts;
    for (long n = 0; n <= N; ++n) pts.emplace_back(n, pr.v[n]);
    NewtonPolygon np = newton_polygon(pts);
    if (np.segments.empty()) {
        // single finite point; flat by convention
        est.hull_slope_tail = est.window_min_ratio;
        return est;
    }
    // segment active where the tail window begins (ties resolve leftward)
    Rational slope = np.segments.front().slope;
    long x = np.vertices.front().first;
    for (std::size_t i = 0; i < np.segments.size(); ++i) {
        if (x >= est.window_start) break;
        slope = np.segments[i].slope;
        x += np.segments[i].length;
    }
    est.hull_slope_tail = slope;
    return est;
}

BoundaryVerdict boundary_and_transcendence(const ValuationProfile& pr,
                                           const Rational& ratio_tolerance,
                                           const Rational& growth_threshold) {
    const long N = pr.order();
    long finite = 0;
    for (const auto& v : pr.v) finite += v.is_infinite() ? 0 : 1;
    if (finite < 16) throw usage_error("boundary_and_transcendence: need at least 16 finite points");

    BoundaryVerdict out;
    const long start = tail_window_start(N);
    out.tail_min = min_valuation(pr, start, N);
    out.head_min = min_valuation(pr, 1, start - 1);

    if (out.tail_min.is_infinite()) {
        // eventually-zero truncation: converges everywhere at data scale,
        // transcendence flag off by convention
        out.polynomial_convention = true;
        out.convergence_on_closed_unit_disk_evidence = true;
        out.window_min_ratio = Rational(0);
        return out;
    }

    auto [wmin, wargs] = min_ratio(pr, start, N);
    out.window_min_ratio = *wmin;
    out.liminf_witnesses = wargs;

    bool grew = out.head_min.is_infinite() ? true : out.tail_min > out.head_min;
    out.convergence_on_closed_unit_disk_evidence =
        grew && out.tail_min >= Valuation(growth_threshold);
    out.liminf_zero_evidence = out.window_min_ratio.abs() <= ratio_tolerance;
    out.transcendence_flag =
        out.convergence_on_closed_unit_disk_evidence && out.liminf_zero_evidence;
    return out;
}

ContainmentVerdict branch_containment(const BivarPoly& f, const ValuationProfile& pr,
                                      const Rational& ratio_tolerance) {
    if (f.deg_y() < 2) throw usage_error("branch_containment: degree in Y must be >= 2");
    ContainmentVerdict out;
    out.branch = branch_point_valuations(f, pr.p);
    out.estimate = radius_estimate(pr);
    out.certified_min_ratio = out.estimate.certified_min_ratio;

    const Rational log_radius = out.estimate.window_min_ratio;  // estimate of log_p R
    const Rational bound = out.certified_min_ratio;             // exact lower bound at data scale

    bool all_inside = !out.branch.valuations.empty();
    bool all_outside = !out.branch.valuations.empty();
    for (const auto& w : out.branch.valuations) {
        all_inside = all_inside && w > -bound;
        all_outside = all_outside && w < -log_radius - ratio_tolerance;
        if (w >= -log_radius - ratio_tolerance) out.bracket_lower_holds = true;
        if (w <= -log_radius + ratio_tolerance) out.bracket_upper_holds = true;
    }
    out.all_branches_strictly_inside = all_inside;

    if (all_inside)
        out.verdict = "inside";
    else if (all_outside)
        out.verdict = log_radius < -ratio_tolerance ? "branch_outside_radius"
                                                    : "radius_smaller_than_branch_distance";
    else if (out.bracket_lower_holds && out.bracket_upper_holds)
        out.verdict = "bracketed";
    else
        out.verdict = "indeterminate";
    return out;
}

BdrCertificate bdr_certificate(const BivarPoly& f, const TruncatedSeries& s, unsigned long p) {
    // normalized-shape preconditions, each error naming the coefficient
    for (const auto& [k, v] : f.terms()) {
        if (vp(v, p) < Valuation(Rational(0)))
            throw usage_error("bdr_certificate: c_{" + std::to_string(k.first) + "," +
                              std::to_string(k.second) + "} has negative valuation");
    }
    if (!f.coeff(0, 0).is_zero())
        throw usage_error("bdr_certificate: c_0(0) must vanish");
    if (vp(f.coeff(0, 1), p) != Valuation(Rational(0)))
        throw usage_error("bdr_certificate: c_1(0) must be a p-unit");

    BdrCertificate cert;
    cert.degree_x = std::max(f.deg_x(), 0);

    cert.eta = Rational(1);
    for (const auto& [k, v] : f.terms()) {
        auto [q, j] = k;
        if (q != 1 || j < 1) continue;
        Valuation w = vp(v, p);
        if (w > Valuation(Rational(0)) && !w.is_infinite() && w.value() < cert.eta)
            cert.eta = w.value();
    }
    cert.epsilon = cert.eta / Rational(2 * cert.degree_x + 1);

    // base-case gate: the growth argument needs v(a_m) >= eps*D + eta before
    // the recurrence can take over
    const Rational gate = cert.epsilon * Rational(cert.degree_x) + cert.eta;
    for (long m = 1; m <= std::min<long>(cert.degree_x, s.order()); ++m) {
        Valuation v = vp(s.coeff(m), p);
        if (v < Valuation(gate))
            throw usage_error("bdr_certificate: v(a_" + std::to_string(m) +
                              ") = " + v.to_string() + " is below the base-case gate " +
                              gate.to_string());
    }

    for (long m = 1; m <= s.order(); ++m) {
        Valuation v = vp(s.coeff(m), p);
        if (v < Valuation(cert.epsilon * Rational(m) + cert.eta)) {
            cert.first_violation = m;
            break;
        }
    }
    cert.certified = !cert.first_violation.has_value();
    return cert;
}

void write_profile_csv(const ValuationProfile& pr, std::ostream& out) {
    out << "n,vp_num,vp_den,inf\n";
    for (long n = 0; n <= pr.order(); ++n) {
        if (pr.v[n].is_infinite()) {
            out << n << ",,,1\n";
        } else {
            const Rational& v = pr.v[n].value();
            out << n << "," << v.num().get_str() << "," << v.den().get_str() << ",0\n";
        }
    }
}

ValuationProfile read_profile_csv(std::istream& in, unsigned long p) {
    std::string line;
    if (!std::getline(in, line) || line != "n,vp_num,vp_den,inf")
        throw io_error("profile CSV: bad header");
    ValuationProfile pr;
    pr.p = p;
    long expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) throw io_error("profile CSV: short row");
            cols.push_back(line.substr(pos, comma - pos));
            pos = comma + 1;
        }
        cols.push_back(line.substr(pos));
        if (Int(cols[0]) != expected) throw io_error("profile CSV: indices not contiguous");
        ++expected;
        if (cols[3] == "1") {
            if (!cols[1].empty() || !cols[2].empty())
                throw io_error("profile CSV: infinite row with vp fields");
            pr.v.push_back(Valuation::infinity());
        } else if (cols[3] == "0") {
            pr.v.push_back(Valuation(Rational(Int(cols[1]), Int(cols[2]))));
        } else {
            throw io_error("profile CSV: inf flag must be 0 or 1");
        }
    }
    if (pr.v.empty()) throw io_error("profile CSV: no rows");
    return pr;
}

}  // namespace padiclab
