#include "padiclab/newton_polygon.hpp"

#include <algorithm>

#include "padiclab/bivar_poly.hpp"
#include "padiclab/exact_arith.hpp"

namespace padiclab {

namespace {

// > 0 when a->b->c turns left (strictly convex from below)
Rational cross(const std::pair<long, Rational>& a, const std::pair<long, Rational>& b,
               const std::pair<long, Rational>& c) {
    return Rational(b.first - a.first) * (c.second - a.second) -
           (b.second - a.second) * Rational(c.first - a.first);
}

}  // namespace

NewtonPolygon newton_polygon(const std::vector<std::pair<long, Valuation>>& points) {
    std::vector<std::pair<long, Rational>> pts;
    pts.reserve(points.size());
    for (const auto& [n, v] : points)
        if (!v.is_infinite()) pts.emplace_back(n, v.value());
    if (pts.empty()) throw usage_error("newton_polygon: no finite points");

    std::sort(pts.begin(), pts.end());
    // one point per index: keep the lowest
    std::vector<std::pair<long, Rational>> uniq;
    for (const auto& p : pts) {
        if (!uniq.empty() && uniq.back().first == p.first) {
            if (p.second < uniq.back().second) uniq.back().second = p.second;
        } else {
            uniq.push_back(p);
        }
    }

    NewtonPolygon poly;
    for (const auto& p : uniq) {
        auto& h = poly.vertices;
        // pop until a strict left turn remains; collinear points merge
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= Rational(0)) h.pop_back();
        h.push_back(p);
    }
    for (std::size_t i = 0; i + 1 < poly.vertices.size(); ++i) {
        const auto& a = poly.vertices[i];
        const auto& b = poly.vertices[i + 1];
        long len = b.first - a.first;
        poly.segments.push_back({(b.second - a.second) / Rational(len), len});
    }
    return poly;
}

BranchData root_valuations(const std::vector<Rational>& poly, unsigned long p) {
    std::size_t lo = 0;
    while (lo < poly.size() && poly[lo].is_zero()) ++lo;
    if (lo == poly.size()) throw usage_error("root_valuations: zero polynomial");

    BranchData out;
    out.zero_multiplicity = static_cast<long>(lo);
    std::vector<std::pair<long, Valuation>> pts;
    for (std::size_t i = lo; i < poly.size(); ++i)
        pts.emplace_back(static_cast<long>(i - lo), vp(poly[i], p));
    NewtonPolygon np = newton_polygon(pts);
    for (const auto& seg : np.segments)
        for (long i = 0; i < seg.length; ++i) out.valuations.push_back(-seg.slope);
    std::sort(out.valuations.begin(), out.valuations.end());
    return out;
}

BranchData branch_point_valuations(const BivarPoly& f, unsigned long p) {
    if (f.deg_y() < 2) throw usage_error("branch_point_valuations: degree in Y must be >= 2");
    std::vector<Rational> disc = discriminant_y(f);
    bool all_zero = true;
    for (const auto& c : disc) all_zero &= c.is_zero();
    if (disc.empty() || all_zero)
        throw usage_error("branch_point_valuations: discriminant vanishes identically "
                          "(f is not squarefree in Y)");
    BranchData out = root_valuations(disc, p);
    std::vector<Rational> lead = f.coeff_in_x(f.deg_y());
    // degree drops of f(x0, .) live in the leading coefficient; kept apart
    // from the branch valuations since the catalogued inputs are monic in Y
    if (static_cast<int>(lead.size()) - 1 >= 1)
        out.leading_drop_valuations = root_valuations(lead, p).valuations;
    return out;
}

}  // namespace padiclab
