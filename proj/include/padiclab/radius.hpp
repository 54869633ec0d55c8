#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "padiclab/newton_polygon.hpp"
#include "padiclab/series.hpp"
#include "padiclab/valuation.hpp"

namespace padiclab {

/// v_p(a_n) for n = 0..N, indices contiguous from 0.
struct ValuationProfile {
    unsigned long p = 2;
    std::vector<Valuation> v;

    long order() const { return static_cast<long>(v.size()) - 1; }
};

ValuationProfile profile(const TruncatedSeries& s, unsigned long p);

/// Two finite-data estimates of liminf v_p(a_n)/n (= log_p of the radius of
/// convergence), never a single "the radius":
///   hull_slope_tail   slope of the polygon segment active where the tail
///                     window [ceil(N/2), N] begins. The literal last hull
///                     segment is polluted by the right truncation boundary
///                     (the hull must climb to (N, v_N)), so the anchored
///                     segment is the one reported.
///   window_min_ratio  min of v/n over the tail window.
/// certified_min_ratio is min v/n over every computed n >= 1; it lower-bounds
/// the other two at data scale.
struct RadiusEstimate {
    Rational hull_slope_tail;
    Rational window_min_ratio;
    Rational certified_min_ratio;
    long window_start = 0;
    bool polynomial_tail = false;  // no finite valuation in the tail window
};

/// Requires at least 16 finite points.
RadiusEstimate radius_estimate(const ValuationProfile& pr);

/// Finite-data evidence flags; limits cannot be proved from a truncation, so
/// every flag names its witnesses.
struct BoundaryVerdict {
    bool convergence_on_closed_unit_disk_evidence = false;  // v -> infinity evidence
    bool liminf_zero_evidence = false;
    bool transcendence_flag = false;            // both of the above
    bool polynomial_convention = false;         // no finite valuation in the tail window
    Rational window_min_ratio;
    std::vector<long> liminf_witnesses;         // argmin indices of v/n over the window
    Valuation tail_min = Valuation::infinity();
    Valuation head_min = Valuation::infinity();
};

BoundaryVerdict boundary_and_transcendence(const ValuationProfile& pr,
                                           const Rational& ratio_tolerance = Rational(1, 50),
                                           const Rational& growth_threshold = Rational(1));

/// Radius-versus-branch-distance comparison. A branch point of valuation w
/// sits at distance p^{-w}; it lies strictly inside the certified disk when
/// w > -certified_min_ratio. Verdict strings:
///   "inside"                              every nonzero branch point strictly
///                                         inside the certified disk
///   "branch_outside_radius"               sub-unit radius estimate, every
///                                         branch strictly beyond it
///   "radius_smaller_than_branch_distance" radius estimate at unit scale or
///                                         above, yet every branch strictly
///                                         beyond it
///   "bracketed"                           branches on both sides (radius
///                                         between two branch distances)
///   "indeterminate"                       anything else
struct ContainmentVerdict {
    std::string verdict;
    bool all_branches_strictly_inside = false;
    bool bracket_lower_holds = false;  // some branch distance <= radius estimate
    bool bracket_upper_holds = false;  // some branch distance >= radius estimate
    Rational certified_min_ratio;
    RadiusEstimate estimate;
    BranchData branch;
};

ContainmentVerdict branch_containment(const BivarPoly& f, const ValuationProfile& pr,
                                      const Rational& ratio_tolerance = Rational(1, 50));

/// Valuation-growth certificate for a normalized f (all coefficients with
/// v_p >= 0, c_0(0) = 0, v_p(c_1(0)) = 0): computes
///   D   = max degree in X of the c_q,
///   eta = min(1, min positive v_p(c_{1j}), j >= 1),
///   eps = eta / (2D + 1),
/// gates the base case by requiring v_p(a_m) >= eps*D + eta for every nonzero
/// a_m with m <= D, then verifies v_p(a_m) >= eps*m + eta for all m <= order.
struct BdrCertificate {
    Rational eta;
    Rational epsilon;
    long degree_x = 0;
    std::optional<long> first_violation;  // none when certified
    bool certified = false;
};

BdrCertificate bdr_certificate(const BivarPoly& f, const TruncatedSeries& s, unsigned long p);

/// Bit-exact profile CSV: header "n,vp_num,vp_den,inf"; +infinity rows encode
/// as "n,,,1".
void write_profile_csv(const ValuationProfile& pr, std::ostream& out);
ValuationProfile read_profile_csv(std::istream& in, unsigned long p);

}  // namespace padiclab
