#pragma once

#include <utility>
#include <vector>

#include "padiclab/rational.hpp"
#include "padiclab/valuation.hpp"

namespace padiclab {

struct PolygonSegment {
    Rational slope;
    long length;  // horizontal extent
};

/// Lower convex hull of (index, valuation) points. Slopes are strictly
/// increasing left to right; segment lengths sum to the index span.
struct NewtonPolygon {
    std::vector<std::pair<long, Rational>> vertices;  // sorted by index
    std::vector<PolygonSegment> segments;
};

/// Builds the lower hull; points with +infinity valuation are skipped.
/// Throws usage_error when no finite point remains.
NewtonPolygon newton_polygon(const std::vector<std::pair<long, Valuation>>& points);

struct BranchData {
    long zero_multiplicity = 0;          // X^k factored out of the discriminant
    std::vector<Rational> valuations;    // v_p of the nonzero roots, sorted, with multiplicity
    std::vector<Rational> leading_drop_valuations;  // v_p of roots of the leading c_d(X)
};

class BivarPoly;

/// Branch-point candidate data for f at the prime p: factors X^k out of
/// Res_Y(f, f_Y), then reads the root valuations of the remaining
/// X-polynomial off its Newton polygon. A segment of slope s and length l
/// contributes l roots of valuation -s. Degree drops of f(x0, Y) are
/// reported separately, not merged into the branch valuations.
BranchData branch_point_valuations(const BivarPoly& f, unsigned long p);

/// Root-valuation multiset of a univariate polynomial (over the algebraic
/// closure), excluding zero roots; the same polygon convention as above.
BranchData root_valuations(const std::vector<Rational>& poly, unsigned long p);

}  // namespace padiclab
