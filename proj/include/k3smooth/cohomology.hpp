#pragma once

#include <string>
#include <vector>

#include "k3smooth/resolution.hpp"

namespace k3smooth {

// h^i of O(a) on projective 3-space: h0 = C(a+3,3), h3 = C(-a-1,3),
// h1 = h2 = 0. Requires 0 <= i <= 3.
long line_bundle_cohomology(int a, int i);

struct HValues {
    long h0 = 0, h1 = 0, h2 = 0, h3 = 0;
    bool operator==(const HValues& o) const {
        return h0 == o.h0 && h1 == o.h1 && h2 == o.h2 && h3 == o.h3;
    }
};

struct CohomRow {
    int d = 0;
    HValues h;
};

struct CohomologyTable {
    std::string method;  // "resolution", "restriction", or "checked"
    std::vector<CohomRow> rows;

    const CohomRow& row(int d) const;
    std::string str() const;
};

/**
 * Cohomology of the twisted ideal sheaf from the H3 strand of the
 * sheafified resolution: on projective 3-space only H0 and H3 of line
 * bundles survive, and for resolutions of length <= 2 the strand homology
 * gives h1, h2, h3 while h0 is the alternating sum of the graded pieces.
 * Requires the minimal resolution of a saturated ideal; length >= 3
 * means the ideal was not saturated and is rejected.
 */
HValues ideal_sheaf_cohomology_via_resolution(const FreeResolution& res, int d);

/**
 * Cohomology of the twisted ideal sheaf from the restriction map
 * H0(O(d)) -> H0(O_Z(d)): h1 = deg Z - rank(restriction), h2 = 0,
 * h3 = h3(O(d)). Valid only for saturated ideals with finite (or empty)
 * vanishing scheme; positive-dimensional input is rejected.
 */
HValues ideal_sheaf_cohomology_via_restriction(const GradedIdeal& jsat, int d);

CohomologyTable cohomology_table_via_resolution(const FreeResolution& res, int dlo, int dhi);
CohomologyTable cohomology_table_via_restriction(const GradedIdeal& jsat, int dlo, int dhi);

// Runs both algorithms over [dlo, dhi], requires entrywise agreement and
// Euler conservation sum (-1)^i h^i = chi(O(d)) - deg Z, and returns the
// common table.
CohomologyTable cohomology_table_checked(const GradedIdeal& jsat, const FreeResolution& res,
                                         int dlo, int dhi);

}  // namespace k3smooth
