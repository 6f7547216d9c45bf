#pragma once

#include <string>
#include <vector>

#include "k3smooth/cohomology.hpp"
#include "k3smooth/groebner.hpp"
#include "k3smooth/resolution.hpp"

namespace k3smooth {

// Ideal generated by the four partial derivatives of f, content-normalized.
// f must be a nonzero homogeneous quartic in four variables.
GradedIdeal jacobian_ideal(const Polynomial& f);

// Singular locus of V(f) with the scheme structure of the Jacobian ideal:
// the saturated ideal plus projective dimension and degree of its vanishing
// scheme. Degree is the total Tjurina number when the dimension is 0.
struct SingularScheme {
    bool empty = true;
    int dimension = -1;  // -1 when empty
    Int degree = 0;      // 0 when empty
    GradedIdeal saturated_ideal{nullptr};
};

SingularScheme singular_scheme(const Polynomial& f);

enum class Verdict {
    SMOOTH,
    CRITERION_HOLDS,
    CRITERION_FAILS_INCONCLUSIVE,
    NOT_APPLICABLE_POSITIVE_DIM,
};

std::string verdict_name(Verdict v);

struct QuarticReport {
    Polynomial input;  // content-normalized defining polynomial
    GradedIdeal jacobian{nullptr};
    GradedIdeal saturation{nullptr};
    SingularScheme scheme;
    FreeResolution resolution;  // minimal resolution of the saturated ideal
    BettiTable betti;
    CohomologyTable cohomology;
    long h1_J4 = 0;
    Verdict verdict = Verdict::SMOOTH;
    std::vector<std::string> notes;
};

/**
 * Full smoothability analysis of the quartic surface V(f): Jacobian ideal,
 * saturation, singular-scheme dimension and degree, minimal free resolution,
 * twisted-ideal-sheaf cohomology over [dlo, dhi] (which must contain 4),
 * and the verdict:
 *   SMOOTH                        saturated Jacobian ideal is (1)
 *   CRITERION_HOLDS               dim Z = 0 and h1(J(4)) = 0
 *   CRITERION_FAILS_INCONCLUSIVE  dim Z = 0 and h1(J(4)) > 0
 *   NOT_APPLICABLE_POSITIVE_DIM   dim Z > 0 (criterion needs isolated
 *                                 singularities; non-reduced f lands here)
 */
QuarticReport analyze_quartic(const Polynomial& f, int dlo = -6, int dhi = 8);

}  // namespace k3smooth
