#pragma once

#include <vector>

#include "k3smooth/groebner.hpp"

namespace k3smooth {

/**
 * Hilbert data of S/I, computed from the leading term ideal of a reduced
 * basis (Macaulay: the Hilbert function only depends on it). The series
 * numerator N(T) with HS = N(T)/(1-T)^n is exact, so hilbert_function is
 * valid at every degree; the Hilbert polynomial is recovered by exact
 * interpolation of the function at regularity_bound + {0,1,2,3}.
 *
 * V(I) empty (Hilbert polynomial zero) is flagged, with dimension -1 and
 * degree 0, never fabricated.
 */
struct HilbertData {
    RingPtr ring;
    std::vector<Monomial> lead_monomials;  // minimal generators of the lead ideal
    std::vector<Int> numerator;            // N(T), index = power of T
    int regularity_bound = 0;              // function equals polynomial from here on
    std::vector<Rat> hp_coeffs;            // polynomial in d, ascending powers
    bool empty_scheme = false;
    int scheme_dimension = -1;             // -1 when empty
    Int scheme_degree;                     // 0 when empty

    Int hilbert_function(int d) const;
    Rat hilbert_polynomial(int d) const;
};

HilbertData hilbert_data(const GroebnerBasis& G);

// dim I_d = C(d+n-1, n-1) - HF_{S/I}(d).
Int graded_piece_dimension(const GroebnerBasis& G, int d);

// Oracle-grade direct count of degree-d standard monomials (monomials not
// divisible by any of the given leads). Independent of the series route.
Int count_standard_monomials(const RingContext& ring, const std::vector<Monomial>& leads, int d);

}  // namespace k3smooth
