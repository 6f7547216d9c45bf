#include "k3smooth/cohomology.hpp"

#include <iomanip>
#include <sstream>

#include "k3smooth/hilbert.hpp"

namespace k3smooth {

long line_bundle_cohomology(int a, int i) {
    if (i < 0 || i > 3) throw InputError("cohomological index must be between 0 and 3");
    if (i == 0) return to_long(binomial(a + 3L, 3));
    if (i == 3) return to_long(binomial(-a - 1L, 3));
    return 0;
}

const CohomRow& CohomologyTable::row(int d) const {
    for (const CohomRow& r : rows)
        if (r.d == d) return r;
    throw InputError("twist " + std::to_string(d) + " is outside the computed table");
}

std::string CohomologyTable::str() const {
    std::ostringstream os;
    os << std::setw(4) << "d" << std::setw(8) << "h0" << std::setw(8) << "h1" << std::setw(8)
       << "h2" << std::setw(8) << "h3";
    for (const CohomRow& r : rows)
        os << "\n"
           << std::setw(4) << r.d << std::setw(8) << r.h.h0 << std::setw(8) << r.h.h1
           << std::setw(8) << r.h.h2 << std::setw(8) << r.h.h3;
    return os.str();
}

HValues ideal_sheaf_cohomology_via_resolution(const FreeResolution& res, int d) {
    if (!res.minimal) throw InputError("cohomology requires a minimal resolution");
    if (res.length() >= 3)
        throw InputError("resolution length exceeds 2: the ideal is not saturated, saturate first");

    HValues h;
    long sign = 1;
    for (const GradedFreeModule& F : res.modules) {
        h.h0 += sign * dim_of_graded_piece(*res.ring, F, d);
        sign = -sign;
    }

    long B[3] = {0, 0, 0};
    for (size_t p = 0; p < res.modules.size(); ++p)
        for (int tw : res.modules[p].twists) B[p] += line_bundle_cohomology(tw + d, 3);
    long r1 = res.length() >= 1 ? rank_of_graded_piece(dual_map(res.maps[0]), -4 - d) : 0;
    long r2 = res.length() >= 2 ? rank_of_graded_piece(dual_map(res.maps[1]), -4 - d) : 0;
    h.h3 = B[0] - r1;
    h.h2 = B[1] - r1 - r2;
    h.h1 = B[2] - r2;
    if (h.h0 < 0 || h.h1 < 0 || h.h2 < 0 || h.h3 < 0)
        throw InternalError("strand homology produced a negative dimension");
    return h;
}

namespace {

struct RestrictionCtx {
    GroebnerBasis basis;
    HilbertData hilbert;
    long deg_z;
};

RestrictionCtx restriction_ctx(const GradedIdeal& jsat) {
    GroebnerBasis G = buchberger(jsat);
    HilbertData H = hilbert_data(G);
    if (H.scheme_dimension > 0)
        throw InputError("restriction method requires a finite vanishing scheme");
    long deg_z = H.empty_scheme ? 0 : to_long(H.scheme_degree);
    return {std::move(G), std::move(H), deg_z};
}

HValues restriction_values(const RestrictionCtx& ctx, int d) {
    HValues h;
    h.h0 = to_long(graded_piece_dimension(ctx.basis, d));
    h.h1 = ctx.deg_z - to_long(ctx.hilbert.hilbert_function(d));
    h.h2 = 0;
    h.h3 = line_bundle_cohomology(d, 3);
    if (h.h1 < 0)
        throw InternalError("restriction rank exceeds the scheme degree: ideal not saturated?");
    return h;
}

}  // namespace

HValues ideal_sheaf_cohomology_via_restriction(const GradedIdeal& jsat, int d) {
    return restriction_values(restriction_ctx(jsat), d);
}

CohomologyTable cohomology_table_via_resolution(const FreeResolution& res, int dlo, int dhi) {
    CohomologyTable T;
    T.method = "resolution";
    for (int d = dlo; d <= dhi; ++d)
        T.rows.push_back({d, ideal_sheaf_cohomology_via_resolution(res, d)});
    return T;
}

CohomologyTable cohomology_table_via_restriction(const GradedIdeal& jsat, int dlo, int dhi) {
    CohomologyTable T;
    T.method = "restriction";
    RestrictionCtx ctx = restriction_ctx(jsat);
    for (int d = dlo; d <= dhi; ++d) T.rows.push_back({d, restriction_values(ctx, d)});
    return T;
}

CohomologyTable cohomology_table_checked(const GradedIdeal& jsat, const FreeResolution& res,
                                         int dlo, int dhi) {
    CohomologyTable A = cohomology_table_via_resolution(res, dlo, dhi);
    CohomologyTable B = cohomology_table_via_restriction(jsat, dlo, dhi);
    long deg_z = restriction_ctx(jsat).deg_z;
    for (size_t k = 0; k < A.rows.size(); ++k) {
        const int d = A.rows[k].d;
        if (!(A.rows[k].h == B.rows[k].h))
            throw InternalError("cohomology methods disagree at twist " + std::to_string(d));
        const HValues& h = A.rows[k].h;
        long chi = line_bundle_cohomology(d, 0) - line_bundle_cohomology(d, 3);
        if (h.h0 - h.h1 + h.h2 - h.h3 != chi - deg_z)
            throw InternalError("Euler characteristic mismatch at twist " + std::to_string(d));
    }
    A.method = "checked";
    return A;
}

}  // namespace k3smooth
