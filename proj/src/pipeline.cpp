#include "k3smooth/pipeline.hpp"

#include "k3smooth/hilbert.hpp"

namespace k3smooth {

GradedIdeal jacobian_ideal(const Polynomial& f) {
    if (f.is_zero()) throw InputError("the defining polynomial must be nonzero");
    if (!f.is_homogeneous()) throw InputError("the defining polynomial must be homogeneous");
    if (f.degree() != 4) throw InputError("the defining polynomial must have degree 4");
    const RingPtr& R = f.ring();
    if (static_cast<int>(R->vars.size()) != 4 || R->elim_count != 0)
        throw InputError("the defining polynomial must live in four variables");
    std::vector<Polynomial> partials;
    for (int v = 0; v < 4; ++v) partials.push_back(f.derivative(v));
    return GradedIdeal(R, std::move(partials));
}

SingularScheme singular_scheme(const Polynomial& f) {
    GradedIdeal jsat = saturate_irrelevant(jacobian_ideal(f));
    HilbertData H = hilbert_data(buchberger(jsat));
    SingularScheme s;
    s.empty = H.empty_scheme;
    s.dimension = H.scheme_dimension;
    s.degree = H.scheme_degree;
    s.saturated_ideal = jsat;
    return s;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SMOOTH: return "SMOOTH";
        case Verdict::CRITERION_HOLDS: return "CRITERION_HOLDS";
        case Verdict::CRITERION_FAILS_INCONCLUSIVE: return "CRITERION_FAILS_INCONCLUSIVE";
        case Verdict::NOT_APPLICABLE_POSITIVE_DIM: return "NOT_APPLICABLE_POSITIVE_DIM";
    }
    throw InternalError("unknown verdict");
}

QuarticReport analyze_quartic(const Polynomial& f, int dlo, int dhi) {
    if (dlo > 4 || dhi < 4) throw InputError("twist range must contain 4");

    QuarticReport rep;
    rep.input = f.is_zero() ? f : f.primitive_part();
    rep.jacobian = jacobian_ideal(f);
    rep.saturation = saturate_irrelevant(rep.jacobian);

    GroebnerBasis G = buchberger(rep.saturation);
    HilbertData H = hilbert_data(G);
    rep.scheme.empty = H.empty_scheme;
    rep.scheme.dimension = H.scheme_dimension;
    rep.scheme.degree = H.scheme_degree;
    rep.scheme.saturated_ideal = rep.saturation;

    rep.resolution = free_resolution(rep.saturation, true);
    rep.betti = rep.resolution.betti();

    const bool positive_dim = rep.scheme.dimension > 0;
    if (positive_dim) {
        rep.cohomology = cohomology_table_via_resolution(rep.resolution, dlo, dhi);
        rep.notes.push_back(
            "positive-dimensional singular locus: cohomology from the resolution strand only, "
            "the finite-scheme restriction method does not apply");
    } else {
        rep.cohomology = cohomology_table_checked(rep.saturation, rep.resolution, dlo, dhi);
    }
    rep.h1_J4 = rep.cohomology.row(4).h.h1;

    if (G.is_unit_ideal()) {
        rep.verdict = Verdict::SMOOTH;
        rep.notes.push_back("empty singular locus: the surface is smooth");
    } else if (positive_dim) {
        rep.verdict = Verdict::NOT_APPLICABLE_POSITIVE_DIM;
        rep.notes.push_back("the smoothability criterion requires isolated singularities");
    } else if (rep.h1_J4 == 0) {
        rep.verdict = Verdict::CRITERION_HOLDS;
        rep.notes.push_back("psi_surjective = true");
        rep.notes.push_back("h2_TX_zero = true");
        rep.notes.push_back("(X, O(1)) is polarized smoothable");
    } else {
        rep.verdict = Verdict::CRITERION_FAILS_INCONCLUSIVE;
        rep.notes.push_back("h1(J(4)) = " + std::to_string(rep.h1_J4) +
                            " is nonzero: the criterion fails, smoothability undetermined");
    }
    if (!rep.scheme.empty && rep.scheme.dimension == 0)
        rep.notes.push_back("h2(J(d)) = 0 at every d: forced for the ideal sheaf of a finite "
                            "scheme in projective 3-space");
    return rep;
}

}  // namespace k3smooth
