#include "k3smooth/moduli.hpp"

namespace k3smooth {

void validate(const ModuliInvariants& m) {
    if (m.r < 1) throw InputError("rank must be at least 1");
    if (m.Lsq % 2 != 0) throw InputError("Lsq must be even: the K3 intersection form is even");
}

long pspl_dimension(const ModuliInvariants& m) {
    validate(m);
    return 2 * m.r * m.c2 - (m.r - 1) * m.Lsq - 2 * m.r * m.r + 2;
}

long chi_sheaf(const ModuliInvariants& m) {
    validate(m);
    return 2 * m.r + m.Lsq / 2 - m.c2;
}

long chi_FF(const ModuliInvariants& m) {
    validate(m);
    return 2 * m.r * m.r + (m.r - 1) * m.Lsq - 2 * m.r * m.c2;
}

ModuliInvariants syzygy_invariants(const ModuliInvariants& m, long w) {
    validate(m);
    if (w < m.r + 2) throw InputError("section count w must be at least r + 2");
    return {w - m.r, m.Lsq, m.Lsq - m.c2};
}

ModuliInvariants extension_invariants(const ModuliInvariants& m, long v) {
    validate(m);
    if (v < 1) throw InputError("extension dimension v must be at least 1");
    return {m.r + v, m.Lsq, m.c2};
}

LagrangianIdentityReport lagrangian_dimension_identities(const ModuliInvariants& m, long w,
                                                         long v) {
    LagrangianIdentityReport rep;
    rep.m = m;
    rep.w = w;
    rep.v = v;
    rep.u = m.c2 - m.Lsq / 2 - 2 * m.r;
    rep.h0 = chi_sheaf(m);
    rep.syzygy = syzygy_invariants(m, w);
    rep.extension = extension_invariants(m, v);
    rep.lhs_syzygy = pspl_dimension(rep.syzygy) - pspl_dimension(m);
    rep.rhs_syzygy = 2 * w * (rep.h0 - w);
    rep.lhs_extension = pspl_dimension(rep.extension) - pspl_dimension(m);
    rep.rhs_extension = 2 * v * (rep.u - v);
    if (rep.lhs_syzygy != rep.rhs_syzygy)
        throw InternalError("syzygy dimension identity failed");
    if (rep.lhs_extension != rep.rhs_extension)
        throw InternalError("extension dimension identity failed");
    rep.note = "u and h0 are Euler-characteristic values, valid on the locus where the "
               "relevant cohomology vanishing holds";
    return rep;
}

}  // namespace k3smooth
