#pragma once

#include <string>

#include "k3smooth/errors.hpp"

namespace k3smooth {

// Rank, determinant self-intersection, and second Chern number of a sheaf on
// a K3 surface. Lsq must be even (the intersection form is even) and r >= 1.
struct ModuliInvariants {
    long r = 1;
    long Lsq = 0;
    long c2 = 0;
};

// Throws InputError unless r >= 1 and Lsq is even.
void validate(const ModuliInvariants& m);

// Dimension of the moduli space of simple perfect sheaves with these
// invariants: 2*r*c2 - (r-1)*Lsq - 2*r^2 + 2.
long pspl_dimension(const ModuliInvariants& m);

// Euler characteristic chi(F) = 2r + Lsq/2 - c2 by Riemann-Roch.
long chi_sheaf(const ModuliInvariants& m);

// chi(F, F) = 2*r^2 + (r-1)*Lsq - 2*r*c2. Satisfies
// 2 - chi_FF(m) == pspl_dimension(m) for every valid m.
long chi_FF(const ModuliInvariants& m);

// Invariants of the syzygy sheaf built from a w-dimensional space of
// sections: rank w-r, determinant negated (Lsq unchanged), c2 -> Lsq - c2.
// Requires w >= r + 2.
ModuliInvariants syzygy_invariants(const ModuliInvariants& m, long w);

// Invariants of an extension by v trivial summands: rank r+v, Lsq and c2
// unchanged. Requires v >= 1.
ModuliInvariants extension_invariants(const ModuliInvariants& m, long v);

// Both sides of the exact dimension identities of the syzygy and extension
// correspondences. A mismatch between a lhs/rhs pair is a software defect.
struct LagrangianIdentityReport {
    ModuliInvariants m;
    long w = 0;
    long v = 0;
    long u = 0;   // -chi(F dual) = c2 - Lsq/2 - 2r
    long h0 = 0;  // chi(F)
    ModuliInvariants syzygy;
    ModuliInvariants extension;
    long lhs_syzygy = 0;     // pspl(syzygy) - pspl(m)
    long rhs_syzygy = 0;     // 2*w*(h0 - w)
    long lhs_extension = 0;  // pspl(extension) - pspl(m)
    long rhs_extension = 0;  // 2*v*(u - v)
    std::string note;
};

LagrangianIdentityReport lagrangian_dimension_identities(const ModuliInvariants& m, long w,
                                                         long v);

}  // namespace k3smooth
