#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "k3smooth/free_module.hpp"
#include "k3smooth/groebner.hpp"

namespace k3smooth {

/**
 * Graded Betti numbers of a resolution: counts[{p, d}] is the number of
 * generators of F_p in degree d (twist -d).
 */
struct BettiTable {
    std::vector<std::vector<int>> twists;      // per homological level
    std::map<std::pair<int, int>, long> counts;  // (level, generator degree) -> count

    std::string str() const;
};

/**
 * Free resolution of a nonzero homogeneous ideal I, as the complex
 *   0 -> F_K -> ... -> F_1 -> F_0 -> S
 * with maps[p] : F_{p+1} -> F_p and the augmentation F_0 -> S having
 * image I. The construction is the iterated-syzygy chain on the reduced
 * basis; `minimal` marks the result of constant-entry cancellation, after
 * which no map entry is a nonzero constant.
 */
struct FreeResolution {
    RingPtr ring;
    std::vector<GradedFreeModule> modules;  // F_0 .. F_K
    GradedMap augmentation;                 // F_0 -> S(0)
    std::vector<GradedMap> maps;            // maps[p]: F_{p+1} -> F_p
    bool minimal = false;

    int length() const { return static_cast<int>(maps.size()); }

    // max over levels p of (generator degree - p); for the minimal
    // resolution this is the regularity of the ideal
    int regularity_bound() const;

    BettiTable betti() const;
};

// Resolution of I; throws InputError on the zero ideal. With
// want_minimal=false the raw chain is returned (levels sorted by twist,
// not cancelled).
FreeResolution free_resolution(const GradedIdeal& I, bool want_minimal = true);

// Cancel every nonzero constant entry by row/column elimination; the
// result resolves the same ideal with intrinsic Betti numbers. Idempotent.
FreeResolution minimize(FreeResolution res);

// Rank-ledger exactness check over degrees [dlo, dhi]: composites vanish
// identically, the augmentation image matches I degreewise, and kernel
// and image dimensions agree at every level. On failure returns false
// and, if `why` is given, a description of the first violation.
bool verify_exactness(const FreeResolution& R, const GradedIdeal& I, int dlo, int dhi,
                      std::string* why = nullptr);
bool verify_exactness(const FreeResolution& R, const GradedIdeal& I, std::string* why = nullptr);

/**
 * Minimal generating set of the syzygy module of the columns of phi
 * (relations c with phi . c = 0), returned as a map into phi's source.
 * Column degrees of the result are the degrees of the minimal syzygies.
 */
GradedMap syzygies(const GradedMap& phi);

// Syzygies of a list of nonzero homogeneous polynomials. The target rows
// follow the stable degree-ascending sort of the input list.
GradedMap syzygies(RingPtr ring, const std::vector<Polynomial>& gens);

}  // namespace k3smooth
