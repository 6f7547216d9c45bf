#pragma once

#include <vector>

#include "k3smooth/linalg.hpp"
#include "k3smooth/polynomial.hpp"

namespace k3smooth {

/**
 * Graded free module F = (+) S(a_i), recorded by its twist list, sorted
 * descending. The generator of the summand S(a) sits in degree -a.
 */
struct GradedFreeModule {
    std::vector<int> twists;

    GradedFreeModule() = default;
    explicit GradedFreeModule(std::vector<int> tw) : twists(std::move(tw)) {
        for (size_t i = 1; i < twists.size(); ++i)
            if (twists[i - 1] < twists[i]) throw InternalError("twists not sorted descending");
    }

    int rank() const { return static_cast<int>(twists.size()); }
    int twist(int i) const { return twists[i]; }
    int generator_degree(int i) const { return -twists[i]; }

    bool operator==(const GradedFreeModule& o) const { return twists == o.twists; }
};

/**
 * Degree-zero graded map between free modules, as a matrix of homogeneous
 * polynomials: entries[i][j] maps source summand j into target summand i
 * and has degree target.twist(i) - source.twist(j), or is zero.
 */
struct GradedMap {
    RingPtr ring;
    GradedFreeModule source;
    GradedFreeModule target;
    std::vector<std::vector<Polynomial>> entries;  // target.rank() x source.rank()

    const Polynomial& entry(int i, int j) const { return entries[i][j]; }

    static GradedMap zero(RingPtr ring, GradedFreeModule src, GradedFreeModule tgt);
    void validate() const;  // shape and entry degrees

    // image of source column j, as a target-indexed coefficient vector
    std::vector<Polynomial> column(int j) const;
};

// f after g; throws on shape mismatch.
GradedMap compose(const GradedMap& f, const GradedMap& g);
bool is_zero_map(const GradedMap& m);

// apply the map to a source element (one polynomial per source summand)
std::vector<Polynomial> apply_map(const GradedMap& m, const std::vector<Polynomial>& v);

// Monomial basis of the degree-d piece of F: pairs (summand, monomial),
// monomial degree d + twist(summand). Deterministic order.
struct PieceBasis {
    std::vector<std::pair<int, Monomial>> elems;
    long index(int comp, const Monomial& m) const;  // -1 if absent
};
PieceBasis graded_piece_basis_of_module(const RingContext& ring, const GradedFreeModule& F, int d);

// Matrix of the degree-d piece of the map over the monomial bases.
SparseMat matrix_of_graded_piece(const GradedMap& m, int d);

long rank_of_graded_piece(const GradedMap& m, int d);
long dim_of_graded_piece(const RingContext& ring, const GradedFreeModule& F, int d);

// Dual Hom(-, S): the transpose matrix between the dualized modules
// (twists negated, summand order reversed to stay descending).
GradedMap dual_map(const GradedMap& m);

}  // namespace k3smooth
