#pragma once

#include <optional>
#include <vector>

#include "k3smooth/polynomial.hpp"

namespace k3smooth {

/**
 * Homogeneous ideal with a canonical generator list: generators are
 * nonzero, homogeneous, in primitive integer form with positive leading
 * coefficient, deduplicated and sorted (degree, then term order). The
 * zero ideal is the empty list.
 */
class GradedIdeal {
public:
    explicit GradedIdeal(RingPtr ring) : ring_(std::move(ring)) {}
    GradedIdeal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    int max_gen_degree() const;

    bool operator==(const GradedIdeal& o) const { return gens_ == o.gens_; }

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

/**
 * Reduced Groebner basis: elements monic, no term of any element
 * divisible by the leading term of another, sorted ascending by leading
 * monomial. Unique per (ideal, order).
 */
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_elements)
        : ring_(std::move(ring)), elems_(std::move(reduced_elements)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& elements() const { return elems_; }
    bool is_zero_ideal() const { return elems_.empty(); }
    bool is_unit_ideal() const {
        return elems_.size() == 1 && elems_[0].is_constant() && !elems_[0].is_zero();
    }
    std::vector<Monomial> lead_monomials() const;

    bool operator==(const GroebnerBasis& o) const { return elems_ == o.elems_; }
    bool operator!=(const GroebnerBasis& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<Polynomial> elems_;
};

// Remainder of full multivariate division of p by the listed reducers,
// deterministic for a fixed list order; unique when G is a reduced basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& G);

// Buchberger with normal pair selection (minimal lcm degree first) and the
// coprime-lead criterion; denominators cleared and content divided out
// after every reduction. Returns the reduced basis.
GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens);
GroebnerBasis buchberger(const GradedIdeal& I);

// Variant tracking representations: result.second[i] holds coefficients
// expressing element i of the basis in the input generators.
std::pair<GroebnerBasis, std::vector<std::vector<Polynomial>>> buchberger_with_reps(
    RingPtr ring, const std::vector<Polynomial>& gens);

// Property check used by tests; buchberger output always satisfies it.
bool is_reduced_basis(const GroebnerBasis& G);

bool ideal_contains(const GroebnerBasis& G, const Polynomial& p);
bool ideal_equal(const GradedIdeal& I, const GradedIdeal& J);

// Exact division p / g for p in (g); throws InternalError otherwise.
Polynomial divide_exact(const Polynomial& p, const Polynomial& g);

// Contraction of (gens) to the subring on the kept variables, computed
// under a block order ranking the eliminated variables first. Output in
// the original ring, eliminated variables absent.
std::vector<Polynomial> elimination_ideal(RingPtr ring, const std::vector<Polynomial>& gens,
                                          const std::vector<bool>& keep);

GradedIdeal intersect(const GradedIdeal& I, const GradedIdeal& J);

// (I : g), by intersecting with (g) through one auxiliary elimination
// variable and dividing by g. g must be homogeneous and nonzero.
GradedIdeal ideal_quotient(const GradedIdeal& I, const Polynomial& g);

// (I : g^inf), quotients iterated to stabilization.
GradedIdeal saturate_by(const GradedIdeal& I, const Polynomial& g);

// Saturation with respect to the irrelevant maximal ideal, as the
// intersection over the variables of (I : x_i^inf). Idempotent.
GradedIdeal saturate_irrelevant(const GradedIdeal& I);

// Canonical generators (reduced basis, primitive integer form) of the
// ideal spanned by gens.
GradedIdeal canonical_ideal(RingPtr ring, const std::vector<Polynomial>& gens);

}  // namespace k3smooth
