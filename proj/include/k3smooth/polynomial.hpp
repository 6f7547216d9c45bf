#pragma once

#include <string>
#include <vector>

#include "k3smooth/rational.hpp"
#include "k3smooth/ring.hpp"

namespace k3smooth {

struct Term {
    Monomial m;
    Rat c;
};

/**
 * Sparse multivariate polynomial with exact rational coefficients.
 *
 * Canonical form is an invariant, not a convention: terms are kept
 * strictly descending in the ring's term order, no coefficient is zero,
 * and every coefficient is in lowest terms. Two polynomials are equal
 * iff their term vectors are equal.
 */
class Polynomial {
public:
    Polynomial() : ring_(default_ring()) {}
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rat& c);
    static Polynomial variable(RingPtr ring, int var);
    static Polynomial term(RingPtr ring, Monomial m, const Rat& c);
    // Sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().m; }
    const Rat& leading_coeff() const { return leading_term().c; }

    // Max total degree over terms; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    Polynomial scaled(const Rat& c) const;
    // Multiplication by the single term c * m.
    Polynomial times_term(const Monomial& m, const Rat& c) const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int var) const;

    // gcd of numerators over lcm of denominators, sign of the leading
    // coefficient; zero polynomial has content 0.
    Rat content() const;
    // Integer coprime coefficients, positive leading coefficient.
    Polynomial primitive_part() const;
    Polynomial monic() const;

    // Image under vars[i] -> images[i]; images live in a common ring.
    Polynomial substituted(const std::vector<Polynomial>& images) const;
    // Transport to another ring along old_to_new; old variables mapped to
    // -1 must not occur in the polynomial.
    Polynomial transported(const RingPtr& new_ring, const std::vector<int>& old_to_new) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
};

// Deterministic total order on polynomials over one ring (term-wise by
// monomial order, then coefficient). Used for canonical generator lists.
int cmp_polynomial(const Polynomial& a, const Polynomial& b);

// All monomials of total degree d, descending in the ring order.
// Size C(d + n - 1, n - 1).
std::vector<Monomial> graded_piece_basis(const RingContext& ring, int d);

// Checks sum_i x_i * df/dx_i == deg(f) * f. Throws InputError on
// non-homogeneous input; true for f == 0.
bool euler_relation_check(const Polynomial& f);

}  // namespace k3smooth
