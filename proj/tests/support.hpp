#pragma once

// Shared helpers for the test binaries: parsing shorthands, seeded random
// polynomial generators, and linear-algebra oracles that are independent
// of the basis machinery under test.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "k3smooth/groebner.hpp"
#include "k3smooth/linalg.hpp"
#include "k3smooth/parse.hpp"

namespace k3test {

using namespace k3smooth;

inline Polynomial pp(const std::string& s) { return parse_polynomial(s); }
inline std::vector<Polynomial> gg(const std::string& s) { return parse_generator_list(s); }

inline GradedIdeal ideal_of(const std::string& s) {
    return GradedIdeal(default_ring(), gg(s));
}

// Row space of all degree-d multiples of the generators, spelled out as a
// sparse matrix over the degree-d monomial basis.
inline SparseMat multiples_matrix(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                  int d, const std::vector<Polynomial>& extra_rows = {}) {
    std::vector<Monomial> basis = graded_piece_basis(*ring, d);
    std::vector<std::pair<std::vector<int>, int>> index;
    for (size_t k = 0; k < basis.size(); ++k) index.push_back({basis[k].e, (int)k});
    std::sort(index.begin(), index.end());
    auto col_of = [&](const Monomial& m) {
        auto it = std::lower_bound(index.begin(), index.end(),
                                   std::pair<std::vector<int>, int>{m.e, -1});
        return it->second;
    };

    std::vector<Polynomial> rows;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        int e = g.degree();
        if (e > d) continue;
        for (const Monomial& m : graded_piece_basis(*ring, d - e))
            rows.push_back(g.times_term(m, 1));
    }
    for (const Polynomial& p : extra_rows) rows.push_back(p);

    SparseMat M((int)rows.size(), (int)basis.size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (const Term& t : rows[r].terms()) M.add((int)r, col_of(t.m), t.c);
    return M;
}

// dim of the degree-d piece of the ideal spanned by gens, by direct rank.
inline long piece_dim_oracle(const RingPtr& ring, const std::vector<Polynomial>& gens, int d) {
    return sparse_rank(multiples_matrix(ring, gens, d));
}

// Membership of a homogeneous p in the ideal spanned by gens, by rank
// comparison in its degree piece.
inline bool member_oracle(const RingPtr& ring, const std::vector<Polynomial>& gens,
                          const Polynomial& p) {
    if (p.is_zero()) return true;
    int d = p.degree();
    long base = sparse_rank(multiples_matrix(ring, gens, d));
    long with = sparse_rank(multiples_matrix(ring, gens, d, {p}));
    return with == base;
}

// Random homogeneous polynomial of the given degree with small integer
// coefficients, never zero.
inline Polynomial random_form(std::mt19937_64& rng, int degree, int sparsity_pct = 60) {
    RingPtr R = default_ring();
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> keep(1, 100);
    for (;;) {
        std::vector<std::pair<Monomial, Rat>> terms;
        for (const Monomial& m : graded_piece_basis(*R, degree)) {
            if (keep(rng) > sparsity_pct) continue;
            int c = coeff(rng);
            if (c != 0) terms.push_back({m, Rat(c)});
        }
        if (terms.empty()) continue;
        Polynomial f = Polynomial::zero(R);
        for (auto& [m, c] : terms) f = f + Polynomial::term(R, m, c);
        return f;
    }
}

// Random invertible 4x4 integer matrix with determinant +-1, built from
// elementary operations so the inverse is integral too.
inline std::vector<std::vector<long>> random_unimodular(std::mt19937_64& rng, int ops = 8) {
    std::vector<std::vector<long>> M(4, std::vector<long>(4, 0));
    for (int i = 0; i < 4; ++i) M[i][i] = 1;
    std::uniform_int_distribution<int> pick(0, 3), c(-2, 2), kind(0, 2);
    for (int k = 0; k < ops; ++k) {
        int i = pick(rng), j = pick(rng);
        switch (kind(rng)) {
            case 0: {  // row_i += c * row_j
                if (i == j) break;
                long f = c(rng);
                for (int s = 0; s < 4; ++s) M[i][s] += f * M[j][s];
                break;
            }
            case 1:  // swap
                std::swap(M[i], M[j]);
                break;
            default:  // negate
                for (int s = 0; s < 4; ++s) M[i][s] = -M[i][s];
        }
    }
    return M;
}

// Substitution x_i -> sum_j M[i][j] x_j applied to f.
inline Polynomial substituted_by(const Polynomial& f, const std::vector<std::vector<long>>& M) {
    const RingPtr& R = f.ring();
    std::vector<Polynomial> images;
    for (int i = 0; i < 4; ++i) {
        Polynomial img = Polynomial::zero(R);
        for (int j = 0; j < 4; ++j)
            if (M[i][j] != 0) img = img + Polynomial::variable(R, j).scaled(Rat(M[i][j]));
        images.push_back(img);
    }
    return f.substituted(images);
}

}  // namespace k3test
