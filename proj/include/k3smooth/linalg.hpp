#pragma once

#include <utility>
#include <vector>

#include "k3smooth/rational.hpp"

namespace k3smooth {

/**
 * Sparse matrix over Q for exact rank computation. Rows are sorted
 * (column, value) lists with nonzero values. Rank is computed by
 * fraction-free elimination on integer-primitive rows; there is no
 * numerical tolerance anywhere.
 */
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Rat>>> row;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), row(r) {}
    void add(int r, int c, const Rat& v) {
        if (v != 0) row[r].push_back({c, v});
    }
};

long sparse_rank(const SparseMat& m);

// Dense helpers over Q, used for kernel bases and membership tests.
using DenseMat = std::vector<std::vector<Rat>>;

long dense_rank(DenseMat m);

// Basis of the right kernel {v : m v = 0}, as columns; reduced row echelon
// parameterization, deterministic.
std::vector<std::vector<Rat>> nullspace(DenseMat m);

}  // namespace k3smooth
