#include "k3smooth/free_module.hpp"

#include <algorithm>
#include <map>

namespace k3smooth {

GradedMap GradedMap::zero(RingPtr ring, GradedFreeModule src, GradedFreeModule tgt) {
    GradedMap m;
    m.ring = std::move(ring);
    m.source = std::move(src);
    m.target = std::move(tgt);
    m.entries.assign(m.target.rank(), std::vector<Polynomial>(m.source.rank(), Polynomial::zero(m.ring)));
    return m;
}

void GradedMap::validate() const {
    if (static_cast<int>(entries.size()) != target.rank()) throw InternalError("graded map: row count mismatch");
    for (int i = 0; i < target.rank(); ++i) {
        if (static_cast<int>(entries[i].size()) != source.rank())
            throw InternalError("graded map: column count mismatch");
        for (int j = 0; j < source.rank(); ++j) {
            const Polynomial& p = entries[i][j];
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) throw InternalError("graded map: inhomogeneous entry");
            if (p.degree() != target.twist(i) - source.twist(j))
                throw InternalError("graded map: entry degree violates grading");
        }
    }
}

std::vector<Polynomial> GradedMap::column(int j) const {
    std::vector<Polynomial> col;
    col.reserve(target.rank());
    for (int i = 0; i < target.rank(); ++i) col.push_back(entries[i][j]);
    return col;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (!(f.source == g.target)) throw InternalError("compose: middle modules differ");
    GradedMap h = GradedMap::zero(f.ring, g.source, f.target);
    for (int i = 0; i < f.target.rank(); ++i)
        for (int j = 0; j < g.source.rank(); ++j) {
            Polynomial acc = Polynomial::zero(f.ring);
            for (int k = 0; k < f.source.rank(); ++k) acc = acc + f.entries[i][k] * g.entries[k][j];
            h.entries[i][j] = acc;
        }
    return h;
}

bool is_zero_map(const GradedMap& m) {
    for (const auto& row : m.entries)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

std::vector<Polynomial> apply_map(const GradedMap& m, const std::vector<Polynomial>& v) {
    if (static_cast<int>(v.size()) != m.source.rank()) throw InternalError("apply_map: vector length mismatch");
    std::vector<Polynomial> out(m.target.rank(), Polynomial::zero(m.ring));
    for (int i = 0; i < m.target.rank(); ++i)
        for (int j = 0; j < m.source.rank(); ++j) out[i] = out[i] + m.entries[i][j] * v[j];
    return out;
}

long PieceBasis::index(int comp, const Monomial& m) const {
    for (size_t k = 0; k < elems.size(); ++k)
        if (elems[k].first == comp && elems[k].second.e == m.e) return static_cast<long>(k);
    return -1;
}

PieceBasis graded_piece_basis_of_module(const RingContext& ring, const GradedFreeModule& F, int d) {
    PieceBasis basis;
    for (int j = 0; j < F.rank(); ++j) {
        int md = d + F.twist(j);
        if (md < 0) continue;
        for (const Monomial& m : graded_piece_basis(ring, md)) basis.elems.emplace_back(j, m);
    }
    return basis;
}

SparseMat matrix_of_graded_piece(const GradedMap& m, int d) {
    const RingContext& ring = *m.ring;
    PieceBasis src = graded_piece_basis_of_module(ring, m.source, d);
    PieceBasis tgt = graded_piece_basis_of_module(ring, m.target, d);

    // index map for target lookups
    std::map<std::pair<int, std::vector<int>>, long> tgt_index;
    for (size_t k = 0; k < tgt.elems.size(); ++k)
        tgt_index[{tgt.elems[k].first, tgt.elems[k].second.e}] = static_cast<long>(k);

    SparseMat A(static_cast<long>(tgt.elems.size()), static_cast<long>(src.elems.size()));
    for (size_t col = 0; col < src.elems.size(); ++col) {
        int j = src.elems[col].first;
        const Monomial& mono = src.elems[col].second;
        for (int i = 0; i < m.target.rank(); ++i) {
            const Polynomial& p = m.entries[i][j];
            for (const Term& t : p.terms()) {
                Monomial prod = t.m * mono;
                auto it = tgt_index.find({i, prod.e});
                if (it == tgt_index.end()) throw InternalError("graded piece: image monomial missing from basis");
                A.add(it->second, static_cast<long>(col), t.c);
            }
        }
    }
    return A;
}

long rank_of_graded_piece(const GradedMap& m, int d) { return sparse_rank(matrix_of_graded_piece(m, d)); }

GradedMap dual_map(const GradedMap& m) {
    auto dualize = [](const GradedFreeModule& F) {
        std::vector<int> tw;
        for (int i = F.rank() - 1; i >= 0; --i) tw.push_back(-F.twist(i));
        return GradedFreeModule(tw);
    };
    GradedMap d = GradedMap::zero(m.ring, dualize(m.target), dualize(m.source));
    int nr = m.target.rank(), nc = m.source.rank();
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) d.entries[nc - 1 - j][nr - 1 - i] = m.entries[i][j];
    d.validate();
    return d;
}

long dim_of_graded_piece(const RingContext& ring, const GradedFreeModule& F, int d) {
    long total = 0;
    for (int j = 0; j < F.rank(); ++j) {
        int md = d + F.twist(j);
        if (md >= 0) total += to_long(monomial_count(md, ring.nvars()));
    }
    return total;
}

}  // namespace k3smooth
