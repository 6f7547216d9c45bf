#include "k3smooth/linalg.hpp"

#include <algorithm>

namespace k3smooth {

namespace {

using IRow = std::vector<std::pair<int, Int>>;

// Scale to integer entries with gcd 1; keeps column order.
IRow integerize(const std::vector<std::pair<int, Rat>>& r) {
    Int den_lcm(1);
    for (const auto& [c, v] : r)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    IRow out;
    out.reserve(r.size());
    Int g(0);
    for (const auto& [c, v] : r) {
        Int z = v.get_num() * (den_lcm / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.push_back({c, std::move(z)});
    }
    if (g > 1)
        for (auto& [c, z] : out) z /= g;
    return out;
}

void strip_content(IRow& r) {
    Int g(0);
    for (const auto& [c, z] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g > 1)
        for (auto& [c, z] : r) z /= g;
}

// r <- (a * r - b * p) / content, where p's leading column is eliminated.
IRow eliminate(const IRow& r, const IRow& p, const Int& a, const Int& b) {
    IRow out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() && j < p.size()) {
        if (r[i].first < p[j].first) {
            out.push_back({r[i].first, a * r[i].second});
            ++i;
        } else if (r[i].first > p[j].first) {
            out.push_back({p[j].first, -b * p[j].second});
            ++j;
        } else {
            Int v = a * r[i].second - b * p[j].second;
            if (v != 0) out.push_back({r[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    for (; i < r.size(); ++i) out.push_back({r[i].first, a * r[i].second});
    for (; j < p.size(); ++j) out.push_back({p[j].first, -b * p[j].second});
    strip_content(out);
    return out;
}

}  // namespace

long sparse_rank(const SparseMat& m) {
    std::vector<IRow> rows;
    rows.reserve(m.row.size());
    for (const auto& r : m.row) {
        auto sorted = r;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        IRow ir = integerize(sorted);
        if (!ir.empty()) rows.push_back(std::move(ir));
    }
    long rank = 0;
    while (!rows.empty()) {
        // pivot: minimal leading column, then fewest nonzeros, then first.
        size_t piv = 0;
        for (size_t i = 1; i < rows.size(); ++i) {
            int ci = rows[i][0].first, cp = rows[piv][0].first;
            if (ci < cp || (ci == cp && rows[i].size() < rows[piv].size())) piv = i;
        }
        IRow pivot = std::move(rows[piv]);
        rows.erase(rows.begin() + piv);
        ++rank;
        const int pc = pivot[0].first;
        const Int& pv = pivot[0].second;
        std::vector<IRow> next;
        next.reserve(rows.size());
        for (IRow& r : rows) {
            if (r[0].first == pc) {
                IRow e = eliminate(r, pivot, pv, r[0].second);
                if (!e.empty()) next.push_back(std::move(e));
            } else {
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
    }
    return rank;
}

long dense_rank(DenseMat m) {
    if (m.empty()) return 0;
    const size_t nc = m[0].size();
    size_t r = 0;
    long rank = 0;
    for (size_t c = 0; c < nc && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> nullspace(DenseMat m) {
    if (m.empty()) return {};
    const size_t nc = m[0].size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < nc && r < m.size(); ++c) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < nc; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < nc; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<bool> is_pivot(nc, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(nc, Rat(0));
        v[c] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace k3smooth
