#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "k3smooth/errors.hpp"

namespace k3smooth {

/**
 * Monomial in a fixed polynomial ring: a plain exponent vector.
 * The ring (variable names and term order) lives in RingContext;
 * monomials only make sense relative to one.
 */
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    int nvars() const { return static_cast<int>(e.size()); }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // this / o, caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) {
            r.e[i] -= o.e[i];
            if (r.e[i] < 0) throw InternalError("monomial division underflow");
        }
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }
};

/**
 * Ring context: variable names plus the term order. The default ring is
 * Q[x,y,z,t] under graded reverse lexicographic order with x > y > z > t.
 * A block order ranks the first elim_count variables before the rest,
 * grevlex within each block; it is used for elimination only.
 */
struct RingContext {
    std::vector<std::string> vars;
    // 0 means plain grevlex; k > 0 means block order eliminating vars[0..k).
    int elim_count = 0;

    int nvars() const { return static_cast<int>(vars.size()); }

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> vars, int elim_count = 0) {
    auto r = std::make_shared<RingContext>();
    r->vars = std::move(vars);
    r->elim_count = elim_count;
    if (r->vars.empty()) throw InternalError("empty ring");
    return r;
}

inline RingPtr default_ring() {
    static RingPtr r = make_ring({"x", "y", "z", "t"});
    return r;
}

namespace detail {
// grevlex on the index window [lo, hi): higher total degree wins, ties
// broken at the rightmost differing exponent, smaller exponent wins.
inline int cmp_grevlex_window(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}
}  // namespace detail

// Total order on monomials of the ring. Returns -1, 0, or 1.
inline int cmp_monomial(const RingContext& ring, const Monomial& a, const Monomial& b) {
    const int n = ring.nvars();
    if (ring.elim_count > 0) {
        int c = detail::cmp_grevlex_window(a, b, 0, ring.elim_count);
        if (c != 0) return c;
        return detail::cmp_grevlex_window(a, b, ring.elim_count, n);
    }
    return detail::cmp_grevlex_window(a, b, 0, n);
}

inline bool monomial_less(const RingContext& ring, const Monomial& a, const Monomial& b) {
    return cmp_monomial(ring, a, b) < 0;
}

}  // namespace k3smooth
