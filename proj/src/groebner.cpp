#include "k3smooth/groebner.hpp"

#include <algorithm>
#include <deque>

namespace k3smooth {

GradedIdeal::GradedIdeal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw InputError("ideal generator is not homogeneous");
        gens_.push_back(g.primitive_part());
    }
    std::sort(gens_.begin(), gens_.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return cmp_polynomial(a, b) < 0;
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

int GradedIdeal::max_gen_degree() const {
    int d = 0;
    for (const Polynomial& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elems_.size());
    for (const Polynomial& g : elems_) out.push_back(g.leading_monomial());
    return out;
}

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& G) {
    const RingPtr& ring = p.ring();
    DivisionResult res;
    res.quotients.assign(G.size(), Polynomial(ring));
    res.remainder = Polynomial(ring);
    Polynomial h = p;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        bool reduced = false;
        for (size_t k = 0; k < G.size(); ++k) {
            if (G[k].is_zero()) continue;
            const Term& gt = G[k].leading_term();
            if (!gt.m.divides(lt.m)) continue;
            Monomial u = lt.m / gt.m;
            Rat c = lt.c / gt.c;
            h -= G[k].times_term(u, c);
            res.quotients[k] += Polynomial::term(ring, u, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t = Polynomial::term(ring, lt.m, lt.c);
            res.remainder += t;
            h -= t;
        }
    }
    return res;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G) {
    return divide(p, G).remainder;
}

namespace {

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

// normal strategy: lowest lcm degree, then term order on lcm, then indices
bool pair_before(const RingContext& R, const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = cmp_monomial(R, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

struct Engine {
    RingPtr ring;
    bool with_reps;
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> reps;  // basis[k] = sum reps[k][j] gens[j]
    std::deque<Pair> pairs;

    Engine(RingPtr r, bool track) : ring(std::move(r)), with_reps(track) {}

    void push_pairs_for(int n) {
        for (int i = 0; i < n; ++i) {
            const Monomial &a = basis[i].leading_monomial(), &b = basis[n].leading_monomial();
            if (Monomial::coprime(a, b)) continue;  // product criterion
            pairs.push_back({i, n, Monomial::lcm(a, b), Monomial::lcm(a, b).degree()});
        }
    }

    // Full reduction plus content normalization; rep updated alongside.
    void reduce_and_add(Polynomial h, std::vector<Polynomial> rep) {
        DivisionResult d = divide(h, basis);
        h = d.remainder;
        if (h.is_zero()) return;
        if (with_reps)
            for (size_t k = 0; k < basis.size(); ++k)
                for (size_t j = 0; j < rep.size(); ++j) rep[j] -= d.quotients[k] * reps[k][j];
        Rat c = h.content();
        h = h.scaled(Rat(1) / c);
        if (with_reps)
            for (Polynomial& r : rep) r = r.scaled(Rat(1) / c);
        basis.push_back(std::move(h));
        if (with_reps) reps.push_back(std::move(rep));
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    void run(const std::vector<Polynomial>& gens) {
        for (size_t j = 0; j < gens.size(); ++j) {
            if (gens[j].is_zero()) continue;
            std::vector<Polynomial> rep;
            if (with_reps) {
                rep.assign(gens.size(), Polynomial(ring));
                rep[j] = Polynomial::constant(ring, Rat(1));
            }
            reduce_and_add(gens[j], std::move(rep));
        }
        const RingContext& R = *ring;
        while (!pairs.empty()) {
            size_t best = 0;
            for (size_t k = 1; k < pairs.size(); ++k)
                if (pair_before(R, pairs[k], pairs[best])) best = k;
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + best);

            const Polynomial &f = basis[p.i], &g = basis[p.j];
            Monomial uf = p.lcm / f.leading_monomial();
            Monomial ug = p.lcm / g.leading_monomial();
            Polynomial s = f.times_term(uf, Rat(1) / f.leading_coeff()) -
                           g.times_term(ug, Rat(1) / g.leading_coeff());
            std::vector<Polynomial> rep;
            if (with_reps) {
                rep.assign(reps[p.i].size(), Polynomial(ring));
                for (size_t j = 0; j < rep.size(); ++j)
                    rep[j] = reps[p.i][j].times_term(uf, Rat(1) / f.leading_coeff()) -
                             reps[p.j][j].times_term(ug, Rat(1) / g.leading_coeff());
            }
            reduce_and_add(std::move(s), std::move(rep));
        }
        make_reduced();
    }

    void make_reduced() {
        const RingContext& R = *ring;
        // drop elements whose lead is divisible by another's lead
        std::vector<size_t> order(basis.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return cmp_monomial(R, basis[a].leading_monomial(), basis[b].leading_monomial()) < 0;
        });
        std::vector<Polynomial> kept;
        std::vector<std::vector<Polynomial>> kept_reps;
        for (size_t idx : order) {
            const Monomial& lm = basis[idx].leading_monomial();
            bool redundant = false;
            for (const Polynomial& h : kept)
                if (h.leading_monomial().divides(lm)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            kept.push_back(basis[idx]);
            if (with_reps) kept_reps.push_back(reps[idx]);
        }
        // tail-reduce each against the rest, then normalize monic
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(kept.size() - 1);
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            DivisionResult d = divide(kept[i], others);
            if (with_reps) {
                size_t oj = 0;
                for (size_t j = 0; j < kept.size(); ++j) {
                    if (j == i) continue;
                    for (size_t g = 0; g < kept_reps[i].size(); ++g)
                        kept_reps[i][g] -= d.quotients[oj] * kept_reps[j][g];
                    ++oj;
                }
            }
            kept[i] = d.remainder;
            Rat lc = kept[i].leading_coeff();
            kept[i] = kept[i].scaled(Rat(1) / lc);
            if (with_reps)
                for (Polynomial& r : kept_reps[i]) r = r.scaled(Rat(1) / lc);
        }
        basis = std::move(kept);
        reps = std::move(kept_reps);
    }
};

}  // namespace

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens) {
    Engine e(ring, false);
    e.run(gens);
    return GroebnerBasis(ring, std::move(e.basis));
}

GroebnerBasis buchberger(const GradedIdeal& I) { return buchberger(I.ring(), I.gens()); }

std::pair<GroebnerBasis, std::vector<std::vector<Polynomial>>> buchberger_with_reps(
    RingPtr ring, const std::vector<Polynomial>& gens) {
    Engine e(ring, true);
    e.run(gens);
    return {GroebnerBasis(ring, std::move(e.basis)), std::move(e.reps)};
}

bool is_reduced_basis(const GroebnerBasis& G) {
    const auto& els = G.elements();
    for (size_t i = 0; i < els.size(); ++i) {
        if (els[i].is_zero() || els[i].leading_coeff() != 1) return false;
        for (size_t j = 0; j < els.size(); ++j) {
            if (i == j) continue;
            for (const Term& t : els[i].terms())
                if (els[j].leading_monomial().divides(t.m)) return false;
        }
        if (i + 1 < els.size() &&
            cmp_monomial(*G.ring(), els[i].leading_monomial(), els[i + 1].leading_monomial()) >= 0)
            return false;
    }
    // every S-polynomial reduces to zero
    for (size_t i = 0; i < els.size(); ++i)
        for (size_t j = i + 1; j < els.size(); ++j) {
            Monomial l = Monomial::lcm(els[i].leading_monomial(), els[j].leading_monomial());
            Polynomial s = els[i].times_term(l / els[i].leading_monomial(), Rat(1)) -
                           els[j].times_term(l / els[j].leading_monomial(), Rat(1));
            if (!normal_form(s, els).is_zero()) return false;
        }
    return true;
}

bool ideal_contains(const GroebnerBasis& G, const Polynomial& p) {
    return normal_form(p, G.elements()).is_zero();
}

bool ideal_equal(const GradedIdeal& I, const GradedIdeal& J) {
    return buchberger(I) == buchberger(J);
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& g) {
    if (g.is_zero()) throw InternalError("division by zero polynomial");
    DivisionResult d = divide(p, {g});
    if (!d.remainder.is_zero()) throw InternalError("polynomial division is not exact");
    return d.quotients[0];
}

GradedIdeal canonical_ideal(RingPtr ring, const std::vector<Polynomial>& gens) {
    GroebnerBasis G = buchberger(ring, gens);
    std::vector<Polynomial> out;
    out.reserve(G.elements().size());
    for (const Polynomial& g : G.elements()) out.push_back(g.primitive_part());
    return GradedIdeal(std::move(ring), std::move(out));
}

namespace {

// fresh variable name not clashing with the ring's
std::string aux_name(const RingContext& R) {
    std::string name = "w";
    while (R.var_index(name) >= 0) name += "_";
    return name;
}

}  // namespace

std::vector<Polynomial> elimination_ideal(RingPtr ring, const std::vector<Polynomial>& gens,
                                          const std::vector<bool>& keep) {
    const int n = ring->nvars();
    if (static_cast<int>(keep.size()) != n) throw InternalError("keep mask arity mismatch");
    // permuted ring: eliminated variables first, block order
    std::vector<std::string> vars;
    std::vector<int> old_to_new(n, -1);
    for (int i = 0; i < n; ++i)
        if (!keep[i]) {
            old_to_new[i] = static_cast<int>(vars.size());
            vars.push_back(ring->vars[i]);
        }
    const int elim = static_cast<int>(vars.size());
    for (int i = 0; i < n; ++i)
        if (keep[i]) {
            old_to_new[i] = static_cast<int>(vars.size());
            vars.push_back(ring->vars[i]);
        }
    RingPtr block = make_ring(vars, elim);
    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (const Polynomial& g : gens) moved.push_back(g.transported(block, old_to_new));
    GroebnerBasis G = buchberger(block, moved);
    // elements free of the eliminated block generate the contraction
    std::vector<int> back(block->nvars(), -1);
    for (int i = 0; i < n; ++i) back[old_to_new[i]] = keep[i] ? i : -1;
    std::vector<Polynomial> out;
    for (const Polynomial& g : G.elements()) {
        bool pure = true;
        for (const Term& t : g.terms())
            for (int v = 0; v < elim && pure; ++v)
                if (t.m.e[v] > 0) pure = false;
        if (pure) out.push_back(g.transported(ring, back));
    }
    return out;
}

GradedIdeal intersect(const GradedIdeal& I, const GradedIdeal& J) {
    const RingPtr& ring = I.ring();
    if (I.is_zero() || J.is_zero()) return GradedIdeal(ring);
    const int n = ring->nvars();
    std::vector<std::string> vars;
    vars.push_back(aux_name(*ring));
    for (const std::string& v : ring->vars) vars.push_back(v);
    RingPtr ext = make_ring(vars, 1);
    std::vector<int> up(n);
    for (int i = 0; i < n; ++i) up[i] = i + 1;
    Polynomial u = Polynomial::variable(ext, 0);
    Polynomial one_minus_u = Polynomial::constant(ext, Rat(1)) - u;
    std::vector<Polynomial> egens;
    for (const Polynomial& f : I.gens()) egens.push_back(u * f.transported(ext, up));
    for (const Polynomial& g : J.gens()) egens.push_back(one_minus_u * g.transported(ext, up));
    std::vector<bool> keep(ext->nvars(), true);
    keep[0] = false;
    std::vector<Polynomial> inter = elimination_ideal(ext, egens, keep);
    std::vector<int> down(ext->nvars(), -1);
    for (int i = 0; i < n; ++i) down[i + 1] = i;
    std::vector<Polynomial> out;
    out.reserve(inter.size());
    for (const Polynomial& p : inter) out.push_back(p.transported(ring, down));
    return canonical_ideal(ring, out);
}

GradedIdeal ideal_quotient(const GradedIdeal& I, const Polynomial& g) {
    if (g.is_zero()) throw InputError("ideal quotient by zero");
    if (!g.is_homogeneous()) throw InputError("ideal quotient by non-homogeneous element");
    if (I.is_zero()) return GradedIdeal(I.ring());
    GradedIdeal gI(I.ring(), {g});
    GradedIdeal K = intersect(I, gI);
    std::vector<Polynomial> out;
    out.reserve(K.gens().size());
    for (const Polynomial& k : K.gens()) out.push_back(divide_exact(k, g));
    return canonical_ideal(I.ring(), out);
}

namespace {

// index of v when g is a scalar multiple of the variable x_v, else -1
int single_variable_index(const Polynomial& g) {
    if (g.is_zero() || g.terms().size() != 1 || g.degree() != 1) return -1;
    const std::vector<int>& e = g.terms()[0].m.e;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] == 1) return static_cast<int>(i);
    return -1;
}

// I : x_v^inf in one basis computation: under grevlex with x_v last, a lead
// term of a homogeneous element divisible by x_v forces every term to be,
// and stripping the maximal x_v power off each reduced-basis element yields
// a basis of the saturation.
GradedIdeal saturate_by_variable(const GradedIdeal& I, int v) {
    const RingPtr& ring = I.ring();
    const int n = ring->nvars();
    std::vector<std::string> vars;
    std::vector<int> up(n);
    for (int i = 0; i < n; ++i)
        if (i != v) {
            up[i] = static_cast<int>(vars.size());
            vars.push_back(ring->vars[i]);
        }
    up[v] = n - 1;
    vars.push_back(ring->vars[v]);
    RingPtr perm = make_ring(vars, 0);
    std::vector<Polynomial> moved;
    moved.reserve(I.gens().size());
    for (const Polynomial& f : I.gens()) moved.push_back(f.transported(perm, up));
    GroebnerBasis G = buchberger(perm, moved);
    std::vector<int> down(n);
    for (int i = 0; i < n; ++i) down[up[i]] = i;
    std::vector<Polynomial> out;
    out.reserve(G.elements().size());
    for (const Polynomial& p : G.elements()) {
        std::vector<Term> ts = p.terms();
        int strip = ts.front().m.e[n - 1];
        for (const Term& t : ts) strip = std::min(strip, t.m.e[n - 1]);
        if (strip > 0)
            for (Term& t : ts) t.m.e[n - 1] -= strip;
        out.push_back(Polynomial::from_terms(perm, std::move(ts)).transported(ring, down));
    }
    return canonical_ideal(ring, out);
}

}  // namespace

GradedIdeal saturate_by(const GradedIdeal& I, const Polynomial& g) {
    int v = single_variable_index(g);
    if (v >= 0 && !I.is_zero()) return saturate_by_variable(I, v);
    GradedIdeal cur = canonical_ideal(I.ring(), I.gens());
    for (int iter = 0; iter < 64; ++iter) {
        GradedIdeal next = ideal_quotient(cur, g);
        if (next == cur) return cur;
        cur = std::move(next);
    }
    throw InternalError("saturation did not stabilize");
}

GradedIdeal saturate_irrelevant(const GradedIdeal& I) {
    const RingPtr& ring = I.ring();
    if (I.is_zero()) return GradedIdeal(ring);
    std::optional<GradedIdeal> acc;
    for (int v = 0; v < ring->nvars(); ++v) {
        GradedIdeal s = saturate_by(I, Polynomial::variable(ring, v));
        acc = acc ? intersect(*acc, s) : std::move(s);
    }
    return canonical_ideal(ring, acc->gens());
}

}  // namespace k3smooth
