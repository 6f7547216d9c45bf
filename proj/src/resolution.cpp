#include "k3smooth/resolution.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "k3smooth/hilbert.hpp"

namespace k3smooth {
namespace {

// ---- module vectors ------------------------------------------------------

struct MTerm {
    int comp;
    Monomial m;
    Rat c;
};

// Terms are kept sorted by (component, exponent vector) purely for
// deterministic storage; the active module order is external.
struct MVec {
    std::vector<MTerm> terms;
    bool is_zero() const { return terms.empty(); }
};

using Key = std::pair<int, std::vector<int>>;

MVec mvec_from_map(const std::map<Key, Rat>& acc) {
    MVec v;
    for (const auto& [k, c] : acc)
        if (c != 0) v.terms.push_back({k.first, Monomial(k.second), c});
    return v;
}

std::map<Key, Rat> mvec_to_map(const MVec& v) {
    std::map<Key, Rat> acc;
    for (const auto& t : v.terms) acc[{t.comp, t.m.e}] = t.c;
    return acc;
}

// a + s*b
MVec mvec_add_scaled(const MVec& a, const MVec& b, const Rat& s) {
    auto acc = mvec_to_map(a);
    for (const auto& t : b.terms) acc[{t.comp, t.m.e}] += s * t.c;
    return mvec_from_map(acc);
}

MVec mvec_times_term(const MVec& v, const Monomial& m, const Rat& c) {
    MVec r;
    r.terms.reserve(v.terms.size());
    for (const auto& t : v.terms) r.terms.push_back({t.comp, t.m * m, t.c * c});
    return r;
}

MVec mvec_scale(const MVec& v, const Rat& s) {
    MVec r;
    r.terms.reserve(v.terms.size());
    for (const auto& t : v.terms) r.terms.push_back({t.comp, t.m, t.c * s});
    return r;
}

// ---- module monomial orders ------------------------------------------------

struct ModOrder {
    virtual ~ModOrder() = default;
    // > 0 iff (c1, m1) is the bigger module monomial
    virtual int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const = 0;
};

// ring order first, smaller component wins ties
struct BaseOrder final : ModOrder {
    const RingContext* ring;
    explicit BaseOrder(const RingContext* r) : ring(r) {}
    int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const override {
        int k = cmp_monomial(*ring, m1, m2);
        if (k != 0) return k;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }
};

// component dominant, smaller component bigger
struct PotOrder final : ModOrder {
    const RingContext* ring;
    explicit PotOrder(const RingContext* r) : ring(r) {}
    int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const override {
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return cmp_monomial(*ring, m1, m2);
    }
};

// order induced by the leads of the previous level's generators: compare
// images m * lead(comp) in the parent order, smaller index wins ties
struct SchreyerOrder final : ModOrder {
    const ModOrder* parent = nullptr;
    std::vector<std::pair<int, Monomial>> leads;
    int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const override {
        int k = parent->cmp(leads[c1].first, m1 * leads[c1].second, leads[c2].first,
                            m2 * leads[c2].second);
        if (k != 0) return k;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }
};

int lead_index(const MVec& v, const ModOrder& ord) {
    if (v.is_zero()) throw InternalError("lead of zero module vector");
    int best = 0;
    for (int i = 1; i < static_cast<int>(v.terms.size()); ++i)
        if (ord.cmp(v.terms[i].comp, v.terms[i].m, v.terms[best].comp, v.terms[best].m) > 0)
            best = i;
    return best;
}

MTerm mvec_lead(const MVec& v, const ModOrder& ord) { return v.terms[lead_index(v, ord)]; }

// integer coefficients with no common factor, lead coefficient positive
void mvec_make_primitive(MVec& v, std::vector<Polynomial>* rep, const ModOrder& ord) {
    if (v.is_zero()) return;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& t : v.terms) {
        num_gcd = gcd(num_gcd, Int(t.c.get_num()));
        den_lcm = lcm(den_lcm, Int(t.c.get_den()));
    }
    Rat s = make_rat(den_lcm, num_gcd);
    if (mvec_lead(v, ord).c * s < 0) s = -s;
    v = mvec_scale(v, s);
    if (rep)
        for (auto& p : *rep) p = p.scaled(s);
}

// ---- division --------------------------------------------------------------

struct MDiv {
    std::vector<Polynomial> quot;
    MVec rem;
};

MDiv mdivide(const RingPtr& ring, MVec v, const std::vector<MVec>& G, const ModOrder& ord) {
    MDiv out;
    out.quot.assign(G.size(), Polynomial::zero(ring));
    struct LeadInfo {
        int comp;
        Monomial m;
        Rat c;
    };
    std::vector<LeadInfo> gl;
    gl.reserve(G.size());
    for (const auto& g : G) {
        MTerm lt = mvec_lead(g, ord);
        gl.push_back({lt.comp, lt.m, lt.c});
    }
    std::map<Key, Rat> rem;
    while (!v.is_zero()) {
        const MTerm lt = mvec_lead(v, ord);
        bool reduced = false;
        for (size_t k = 0; k < G.size(); ++k) {
            if (gl[k].comp != lt.comp || !gl[k].m.divides(lt.m)) continue;
            Monomial u = lt.m / gl[k].m;
            Rat q = lt.c / gl[k].c;
            out.quot[k] += Polynomial::term(ring, u, q);
            v = mvec_add_scaled(v, mvec_times_term(G[k], u, q), Rat(-1));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem[{lt.comp, lt.m.e}] += lt.c;
            MVec single;
            single.terms.push_back(lt);
            v = mvec_add_scaled(v, single, Rat(-1));
        }
    }
    out.rem = mvec_from_map(rem);
    return out;
}

// ---- syzygy certificates ----------------------------------------------------

struct Cert {
    MVec tau;  // components index the generators it is a relation among
    int lead_comp;
    Monomial lead_mono;
    long deg;
};

// All-pairs S-vector reduction certificates of a basis G. When G is a
// Groebner basis every S-vector reduces to zero and the certificates
// generate the full relation module (and are a basis for it under the
// order induced by the leads of G).
std::vector<Cert> schreyer_certificates(const RingPtr& ring, const std::vector<MVec>& G,
                                        const std::vector<long>& gdeg, const ModOrder& ord) {
    std::vector<Cert> out;
    struct LeadInfo {
        int comp;
        Monomial m;
        Rat c;
    };
    std::vector<LeadInfo> gl;
    for (const auto& g : G) {
        MTerm lt = mvec_lead(g, ord);
        gl.push_back({lt.comp, lt.m, lt.c});
    }
    const int n = static_cast<int>(G.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (gl[i].comp != gl[j].comp) continue;
            Monomial L = Monomial::lcm(gl[i].m, gl[j].m);
            Monomial ui = L / gl[i].m;
            Monomial uj = L / gl[j].m;
            MVec S = mvec_add_scaled(mvec_times_term(G[i], ui, gl[j].c),
                                     mvec_times_term(G[j], uj, gl[i].c), Rat(-1));
            MDiv dv = mdivide(ring, S, G, ord);
            if (!dv.rem.is_zero())
                throw InternalError("S-vector failed to reduce over a claimed basis");
            std::map<Key, Rat> acc;
            acc[{i, ui.e}] += gl[j].c;
            acc[{j, uj.e}] -= gl[i].c;
            for (int k = 0; k < n; ++k)
                for (const Term& t : dv.quot[k].terms()) acc[{k, t.m.e}] -= t.c;
            Cert c;
            c.tau = mvec_from_map(acc);
            c.lead_comp = i;
            c.lead_mono = ui;
            c.deg = ui.degree() + gdeg[i];
            bool lead_present = false;
            for (const auto& t : c.tau.terms) {
                if (t.m.degree() + gdeg[t.comp] != c.deg)
                    throw InternalError("inhomogeneous syzygy certificate");
                if (t.comp == i && t.m == ui) lead_present = true;
            }
            if (!lead_present) throw InternalError("syzygy certificate lost its lead");
            out.push_back(c);
        }
    }
    return out;
}

// Keep only certificates with minimal leads, tail-reduce each against the
// others, and scale monic. Leaves a reduced basis of the relation module.
void inter_reduce(const RingPtr& ring, std::vector<Cert>& certs, const ModOrder& next_ord) {
    const int n = static_cast<int>(certs.size());
    std::vector<char> keep(n, 1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !keep[a] || !keep[b]) continue;
            if (certs[b].lead_comp != certs[a].lead_comp) continue;
            if (!certs[b].lead_mono.divides(certs[a].lead_mono)) continue;
            if (certs[b].lead_mono == certs[a].lead_mono && b > a) continue;
            keep[a] = 0;
        }
    std::vector<Cert> kept;
    for (int a = 0; a < n; ++a)
        if (keep[a]) kept.push_back(certs[a]);
    std::vector<Cert> result = kept;
    for (size_t a = 0; a < kept.size(); ++a) {
        std::vector<MVec> others;
        for (size_t b = 0; b < kept.size(); ++b)
            if (b != a) others.push_back(kept[b].tau);
        MVec r = mdivide(ring, kept[a].tau, others, next_ord).rem;
        MTerm lt = mvec_lead(r, next_ord);
        if (lt.comp != kept[a].lead_comp || lt.m != kept[a].lead_mono)
            throw InternalError("tail reduction moved a lead");
        result[a].tau = mvec_scale(r, Rat(1) / lt.c);
    }
    certs = std::move(result);
}

bool lex_greater(const Monomial& a, const Monomial& b) { return a.e > b.e; }

// ---- the chain of iterated syzygies ----------------------------------------

struct RawChain {
    std::vector<std::vector<MVec>> levels;
    std::vector<std::vector<long>> gdeg;
};

// Sort generators by (lead component, lead monomial lex-descending); with
// this arrangement each syzygy level drops the top remaining variable
// from its leads, so the chain ends within nvars steps.
void sort_level(std::vector<MVec>& gens, std::vector<long>& degs, const ModOrder& ord) {
    const int n = static_cast<int>(gens.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<MTerm> leads;
    for (const auto& g : gens) leads.push_back(mvec_lead(g, ord));
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (leads[a].comp != leads[b].comp) return leads[a].comp < leads[b].comp;
        return lex_greater(leads[a].m, leads[b].m);
    });
    std::vector<MVec> g2;
    std::vector<long> d2;
    for (int i : idx) {
        g2.push_back(gens[i]);
        d2.push_back(degs[i]);
    }
    gens = std::move(g2);
    degs = std::move(d2);
}

RawChain build_chain(const GroebnerBasis& G) {
    const RingPtr& ring = G.ring();
    RawChain ch;
    std::vector<std::unique_ptr<ModOrder>> ords;
    ords.push_back(std::make_unique<BaseOrder>(ring.get()));

    std::vector<MVec> lvl0;
    std::vector<long> deg0;
    for (const Polynomial& g : G.elements()) {
        std::map<Key, Rat> acc;
        for (const Term& t : g.terms()) acc[{0, t.m.e}] = t.c;
        lvl0.push_back(mvec_from_map(acc));
        deg0.push_back(g.degree());
    }
    sort_level(lvl0, deg0, *ords[0]);
    ch.levels.push_back(std::move(lvl0));
    ch.gdeg.push_back(std::move(deg0));

    for (int p = 0;; ++p) {
        auto certs = schreyer_certificates(ring, ch.levels[p], ch.gdeg[p], *ords[p]);
        if (certs.empty()) break;
        if (p + 1 > 4)
            throw InternalError("free resolution did not terminate within four syzygy steps");
        auto so = std::make_unique<SchreyerOrder>();
        so->parent = ords[p].get();
        for (const auto& g : ch.levels[p]) {
            MTerm lt = mvec_lead(g, *ords[p]);
            so->leads.emplace_back(lt.comp, lt.m);
        }
        inter_reduce(ring, certs, *so);
        std::vector<MVec> lvl;
        std::vector<long> deg;
        for (auto& c : certs) {
            lvl.push_back(std::move(c.tau));
            deg.push_back(c.deg);
        }
        sort_level(lvl, deg, *so);
        ords.push_back(std::move(so));
        ch.levels.push_back(std::move(lvl));
        ch.gdeg.push_back(std::move(deg));
    }
    return ch;
}

FreeResolution assemble(const RingPtr& ring, const RawChain& ch) {
    FreeResolution R;
    R.ring = ring;
    const int L = static_cast<int>(ch.levels.size());

    std::vector<std::vector<int>> perm(L);  // new position -> chain index
    for (int p = 0; p < L; ++p) {
        const auto& degs = ch.gdeg[p];
        std::vector<int> idx(degs.size());
        for (size_t i = 0; i < degs.size(); ++i) idx[i] = static_cast<int>(i);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return degs[a] < degs[b]; });
        perm[p] = idx;
        std::vector<int> twists;
        for (int i : idx) twists.push_back(static_cast<int>(-degs[i]));
        R.modules.emplace_back(twists);
    }

    auto poly_of_comp = [&](const MVec& v, int comp) {
        std::vector<Term> ts;
        for (const auto& t : v.terms)
            if (t.comp == comp) ts.push_back({t.m, t.c});
        return Polynomial::from_terms(ring, std::move(ts));
    };

    R.augmentation = GradedMap::zero(ring, R.modules[0], GradedFreeModule({0}));
    for (int j = 0; j < R.modules[0].rank(); ++j)
        R.augmentation.entries[0][j] = poly_of_comp(ch.levels[0][perm[0][j]], 0);
    R.augmentation.validate();

    for (int p = 1; p < L; ++p) {
        std::vector<int> inv(perm[p - 1].size());
        for (size_t i = 0; i < perm[p - 1].size(); ++i) inv[perm[p - 1][i]] = static_cast<int>(i);
        GradedMap M = GradedMap::zero(ring, R.modules[p], R.modules[p - 1]);
        for (int j = 0; j < R.modules[p].rank(); ++j) {
            const MVec& tau = ch.levels[p][perm[p][j]];
            for (size_t old = 0; old < perm[p - 1].size(); ++old)
                M.entries[inv[old]][j] = poly_of_comp(tau, static_cast<int>(old));
        }
        M.validate();
        R.maps.push_back(std::move(M));
    }
    R.minimal = false;
    return R;
}

// ---- minimization -----------------------------------------------------------

bool is_nonzero_constant(const Polynomial& p) { return !p.is_zero() && p.degree() == 0; }

void erase_at(std::vector<int>& v, int i) { v.erase(v.begin() + i); }

GradedFreeModule drop_summand(const GradedFreeModule& F, int i) {
    std::vector<int> tw = F.twists;
    erase_at(tw, i);
    return GradedFreeModule(tw);
}

// Split off the rank-one free summand exposed by the unit entry (i, j) of
// maps[p]; the complex stays exact with F_p and F_{p+1} each one smaller.
void cancel_pivot(FreeResolution& R, int p, int i, int j) {
    GradedMap& M = R.maps[p];
    const Rat c = M.entries[i][j].leading_coeff();
    const int nr = M.target.rank(), nc = M.source.rank();

    if (static_cast<size_t>(p + 1) < R.maps.size()) {
        GradedMap& N = R.maps[p + 1];
        for (int k = 0; k < N.source.rank(); ++k) {
            Polynomial acc = N.entries[j][k];
            for (int s = 0; s < nc; ++s)
                if (s != j) acc += M.entries[i][s].scaled(Rat(1) / c) * N.entries[s][k];
            if (!acc.is_zero()) throw InternalError("cancelled column still meets the next map");
        }
        N.entries.erase(N.entries.begin() + j);
        N.target = drop_summand(N.target, j);
    }

    GradedMap& P = (p == 0) ? R.augmentation : R.maps[p - 1];
    for (int r = 0; r < P.target.rank(); ++r) {
        Polynomial acc = P.entries[r][i];
        for (int q = 0; q < nr; ++q)
            if (q != i) acc += M.entries[q][j].scaled(Rat(1) / c) * P.entries[r][q];
        if (!acc.is_zero()) throw InternalError("cancelled row still meets the previous map");
    }
    for (int r = 0; r < P.target.rank(); ++r) P.entries[r].erase(P.entries[r].begin() + i);
    P.source = drop_summand(P.source, i);

    GradedMap M2 = GradedMap::zero(R.ring, drop_summand(M.source, j), drop_summand(M.target, i));
    int r2 = 0;
    for (int r = 0; r < nr; ++r) {
        if (r == i) continue;
        int s2 = 0;
        for (int s = 0; s < nc; ++s) {
            if (s == j) continue;
            M2.entries[r2][s2] =
                M.entries[r][s] - M.entries[r][j] * M.entries[i][s].scaled(Rat(1) / c);
            ++s2;
        }
        ++r2;
    }
    R.maps[p] = std::move(M2);

    R.modules[p] = R.maps[p].target;
    R.modules[p + 1] = R.maps[p].source;
    R.maps[p].validate();
    P.validate();
    if (static_cast<size_t>(p + 1) < R.maps.size()) R.maps[p + 1].validate();
}

void minimize_in_place(FreeResolution& R) {
    for (;;) {
        bool found = false;
        for (size_t p = 0; p < R.maps.size() && !found; ++p)
            for (int i = 0; i < R.maps[p].target.rank() && !found; ++i)
                for (int j = 0; j < R.maps[p].source.rank() && !found; ++j)
                    if (is_nonzero_constant(R.maps[p].entries[i][j])) {
                        cancel_pivot(R, static_cast<int>(p), i, j);
                        found = true;
                    }
        if (!found) break;
    }
    while (R.modules.size() > 1 && R.modules.back().rank() == 0) {
        R.modules.pop_back();
        R.maps.pop_back();
    }
    for (const auto& F : R.modules)
        if (F.rank() == 0) throw InternalError("minimization left an interior zero module");
    R.minimal = true;
}

}  // namespace

// ---- public interface --------------------------------------------------------

FreeResolution free_resolution(const GradedIdeal& I, bool want_minimal) {
    if (I.is_zero()) throw InputError("cannot resolve the zero ideal");
    GroebnerBasis G = buchberger(I);
    FreeResolution R = assemble(I.ring(), build_chain(G));
    if (want_minimal) minimize_in_place(R);
    return R;
}

FreeResolution minimize(FreeResolution res) {
    minimize_in_place(res);
    return res;
}

int FreeResolution::regularity_bound() const {
    int reg = 0;
    for (size_t p = 0; p < modules.size(); ++p)
        for (int i = 0; i < modules[p].rank(); ++i)
            reg = std::max(reg, -modules[p].twist(i) - static_cast<int>(p));
    return reg;
}

BettiTable FreeResolution::betti() const {
    BettiTable B;
    for (size_t p = 0; p < modules.size(); ++p) {
        B.twists.push_back(modules[p].twists);
        for (int tw : modules[p].twists) ++B.counts[{static_cast<int>(p), -tw}];
    }
    return B;
}

std::string BettiTable::str() const {
    std::ostringstream os;
    for (size_t p = 0; p < twists.size(); ++p) {
        os << "F" << p << " = ";
        if (twists[p].empty()) {
            os << "0";
        } else {
            size_t i = 0;
            bool first = true;
            while (i < twists[p].size()) {
                size_t j = i;
                while (j < twists[p].size() && twists[p][j] == twists[p][i]) ++j;
                if (!first) os << " + ";
                os << "S(" << twists[p][i] << ")";
                if (j - i > 1) os << "^" << (j - i);
                first = false;
                i = j;
            }
        }
        if (p + 1 < twists.size()) os << "\n";
    }
    return os.str();
}

bool verify_exactness(const FreeResolution& R, const GradedIdeal& I, int dlo, int dhi,
                      std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (R.modules.empty()) return fail("resolution has no modules");

    if (!R.maps.empty() && !is_zero_map(compose(R.augmentation, R.maps[0])))
        return fail("augmentation composed with the first map is nonzero");
    for (size_t p = 0; p + 1 < R.maps.size(); ++p)
        if (!is_zero_map(compose(R.maps[p], R.maps[p + 1])))
            return fail("consecutive maps do not compose to zero at level " + std::to_string(p));

    GroebnerBasis G = buchberger(I);
    const int K = static_cast<int>(R.maps.size());
    for (int d = dlo; d <= dhi; ++d) {
        std::vector<long> rk(K);
        for (int p = 0; p < K; ++p) rk[p] = rank_of_graded_piece(R.maps[p], d);
        long rk_aug = rank_of_graded_piece(R.augmentation, d);
        long dim_ideal = to_long(graded_piece_dimension(G, d));
        if (rk_aug != dim_ideal)
            return fail("degree " + std::to_string(d) + ": augmentation image has dimension " +
                        std::to_string(rk_aug) + ", ideal piece has " + std::to_string(dim_ideal));
        long dim0 = dim_of_graded_piece(*R.ring, R.modules[0], d);
        long im1 = K > 0 ? rk[0] : 0;
        if (dim0 - rk_aug != im1)
            return fail("degree " + std::to_string(d) + ": kernel/image mismatch at level 0");
        for (int p = 0; p < K; ++p) {
            long dimp = dim_of_graded_piece(*R.ring, R.modules[p + 1], d);
            long im_next = (p + 1 < K) ? rk[p + 1] : 0;
            if (dimp - rk[p] != im_next)
                return fail("degree " + std::to_string(d) + ": kernel/image mismatch at level " +
                            std::to_string(p + 1));
        }
    }
    return true;
}

bool verify_exactness(const FreeResolution& R, const GradedIdeal& I, std::string* why) {
    int lo = 0, hi = 0;
    for (const auto& F : R.modules)
        for (int tw : F.twists) {
            lo = std::min(lo, -tw);
            hi = std::max(hi, -tw);
        }
    return verify_exactness(R, I, lo - 1, hi + 6, why);
}

// ---- syzygies of explicit generators -----------------------------------------

namespace {

struct ModuleGB {
    std::vector<MVec> gb;
    std::vector<std::vector<Polynomial>> reps;  // gb[k] = sum_i reps[k][i] * input[i]
};

// Buchberger over a free module. The product criterion is unsound for
// module leads, so every same-component pair is reduced.
ModuleGB module_buchberger_with_reps(const RingPtr& ring, const std::vector<MVec>& inputs,
                                     const ModOrder& ord) {
    ModuleGB R;
    const int t = static_cast<int>(inputs.size());
    for (int k = 0; k < t; ++k) {
        if (inputs[k].is_zero()) throw InternalError("module basis computation on zero input");
        R.gb.push_back(inputs[k]);
        std::vector<Polynomial> rep(t, Polynomial::zero(ring));
        rep[k] = Polynomial::constant(ring, 1);
        R.reps.push_back(std::move(rep));
    }

    auto lead_of = [&](int k) { return mvec_lead(R.gb[k], ord); };
    std::vector<std::pair<int, int>> pairs;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i)
            if (lead_of(i).comp == lead_of(j).comp) pairs.emplace_back(i, j);
    };
    for (int j = 0; j < t; ++j) push_pairs_for(j);

    auto pair_key = [&](const std::pair<int, int>& pr) {
        Monomial L = Monomial::lcm(lead_of(pr.first).m, lead_of(pr.second).m);
        return std::make_tuple(L.degree(), lead_of(pr.first).comp, L.e, pr.first, pr.second);
    };

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pair_key(pairs[k]) < pair_key(pairs[best])) best = k;
        auto [i, j] = pairs[best];
        pairs.erase(pairs.begin() + best);

        MTerm li = lead_of(i), lj = lead_of(j);
        Monomial L = Monomial::lcm(li.m, lj.m);
        Monomial ui = L / li.m, uj = L / lj.m;
        MVec S = mvec_add_scaled(mvec_times_term(R.gb[i], ui, lj.c),
                                 mvec_times_term(R.gb[j], uj, li.c), Rat(-1));
        if (S.is_zero()) continue;
        MDiv dv = mdivide(ring, S, R.gb, ord);
        if (dv.rem.is_zero()) continue;

        std::vector<Polynomial> rep(t, Polynomial::zero(ring));
        Polynomial pi = Polynomial::term(ring, ui, lj.c);
        Polynomial pj = Polynomial::term(ring, uj, li.c);
        for (int a = 0; a < t; ++a) rep[a] = pi * R.reps[i][a] - pj * R.reps[j][a];
        for (size_t k = 0; k < R.gb.size(); ++k)
            if (!dv.quot[k].is_zero())
                for (int a = 0; a < t; ++a) rep[a] -= dv.quot[k] * R.reps[k][a];

        MVec r = dv.rem;
        mvec_make_primitive(r, &rep, ord);
        R.gb.push_back(std::move(r));
        R.reps.push_back(std::move(rep));
        push_pairs_for(static_cast<int>(R.gb.size()) - 1);
    }
    return R;
}

// Minimal generator selection: a generator is kept iff it is independent
// of lower-degree multiples and of the already-kept generators of its own
// degree, checked by exact row reduction degree by degree.
std::vector<int> minimal_generator_indices(const RingPtr& ring, const GradedFreeModule& host,
                                           const std::vector<MVec>& gens) {
    std::vector<long> deg(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].is_zero()) throw InternalError("minimal generator scan on zero vector");
        long d0 = gens[k].terms[0].m.degree() - host.twist(gens[k].terms[0].comp);
        for (const auto& t : gens[k].terms)
            if (t.m.degree() - host.twist(t.comp) != d0)
                throw InternalError("minimal generator scan on inhomogeneous vector");
        deg[k] = d0;
    }
    std::vector<long> degrees(deg);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    std::vector<int> kept;
    for (long d : degrees) {
        PieceBasis basis = graded_piece_basis_of_module(*ring, host, static_cast<int>(d));
        std::map<Key, long> col;
        for (size_t k = 0; k < basis.elems.size(); ++k)
            col[{basis.elems[k].first, basis.elems[k].second.e}] = static_cast<long>(k);
        const long ncols = static_cast<long>(basis.elems.size());

        std::map<long, std::vector<Rat>> pivots;
        auto insert_row = [&](std::vector<Rat> v) -> bool {
            for (const auto& [pc, row] : pivots) {
                if (v[pc] == 0) continue;
                Rat f = v[pc];
                for (long c = 0; c < ncols; ++c) v[c] -= f * row[c];
            }
            for (long c = 0; c < ncols; ++c)
                if (v[c] != 0) {
                    Rat f = v[c];
                    for (long c2 = 0; c2 < ncols; ++c2) v[c2] /= f;
                    pivots.emplace(c, std::move(v));
                    return true;
                }
            return false;
        };
        auto coords_of = [&](const MVec& v, const Monomial& mult) {
            std::vector<Rat> row(ncols, Rat(0));
            for (const auto& t : v.terms) {
                auto it = col.find({t.comp, (t.m * mult).e});
                if (it == col.end()) throw InternalError("graded piece misses a product monomial");
                row[it->second] += t.c;
            }
            return row;
        };

        for (size_t k = 0; k < gens.size(); ++k) {
            if (deg[k] >= d) continue;
            for (const Monomial& mu : graded_piece_basis(*ring, static_cast<int>(d - deg[k])))
                insert_row(coords_of(gens[k], mu));
        }
        Monomial one = Monomial::one(ring->nvars());
        for (size_t k = 0; k < gens.size(); ++k) {
            if (deg[k] != d) continue;
            if (insert_row(coords_of(gens[k], one))) kept.push_back(static_cast<int>(k));
        }
    }
    return kept;
}

}  // namespace

GradedMap syzygies(const GradedMap& phi) {
    phi.validate();
    const RingPtr& ring = phi.ring;
    const int t = phi.source.rank();

    std::vector<MVec> cols;
    for (int j = 0; j < t; ++j) {
        std::map<Key, Rat> acc;
        for (int i = 0; i < phi.target.rank(); ++i)
            for (const Term& tm : phi.entries[i][j].terms()) acc[{i, tm.m.e}] = tm.c;
        MVec v = mvec_from_map(acc);
        if (v.is_zero()) throw InputError("syzygies: zero column");
        cols.push_back(std::move(v));
    }

    GradedMap psi = GradedMap::zero(ring, GradedFreeModule(), phi.source);
    if (t == 0) return psi;

    PotOrder ord(ring.get());
    ModuleGB M = module_buchberger_with_reps(ring, cols, ord);

    std::vector<long> gdeg(M.gb.size());
    for (size_t k = 0; k < M.gb.size(); ++k) {
        const MTerm& t0 = M.gb[k].terms[0];
        gdeg[k] = t0.m.degree() - phi.target.twist(t0.comp);
    }
    std::vector<Cert> certs = schreyer_certificates(ring, M.gb, gdeg, ord);

    std::vector<MVec> sig;
    std::vector<long> sig_deg;
    for (const Cert& c : certs) {
        std::vector<Polynomial> sigma(t, Polynomial::zero(ring));
        for (const auto& term : c.tau.terms)
            for (int a = 0; a < t; ++a)
                sigma[a] += M.reps[term.comp][a].times_term(term.m, term.c);
        std::map<Key, Rat> acc;
        for (int a = 0; a < t; ++a)
            for (const Term& tm : sigma[a].terms()) acc[{a, tm.m.e}] = tm.c;
        MVec v = mvec_from_map(acc);
        if (v.is_zero()) continue;
        sig.push_back(std::move(v));
        sig_deg.push_back(c.deg);
    }

    std::vector<int> kept = minimal_generator_indices(ring, phi.source, sig);

    std::vector<int> tw;
    for (int k : kept) tw.push_back(static_cast<int>(-sig_deg[k]));
    psi = GradedMap::zero(ring, GradedFreeModule(tw), phi.source);
    for (size_t c = 0; c < kept.size(); ++c) {
        std::vector<std::vector<Term>> per_comp(t);
        for (const auto& term : sig[kept[c]].terms) per_comp[term.comp].push_back({term.m, term.c});
        for (int a = 0; a < t; ++a)
            psi.entries[a][c] = Polynomial::from_terms(ring, std::move(per_comp[a]));
    }
    psi.validate();
    if (!is_zero_map(compose(phi, psi))) throw InternalError("syzygy result is not a relation");
    return psi;
}

GradedMap syzygies(RingPtr ring, const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw InputError("syzygies: empty generator list");
    std::vector<Polynomial> sorted = gens;
    for (const Polynomial& g : sorted) {
        if (g.is_zero()) throw InputError("syzygies: zero generator");
        if (!g.is_homogeneous()) throw InputError("syzygies: generators must be homogeneous");
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    std::vector<int> tw;
    for (const Polynomial& g : sorted) tw.push_back(-g.degree());
    GradedMap phi = GradedMap::zero(ring, GradedFreeModule(tw), GradedFreeModule({0}));
    for (size_t j = 0; j < sorted.size(); ++j) phi.entries[0][j] = sorted[j];
    phi.validate();
    return syzygies(phi);
}

}  // namespace k3smooth
