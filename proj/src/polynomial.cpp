#include "k3smooth/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace k3smooth {

Polynomial Polynomial::constant(RingPtr ring, const Rat& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial::one(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int var) {
    if (var < 0 || var >= ring->nvars()) throw InternalError("variable index out of range");
    Monomial m = Monomial::one(ring->nvars());
    m.e[var] = 1;
    Polynomial p(ring);
    p.terms_.push_back({std::move(m), Rat(1)});
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rat& c) {
    if (m.nvars() != ring->nvars()) throw InternalError("monomial/ring arity mismatch");
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    const RingContext& R = *ring_;
    for (const Term& t : terms_)
        if (t.m.nvars() != R.nvars()) throw InternalError("monomial/ring arity mismatch");
    std::sort(terms_.begin(), terms_.end(), [&R](const Term& a, const Term& b) {
        return cmp_monomial(R, a.m, b.m) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c += t.c;
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw InternalError("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().m.degree();
    for (const Term& t : terms_)
        if (t.m.degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    const RingContext& R = *ring_;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp_monomial(R, terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].c + o.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Monomial& m, const Rat& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    // Accumulate into an order-keyed map; term order is a total order,
    // so the result is canonical by construction.
    const RingContext& R = *ring_;
    auto cmp = [&R](const Monomial& a, const Monomial& b) { return cmp_monomial(R, a, b) > 0; };
    std::map<Monomial, Rat, decltype(cmp)> acc(cmp);
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) acc[a.m * b.m] += a.c * b.c;
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, std::move(c)});
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw InternalError("negative power");
    Polynomial r = Polynomial::constant(ring_, Rat(1));
    Polynomial base(*this);
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_->vars != o.ring_->vars) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw InternalError("variable index out of range");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        int e = t.m.e[var];
        if (e == 0) continue;
        Term d = t;
        d.m.e[var] = e - 1;
        d.c *= e;
        out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
}

Rat Polynomial::content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const Term& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Rat c = make_rat(num_gcd, den_lcm);
    if (leading_coeff() < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(Rat(1) / content());
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(Rat(1) / leading_coeff());
}

Polynomial Polynomial::substituted(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw InternalError("substitution arity mismatch");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    // Power cache per variable, built on demand.
    std::vector<std::vector<Polynomial>> pw(images.size());
    auto power = [&](int v, int e) -> const Polynomial& {
        auto& cache = pw[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, Rat(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    Polynomial acc(target);
    for (const Term& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.c);
        for (int v = 0; v < ring_->nvars(); ++v)
            if (t.m.e[v] > 0) prod = prod * power(v, t.m.e[v]);
        acc += prod;
    }
    return acc;
}

Polynomial Polynomial::transported(const RingPtr& new_ring, const std::vector<int>& old_to_new) const {
    if (static_cast<int>(old_to_new.size()) != ring_->nvars())
        throw InternalError("transport map arity mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = Monomial::one(new_ring->nvars());
        for (int v = 0; v < ring_->nvars(); ++v) {
            if (t.m.e[v] == 0) continue;
            if (old_to_new[v] < 0) throw InternalError("transport drops a live variable");
            m.e[old_to_new[v]] += t.m.e[v];
        }
        out.push_back({std::move(m), t.c});
    }
    return from_terms(new_ring, std::move(out));
}

namespace {

void render_monomial(std::ostringstream& os, const RingContext& R, const Monomial& m,
                     bool lead_star) {
    bool first = !lead_star;
    for (int v = 0; v < R.nvars(); ++v) {
        if (m.e[v] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << R.vars[v];
        if (m.e[v] > 1) os << '^' << m.e[v];
    }
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rat a = t.c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? '-' : '+');
            if (a < 0) a = -a;
        }
        first = false;
        if (t.m.is_one()) {
            os << rat_str(a);
        } else if (a == 1) {
            render_monomial(os, *ring_, t.m, false);
        } else {
            os << rat_str(a);
            render_monomial(os, *ring_, t.m, true);
        }
    }
    return os.str();
}

int cmp_polynomial(const Polynomial& a, const Polynomial& b) {
    const RingContext& R = *a.ring();
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
        int c = cmp_monomial(R, ta[i].m, tb[i].m);
        if (c != 0) return c;
        if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

namespace {

void enumerate_exponents(int nvars, int var, int remaining, std::vector<int>& cur,
                         std::vector<Monomial>& out) {
    if (var == nvars - 1) {
        cur[var] = remaining;
        out.push_back(Monomial(cur));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[var] = e;
        enumerate_exponents(nvars, var + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Monomial> graded_piece_basis(const RingContext& ring, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<int> cur(ring.nvars(), 0);
    enumerate_exponents(ring.nvars(), 0, d, cur, out);
    std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) {
        return cmp_monomial(ring, a, b) > 0;
    });
    return out;
}

bool euler_relation_check(const Polynomial& f) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw InputError("euler relation requires homogeneous input");
    const RingPtr& R = f.ring();
    Polynomial acc(R);
    for (int v = 0; v < R->nvars(); ++v)
        acc += Polynomial::variable(R, v) * f.derivative(v);
    return acc == f.scaled(Rat(f.degree()));
}

}  // namespace k3smooth
