#include "k3smooth/hilbert.hpp"

#include <algorithm>

namespace k3smooth {

namespace {

using Poly1 = std::vector<Int>;  // univariate integer polynomial in T

void add_scaled_shifted(Poly1& dst, const Poly1& src, int shift, int sign) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, Int(0));
    for (size_t i = 0; i < src.size(); ++i) dst[i + shift] += sign * src[i];
}

void trim(Poly1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e < b.e;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& k : out)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

// numerator of the Hilbert series of S/(gens) over (1-T)^n, by the colon
// recursion N(L + m) = N(L) - T^deg(m) N(L : m)
Poly1 series_numerator(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {Int(1)};
    std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
    const Monomial& m = gens.back();
    Poly1 left = series_numerator(rest);
    std::vector<Monomial> colon;
    colon.reserve(rest.size());
    for (const Monomial& l : rest) {
        Monomial q = l;
        for (size_t v = 0; v < q.e.size(); ++v) q.e[v] = std::max(0, l.e[v] - m.e[v]);
        colon.push_back(std::move(q));
    }
    Poly1 right = series_numerator(minimalize(std::move(colon)));
    add_scaled_shifted(left, right, m.degree(), -1);
    trim(left);
    return left;
}

}  // namespace

Int HilbertData::hilbert_function(int d) const {
    Int acc(0);
    const int n = ring->nvars();
    for (size_t e = 0; e < numerator.size(); ++e)
        if (numerator[e] != 0) acc += numerator[e] * monomial_count(d - static_cast<int>(e), n);
    return acc;
}

Rat HilbertData::hilbert_polynomial(int d) const {
    Rat acc(0), p(1);
    for (const Rat& c : hp_coeffs) {
        acc += c * p;
        p *= d;
    }
    return acc;
}

HilbertData hilbert_data(const GroebnerBasis& G) {
    HilbertData out;
    out.ring = G.ring();
    const int n = out.ring->nvars();
    out.lead_monomials = minimalize(G.lead_monomials());
    out.numerator = series_numerator(out.lead_monomials);
    const int num_deg = static_cast<int>(out.numerator.size()) - 1;
    out.regularity_bound = std::max(0, num_deg - (n - 1));

    // exact interpolation of the function at regularity_bound + {0..n-1};
    // from the regularity bound on the function is a polynomial of degree
    // below n, so n points determine it
    std::vector<Rat> coeffs(n, Rat(0));
    {
        std::vector<int> xs(n);
        std::vector<Rat> ys(n);
        for (int k = 0; k < n; ++k) {
            xs[k] = out.regularity_bound + k;
            ys[k] = Rat(out.hilbert_function(xs[k]));
        }
        // Lagrange basis, expanded to coefficients
        for (int k = 0; k < n; ++k) {
            std::vector<Rat> basis{Rat(1)};
            Rat denom(1);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                // multiply basis by (d - xs[j])
                std::vector<Rat> next(basis.size() + 1, Rat(0));
                for (size_t i = 0; i < basis.size(); ++i) {
                    next[i + 1] += basis[i];
                    next[i] -= basis[i] * xs[j];
                }
                basis = std::move(next);
                denom *= Rat(xs[k] - xs[j]);
            }
            for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += ys[k] * basis[i] / denom;
        }
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    out.hp_coeffs = coeffs;

    if (coeffs.empty()) {
        out.empty_scheme = true;
        out.scheme_dimension = -1;
        out.scheme_degree = 0;
    } else {
        out.empty_scheme = false;
        out.scheme_dimension = static_cast<int>(coeffs.size()) - 1;
        Rat lead = coeffs.back();
        Int fact(1);
        for (int k = 2; k <= out.scheme_dimension; ++k) fact *= k;
        Rat deg = lead * fact;
        if (deg.get_den() != 1 || deg <= 0)
            throw InternalError("scheme degree is not a positive integer");
        out.scheme_degree = deg.get_num();
    }
    return out;
}

Int graded_piece_dimension(const GroebnerBasis& G, int d) {
    HilbertData hd = hilbert_data(G);
    return monomial_count(d, G.ring()->nvars()) - hd.hilbert_function(d);
}

Int count_standard_monomials(const RingContext& ring, const std::vector<Monomial>& leads, int d) {
    Int count(0);
    for (const Monomial& m : graded_piece_basis(ring, d)) {
        bool divisible = false;
        for (const Monomial& l : leads)
            if (l.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
    }
    return count;
}

}  // namespace k3smooth
