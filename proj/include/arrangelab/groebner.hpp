#ifndef ARRANGELAB_GROEBNER_HPP
#define ARRANGELAB_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "arrangelab/exterior.hpp"
#include "arrangelab/limits.hpp"
#include "arrangelab/series.hpp"

namespace arrangelab {

/// Groebner basis of an ideal in the exterior algebra, in the deglex order of
/// the variable table.  Elements are monic, fully interreduced, and sorted by
/// leading monomial, so the representation is canonical for the ideal.
struct GroebnerBasis {
    VarTablePtr vars;
    std::vector<ExtPoly> elements;
    bool reduced_to_quadratic = false;

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(elements.size());
        for (const ExtPoly& g : elements)
            out.push_back(g.leading().mono);
        return out;
    }
};

// Full reduction: the remainder is supported on monomials not divisible by
// any leading monomial of the basis.  Deterministic: the reducer is the
// first divisor in the stored order.
inline ExtPoly normal_form(const ExtPoly& f, const std::vector<ExtPoly>& basis) {
    ExtPoly work = f;
    std::vector<Term> done;
    while (!work.is_zero()) {
        const Term& lt = work.leading();
        const ExtPoly* red = nullptr;
        for (const ExtPoly& g : basis)
            if (!g.is_zero() && lt.mono.contains(g.leading().mono)) {
                red = &g;
                break;
            }
        if (!red) {
            done.push_back(lt);
            work = work - ExtPoly::monomial(work.vars(), lt.mono, lt.coeff);
            continue;
        }
        Monomial u = lt.mono.minus(red->leading().mono);
        int s = merge_sign(u, red->leading().mono);
        Rational factor = lt.coeff / (s > 0 ? red->leading().coeff : -red->leading().coeff);
        work = work - mono_times(u, factor, *red);
    }
    return ExtPoly::from_sorted_terms(f.vars(), std::move(done));
}

inline ExtPoly normal_form(const ExtPoly& f, const GroebnerBasis& gb) { return normal_form(f, gb.elements); }

namespace detail {

struct Pair {
    Monomial lcm;
    int i;
    int j; // j == -1: self overlap of i with variable `var`
    int var = -1;
};

inline bool pair_less(const Pair& a, const Pair& b) {
    int c = compare_deglex(a.lcm, b.lcm);
    if (c != 0)
        return c < 0;
    if (a.i != b.i)
        return a.i < b.i;
    if (a.j != b.j)
        return a.j < b.j;
    return a.var < b.var;
}

} // namespace detail

/// Buchberger completion in the exterior algebra.  Besides the usual S-pairs
/// this processes the self overlaps v*f for every variable v in In(f), which
/// play the role of S-pairs against the square-zero relations.  The result is
/// the reduced basis, canonical for the ideal and the order.
inline GroebnerBasis buchberger(const std::vector<ExtPoly>& gens, const Limits& limits = {}) {
    VarTablePtr vars;
    for (const ExtPoly& g : gens)
        if (g.vars()) {
            if (vars && g.vars() != vars)
                throw VarTableMismatch();
            vars = g.vars();
        }
    GroebnerBasis gb;
    gb.vars = vars;
    std::vector<ExtPoly>& G = gb.elements;

    std::vector<detail::Pair> queue; // min-heap under pair_less
    auto heap_cmp = [](const detail::Pair& a, const detail::Pair& b) { return detail::pair_less(b, a); };
    auto push_pairs = [&](int idx) {
        const Monomial& m = G[idx].leading().mono;
        for (int k = 0; k < idx; ++k) {
            detail::Pair p;
            p.lcm = m.unite(G[k].leading().mono);
            p.i = k;
            p.j = idx;
            queue.push_back(p);
            std::push_heap(queue.begin(), queue.end(), heap_cmp);
        }
        m.for_each_var([&](int v) {
            detail::Pair p;
            p.lcm = m; // v already divides m
            p.i = idx;
            p.j = -1;
            p.var = v;
            queue.push_back(p);
            std::push_heap(queue.begin(), queue.end(), heap_cmp);
        });
    };

    auto add_element = [&](ExtPoly h) {
        Rational lc = h.leading().coeff;
        h = Rational(1) / lc * h;
        G.push_back(std::move(h));
        push_pairs(static_cast<int>(G.size()) - 1);
    };

    for (const ExtPoly& g : gens) {
        ExtPoly r = normal_form(g, G);
        if (!r.is_zero())
            add_element(std::move(r));
    }

    std::size_t processed = 0;
    while (!queue.empty()) {
        if (++processed > limits.max_pairs)
            throw CapExceeded("buchberger pair budget");
        std::pop_heap(queue.begin(), queue.end(), heap_cmp);
        detail::Pair p = queue.back();
        queue.pop_back();

        ExtPoly s;
        if (p.j < 0) {
            Monomial v = Monomial::var(p.var);
            s = mono_times(v, 1, G[p.i]);
        } else {
            const ExtPoly& f = G[p.i];
            const ExtPoly& g = G[p.j];
            Monomial uf = p.lcm.minus(f.leading().mono);
            Monomial ug = p.lcm.minus(g.leading().mono);
            int sf = merge_sign(uf, f.leading().mono);
            int sg = merge_sign(ug, g.leading().mono);
            s = mono_times(uf, Rational(sf), f) - mono_times(ug, Rational(sg), g);
        }
        ExtPoly r = normal_form(s, G);
        if (!r.is_zero())
            add_element(std::move(r));
    }

    // Interreduce to the unique reduced basis: drop elements whose leading
    // monomial is divisible by another, then tail-reduce everything.
    std::vector<ExtPoly> keep;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j)
                continue;
            const Monomial& mi = G[i].leading().mono;
            const Monomial& mj = G[j].leading().mono;
            if (mi.contains(mj) && (mi != mj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            keep.push_back(G[i]);
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::vector<ExtPoly> others;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (j != i)
                others.push_back(keep[j]);
        ExtPoly r = normal_form(keep[i], others);
        keep[i] = Rational(1) / r.leading().coeff * r;
    }
    std::sort(keep.begin(), keep.end(),
              [](const ExtPoly& a, const ExtPoly& b) { return deglex_less(a.leading().mono, b.leading().mono); });
    gb.elements = std::move(keep);
    return gb;
}

/// The reduced basis already has the minimal generators of In(I) as leading
/// monomials, so it is quadratic exactly when the ideal admits a quadratic
/// basis in this order.  Fails with the smallest degree of an irreducible
/// element otherwise.
inline GroebnerBasis reduce_to_quadratic(const GroebnerBasis& gb) {
    int bad = 0;
    for (const ExtPoly& g : gb.elements) {
        int d = g.degree();
        if (d > 2 && (bad == 0 || d < bad))
            bad = d;
    }
    if (bad)
        throw NotQuadraticError(bad);
    GroebnerBasis out = gb;
    out.reduced_to_quadratic = true;
    return out;
}

/// Monomials not divisible by any leading monomial, grouped by degree
/// 0..max_deg.  Standard monomials are closed under divisors, so depth-first
/// extension by ascending variable rank visits them all.
inline std::vector<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb, int max_deg,
                                                             const Limits& limits = {}) {
    const int n = gb.vars ? gb.vars->size() : 0;
    if (max_deg < 0)
        max_deg = n;
    std::vector<std::vector<Monomial>> out(max_deg + 1);
    auto lead = gb.leading_monomials();
    for (const Monomial& m : lead)
        if (m.empty())
            return out; // ideal contains a unit: quotient is zero
    std::size_t count = 0;
    auto extend = [&](auto&& self, const Monomial& m, int from) -> void {
        out[m.degree()].push_back(m);
        if (++count > limits.max_intermediate)
            throw SizeLimitExceeded("standard monomial enumeration");
        if (m.degree() == max_deg)
            return;
        for (int v = from; v < n; ++v) {
            Monomial m2 = m.unite(Monomial::var(v));
            bool divisible = false;
            for (const Monomial& l : lead)
                if (m2.contains(l)) {
                    divisible = true;
                    break;
                }
            if (!divisible)
                self(self, m2, v + 1);
        }
    };
    extend(extend, Monomial{}, 0);
    return out;
}

// Coefficient k counts the standard monomials of degree k.
inline TruncatedSeries hilbert_series(const GroebnerBasis& gb, int truncation, const Limits& limits = {}) {
    const int n = gb.vars ? gb.vars->size() : 0;
    auto std_mons = standard_monomials(gb, std::min(truncation, n), limits);
    TruncatedSeries s(truncation);
    for (int d = 0; d < static_cast<int>(std_mons.size()) && d <= truncation; ++d)
        s.set(d, Int(std_mons[d].size()));
    return s;
}

} // namespace arrangelab

#endif
