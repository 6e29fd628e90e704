#ifndef ARRANGELAB_MODELS_HPP
#define ARRANGELAB_MODELS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arrangelab/exterior.hpp"
#include "arrangelab/graph.hpp"
#include "arrangelab/groebner.hpp"

namespace arrangelab {

// ---------------------------------------------------------------------------
// Curve types
// ---------------------------------------------------------------------------

enum class CurveKind { Rational, Toric, Projective };

struct CurveType {
    CurveKind kind = CurveKind::Rational;
    int genus = 0; // >= 1 for Projective

    static CurveType rational() { return {CurveKind::Rational, 0}; }
    static CurveType toric() { return {CurveKind::Toric, 0}; }
    static CurveType projective(int genus) {
        if (genus < 1)
            throw GenusZeroUnsupported();
        return {CurveKind::Projective, genus};
    }

    // "rational" | "toric" | "genus:G"
    static CurveType parse(const std::string& s) {
        if (s == "rational")
            return rational();
        if (s == "toric")
            return toric();
        if (s.rfind("genus:", 0) == 0) {
            int g = 0;
            try {
                g = std::stoi(s.substr(6));
            } catch (...) {
                throw ParseError("bad curve '" + s + "'");
            }
            return projective(g);
        }
        throw ParseError("bad curve '" + s + "' (expected rational, toric, or genus:G)");
    }

    std::string str() const {
        switch (kind) {
        case CurveKind::Rational:
            return "rational";
        case CurveKind::Toric:
            return "toric";
        default:
            return "genus:" + std::to_string(genus);
        }
    }

    friend bool operator==(const CurveType&, const CurveType&) = default;
};

// ---------------------------------------------------------------------------
// DGA presentations
// ---------------------------------------------------------------------------

// Role of a generator in an arrangement model.  `index` is the cohomology
// index i for point classes (1..genus; 0 in the toric case) and unused for
// edge classes.
struct GenInfo {
    enum Kind { X, Y, G } kind;
    int index;  // genus index for X/Y
    int vertex; // vertex rank for X/Y
    int edge;   // edge rank for G
};

/// Presentation of a model: degree-1 generators with weights, the relation
/// ideal, and the differential on generators (extended by Leibniz).  All four
/// builders below emit zero differentials except the projective ones.
struct DgaPresentation {
    VarTablePtr vars;
    std::vector<ExtPoly> relations;
    std::vector<ExtPoly> differential; // indexed by generator rank
    std::vector<GenInfo> info;         // indexed by generator rank
    OrderedGraph graph;
    CurveType curve;

    ExtPoly d_of_generator(int rank) const { return differential[rank]; }
};

// Leibniz extension of the generator differential; no reduction.
inline ExtPoly leibniz_d(const DgaPresentation& p, const ExtPoly& f) {
    ExtPoly out = ExtPoly::zero(p.vars);
    for (const Term& t : f.terms()) {
        int position = 0; // variables visited, ascending
        ExtPoly term_d = ExtPoly::zero(p.vars);
        t.mono.for_each_var([&](int v) {
            const ExtPoly& dv = p.differential[v];
            if (!dv.is_zero()) {
                Monomial rest = t.mono.minus(Monomial::var(v));
                Rational sign = position % 2 == 0 ? 1 : -1;
                term_d += mono_times(rest, sign, dv);
            }
            ++position;
        });
        out += t.coeff * term_d;
    }
    return out;
}

namespace detail {

// partial(g_C) = sum_j (-1)^(j-1) g_{e_1} ... omit e_j ... g_{e_k} over the
// circuit's edges in increasing order.
inline ExtPoly circuit_boundary(const VarTablePtr& vars, const std::vector<int>& edge_ranks, EdgeSet circuit,
                                const OrderedGraph& g) {
    std::vector<int> edges;
    for (int e = 0; e < g.n_edges(); ++e)
        if (circuit >> e & 1)
            edges.push_back(e);
    ExtPoly out = ExtPoly::zero(vars);
    for (std::size_t j = 0; j < edges.size(); ++j) {
        Monomial m;
        for (std::size_t k = 0; k < edges.size(); ++k)
            if (k != j)
                m = m.unite(Monomial::var(edge_ranks[edges[k]]));
        out += ExtPoly::monomial(vars, m, j % 2 == 0 ? 1 : -1);
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Orlik-Solomon model (C): generators g_e, relations partial(g_C), d = 0.
// ---------------------------------------------------------------------------

inline DgaPresentation build_orlik_solomon(const OrderedGraph& g, const Limits& limits = {}) {
    DgaPresentation p;
    p.graph = g;
    p.curve = CurveType::rational();
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<int> edge_rank(g.n_edges());
    for (int e = 0; e < g.n_edges(); ++e) {
        edge_rank[e] = static_cast<int>(names.size());
        names.push_back("g_" + g.label(g.edge(e).tail) + "_" + g.label(g.edge(e).head));
        weights.push_back(1);
        p.info.push_back({GenInfo::G, 0, -1, e});
    }
    p.vars = make_vars(names, weights);
    for (EdgeSet c : circuits(g, limits))
        p.relations.push_back(detail::circuit_boundary(p.vars, edge_rank, c, g));
    p.differential.assign(p.vars->size(), ExtPoly::zero(p.vars));
    return p;
}

// ---------------------------------------------------------------------------
// Toric model (C^x): generators x_v and g_e interleaved so that
// x_{h(e)} < g_e < x_{h(e)+1}; relations of types (ia)/(ib) per circuit and
// (x_{h(e)} - x_{t(e)}) g_e per edge; d = 0.
// ---------------------------------------------------------------------------

namespace detail {

struct ToricVars {
    VarTablePtr vars;
    std::vector<int> x_rank;    // per vertex
    std::vector<int> edge_rank; // per edge
};

// Oriented traversal of circuit \ {base}: walk from t(base) to h(base).
// Returns for each non-base edge whether it is traversed with its arrow.
inline std::vector<std::pair<int, bool>> circuit_walk(const OrderedGraph& g, EdgeSet circuit, int base) {
    std::vector<int> edges;
    for (int e = 0; e < g.n_edges(); ++e)
        if ((circuit >> e & 1) && e != base)
            edges.push_back(e);
    int start = g.edge(base).tail, goal = g.edge(base).head;
    std::vector<std::pair<int, bool>> walk;
    std::vector<bool> used(edges.size(), false);
    int at = start;
    while (at != goal) {
        bool advanced = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (used[i])
                continue;
            const Edge& e = g.edge(edges[i]);
            if (e.tail == at || e.head == at) {
                bool with_arrow = e.tail == at;
                walk.emplace_back(edges[i], with_arrow);
                used[i] = true;
                at = with_arrow ? e.head : e.tail;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw Error("internal: circuit walk failed");
    }
    return walk;
}

// Is the circuit's cycle monotone in the vertex order (the (ia) pattern)?
// If so, returns its path edges in walk order and the base edge.
inline std::optional<std::pair<std::vector<int>, int>> monotone_pattern(const OrderedGraph& g, EdgeSet circuit) {
    std::vector<int> verts;
    {
        VertexSet vs = g.edge_set_vertices(circuit);
        for (int v = 0; v < g.n_vertices(); ++v)
            if (vs >> v & 1)
                verts.push_back(v);
    }
    std::vector<int> path_edges;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        int e = g.edge_index(verts[i], verts[i + 1]);
        if (e < 0 || !(circuit >> e & 1))
            return std::nullopt;
        path_edges.push_back(e);
    }
    int base = g.edge_index(verts.front(), verts.back());
    if (base < 0 || !(circuit >> base & 1))
        return std::nullopt;
    EdgeSet seen = EdgeSet{1} << base;
    for (int e : path_edges)
        seen |= EdgeSet{1} << e;
    if (seen != circuit)
        return std::nullopt;
    return std::make_pair(path_edges, base);
}

// The cycle relation of the toric model.  `labels` lists the path edges in
// their formula order e_1..e_m, `base` is e_0, and `reversed[l]` says whether
// label l+1 points against the walk from t(e_0) to h(e_0) (triggering the
// substitutions psi -> -psi, g -> -g - psi of type (ib)).
inline ExtPoly toric_cycle_relation(const OrderedGraph& g, const ToricVars& tv, const std::vector<int>& labels,
                                    int base, const std::vector<bool>& reversed) {
    const VarTablePtr& vars = tv.vars;
    const int m = static_cast<int>(labels.size());
    auto psi = [&](int e) {
        return ExtPoly::variable(vars, tv.x_rank[g.edge(e).head]) -
               ExtPoly::variable(vars, tv.x_rank[g.edge(e).tail]);
    };
    auto g_factor = [&](int l) { // l in 1..m
        int e = labels[l - 1];
        ExtPoly ge = ExtPoly::variable(vars, tv.edge_rank[e]);
        if (reversed[l - 1])
            return -ge - psi(e);
        return ge;
    };
    auto psi_factor = [&](int l) {
        int e = labels[l - 1];
        return reversed[l - 1] ? -psi(e) : psi(e);
    };

    ExtPoly relation = ExtPoly::one(vars);
    for (int l = 1; l <= m; ++l)
        relation = relation * g_factor(l);

    ExtPoly g0 = ExtPoly::variable(vars, tv.edge_rank[base]);
    for (unsigned mask = 0; mask + 1 < (1u << m); ++mask) { // proper subsets I
        std::vector<int> I, J;
        for (int l = 1; l <= m; ++l)
            ((mask >> (l - 1)) & 1 ? I : J).push_back(l);
        int inversions = 0;
        for (int a : I)
            for (int b : J)
                if (a > b)
                    ++inversions;
        int sign_exp = static_cast<int>(I.size()) + m + inversions;
        ExtPoly term = ExtPoly::constant(vars, sign_exp % 2 == 0 ? 1 : -1);
        for (int l : I)
            term = term * g_factor(l);
        for (std::size_t k = 0; k + 1 < J.size(); ++k)
            term = term * psi_factor(J[k]);
        term = term * g0;
        relation -= term;
    }
    return relation;
}

inline ExtPoly toric_relation_for_circuit(const OrderedGraph& g, const ToricVars& tv, EdgeSet circuit) {
    if (auto mono = monotone_pattern(g, circuit)) {
        auto& [path_edges, base] = *mono;
        std::vector<bool> reversed(path_edges.size(), false);
        return toric_cycle_relation(g, tv, path_edges, base, reversed);
    }
    // General pattern: e_0 is the largest edge of the circuit, the rest are
    // labelled ascending in the edge order; orientation is read off the walk
    // from t(e_0) to h(e_0).
    int base = -1;
    for (int e = g.n_edges() - 1; e >= 0; --e)
        if (circuit >> e & 1) {
            base = e;
            break;
        }
    std::vector<int> labels;
    for (int e = 0; e < g.n_edges(); ++e)
        if ((circuit >> e & 1) && e != base)
            labels.push_back(e);
    auto walk = circuit_walk(g, circuit, base);
    std::vector<bool> reversed(labels.size(), false);
    for (auto [e, with_arrow] : walk) {
        auto it = std::find(labels.begin(), labels.end(), e);
        reversed[it - labels.begin()] = !with_arrow;
    }
    return toric_cycle_relation(g, tv, labels, base, reversed);
}

} // namespace detail

inline DgaPresentation build_toric(const OrderedGraph& g, const Limits& limits = {}) {
    DgaPresentation p;
    p.graph = g;
    p.curve = CurveType::toric();
    detail::ToricVars tv;
    tv.x_rank.assign(g.n_vertices(), -1);
    tv.edge_rank.assign(g.n_edges(), -1);
    std::vector<std::string> names;
    for (int v = 0; v < g.n_vertices(); ++v) {
        tv.x_rank[v] = static_cast<int>(names.size());
        names.push_back("x_" + g.label(v));
        p.info.push_back({GenInfo::X, 0, v, -1});
        for (int e = 0; e < g.n_edges(); ++e)
            if (g.edge(e).head == v) {
                tv.edge_rank[e] = static_cast<int>(names.size());
                names.push_back("g_" + g.label(g.edge(e).tail) + "_" + g.label(g.edge(e).head));
                p.info.push_back({GenInfo::G, 0, -1, e});
            }
    }
    p.vars = make_vars(names); // all weight 1: the toric model is formal
    tv.vars = p.vars;

    for (int e = 0; e < g.n_edges(); ++e) {
        ExtPoly psi = ExtPoly::variable(p.vars, tv.x_rank[g.edge(e).head]) -
                      ExtPoly::variable(p.vars, tv.x_rank[g.edge(e).tail]);
        p.relations.push_back(psi * ExtPoly::variable(p.vars, tv.edge_rank[e]));
    }
    for (EdgeSet c : circuits(g, limits))
        p.relations.push_back(detail::toric_relation_for_circuit(g, tv, c));
    p.differential.assign(p.vars->size(), ExtPoly::zero(p.vars));
    return p;
}

// ---------------------------------------------------------------------------
// Projective models (genus >= 1): generators x^i_v, y^i_v, g_e with
// x^1_v < y^1_v < ... < x^g_v < y^g_v < g_e (h(e) = v) < next vertex block.
// Point generators have weight 1, edge generators weight 2 (bracket length of
// their duals).  Genus 1 prints x_v, y_v without the index.
// ---------------------------------------------------------------------------

inline DgaPresentation build_projective(const OrderedGraph& g, int genus, const Limits& limits = {}) {
    if (genus < 1)
        throw GenusZeroUnsupported();
    DgaPresentation p;
    p.graph = g;
    p.curve = CurveType::projective(genus);
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<std::vector<int>> x_rank(g.n_vertices(), std::vector<int>(genus + 1, -1));
    std::vector<std::vector<int>> y_rank = x_rank;
    std::vector<int> edge_rank(g.n_edges(), -1);
    for (int v = 0; v < g.n_vertices(); ++v) {
        for (int i = 1; i <= genus; ++i) {
            std::string suffix = (genus == 1 ? "_" : std::to_string(i) + "_") + g.label(v);
            x_rank[v][i] = static_cast<int>(names.size());
            names.push_back("x" + suffix);
            weights.push_back(1);
            p.info.push_back({GenInfo::X, i, v, -1});
            y_rank[v][i] = static_cast<int>(names.size());
            names.push_back("y" + suffix);
            weights.push_back(1);
            p.info.push_back({GenInfo::Y, i, v, -1});
        }
        for (int e = 0; e < g.n_edges(); ++e)
            if (g.edge(e).head == v) {
                edge_rank[e] = static_cast<int>(names.size());
                names.push_back("g_" + g.label(g.edge(e).tail) + "_" + g.label(g.edge(e).head));
                weights.push_back(2);
                p.info.push_back({GenInfo::G, 0, -1, e});
            }
    }
    p.vars = make_vars(names, weights);
    auto xv = [&](int v, int i) { return ExtPoly::variable(p.vars, x_rank[v][i]); };
    auto yv = [&](int v, int i) { return ExtPoly::variable(p.vars, y_rank[v][i]); };

    // (i) circuit boundaries
    for (EdgeSet c : circuits(g, limits))
        p.relations.push_back(detail::circuit_boundary(p.vars, edge_rank, c, g));
    // (ii) difference relations along edges
    for (int e = 0; e < g.n_edges(); ++e) {
        int h = g.edge(e).head, t = g.edge(e).tail;
        ExtPoly ge = ExtPoly::variable(p.vars, edge_rank[e]);
        for (int i = 1; i <= genus; ++i) {
            p.relations.push_back((xv(h, i) - xv(t, i)) * ge);
            p.relations.push_back((yv(h, i) - yv(t, i)) * ge);
        }
    }
    // (iiia)/(iiib) point relations
    for (int v = 0; v < g.n_vertices(); ++v) {
        for (int i = 1; i <= genus; ++i)
            for (int j = 1; j <= genus; ++j)
                if (i != j)
                    p.relations.push_back(xv(v, i) * yv(v, j));
        for (int i = 1; i <= genus; ++i)
            for (int j = i + 1; j <= genus; ++j) {
                p.relations.push_back(xv(v, i) * xv(v, j));
                p.relations.push_back(yv(v, i) * yv(v, j));
                p.relations.push_back(xv(v, i) * yv(v, i) - xv(v, j) * yv(v, j));
            }
    }

    p.differential.assign(p.vars->size(), ExtPoly::zero(p.vars));
    for (int e = 0; e < g.n_edges(); ++e) {
        int h = g.edge(e).head, t = g.edge(e).tail;
        ExtPoly d = xv(h, 1) * yv(h, 1) + xv(t, 1) * yv(t, 1);
        for (int i = 1; i <= genus; ++i)
            d -= xv(h, i) * yv(t, i) + xv(t, i) * yv(h, i);
        p.differential[edge_rank[e]] = d;
    }
    return p;
}

inline DgaPresentation build_elliptic(const OrderedGraph& g, const Limits& limits = {}) {
    return build_projective(g, 1, limits);
}

inline DgaPresentation build_model(const OrderedGraph& g, CurveType curve, const Limits& limits = {}) {
    switch (curve.kind) {
    case CurveKind::Rational:
        return build_orlik_solomon(g, limits);
    case CurveKind::Toric:
        return build_toric(g, limits);
    default:
        return build_projective(g, curve.genus, limits);
    }
}

// ---------------------------------------------------------------------------
// Quotient context: a presentation together with the Groebner basis of its
// relation ideal, giving normal forms and the reduced differential.
// ---------------------------------------------------------------------------

class Dga {
  public:
    explicit Dga(DgaPresentation p, const Limits& limits = {})
        : p_(std::move(p)), gb_(buchberger(p_.relations, limits)) {
        if (!gb_.vars)
            gb_.vars = p_.vars;
    }

    const DgaPresentation& presentation() const { return p_; }
    const GroebnerBasis& gb() const { return gb_; }

    ExtPoly normal_form(const ExtPoly& f) const { return arrangelab::normal_form(f, gb_); }
    ExtPoly apply_differential(const ExtPoly& f) const { return normal_form(leibniz_d(p_, f)); }
};

// Leibniz extension reduced to normal form modulo the relation ideal.
inline ExtPoly apply_differential(const DgaPresentation& p, const ExtPoly& f, const Limits& limits = {}) {
    return Dga(p, limits).apply_differential(f);
}

} // namespace arrangelab

#endif
