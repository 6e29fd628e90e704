#ifndef ARRANGELAB_GRAPH_HPP
#define ARRANGELAB_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "arrangelab/errors.hpp"
#include "arrangelab/limits.hpp"

namespace arrangelab {

// Subsets of edges (and of vertices) as bitsets over ranks.
using EdgeSet = std::uint64_t;
using VertexSet = std::uint64_t;

inline int popcount64(std::uint64_t x) { return std::popcount(x); }

// Edge of an ordered graph: tail < head in the vertex order.
struct Edge {
    int tail;
    int head;
};

/// Simple graph with a total vertex order.  The order makes every edge an
/// arrow from its smaller endpoint t(e) to its larger endpoint h(e), and
/// induces the edge order  e < e'  iff  h(e) < h(e'), or h(e) = h(e') and
/// t(e) < t(e').  Edges are stored sorted in that order, so the index of an
/// edge is its rank.
class OrderedGraph {
  public:
    OrderedGraph() = default;

    OrderedGraph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edge_pairs)
        : labels_(std::move(labels)) {
        const int n = static_cast<int>(labels_.size());
        if (n > 64)
            throw SizeLimitExceeded("graphs are limited to 64 vertices");
        adj_.assign(n, 0);
        for (auto [u, v] : edge_pairs) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError("edge endpoint out of range");
            if (u == v)
                throw ParseError("loop edge " + labels_[u] + "-" + labels_[v]);
            int t = std::min(u, v), h = std::max(u, v);
            if (adj_[t] >> h & 1)
                throw ParseError("duplicate edge " + labels_[t] + "-" + labels_[h]);
            adj_[t] |= std::uint64_t{1} << h;
            adj_[h] |= std::uint64_t{1} << t;
            edges_.push_back({t, h});
        }
        if (edges_.size() > 64)
            throw SizeLimitExceeded("graphs are limited to 64 edges");
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
            return a.head != b.head ? a.head < b.head : a.tail < b.tail;
        });
    }

    static OrderedGraph from_indices(int n, const std::vector<std::pair<int, int>>& edge_pairs) {
        std::vector<std::string> labels(n);
        for (int i = 0; i < n; ++i)
            labels[i] = std::to_string(i + 1);
        return OrderedGraph(std::move(labels), edge_pairs);
    }

    static OrderedGraph complete(int n) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                e.push_back({i, j});
        return from_indices(n, e);
    }

    static OrderedGraph path(int n) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < n; ++i)
            e.push_back({i, i + 1});
        return from_indices(n, e);
    }

    static OrderedGraph cycle(int n) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < n; ++i)
            e.push_back({i, i + 1});
        e.push_back({0, n - 1});
        return from_indices(n, e);
    }

    // Fan: a path on n_path vertices plus an apex joined to every path vertex.
    // The apex is the first vertex in the order.
    static OrderedGraph fan(int n_path) {
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= n_path; ++i)
            e.push_back({0, i});
        for (int i = 1; i + 1 <= n_path; ++i)
            e.push_back({i, i + 1});
        return from_indices(n_path + 1, e);
    }

    int n_vertices() const { return static_cast<int>(labels_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(int u, int v) const { return adj_[u] >> v & 1; }
    VertexSet neighbors(int v) const { return adj_[v]; }

    int edge_index(int u, int v) const {
        int t = std::min(u, v), h = std::max(u, v);
        for (int e = 0; e < n_edges(); ++e)
            if (edges_[e].tail == t && edges_[e].head == h)
                return e;
        return -1;
    }

    VertexSet edge_set_vertices(EdgeSet s) const {
        VertexSet vs = 0;
        for (int e = 0; e < n_edges(); ++e)
            if (s >> e & 1)
                vs |= (std::uint64_t{1} << edges_[e].tail) | (std::uint64_t{1} << edges_[e].head);
        return vs;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Graph text format:
//   # comment
//   vertices: a b c        (optional; listed order = vertex order)
//   edge: a b
// Unknown labels in edges are an error when a vertices line is present;
// otherwise vertices are collected from the edges and sorted lexicographically.
// ---------------------------------------------------------------------------

inline OrderedGraph parse_graph(std::istream& in) {
    std::vector<std::string> order;
    bool have_order = false;
    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key))
            continue;
        if (key == "vertices:") {
            if (have_order)
                throw ParseError("multiple vertices: lines");
            have_order = true;
            std::string tok;
            while (ls >> tok)
                order.push_back(tok);
        } else if (key == "edge:") {
            std::string a, b;
            if (!(ls >> a >> b))
                throw ParseError("edge line needs two labels");
            std::string extra;
            if (ls >> extra)
                throw ParseError("trailing tokens on edge line");
            raw_edges.emplace_back(a, b);
        } else {
            throw ParseError("unknown directive '" + key + "'");
        }
    }
    if (!have_order) {
        for (auto& [a, b] : raw_edges) {
            order.push_back(a);
            order.push_back(b);
        }
        std::sort(order.begin(), order.end());
        order.erase(std::unique(order.begin(), order.end()), order.end());
    }
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        if (index.count(order[i]))
            throw ParseError("duplicate vertex label '" + order[i] + "'");
        index[order[i]] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto& [a, b] : raw_edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end())
            throw ParseError("unknown vertex label '" + a + "'");
        if (ib == index.end())
            throw ParseError("unknown vertex label '" + b + "'");
        edges.emplace_back(ia->second, ib->second);
    }
    return OrderedGraph(order, edges);
}

inline OrderedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

// ---------------------------------------------------------------------------
// Chordality and perfect elimination orderings
// ---------------------------------------------------------------------------

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> witness_cycle; // chordless cycle of length >= 4, empty when chordal
};

// Maximum-cardinality search visit order; ties broken by smallest vertex rank,
// so the result is deterministic.
inline std::vector<int> mcs_order(const OrderedGraph& g) {
    const int n = g.n_vertices();
    std::vector<int> weight(n, 0), order;
    std::vector<bool> seen(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!seen[v] && (best == -1 || weight[v] > weight[best]))
                best = v;
        seen[best] = true;
        order.push_back(best);
        for (int v = 0; v < n; ++v)
            if (!seen[v] && g.adjacent(best, v))
                ++weight[v];
    }
    return order;
}

// Does `order` satisfy the elimination property: each vertex's neighbors among
// the earlier vertices form a clique?
inline bool is_perfect_elimination_order(const OrderedGraph& g, const std::vector<int>& order) {
    const int n = g.n_vertices();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> earlier;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u) && pos[u] < i)
                earlier.push_back(u);
        for (std::size_t a = 0; a < earlier.size(); ++a)
            for (std::size_t b = a + 1; b < earlier.size(); ++b)
                if (!g.adjacent(earlier[a], earlier[b]))
                    return false;
    }
    return true;
}

// Is the graph's own vertex order a perfect elimination ordering?
inline bool vertex_order_is_peo(const OrderedGraph& g) {
    std::vector<int> order(g.n_vertices());
    for (int i = 0; i < g.n_vertices(); ++i)
        order[i] = i;
    return is_perfect_elimination_order(g, order);
}

namespace detail {

// Shortest u -> w path avoiding `forbidden`; empty when none exists.
inline std::vector<int> bfs_path(const OrderedGraph& g, int u, int w, VertexSet forbidden) {
    const int n = g.n_vertices();
    std::vector<int> prev(n, -2);
    std::deque<int> q;
    prev[u] = -1;
    q.push_back(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == w)
            break;
        for (int y = 0; y < n; ++y) {
            if (!g.adjacent(x, y) || prev[y] != -2)
                continue;
            if ((forbidden >> y & 1) && y != w)
                continue;
            prev[y] = x;
            q.push_back(y);
        }
    }
    if (prev[w] == -2)
        return {};
    std::vector<int> path;
    for (int x = w; x != -1; x = prev[x])
        path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace detail

inline ChordalityResult check_chordal(const OrderedGraph& g) {
    const int n = g.n_vertices();
    auto order = mcs_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<int> earlier;
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u) && pos[u] < i)
                earlier.push_back(u);
        for (std::size_t a = 0; a < earlier.size(); ++a)
            for (std::size_t b = a + 1; b < earlier.size(); ++b) {
                int x = earlier[a], y = earlier[b];
                if (g.adjacent(x, y))
                    continue;
                // x and y are non-adjacent neighbors of v: close a chordless
                // cycle through a shortest x..y path that avoids v and the
                // rest of v's neighborhood.
                VertexSet forbidden = g.neighbors(v) | (std::uint64_t{1} << v);
                forbidden &= ~(std::uint64_t{1} << x);
                forbidden &= ~(std::uint64_t{1} << y);
                auto path = detail::bfs_path(g, x, y, forbidden);
                if (path.empty())
                    continue; // another failing triple will produce the witness
                std::vector<int> cyc;
                cyc.push_back(v);
                cyc.insert(cyc.end(), path.begin(), path.end());
                return {false, cyc};
            }
    }
    return {true, {}};
}

// MCS vertex order.  Throws NotChordalError when the graph is not chordal,
// naming a chordless cycle.
inline std::vector<int> perfect_elimination_ordering(const OrderedGraph& g) {
    auto res = check_chordal(g);
    if (!res.chordal) {
        std::string cyc;
        for (int v : res.witness_cycle)
            cyc += (cyc.empty() ? "" : " ") + g.label(v);
        throw NotChordalError("chordless cycle: " + cyc);
    }
    return mcs_order(g);
}

// ---------------------------------------------------------------------------
// Circuits, broken circuits, nbc sets
// ---------------------------------------------------------------------------

// All circuits of the graphic matroid (edge sets of simple cycles), each
// returned as an edge bitset.  Result is sorted.
inline std::vector<EdgeSet> circuits(const OrderedGraph& g, const Limits& limits = {}) {
    const int n = g.n_vertices();
    std::vector<EdgeSet> out;
    std::size_t work = 0;
    std::vector<int> path;
    std::vector<bool> on_path(n, false);

    // Paths with smallest vertex first; each cycle found once by requiring the
    // second vertex to be smaller than the last.
    auto extend = [&](auto&& self, int start, int v) -> void {
        if (++work > limits.max_intermediate)
            throw SizeLimitExceeded("circuit enumeration");
        for (int u = start + 1; u < n; ++u) {
            if (!g.adjacent(v, u) || on_path[u])
                continue;
            path.push_back(u);
            if (path.size() >= 3 && g.adjacent(u, start) && path[1] < u) {
                EdgeSet c = 0;
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    c |= EdgeSet{1} << g.edge_index(path[i], path[i + 1]);
                c |= EdgeSet{1} << g.edge_index(u, start);
                out.push_back(c);
                if (out.size() > limits.max_intermediate)
                    throw SizeLimitExceeded("circuit enumeration");
            }
            on_path[u] = true;
            self(self, start, u);
            on_path[u] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path.assign(n, false);
        on_path[s] = true;
        extend(extend, s, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Broken circuit of a circuit: the circuit with its smallest edge removed.
inline EdgeSet broken_circuit_of(EdgeSet circuit) {
    return circuit & (circuit - 1); // clears the lowest set bit
}

inline std::vector<EdgeSet> broken_circuits(const OrderedGraph& g, const Limits& limits = {}) {
    std::vector<EdgeSet> out;
    for (EdgeSet c : circuits(g, limits))
        out.push_back(broken_circuit_of(c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool is_nbc(EdgeSet s, const std::vector<EdgeSet>& broken) {
    for (EdgeSet b : broken)
        if ((b & ~s) == 0)
            return false;
    return true;
}

inline bool is_nbc(const OrderedGraph& g, EdgeSet s, const Limits& limits = {}) {
    return is_nbc(s, broken_circuits(g, limits));
}

// All nbc subsets of the edge set.  Nbc sets are closed under taking subsets,
// so depth-first extension by increasing edge rank enumerates them exactly.
inline std::vector<EdgeSet> all_nbc_sets(const OrderedGraph& g, const Limits& limits = {}) {
    auto broken = broken_circuits(g, limits);
    std::vector<EdgeSet> out;
    auto extend = [&](auto&& self, EdgeSet s, int max_edge) -> void {
        out.push_back(s);
        if (out.size() > limits.max_intermediate)
            throw SizeLimitExceeded("nbc enumeration");
        for (int e = max_edge + 1; e < g.n_edges(); ++e) {
            EdgeSet s2 = s | (EdgeSet{1} << e);
            if (is_nbc(s2, broken))
                self(self, s2, e);
        }
    };
    extend(extend, 0, -1);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Flats of the graphic matroid
// ---------------------------------------------------------------------------

struct Flat {
    EdgeSet edges = 0;
    int rank = 0;
    friend bool operator==(const Flat&, const Flat&) = default;
};

// Rank of an edge set: vertices touched minus components of the subgraph.
inline int edge_set_rank(const OrderedGraph& g, EdgeSet s) {
    const int n = g.n_vertices();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int rank = 0;
    for (int e = 0; e < g.n_edges(); ++e)
        if (s >> e & 1) {
            int a = find(g.edge(e).tail), b = find(g.edge(e).head);
            if (a != b) {
                parent[a] = b;
                ++rank;
            }
        }
    return rank;
}

// Matroid closure: all edges whose endpoints become connected using s.
inline EdgeSet closure(const OrderedGraph& g, EdgeSet s) {
    const int n = g.n_vertices();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e = 0; e < g.n_edges(); ++e)
        if (s >> e & 1)
            parent[find(g.edge(e).tail)] = find(g.edge(e).head);
    EdgeSet cl = 0;
    for (int e = 0; e < g.n_edges(); ++e)
        if (find(g.edge(e).tail) == find(g.edge(e).head))
            cl |= EdgeSet{1} << e;
    return cl;
}

// All flats, via partitions of the vertex set into blocks that each induce a
// connected subgraph.  Sorted by (rank, edge set).
inline std::vector<Flat> flats(const OrderedGraph& g, const Limits& limits = {}) {
    const int n = g.n_vertices();
    std::vector<Flat> out;
    std::vector<int> block(n, -1);
    std::size_t work = 0;

    auto block_connected = [&](int b) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (block[v] == b)
                verts.push_back(v);
        if (verts.size() <= 1)
            return true;
        std::vector<bool> vis(verts.size(), false);
        std::vector<int> stack = {0};
        vis[0] = true;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (!vis[j] && g.adjacent(verts[i], verts[j])) {
                    vis[j] = true;
                    ++cnt;
                    stack.push_back(static_cast<int>(j));
                }
        }
        return cnt == verts.size();
    };

    auto assign = [&](auto&& self, int v, int used) -> void {
        if (++work > limits.max_intermediate)
            throw SizeLimitExceeded("flat enumeration");
        if (v == n) {
            for (int b = 0; b < used; ++b)
                if (!block_connected(b))
                    return;
            EdgeSet f = 0;
            for (int e = 0; e < g.n_edges(); ++e)
                if (block[g.edge(e).tail] == block[g.edge(e).head])
                    f |= EdgeSet{1} << e;
            out.push_back({f, edge_set_rank(g, f)});
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[v] = b;
            self(self, v + 1, std::max(used, b + 1));
        }
        block[v] = -1;
    };
    if (n == 0)
        return {{0, 0}};
    assign(assign, 0, 0);
    std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.edges < b.edges;
    });
    return out;
}

// All nbc sets associated to a flat: nbc subsets of F spanning the subgraph
// on F's edges.
inline std::vector<EdgeSet> nbc_sets_of_flat(const OrderedGraph& g, const Flat& f, const Limits& limits = {}) {
    auto broken = broken_circuits(g, limits);
    std::vector<int> members;
    for (int e = 0; e < g.n_edges(); ++e)
        if (f.edges >> e & 1)
            members.push_back(e);
    std::vector<EdgeSet> out;
    std::vector<int> pick;
    auto choose = [&](auto&& self, std::size_t from, int need) -> void {
        if (need == 0) {
            EdgeSet s = 0;
            for (int e : pick)
                s |= EdgeSet{1} << e;
            if (edge_set_rank(g, s) == f.rank && is_nbc(s, broken))
                out.push_back(s);
            return;
        }
        for (std::size_t i = from; i + need <= members.size() + 0u; ++i) {
            pick.push_back(members[i]);
            self(self, i + 1, need - 1);
            pick.pop_back();
        }
    };
    choose(choose, 0, f.rank);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace arrangelab

#endif
