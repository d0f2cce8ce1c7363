/**
 * Simple connected labeled graphs on vertices 1..n, their Laplacians and
 * spanning-tree counts, the standard families, and the graph operations
 * that have known effects on Laplacian simplices (whiskering, bridging,
 * tree attachment, and the leaf move).
 */
#pragma once

#include "lapsim/linalg.hpp"
#include "lapsim/matrix.hpp"
#include "lapsim/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace lapsim {

/// Vertex label, 1-based.
using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    /// Canonical orientation u < v.
    static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
public:
    /// Rejects self-loops, repeated edges, out-of-range labels, and
    /// disconnected inputs.
    Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
        if (n == 0) throw DomainError("Graph: needs at least one vertex");
        for (auto& e : edges) {
            if (e.u == e.v) throw DomainError("Graph: self-loop at vertex " + std::to_string(e.u));
            e = Edge::make(e.u, e.v);
            if (e.u < 1 || e.v > n)
                throw DomainError("Graph: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} outside vertex range 1.." + std::to_string(n));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw DomainError("Graph: repeated edge");
        edges_ = std::move(edges);
        adjacency_.assign(n_ + 1, {});
        for (const auto& e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
        if (!connected()) throw DomainError("Graph: graph is disconnected");
    }

    std::size_t n() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a < 1 || a > n_ || b < 1 || b > n_) return false;
        const auto& nb = adjacency_[a];
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    bool contains(Vertex v) const { return v >= 1 && v <= n_; }

    bool is_tree() const { return edges_.size() + 1 == n_; }

    /// Connected 2-regular graph, i.e. a cycle under some labeling.
    bool is_cycle() const {
        if (n_ < 3 || edges_.size() != n_) return false;
        for (Vertex v = 1; v <= n_; ++v)
            if (degree(v) != 2) return false;
        return true;
    }

    bool is_complete() const { return edges_.size() == n_ * (n_ - 1) / 2; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    bool connected() const {
        std::vector<bool> seen(n_ + 1, false);
        std::vector<Vertex> stack{1};
        seen[1] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adjacency_[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n_;
    }

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// ---------------------------------------------------------------------------
// Laplacian and spanning trees

/// Degree matrix minus adjacency matrix; row/column i-1 is vertex i.
inline IntMatrix laplacian(const Graph& g) {
    IntMatrix l(g.n(), g.n());
    for (const auto& e : g.edges()) {
        l(e.u - 1, e.v - 1) = -1;
        l(e.v - 1, e.u - 1) = -1;
        l(e.u - 1, e.u - 1) += 1;
        l(e.v - 1, e.v - 1) += 1;
    }
    return l;
}

/// kappa(G) as the (1,1) cofactor of the Laplacian (Matrix-Tree theorem).
inline Integer spanning_tree_count(const Graph& g) {
    if (g.n() == 1) return 1;
    Integer k = determinant(laplacian(g).without({0}, {0}));
    if (k <= 0) throw DomainError("spanning_tree_count: graph is disconnected");
    return k;
}

// ---------------------------------------------------------------------------
// Families

enum class FamilyKind { path, cycle, complete, star, random_tree };

inline std::string_view to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::complete: return "complete";
        case FamilyKind::star: return "star";
        case FamilyKind::random_tree: return "random_tree";
    }
    return "?";
}

inline FamilyKind parse_family_kind(std::string_view s) {
    for (auto k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete, FamilyKind::star,
                   FamilyKind::random_tree})
        if (s == to_string(k)) return k;
    throw ParseError("unknown graph family '" + std::string(s) + "'");
}

/// Uniform integer in [0, bound) from raw engine output, so that results do
/// not depend on the standard library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Uniform labeled tree via a random Pruefer sequence.
inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    if (n == 0) throw DomainError("random_tree: n must be at least 1");
    if (n <= 2) return Graph(n, n == 2 ? std::vector<Edge>{{1, 2}} : std::vector<Edge>{});
    std::vector<Vertex> prufer(n - 2);
    for (auto& x : prufer) x = 1 + uniform_below(rng, n);
    std::vector<std::size_t> degree(n + 1, 1);
    for (auto x : prufer) ++degree[x];
    std::vector<Edge> edges;
    std::set<Vertex> leaves;
    for (Vertex v = 1; v <= n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (auto x : prufer) {
        Vertex leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(Edge::make(leaf, x));
        if (--degree[x] == 1) leaves.insert(x);
    }
    Vertex a = *leaves.begin();
    Vertex b = *std::next(leaves.begin());
    edges.push_back(Edge::make(a, b));
    return Graph(n, std::move(edges));
}

/// Random tree plus each remaining pair independently with probability
/// num/den; always connected.
inline Graph random_connected_graph(std::size_t n, std::mt19937_64& rng, std::uint64_t num = 1,
                                    std::uint64_t den = 2) {
    Graph tree = random_tree(n, rng);
    std::vector<Edge> edges = tree.edges();
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            if (!tree.has_edge(a, b) && uniform_below(rng, den) < num) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

/// The named family member with sequential (paths) or cyclic (cycles) labels.
inline Graph family(FamilyKind kind, std::size_t n, std::uint64_t seed = kDefaultSeed) {
    const std::size_t minimum = kind == FamilyKind::cycle ? 3 : 1;
    if (n < minimum)
        throw DomainError(std::string(to_string(kind)) + " needs n >= " + std::to_string(minimum));
    std::vector<Edge> edges;
    switch (kind) {
        case FamilyKind::path:
            for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
            break;
        case FamilyKind::cycle:
            for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
            edges.push_back({1, n});
            break;
        case FamilyKind::complete:
            for (Vertex a = 1; a <= n; ++a)
                for (Vertex b = a + 1; b <= n; ++b) edges.push_back({a, b});
            break;
        case FamilyKind::star:
            for (Vertex v = 2; v <= n; ++v) edges.push_back({1, v});
            break;
        case FamilyKind::random_tree: {
            std::mt19937_64 rng(seed);
            return random_tree(n, rng);
        }
    }
    return Graph(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) { return family(FamilyKind::path, n); }
inline Graph cycle_graph(std::size_t n) { return family(FamilyKind::cycle, n); }
inline Graph complete_graph(std::size_t n) { return family(FamilyKind::complete, n); }
inline Graph star_graph(std::size_t n) { return family(FamilyKind::star, n); }

// ---------------------------------------------------------------------------
// Operations

/// W(G): vertex n+i is a pendant attached to vertex i.
inline Graph whisker(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<Edge> edges = g.edges();
    for (Vertex i = 1; i <= n; ++i) edges.push_back({i, n + i});
    return Graph(2 * n, std::move(edges));
}

/// Disjoint union of G and G2 (G2 relabeled to n+1..2n) plus the edge {i, n+i2}.
inline Graph bridge(const Graph& g, const Graph& g2, Vertex i, Vertex i2) {
    if (g.n() != g2.n())
        throw DomainError("bridge: both graphs must have the same vertex count (" +
                          std::to_string(g.n()) + " vs " + std::to_string(g2.n()) + ")");
    if (!g.contains(i) || !g2.contains(i2)) throw DomainError("bridge: endpoint out of range");
    const std::size_t n = g.n();
    std::vector<Edge> edges = g.edges();
    for (const auto& e : g2.edges()) edges.push_back({e.u + n, e.v + n});
    edges.push_back({i, n + i2});
    return Graph(2 * n, std::move(edges));
}

/**
 * Attach the tree T at v. T's vertex 1 is identified with v and its vertex
 * j >= 2 becomes n + j - 1.
 */
inline Graph attach_tree(const Graph& g, Vertex v, const Graph& tree) {
    if (!g.contains(v)) throw DomainError("attach_tree: root vertex not in graph");
    if (!tree.is_tree()) throw DomainError("attach_tree: attachment is not a tree");
    if (tree.n() < 2) throw DomainError("attach_tree: attachment must add at least one vertex");
    const std::size_t n = g.n();
    auto relabel = [&](Vertex x) { return x == 1 ? v : n + x - 1; };
    std::vector<Edge> edges = g.edges();
    for (const auto& e : tree.edges()) edges.push_back(Edge::make(relabel(e.u), relabel(e.v)));
    return Graph(n + tree.n() - 1, std::move(edges));
}

/// Path v - (n+1) - (n+2) - ... - (n+k).
inline Graph attach_path(const Graph& g, Vertex v, std::size_t k) {
    if (k < 1) throw DomainError("attach_path: k must be at least 1");
    return attach_tree(g, v, path_graph(k + 1));
}

namespace detail {

struct LeafMovePlan {
    std::vector<bool> in_a;       // indexed by vertex
    std::vector<Vertex> moved;    // B-neighbours of x
};

inline LeafMovePlan check_leaf_move(const Graph& g, const std::set<Vertex>& a, Vertex x, Vertex y) {
    const std::size_t n = g.n();
    LeafMovePlan plan;
    plan.in_a.assign(n + 1, false);
    for (Vertex v : a) {
        if (!g.contains(v)) throw DomainError("leaf_move: vertex in A out of range");
        plan.in_a[v] = true;
    }
    if (!g.contains(x) || !plan.in_a[x]) throw DomainError("leaf_move: x must lie in A");
    if (!g.contains(y) || !plan.in_a[y]) throw DomainError("leaf_move: y must lie in A");
    if (g.degree(y) != 1 || !g.has_edge(x, y))
        throw DomainError("leaf_move: y must be a leaf adjacent to x");
    for (const auto& e : g.edges()) {
        if (plan.in_a[e.u] == plan.in_a[e.v]) continue;
        Vertex inside = plan.in_a[e.u] ? e.u : e.v;
        Vertex outside = plan.in_a[e.u] ? e.v : e.u;
        if (inside != x) throw DomainError("leaf_move: an edge between A and B avoids x");
        plan.moved.push_back(outside);
    }
    return plan;
}

}  // namespace detail

/// Move every edge {x, b} with b outside A to {y, b}; y must be a leaf on x.
inline Graph leaf_move(const Graph& g, const std::set<Vertex>& a, Vertex x, Vertex y) {
    auto plan = detail::check_leaf_move(g, a, x, y);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (plan.in_a[e.u] != plan.in_a[e.v]) continue;
        edges.push_back(e);
    }
    for (Vertex b : plan.moved) edges.push_back(Edge::make(y, b));
    return Graph(g.n(), std::move(edges));
}

/**
 * The integer row-operation matrix U with U * L(G) = L(G') for the leaf
 * move, assembled row by row:
 *   r'_i = r_i              for i in A \ {x, y} and i in B not adjacent to x
 *   r'_i = r_i - r_y        for i in B adjacent to x
 *   r'_x = r_x + sum_B r_j
 *   r'_y = (k+1) r_y - sum_B r_j
 */
inline IntMatrix leaf_move_transform(const Graph& g, const std::set<Vertex>& a, Vertex x, Vertex y) {
    auto plan = detail::check_leaf_move(g, a, x, y);
    const std::size_t n = g.n();
    IntMatrix u = IntMatrix::identity(n);
    const Integer k = plan.moved.size();
    for (Vertex b : plan.moved) u(b - 1, y - 1) = -1;
    for (Vertex j = 1; j <= n; ++j) {
        if (plan.in_a[j]) continue;
        u(x - 1, j - 1) = 1;
        u(y - 1, j - 1) = -1;
    }
    u(y - 1, y - 1) = k + 1;
    return u;
}

// ---------------------------------------------------------------------------
// Edge-list text format

/// `n m` header, then m lines `u v`; lines starting with '#' are comments.
inline Graph read_edge_list(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("edge list: missing header line 'n m'");
    auto parse_pair = [](const std::string& text, long long& a, long long& b) {
        std::istringstream ss(text);
        std::string extra;
        if (!(ss >> a >> b) || (ss >> extra)) throw ParseError("edge list: malformed line '" + text + "'");
    };
    long long n = 0, m = 0;
    parse_pair(lines[0], n, m);
    if (n < 1 || m < 0) throw ParseError("edge list: invalid header '" + lines[0] + "'");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " follow");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        long long u = 0, v = 0;
        parse_pair(lines[i], u, v);
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError("edge list: vertex out of range in '" + lines[i] + "'");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    try {
        return Graph(static_cast<std::size_t>(n), std::move(edges));
    } catch (const DomainError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace lapsim
