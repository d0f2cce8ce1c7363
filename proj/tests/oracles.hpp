// Slow, independent reference implementations used only by the tests.
// Nothing here calls the library's determinant, enumeration, or h* code.
#pragma once

#include "lapsim/graph.hpp"
#include "lapsim/matrix.hpp"
#include "lapsim/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using lapsim::Integer;
using lapsim::IntMatrix;
using lapsim::IntVector;
using Dense = std::vector<std::vector<long long>>;

inline Dense dense(const IntMatrix& m) {
    Dense out(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<long long>(m(i, j));
    return out;
}

/// Laplace expansion along the first row.
inline Integer cofactor_det(const Dense& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Dense sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(row);
        }
        Integer term = Integer(m[0][c]) * cofactor_det(sub);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

inline Integer cofactor_det(const IntMatrix& m) { return cofactor_det(dense(m)); }

/// Counts (n-1)-edge subsets that form a spanning tree (union-find).
inline Integer spanning_trees_by_subsets(const lapsim::Graph& g) {
    const auto& edges = g.edges();
    const std::size_t n = g.n(), m = edges.size();
    if (n == 1) return 1;
    Integer count = 0;
    std::vector<int> pick(m, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), 1);
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<std::size_t> parent(n + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        bool acyclic = true;
        for (std::size_t e = 0; e < m && acyclic; ++e) {
            if (!pick[e]) continue;
            auto a = find(edges[e].u), b = find(edges[e].v);
            if (a == b) acyclic = false;
            parent[a] = b;
        }
        if (acyclic) ++count;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return count;
}

/**
 * Parallelepiped height counts by brute force over coefficient numerators:
 * lambda = b / N with b in [0, N)^{d+1}, kept when sum b_i (v_i, 1) is
 * divisible by N. Exponential in d; only for N^{d+1} up to a few million.
 */
inline std::vector<long long> fpp_heights_bruteforce(const IntMatrix& vertices, long long N) {
    const auto v = dense(vertices);
    const std::size_t rows = v.size(), d = vertices.cols();
    std::vector<long long> counts(rows, 0);
    std::vector<long long> b(rows, 0);
    while (true) {
        bool ok = true;
        long long height_num = 0;
        for (std::size_t i = 0; i < rows; ++i) height_num += b[i];
        if (height_num % N != 0) ok = false;
        for (std::size_t j = 0; j < d && ok; ++j) {
            long long s = 0;
            for (std::size_t i = 0; i < rows; ++i) s += b[i] * v[i][j];
            if (s % N != 0) ok = false;
        }
        if (ok) ++counts[static_cast<std::size_t>(height_num / N)];
        std::size_t k = 0;
        while (k < rows && ++b[k] == N) b[k++] = 0;
        if (k == rows) break;
    }
    return counts;
}

/// True when x lies in conv(rows of V) scaled by t, decided with Cramer's rule.
class PointInSimplex {
public:
    explicit PointInSimplex(const IntMatrix& vertices) : v_(dense(vertices)) {
        const std::size_t n = v_.size();
        m_.assign(n, std::vector<long long>(n, 1));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j) m_[i][j] = v_[i][j];
        det_ = cofactor_det(m_);
    }

    /// Barycentric weights scaled by det: each must share det's sign (or be 0).
    bool contains(const std::vector<long long>& x, long long t, bool strict = false) const {
        const std::size_t n = m_.size();
        std::vector<long long> rhs(x);
        rhs.push_back(t);
        for (std::size_t i = 0; i < n; ++i) {
            // Replace row i of M with rhs: lambda_i = det(M_i) / det(M) for lambda M = rhs.
            Dense mi = m_;
            mi[i] = rhs;
            Integer num = cofactor_det(mi);
            if (num == 0 ? strict : (num < 0) != (det_ < 0)) return false;
        }
        return true;
    }

private:
    Dense v_;
    Dense m_;
    Integer det_;
};

/// Lattice points of tP by scanning the bounding box.
inline std::vector<std::vector<long long>> dilate_points_bruteforce(const IntMatrix& vertices, long long t,
                                                                   bool strict = false) {
    const auto v = dense(vertices);
    const std::size_t d = vertices.cols();
    std::vector<long long> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        lo[j] = hi[j] = v[0][j];
        for (const auto& row : v) {
            lo[j] = std::min(lo[j], row[j]);
            hi[j] = std::max(hi[j], row[j]);
        }
        lo[j] *= t;
        hi[j] *= t;
    }
    PointInSimplex inside(vertices);
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(lo);
    while (true) {
        if (inside.contains(x, t, strict)) out.push_back(x);
        std::size_t k = 0;
        while (k < d && ++x[k] > hi[k]) x[k] = lo[k], ++k;
        if (k == d) break;
    }
    return out;
}

/// h* from L(0..d) via the generating-function identity
/// sum_t L(t) z^t (1 - z)^{d+1} = sum_i h*_i z^i.
inline IntVector hstar_from_ehrhart_values(const std::vector<long long>& values) {
    const std::size_t d = values.size() - 1;
    IntVector h(d + 1, Integer(0));
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t t = 0; t <= i; ++t) {
            // coefficient of z^{i-t} in (1-z)^{d+1}
            const std::size_t k = i - t;
            Integer c = 1;
            for (std::size_t r = 0; r < k; ++r) c = c * Integer(d + 1 - r) / Integer(r + 1);
            h[i] += (k % 2 == 0 ? c : Integer(-c)) * values[t];
        }
    return h;
}

inline IntVector hstar_bruteforce(const IntMatrix& vertices) {
    std::vector<long long> values;
    for (long long t = 0; t <= static_cast<long long>(vertices.cols()); ++t)
        values.push_back(static_cast<long long>(dilate_points_bruteforce(vertices, t).size()));
    return hstar_from_ehrhart_values(values);
}

/// Number of ways to write `total` as an ordered sum of `parts` values in [0, max_part], by DP.
inline Integer compositions_dp(std::size_t total, std::size_t parts, std::size_t max_part) {
    std::vector<Integer> ways(total + 1, Integer(0));
    ways[0] = 1;
    for (std::size_t p = 0; p < parts; ++p) {
        std::vector<Integer> next(total + 1, Integer(0));
        for (std::size_t s = 0; s <= total; ++s)
            for (std::size_t x = 0; x <= max_part && x <= s; ++x) next[s] += ways[s - x];
        ways = std::move(next);
    }
    return ways[total];
}

/**
 * IDP by definition for small polytopes: every lattice point of tP is a
 * lattice point of P plus one of (t-1)P, for 2 <= t <= d - 1. Degrees
 * beyond d - 1 follow for any lattice polytope of dimension d.
 */
inline bool idp_bruteforce(const IntMatrix& vertices) {
    const long long d = static_cast<long long>(vertices.cols());
    auto base = dilate_points_bruteforce(vertices, 1);
    std::set<std::vector<long long>> previous(base.begin(), base.end());
    for (long long t = 2; t <= d - 1; ++t) {
        auto points = dilate_points_bruteforce(vertices, t);
        for (const auto& p : points) {
            bool found = false;
            for (const auto& q : base) {
                std::vector<long long> r(p.size());
                for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[k] - q[k];
                if (previous.count(r)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        previous = std::set<std::vector<long long>>(points.begin(), points.end());
    }
    return true;
}

inline Integer gcd_euclid(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace oracle

// ---------------------------------------------------------------------------
// Hand-rolled generators for property tests.

namespace gen {

using lapsim::Edge;
using lapsim::Graph;
using lapsim::Vertex;

/// Connected graph: vertex k attaches to a random earlier vertex, then
/// extra edges each with probability `p_percent`/100. Labels are shuffled.
inline Graph connected_graph(std::mt19937_64& rng, std::size_t n, unsigned p_percent = 40) {
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{1});
    std::shuffle(label.begin(), label.end(), rng);
    std::set<std::pair<Vertex, Vertex>> edges;
    auto add = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (std::size_t k = 1; k < n; ++k) add(label[k], label[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)]);
    std::uniform_int_distribution<unsigned> pct(0, 99);
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            if (pct(rng) < p_percent) add(a, b);
    std::vector<Edge> out;
    for (auto [a, b] : edges) out.push_back({a, b});
    return Graph(n, out);
}

inline Graph tree(std::mt19937_64& rng, std::size_t n) { return connected_graph(rng, n, 0); }

inline lapsim::IntMatrix int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long long lo,
                                    long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    lapsim::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

/**
 * A graph shaped for a leaf move: side A = {1..a} with leaf y = a on x = 1,
 * side B = {a+1..a+b}, and every A-B edge touching x.
 */
struct LeafMoveInstance {
    Graph graph;
    std::set<Vertex> side;
    Vertex x;
    Vertex y;
};

inline LeafMoveInstance leaf_move_instance(std::mt19937_64& rng, std::size_t a, std::size_t b) {
    Graph ga = connected_graph(rng, a - 1);  // vertices 1..a-1, x = 1
    Graph gb = connected_graph(rng, b);
    std::vector<Edge> edges = ga.edges();
    edges.push_back({1, a});  // leaf y = a
    for (const auto& e : gb.edges()) edges.push_back({e.u + a, e.v + a});
    std::uniform_int_distribution<unsigned> coin(0, 1);
    bool any = false;
    for (Vertex v = a + 1; v <= a + b; ++v)
        if (coin(rng)) edges.push_back({1, v}), any = true;
    if (!any) edges.push_back({1, a + 1});
    std::set<Vertex> side;
    for (Vertex v = 1; v <= a; ++v) side.insert(v);
    return {Graph(a + b, edges), side, 1, a};
}

}  // namespace gen
