/**
 * The Laplacian simplex T_G = conv(rows of L_B) with L_B = L * A, together
 * with volume, interior, facet, and reflexivity computations.
 *
 * Most predicates are written against a plain vertex matrix (one vertex per
 * row, n rows and n-1 columns) so they also apply to simplices that do not
 * come from a graph, such as S_d(1).
 */
#pragma once

#include "lapsim/graph.hpp"
#include "lapsim/linalg.hpp"
#include "lapsim/matrix.hpp"
#include "lapsim/numeric.hpp"

#include <optional>
#include <set>
#include <vector>

namespace lapsim {

/// The n x (n-1) change-of-basis matrix with a_ij = 1 for i <= j.
inline IntMatrix basis_change_matrix(std::size_t n) {
    if (n < 1) throw DomainError("basis_change_matrix: n must be positive");
    IntMatrix a(n, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j + 1 < n; ++j) a(i, j) = 1;
    return a;
}

inline void require_simplex_shape(const IntMatrix& vertices) {
    if (vertices.rows() < 2 || vertices.rows() != vertices.cols() + 1)
        throw ShapeError("simplex vertex matrix must be (d+1) x d with d >= 1");
}

/// |det [V | 1]|
inline Integer normalized_volume(const IntMatrix& vertices) {
    require_simplex_shape(vertices);
    return abs_value(determinant(vertices.with_ones_column()));
}

/// Barycentric coordinates of `point` with respect to the vertex rows.
inline RatVector barycentric(const IntMatrix& vertices, std::span<const Integer> point) {
    require_simplex_shape(vertices);
    if (point.size() != vertices.cols()) throw ShapeError("barycentric: point dimension mismatch");
    IntVector lifted(point.begin(), point.end());
    lifted.push_back(1);
    return solve_row(vertices.with_ones_column(), lifted);
}

inline bool contains_origin_interior(const IntMatrix& vertices) {
    IntVector origin(vertices.cols(), Integer(0));
    RatVector lambda;
    try {
        lambda = barycentric(vertices, origin);
    } catch (const SingularityError&) {
        return false;
    }
    for (const auto& l : lambda)
        if (l <= 0) return false;
    return true;
}

struct FacetData {
    RatVector dual_vertex;      ///< v_i with V(i | -) v_i = 1
    IntVector primitive_normal; ///< a = c * v_i, gcd(a) = 1
    Integer local_index;        ///< c: facet hyperplane is a . x = c
};

/// Facet i is opposite vertex i; its data comes from the solve V(i | -) v = 1.
inline FacetData facet_opposite(const IntMatrix& vertices, std::size_t i) {
    require_simplex_shape(vertices);
    RatVector ones(vertices.cols(), Rational(1));
    RatVector v = solve_exact(vertices.without_row(i), ones);
    Integer denom = 1;
    for (const auto& x : v) denom = lcm(denom, denominator_of(x));
    IntVector a(v.size());
    Integer g = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        a[k] = numerator_of(v[k] * denom);
        g = gcd(g, a[k]);
    }
    for (auto& x : a) x /= g;
    return {std::move(v), std::move(a), denom / g};
}

inline std::vector<FacetData> facets(const IntMatrix& vertices) {
    std::vector<FacetData> out;
    out.reserve(vertices.rows());
    for (std::size_t i = 0; i < vertices.rows(); ++i) out.push_back(facet_opposite(vertices, i));
    return out;
}

/// Origin interior and every dual vertex integral.
inline bool is_reflexive(const IntMatrix& vertices) {
    if (!contains_origin_interior(vertices)) return false;
    for (std::size_t i = 0; i < vertices.rows(); ++i) {
        auto f = facet_opposite(vertices, i);
        for (const auto& x : f.dual_vertex)
            if (!is_integral(x)) return false;
    }
    return true;
}

/// l when the simplex is l-reflexive (origin interior, primitive vertices,
/// every local index equal to l); empty otherwise.
inline std::optional<Integer> ell_reflexive_index(const IntMatrix& vertices) {
    if (!contains_origin_interior(vertices)) return std::nullopt;
    for (std::size_t i = 0; i < vertices.rows(); ++i)
        if (!is_primitive(vertices.row_view(i))) return std::nullopt;
    std::optional<Integer> ell;
    for (std::size_t i = 0; i < vertices.rows(); ++i) {
        Integer c = facet_opposite(vertices, i).local_index;
        if (ell && *ell != c) return std::nullopt;
        ell = c;
    }
    return ell;
}

/**
 * U is unimodular and row perm[i] of S2 equals row i of S1 times U.
 */
inline bool verify_equivalence_certificate(const IntMatrix& s1, const IntMatrix& s2,
                                           const IntMatrix& u, const std::vector<std::size_t>& perm) {
    if (s1.rows() != s2.rows() || s1.cols() != s2.cols() || !u.is_square() || u.rows() != s1.cols() ||
        perm.size() != s1.rows())
        throw ShapeError("verify_equivalence_certificate: incompatible shapes");
    std::vector<bool> hit(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || hit[p]) return false;
        hit[p] = true;
    }
    if (!is_unimodular(u)) return false;
    IntMatrix image = s1 * u;
    for (std::size_t i = 0; i < s1.rows(); ++i)
        for (std::size_t c = 0; c < s1.cols(); ++c)
            if (image(i, c) != s2(perm[i], c)) return false;
    return true;
}

/**
 * Certificate U with L(i) * U = L(j), where L(k) deletes column k of a
 * matrix whose columns sum to zero. Column c of U is e_l when column c of
 * L(j) is column l of L(i), and the all -1 vector for the one column of
 * L(j) that L(i) lacks. Indices are 0-based.
 */
inline IntMatrix column_deletion_certificate(std::size_t n, std::size_t i, std::size_t j) {
    if (n < 2 || i >= n || j >= n) throw DomainError("column_deletion_certificate: bad indices");
    std::vector<std::size_t> kept_i, kept_j;
    for (std::size_t c = 0; c < n; ++c) {
        if (c != i) kept_i.push_back(c);
        if (c != j) kept_j.push_back(c);
    }
    IntMatrix u(n - 1, n - 1);
    for (std::size_t col = 0; col < n - 1; ++col) {
        auto it = std::find(kept_i.begin(), kept_i.end(), kept_j[col]);
        if (it != kept_i.end()) {
            u(static_cast<std::size_t>(it - kept_i.begin()), col) = 1;
        } else {
            for (std::size_t r = 0; r < n - 1; ++r) u(r, col) = -1;
        }
    }
    return u;
}

/// Vertex matrix of S_d(1) = conv(e_1, ..., e_d, -(e_1 + ... + e_d)).
inline IntMatrix canonical_tree_simplex(std::size_t d) {
    if (d < 1) throw DomainError("canonical_tree_simplex: d must be at least 1");
    IntMatrix s(d + 1, d);
    for (std::size_t i = 0; i < d; ++i) {
        s(i, i) = 1;
        s(d, i) = -1;
    }
    return s;
}

// ---------------------------------------------------------------------------

class LaplacianSimplex {
public:
    explicit LaplacianSimplex(Graph g) : graph_(std::move(g)) {
        const std::size_t n = graph_.n();
        if (n < 2) throw DomainError("LaplacianSimplex: graphs need at least 2 vertices");
        vertex_matrix_ = laplacian(graph_) * basis_change_matrix(n);
        kappa_ = spanning_tree_count(graph_);
        volume_ = lapsim::normalized_volume(vertex_matrix_);
        if (volume_ != kappa_ * n)
            throw InconsistencyError("LaplacianSimplex: |det[L_B | 1]| = " + volume_.str() +
                                     " but n * kappa = " + Integer(kappa_ * n).str());
    }

    const Graph& graph() const { return graph_; }
    /// L_B: row i-1 is the vertex of T_G coming from graph vertex i.
    const IntMatrix& vertex_matrix() const { return vertex_matrix_; }
    const Integer& kappa() const { return kappa_; }
    const Integer& normalized_volume() const { return volume_; }
    std::size_t n() const { return graph_.n(); }
    std::size_t dim() const { return graph_.n() - 1; }

private:
    Graph graph_;
    IntMatrix vertex_matrix_;
    Integer kappa_;
    Integer volume_;
};

inline LaplacianSimplex build(const Graph& g) { return LaplacianSimplex(g); }

inline Integer normalized_volume(const LaplacianSimplex& s) { return s.normalized_volume(); }
inline bool contains_origin_interior(const LaplacianSimplex& s) {
    return contains_origin_interior(s.vertex_matrix());
}
inline std::vector<FacetData> facets(const LaplacianSimplex& s) { return facets(s.vertex_matrix()); }
inline bool is_reflexive(const LaplacianSimplex& s) { return is_reflexive(s.vertex_matrix()); }
inline std::optional<Integer> ell_reflexive_index(const LaplacianSimplex& s) {
    return ell_reflexive_index(s.vertex_matrix());
}
inline bool verify_equivalence_certificate(const LaplacianSimplex& s1, const LaplacianSimplex& s2,
                                           const IntMatrix& u, const std::vector<std::size_t>& perm) {
    return verify_equivalence_certificate(s1.vertex_matrix(), s2.vertex_matrix(), u, perm);
}

/**
 * Reflexivity through cofactors: for every deleted row i and every column j,
 * kappa divides the column-j cofactor sum of L_B(i | -). Computed from
 * minors directly, independently of the dual-vertex solve.
 */
inline bool cofactor_reflexivity_test(const LaplacianSimplex& s) {
    const IntMatrix& lb = s.vertex_matrix();
    const std::size_t d = s.dim();
    for (std::size_t i = 0; i < s.n(); ++i) {
        IntMatrix block = lb.without_row(i);
        for (std::size_t j = 0; j < d; ++j) {
            Integer sum = 0;
            for (std::size_t k = 0; k < d; ++k) {
                Integer m = minor(block, {k}, {j});
                sum += ((k + j) % 2 == 0) ? m : Integer(-m);
            }
            if (sum % s.kappa() != 0) return false;
        }
    }
    return true;
}

}  // namespace lapsim
