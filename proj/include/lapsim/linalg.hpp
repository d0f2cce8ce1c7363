/**
 * Exact linear algebra over the integers and rationals: fraction-free
 * determinants and minors, rational solves, Smith normal form, and the
 * unimodularity / primitivity predicates the polytope code relies on.
 */
#pragma once

#include "lapsim/matrix.hpp"
#include "lapsim/numeric.hpp"

#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace lapsim {

/**
 * Determinant by Bareiss fraction-free elimination.
 *
 * Every intermediate entry is itself a minor of the input, so the working
 * values never exceed minor magnitude. The empty matrix has determinant 1.
 */
inline Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    bool negate = false;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return negate ? Integer(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Determinant of the submatrix left after deleting the given rows and columns.
inline Integer minor(const IntMatrix& m, const std::set<std::size_t>& delete_rows,
                     const std::set<std::size_t>& delete_cols) {
    if (m.rows() - delete_rows.size() != m.cols() - delete_cols.size())
        throw ShapeError("minor: remaining submatrix is not square");
    return determinant(m.without(delete_rows, delete_cols));
}

inline bool is_unimodular(const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("is_unimodular: matrix is not square");
    return abs_value(determinant(m)) == 1;
}

/// True iff gcd of the entries is 1.
inline bool is_primitive(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) throw DomainError("is_primitive: zero vector");
    return g == 1;
}

// ---------------------------------------------------------------------------
// Rational solves

namespace detail {

using RatMatrix = std::vector<RatVector>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), RatVector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Rational(m(i, j));
    return out;
}

// Gauss-Jordan on [a | rhs], in place; rhs may carry several columns.
inline void gauss_jordan(RatMatrix& a, RatMatrix& rhs) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw SingularityError("solve_exact: matrix is singular");
        std::swap(a[p], a[k]);
        std::swap(rhs[p], rhs[k]);
        const Rational pivot = a[k][k];
        for (std::size_t j = k; j < n; ++j) a[k][j] /= pivot;
        for (auto& x : rhs[k]) x /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rational f = a[i][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < rhs[i].size(); ++j) rhs[i][j] -= f * rhs[k][j];
        }
    }
}

}  // namespace detail

/// Unique rational x with M x = b.
inline RatVector solve_exact(const IntMatrix& m, const RatVector& b) {
    if (!m.is_square()) throw ShapeError("solve_exact: matrix is not square");
    if (b.size() != m.rows()) throw ShapeError("solve_exact: right-hand side length mismatch");
    auto a = detail::to_rational(m);
    detail::RatMatrix rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
    detail::gauss_jordan(a, rhs);
    RatVector x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs[i][0];
    return x;
}

inline RatVector solve_exact(const IntMatrix& m, std::span<const Integer> b) {
    RatVector rb(b.begin(), b.end());
    return solve_exact(m, rb);
}

/// Row-vector solve: the unique lambda with lambda * M = p.
inline RatVector solve_row(const IntMatrix& m, std::span<const Integer> p) {
    return solve_exact(m.transpose(), p);
}

/// det(M) together with adj(M) = det(M) * M^{-1}, which is integral.
struct ScaledInverse {
    IntMatrix adjugate;
    Integer det;
};

inline ScaledInverse scaled_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("scaled_inverse: matrix is not square");
    const std::size_t n = m.rows();
    Integer det = determinant(m);
    if (det == 0) throw SingularityError("scaled_inverse: matrix is singular");
    auto a = detail::to_rational(m);
    detail::RatMatrix rhs(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
    detail::gauss_jordan(a, rhs);
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = rhs[i][j] * det;
            if (!is_integral(v)) throw InconsistencyError("scaled_inverse: non-integral adjugate");
            adj(i, j) = numerator_of(v);
        }
    return {std::move(adj), std::move(det)};
}

// ---------------------------------------------------------------------------
// Smith normal form

struct SnfResult {
    IntMatrix U;  ///< unimodular, rows x rows
    IntMatrix D;  ///< diagonal, nonnegative, d_1 | d_2 | ...
    IntMatrix V;  ///< unimodular, cols x cols

    std::vector<Integer> diagonal() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
        return d;
    }
};

/**
 * U * M * V = D by elementary row and column operations.
 *
 * Each step moves the smallest nonzero entry of the trailing block to the
 * pivot, clears its row and column by division with remainder, and repeats
 * until the pivot divides everything left in the block. Pivot magnitudes
 * strictly decrease between repeats, so the loop terminates, and the
 * divisibility chain falls out of the last condition.
 */
inline SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t t = 0; t < steps; ++t) {
        bool block_empty = false;
        for (;;) {
            // smallest nonzero magnitude in the trailing block
            std::optional<std::pair<std::size_t, std::size_t>> best;
            Integer best_abs;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (d(i, j) == 0) continue;
                    Integer a = abs_value(d(i, j));
                    if (!best || a < best_abs) {
                        best = {i, j};
                        best_abs = a;
                    }
                }
            if (!best) {
                block_empty = true;
                break;
            }
            d.swap_rows(t, best->first);
            u.swap_rows(t, best->first);
            d.swap_cols(t, best->second);
            v.swap_cols(t, best->second);

            const Integer pivot = d(t, t);
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d(i, t) == 0) continue;
                Integer q = d(i, t) / pivot;
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d(t, j) == 0) continue;
                Integer q = d(t, j) / pivot;
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the whole remaining block
            std::optional<std::size_t> offending_row;
            for (std::size_t i = t + 1; i < rows && !offending_row; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % pivot != 0) {
                        offending_row = i;
                        break;
                    }
            if (!offending_row) break;
            d.add_row_multiple(t, *offending_row, 1);
            u.add_row_multiple(t, *offending_row, 1);
        }
        if (block_empty) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

}  // namespace lapsim
