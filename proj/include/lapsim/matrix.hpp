/**
 * Dense arbitrary-precision integer matrix.
 *
 * Row-major storage; indices are 0-based. Submatrix helpers take index sets
 * to delete, which is how minors such as L(S | T) are written.
 */
#pragma once

#include "lapsim/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <set>
#include <span>
#include <vector>

namespace lapsim {

class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeError("IntMatrix: ragged initializer");
            for (auto x : r) data_.emplace_back(x);
        }
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows) {
        IntMatrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.empty() ? 0 : rows.front().size();
        m.data_.reserve(m.rows_ * m.cols_);
        for (const auto& r : rows) {
            if (r.size() != m.cols_) throw ShapeError("IntMatrix: ragged rows");
            m.data_.insert(m.data_.end(), r.begin(), r.end());
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Integer> row_view(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<Integer> row_view(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    IntVector row(std::size_t r) const {
        auto v = row_view(r);
        return {v.begin(), v.end()};
    }

    IntVector col(std::size_t c) const {
        IntVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    std::vector<IntVector> to_rows() const {
        std::vector<IntVector> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// The matrix obtained by deleting the given rows and columns.
    IntMatrix without(const std::set<std::size_t>& drop_rows,
                      const std::set<std::size_t>& drop_cols) const {
        for (auto r : drop_rows)
            if (r >= rows_) throw ShapeError("IntMatrix::without: row index out of range");
        for (auto c : drop_cols)
            if (c >= cols_) throw ShapeError("IntMatrix::without: column index out of range");
        IntMatrix out(rows_ - drop_rows.size(), cols_ - drop_cols.size());
        std::size_t rr = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (drop_rows.count(r)) continue;
            std::size_t cc = 0;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (drop_cols.count(c)) continue;
                out(rr, cc++) = (*this)(r, c);
            }
            ++rr;
        }
        return out;
    }

    IntMatrix without_row(std::size_t r) const { return without({r}, {}); }
    IntMatrix without_col(std::size_t c) const { return without({}, {c}); }

    /// [M | 1]: append a column of ones.
    IntMatrix with_ones_column() const {
        IntMatrix out(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
            out(r, cols_) = 1;
        }
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
    }

    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
        if (factor == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
    }

    void negate_row(std::size_t r) {
        for (auto& x : row_view(r)) x = -x;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("IntMatrix: product shape mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? ", [" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Row vector times matrix.
inline IntVector row_times(std::span<const Integer> v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw ShapeError("row_times: length mismatch");
    IntVector out(m.cols(), Integer(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
    }
    return out;
}

inline IntVector to_int_vector(std::initializer_list<std::int64_t> xs) {
    return {xs.begin(), xs.end()};
}

}  // namespace lapsim
