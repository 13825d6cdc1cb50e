#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axetlab/errors.hpp"
#include "axetlab/field.hpp"

namespace axetlab {

template <class S>
using Vector = std::vector<S>;

/// Dense row-major matrix. As a linear map it acts on column coordinate
/// vectors: column j holds the image of the j-th basis vector.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const S& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    template <FieldDescriptor Field>
    static Matrix identity(const Field& field, std::size_t n)
    {
        Matrix m(n, n, field.zero());
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = field.one();
        }
        return m;
    }

    /// Builds the matrix whose j-th column is columns[j].
    static Matrix from_columns(const std::vector<Vector<S>>& columns, std::size_t rows, const S& zero)
    {
        Matrix m(rows, columns.size(), zero);
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) {
                fail(ErrorKind::DimensionMismatch, "column length mismatch");
            }
            for (std::size_t i = 0; i < rows; ++i) {
                m(i, j) = columns[j][i];
            }
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector<S> row(std::size_t i) const { return Vector<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Vector<S> column(std::size_t j) const
    {
        Vector<S> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            c.push_back((*this)(i, j));
        }
        return c;
    }

    Vector<S> apply(const Vector<S>& x) const
    {
        if (x.size() != cols_) {
            fail(ErrorKind::DimensionMismatch, "matrix/vector size mismatch");
        }
        Vector<S> y;
        y.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            S acc = (*this)(i, 0) * x[0];
            for (std::size_t j = 1; j < cols_; ++j) {
                if (!x[j].is_zero() && !(*this)(i, j).is_zero()) {
                    acc = acc + (*this)(i, j) * x[j];
                }
            }
            y.push_back(std::move(acc));
        }
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) {
            fail(ErrorKind::DimensionMismatch, "matrix product size mismatch");
        }
        Matrix c(a.rows_, b.cols_, a.data_.front() - a.data_.front());
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!b(k, j).is_zero()) {
                        c(i, j) = c(i, j) + a(i, k) * b(k, j);
                    }
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

template <class S>
bool is_zero_vector(const Vector<S>& v)
{
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

template <class S>
Vector<S> add(Vector<S> a, const Vector<S>& b)
{
    if (a.size() != b.size()) {
        fail(ErrorKind::DimensionMismatch, "vector sizes differ");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = a[i] + b[i];
    }
    return a;
}

template <class S>
Vector<S> sub(Vector<S> a, const Vector<S>& b)
{
    if (a.size() != b.size()) {
        fail(ErrorKind::DimensionMismatch, "vector sizes differ");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = a[i] - b[i];
    }
    return a;
}

template <class S>
Vector<S> scale(const S& k, Vector<S> a)
{
    for (auto& x : a) {
        x = k * x;
    }
    return a;
}

/// Row-reduced echelon form. Pivots are chosen as the first nonzero entry
/// in each column scanning top-down, then normalized to one.
template <class S>
struct Echelon {
    std::vector<Vector<S>> rows;      // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

template <FieldDescriptor Field>
Echelon<ScalarOf<Field>> row_reduce(const Field& field, std::vector<Vector<ScalarOf<Field>>> rows, std::size_t ncols)
{
    using S = ScalarOf<Field>;
    Echelon<S> out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (!rows[i][col].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        S inv = field.one() / rows[r][col];
        for (std::size_t j = col; j < ncols; ++j) {
            if (!rows[r][j].is_zero()) {
                rows[r][j] = rows[r][j] * inv;
            }
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) {
                continue;
            }
            S factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                if (!rows[r][j].is_zero()) {
                    rows[i][j] = rows[i][j] - factor * rows[r][j];
                }
            }
        }
        out.pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

/// Canonical basis (reduced echelon rows) of the span of `vectors`.
template <FieldDescriptor Field>
std::vector<Vector<ScalarOf<Field>>> span_basis(const Field& field, const std::vector<Vector<ScalarOf<Field>>>& vectors,
                                                std::size_t dim)
{
    for (const auto& v : vectors) {
        if (v.size() != dim) {
            fail(ErrorKind::DimensionMismatch, "vector length " + std::to_string(v.size()) + " != " + std::to_string(dim));
        }
    }
    return row_reduce(field, vectors, dim).rows;
}

template <FieldDescriptor Field>
std::size_t rank(const Field& field, const std::vector<Vector<ScalarOf<Field>>>& vectors, std::size_t dim)
{
    return span_basis(field, vectors, dim).size();
}

/// Basis of {x : m x = 0}; one vector per free column, in column order.
template <FieldDescriptor Field>
std::vector<Vector<ScalarOf<Field>>> kernel(const Field& field, const Matrix<ScalarOf<Field>>& m)
{
    using S = ScalarOf<Field>;
    std::vector<Vector<S>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows.push_back(m.row(i));
    }
    auto ech = row_reduce(field, std::move(rows), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector<S>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        Vector<S> v(m.cols(), field.zero());
        v[free] = field.one();
        for (std::size_t r = 0; r < ech.rows.size(); ++r) {
            v[ech.pivots[r]] = -ech.rows[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Coefficients c with sum_i c_i basis[i] = target, if target lies in the
/// span. When the basis is dependent the free coefficients are set to zero.
template <FieldDescriptor Field>
std::optional<Vector<ScalarOf<Field>>> coordinates(const Field& field, const std::vector<Vector<ScalarOf<Field>>>& basis,
                                                   const Vector<ScalarOf<Field>>& target)
{
    using S = ScalarOf<Field>;
    std::size_t n = basis.size();
    std::size_t dim = target.size();
    std::vector<Vector<S>> rows(dim, Vector<S>(n + 1, field.zero()));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (basis[j].size() != dim) {
                fail(ErrorKind::DimensionMismatch, "basis vector length mismatch");
            }
            rows[i][j] = basis[j][i];
        }
        rows[i][n] = target[i];
    }
    auto ech = row_reduce(field, std::move(rows), n + 1);
    Vector<S> c(n, field.zero());
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
        if (ech.pivots[r] == n) {
            return std::nullopt;
        }
        c[ech.pivots[r]] = ech.rows[r][n];
    }
    return c;
}

template <FieldDescriptor Field>
bool in_span(const Field& field, const std::vector<Vector<ScalarOf<Field>>>& basis, const Vector<ScalarOf<Field>>& v)
{
    if (is_zero_vector(v)) {
        return true;
    }
    if (basis.empty()) {
        return false;
    }
    return coordinates(field, basis, v).has_value();
}

/// Solves m x = rhs; returns one solution (free variables zero) or none.
template <FieldDescriptor Field>
std::optional<Vector<ScalarOf<Field>>> solve(const Field& field, const Matrix<ScalarOf<Field>>& m,
                                             const Vector<ScalarOf<Field>>& rhs)
{
    std::vector<Vector<ScalarOf<Field>>> columns;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        columns.push_back(m.column(j));
    }
    return coordinates(field, columns, rhs);
}

template <FieldDescriptor Field>
std::optional<Matrix<ScalarOf<Field>>> inverse(const Field& field, const Matrix<ScalarOf<Field>>& m)
{
    using S = ScalarOf<Field>;
    if (m.rows() != m.cols()) {
        return std::nullopt;
    }
    std::size_t n = m.rows();
    std::vector<Vector<S>> rows(n, Vector<S>(2 * n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = m(i, j);
        }
        rows[i][n + i] = field.one();
    }
    auto ech = row_reduce(field, std::move(rows), 2 * n);
    if (ech.rows.size() < n || ech.pivots[n - 1] != n - 1) {
        return std::nullopt;
    }
    Matrix<S> inv(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = ech.rows[i][n + j];
        }
    }
    return inv;
}

} // namespace axetlab
