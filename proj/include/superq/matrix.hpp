#pragma once

// Dense exact matrices. Gaussian elimination picks the first nonzero pivot;
// there is no tolerance anywhere, zero means exactly zero.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "superq/error.hpp"
#include "superq/poly.hpp"
#include "superq/scalar.hpp"

namespace superq {

using Vector = std::vector<Scalar>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data length does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows)
    {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix column_vector(const std::vector<T>& v) { return from_columns({v}, v.size()); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    void set_column(std::size_t j, const std::vector<T>& c)
    {
        if (c.size() != rows_) throw DimensionMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!superq::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s)
    {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a)
    {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (superq::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!superq::is_zero(v[k])) r[i] += a(i, k) * v[k];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    template <class F>
    auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> d;
        d.reserve(data_.size());
        for (const auto& x : data_) d.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(d));
    }

    std::string str() const
    {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        }
        os << "]";
        return os.str();
    }

private:
    void check_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Poly>;

struct EchelonForm {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Reduced row echelon form.
inline EchelonForm rref(ScalarMatrix m)
{
    EchelonForm out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const ScalarMatrix& m) { return rref(m).pivots.size(); }

/// Canonical null-space basis: one vector per free column (ascending), with that
/// free variable set to 1, the other free variables 0, pivots back-substituted.
inline std::vector<Vector> kernel(const ScalarMatrix& m)
{
    EchelonForm e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Particular solution of m x = b (free variables zero), or nullopt if inconsistent.
inline std::optional<ScalarMatrix> solve(const ScalarMatrix& m, const ScalarMatrix& b)
{
    if (b.rows() != m.rows()) throw DimensionMismatch("solve: right-hand side row count differs");
    ScalarMatrix aug(m.rows(), m.cols() + b.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, m.cols() + j) = b(i, j);
    }
    EchelonForm e = rref(aug);
    for (auto p : e.pivots)
        if (p >= m.cols()) return std::nullopt;
    ScalarMatrix x(m.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, m.cols() + j);
    return x;
}

inline std::optional<Vector> solve(const ScalarMatrix& m, const Vector& b)
{
    auto x = solve(m, ScalarMatrix::column_vector(b));
    if (!x) return std::nullopt;
    return x->column(0);
}

inline Scalar det(ScalarMatrix m)
{
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    Scalar d(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline std::optional<ScalarMatrix> inverse(const ScalarMatrix& m)
{
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, ScalarMatrix::identity(m.rows()));
}

namespace detail {

// Laplace expansion along rows, memoised on the set of still-available columns.
template <class T>
T cofactor_det(const Matrix<T>& m, std::size_t row, std::uint32_t used,
               std::unordered_map<std::uint32_t, T>& memo)
{
    const std::size_t n = m.rows();
    if (row == n) return T(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    T total(0);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (used & (1u << c)) continue;
        if (!superq::is_zero(m(row, c))) {
            T minor = cofactor_det(m, row + 1, used | (1u << c), memo);
            if (!superq::is_zero(minor)) {
                T t = m(row, c) * minor;
                if (sign > 0) total += t;
                else total -= t;
            }
        }
        sign = -sign;
    }
    memo.emplace(used, total);
    return total;
}

} // namespace detail

/// Division-free determinant; usable over any commutative ring (Poly in particular).
template <class T>
T det_cofactor(const Matrix<T>& m)
{
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    if (m.rows() > 24) throw DimensionMismatch("cofactor determinant limited to 24x24");
    std::unordered_map<std::uint32_t, T> memo;
    return detail::cofactor_det(m, 0, 0u, memo);
}

inline Poly det_poly(const PolyMatrix& m) { return det_cofactor(m); }

inline PolyMatrix to_poly(const ScalarMatrix& m)
{
    return m.map([](const Scalar& s) { return Poly(s); });
}

inline ScalarMatrix eval(const PolyMatrix& m, const Assignment& values)
{
    return m.map([&](const Poly& p) { return p.eval(values); });
}

/// Elementary matrix E^{i,j} (1-based, as printed): sends basis vector j to basis vector i.
inline ScalarMatrix elementary(std::size_t n, std::size_t i, std::size_t j)
{
    ScalarMatrix e(n, n);
    e(i - 1, j - 1) = Scalar(1);
    return e;
}

inline bool is_zero_vector(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = Scalar(1);
    return v;
}

inline Vector operator+(Vector a, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vector operator-(Vector a, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vector operator*(const Scalar& s, Vector a)
{
    for (auto& x : a) x *= s;
    return a;
}

inline Vector operator-(Vector a)
{
    for (auto& x : a) x = -x;
    return a;
}

inline Scalar dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

inline std::string vector_str(const Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

} // namespace superq
