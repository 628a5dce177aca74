#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scx/error.hpp"
#include "scx/rational.hpp"

namespace scx {

/// Dense rational vector, dim >= 1.
class Vector {
public:
    explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw ValueError("vector must have dimension >= 1");
    }
    Vector(std::initializer_list<Rational> entries) : Vector(std::vector<Rational>(entries)) {}

    static Vector zero(std::size_t dim) { return Vector(std::vector<Rational>(dim, Rational(0))); }

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_.at(i); }
    Rational& operator[](std::size_t i) { return entries_.at(i); }
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        check_same_dim(a, b);
        std::vector<Rational> out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
        return Vector(std::move(out));
    }
    friend Vector operator-(const Vector& a, const Vector& b) {
        check_same_dim(a, b);
        std::vector<Rational> out(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
        return Vector(std::move(out));
    }
    friend Vector operator*(const Rational& s, const Vector& v) {
        std::vector<Rational> out(v.dim());
        for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
        return Vector(std::move(out));
    }
    friend Vector operator-(const Vector& v) { return Rational(-1) * v; }

    friend Rational dot(const Vector& a, const Vector& b) {
        check_same_dim(a, b);
        Rational acc(0);
        for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
        return acc;
    }

    friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }
    friend bool operator<(const Vector& a, const Vector& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) os << ", ";
            os << entries_[i];
        }
        os << ")";
        return os.str();
    }

private:
    static void check_same_dim(const Vector& a, const Vector& b) {
        if (a.dim() != b.dim())
            throw DimensionMismatchError("vector dims " + std::to_string(a.dim()) + " vs " +
                                         std::to_string(b.dim()));
    }
    std::vector<Rational> entries_;
};

/// Dense rational matrix, row-major. Zero columns are allowed (the matrix of
/// relative vectors of a singleton point set has none).
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw DimensionMismatchError("matrix entries length != rows*cols");
    }
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    /// Matrix whose columns are the given vectors (all the same dim).
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows_hint = 0) {
        if (cols.empty()) return Matrix(rows_hint, 0);
        std::size_t rows = cols.front().dim();
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].dim() != rows) throw DimensionMismatchError("ragged columns");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    Rational& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Vector column(std::size_t c) const {
        std::vector<Rational> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
        return Vector(std::move(out));
    }

    friend Vector operator*(const Matrix& m, const Vector& v) {
        if (v.dim() != m.cols_) throw DimensionMismatchError("matrix*vector dims");
        std::vector<Rational> out(m.rows_, Rational(0));
        for (std::size_t r = 0; r < m.rows_; ++r)
            for (std::size_t c = 0; c < m.cols_; ++c) out[r] += m.at(r, c) * v[c];
        return Vector(std::move(out));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;  // strictly increasing
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rational f = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

struct Unique {
    Vector x;
};
struct Infinite {
    Vector particular;                  // free variables set to 0
    std::vector<Vector> nullspace;      // one basis vector per free column
};
struct Inconsistent {};
using Solution = std::variant<Unique, Infinite, Inconsistent>;

/// Exact solve of m*x = rhs via the reduced row echelon form of the
/// augmented matrix.
inline Solution solve(const Matrix& m, const Vector& rhs) {
    if (rhs.dim() != m.rows())
        throw DimensionMismatchError("solve: rhs dim " + std::to_string(rhs.dim()) +
                                     " != rows " + std::to_string(m.rows()));
    const std::size_t n = m.cols();
    Matrix aug(m.rows(), n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = rhs[r];
    }
    if (n == 0) throw ValueError("solve: system has no unknowns");
    RrefResult rr = rref(aug);
    for (std::size_t p : rr.pivot_cols)
        if (p == n) return Inconsistent{};

    std::vector<bool> is_pivot(n, false);
    std::vector<std::size_t> pivot_row(n, 0);
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        is_pivot[rr.pivot_cols[i]] = true;
        pivot_row[rr.pivot_cols[i]] = i;
    }

    std::vector<Rational> part(n, Rational(0));
    for (std::size_t c = 0; c < n; ++c)
        if (is_pivot[c]) part[c] = rr.reduced.at(pivot_row[c], n);
    Vector particular(std::move(part));

    if (rr.pivot_cols.size() == n) return Unique{std::move(particular)};

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> b(n, Rational(0));
        b[f] = Rational(1);
        for (std::size_t c = 0; c < n; ++c)
            if (is_pivot[c]) b[c] = -rr.reduced.at(pivot_row[c], f);
        basis.emplace_back(std::move(b));
    }
    return Infinite{std::move(particular), std::move(basis)};
}

}  // namespace scx
