#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deform/rational.hpp"

namespace deform {

using Vec = std::vector<Rational>;

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            for (long x : row) e_.emplace_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec>& cols) {
        if (cols.empty()) return Matrix();
        Matrix m(cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw std::invalid_argument("Matrix: ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vec col(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        Vec r(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero())
                    for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: sum shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: difference shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
        return c;
    }

    friend Matrix operator*(const Rational& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& x) { return x.is_zero(); });
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
    std::size_t rank = 0;
};

/// Unique reduced row-echelon form; pivot selection is the first nonzero
/// entry scanning rows top to bottom, so the result is deterministic.
inline RrefResult rref(Matrix m) {
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    out.rank = out.pivots.size();
    return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

class NotASubspace : public std::runtime_error {
public:
    explicit NotASubspace(const std::string& what) : std::runtime_error(what) {}
};

/// A linear subspace of k^n held by its unique reduced-echelon basis, so
/// subspace equality is plain structural comparison.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Canonicalizes an arbitrary spanning set.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
        Subspace s(ambient_dim);
        if (vectors.empty()) return s;
        RrefResult r = rref(Matrix::from_rows(vectors));
        for (std::size_t i = 0; i < r.rank; ++i) s.basis_.push_back(r.reduced.row(i));
        return s;
    }

    static Subspace full(std::size_t ambient_dim) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            Vec v = zero_vec(ambient_dim);
            v[i] = Rational(1);
            rows.push_back(v);
        }
        return span(ambient_dim, rows);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const {
        if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dim mismatch");
        Vec rem = v;
        for (const Vec& b : basis_) {
            std::size_t lead = leading_index(b);
            if (!rem[lead].is_zero()) {
                Rational f = rem[lead];  // echelon leading entries are 1
                for (std::size_t j = 0; j < ambient_; ++j) rem[j] -= f * b[j];
            }
        }
        return is_zero(rem);
    }

    bool contains(const Subspace& other) const {
        return std::all_of(other.basis_.begin(), other.basis_.end(),
                           [&](const Vec& v) { return contains(v); });
    }

    /// Coordinates of v in this basis; empty optional if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    static std::size_t leading_index(const Vec& v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return j;
        throw std::logic_error("Subspace: zero basis vector");
    }

    std::size_t ambient_;
    std::vector<Vec> basis_;
};

/// Basis of {v : Mv = 0} in canonical echelon form.
inline Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v = zero_vec(m.cols());
        v[j] = Rational(1);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, j);
        gens.push_back(v);
    }
    return Subspace::span(m.cols(), gens);
}

/// Column space of M in canonical echelon form.
inline Subspace image_basis(const Matrix& m) {
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < m.cols(); ++j) rows.push_back(m.col(j));
    return Subspace::span(m.rows(), rows);
}

/// Some x with Mx = b, free variables set to zero; empty if inconsistent.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs dim mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t c : r.pivots)
        if (c == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
    return x;
}

inline std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (basis_.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    return solve(Matrix::from_columns(basis_), v);
}

/// Canonical direct-sum complement W with V = U + W: spanned by the basis
/// vectors of V whose coordinate (in V's basis) is not pivotal for U.
inline Subspace complement(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("complement: ambient dim mismatch");
    std::vector<Vec> u_in_v;
    for (const Vec& b : u.basis()) {
        auto c = v.coordinates(b);
        if (!c) throw NotASubspace("complement: U is not contained in V");
        u_in_v.push_back(*c);
    }
    std::vector<bool> pivotal(v.dim(), false);
    if (!u_in_v.empty())
        for (std::size_t c : rref(Matrix::from_rows(u_in_v)).pivots) pivotal[c] = true;
    std::vector<Vec> w;
    for (std::size_t j = 0; j < v.dim(); ++j)
        if (!pivotal[j]) w.push_back(v.basis()[j]);
    return Subspace::span(v.ambient_dim(), w);
}

}  // namespace deform
