#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbalg {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const F& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }
    Matrix scaled(const F& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> piv;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            F inv = F(1) / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                F f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            piv.push_back(c);
            ++r;
        }
        return piv;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Columns form a basis of {x : A x = 0}.
    Matrix nullspace() const {
        Matrix m = *this;
        auto piv = m.rref();
        std::vector<bool> is_piv(cols_, false);
        for (auto c : piv) is_piv[c] = true;
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_piv[c]) free.push_back(c);
        Matrix n(cols_, free.size());
        for (std::size_t k = 0; k < free.size(); ++k) {
            n(free[k], k) = F(1);
            for (std::size_t i = 0; i < piv.size(); ++i) n(piv[i], k) = -m(i, free[k]);
        }
        return n;
    }

    // Columns form a basis of the column space (a subset of the original columns).
    Matrix column_basis() const {
        Matrix m = *this;
        auto piv = m.rref();
        return select_columns(piv);
    }

    std::vector<std::size_t> column_basis_indices() const {
        Matrix m = *this;
        return m.rref();
    }

    Matrix select_columns(const std::vector<std::size_t>& cs) const {
        Matrix r(rows_, cs.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cs.size(); ++k) r(i, k) = (*this)(i, cs[k]);
        return r;
    }
    Matrix select_rows(const std::vector<std::size_t>& rs) const {
        Matrix r(rs.size(), cols_);
        for (std::size_t k = 0; k < rs.size(); ++k)
            for (std::size_t j = 0; j < cols_; ++j) r(k, j) = (*this)(rs[k], j);
        return r;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) return std::nullopt;
        std::size_t n = rows_;
        Matrix aug(n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
            aug(i, n + i) = F(1);
        }
        auto piv = aug.rref();
        if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
        Matrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
        return inv;
    }

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    // Solve A X = B for X; nullopt if inconsistent.
    std::optional<Matrix> solve(const Matrix& b) const {
        if (b.rows_ != rows_) throw std::invalid_argument("solve: shape mismatch");
        Matrix aug(rows_, cols_ + b.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) aug(i, cols_ + j) = b(i, j);
        }
        auto piv = aug.rref();
        Matrix x(cols_, b.cols_);
        for (std::size_t i = 0; i < piv.size(); ++i) {
            if (piv[i] >= cols_) return std::nullopt;
            for (std::size_t j = 0; j < b.cols_; ++j) x(piv[i], j) = aug(i, cols_ + j);
        }
        return x;
    }

    // Horizontal / vertical concatenation.
    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hcat: row mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }
    static Matrix vcat(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw std::invalid_argument("vcat: column mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

} // namespace sbalg
