#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "modlie/gf.hpp"

namespace modlie {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over GF(p). Entries are canonical residues.
class Matrix {
public:
    Matrix(PrimeField f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    Matrix(PrimeField f, std::initializer_list<std::initializer_list<std::int64_t>> init)
        : field_(f), rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
            for (std::int64_t v : row) a_.push_back(field_.reduce(v));
        }
    }

    static Matrix identity(PrimeField f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(PrimeField f, const std::vector<Vec>& rows) {
        std::size_t nc = rows.empty() ? 0 : rows.front().size();
        Matrix m(f, rows.size(), nc);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j] % f.modulus();
        }
        return m;
    }

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Scalar at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Scalar* row_ptr(std::size_t r) { return a_.data() + r * cols_; }
    const Scalar* row_ptr(std::size_t r) const { return a_.data() + r * cols_; }

    Vec row(std::size_t r) const {
        return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    void set_row(std::size_t r, const Vec& v) {
        if (v.size() != cols_) throw std::invalid_argument("Matrix::set_row: size mismatch");
        for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
    }

    bool is_zero() const {
        for (Scalar v : a_)
            if (v) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }

    Matrix scaled(Scalar c) const {
        Matrix r = *this;
        for (Scalar& v : r.a_) v = field_.mul(v, c);
        return r;
    }

    /// Matrix-vector product m*x with x a column vector.
    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
        Vec y(rows_, 0);
        const Scalar p = field_.modulus();
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            const Scalar* r = row_ptr(i);
            for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(r[j]) * x[j];
            y[i] = static_cast<Scalar>(acc % p);
        }
        return y;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape or field mismatch");
    }

    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Vector helpers shared across modules. Vectors are canonical residues mod p.
Vec vec_add(const PrimeField& f, const Vec& a, const Vec& b);
Vec vec_sub(const PrimeField& f, const Vec& a, const Vec& b);
Vec vec_scaled(const PrimeField& f, const Vec& a, Scalar c);
bool vec_is_zero(const Vec& a);

} // namespace modlie
