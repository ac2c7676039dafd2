#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "axcheck/scalar.hpp"

namespace axc {

/// Dense coordinate vector over a finite basis.
class Vec {
public:
    Vec() = default;
    Vec(const FieldSpec& f, std::size_t n) : field_(f), c_(n, Scalar::zero(f)) {}
    Vec(const FieldSpec& f, std::vector<Scalar> coords)
        : field_(f), c_(std::move(coords)) {}

    static Vec unit(const FieldSpec& f, std::size_t n, std::size_t k);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return c_.size(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Scalar>& coords() const { return c_; }

    bool is_zero() const;
    Vec operator-() const;
    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(const Scalar& s);
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
    bool operator==(const Vec& o) const { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Vec& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldSpec field_;
    std::vector<Scalar> c_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols),
          e_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                            std::size_t cols);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_row(std::size_t i, const Vec& v);
    void set_col(std::size_t j, const Vec& v);

    Matrix transpose() const;
    Vec apply(const Vec& x) const;  // matrix * column vector
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    /// Stack the rows of two matrices with equal column counts.
    static Matrix vstack(const Matrix& top, const Matrix& bottom);

    std::string str() const;

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/// In-place reduced row echelon form; returns pivot column indices.
/// Deterministic: columns scanned left to right, eliminating rows chosen
/// top first, pivots normalized to 1 and cleared above and below.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::pair<Matrix, std::vector<std::size_t>> rref(Matrix m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Subspace of F^n in canonical form: rows of `basis` are an RREF basis
/// (strictly increasing pivot columns, pivots 1, pivot columns otherwise
/// zero). Two Subspace values are equal iff they are the same subspace.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(const FieldSpec& f, std::size_t ambient);
    static Subspace full(const FieldSpec& f, std::size_t ambient);
    static Subspace span(const FieldSpec& f, std::size_t ambient,
                         const std::vector<Vec>& vectors);
    /// Rows are already an RREF basis (not rechecked).
    static Subspace from_rref(Matrix rref_basis, std::size_t ambient);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& x) const;
    /// Coefficients of x in this basis, when contained.
    std::optional<Vec> coordinates_of(const Vec& x) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldSpec field_;
    std::size_t ambient_ = 0;
    Matrix basis_;  // dim x ambient, canonical RREF, no zero rows
};

Subspace kernel(const Matrix& m);
Subspace eigenspace(const Matrix& m, const Scalar& lambda);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
/// {x : u . x = 0 for all u in U} w.r.t. the coordinate dot product.
Subspace annihilator(const Subspace& u);
bool is_direct_sum(const std::vector<Subspace>& parts, std::size_t ambient);

/// Solve `A x = b`; returns one solution or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace axc
