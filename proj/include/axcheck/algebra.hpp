#pragma once

#include <string>
#include <vector>

#include "axcheck/linalg.hpp"

namespace axc {

/// Finite-dimensional commutative algebra given by its symmetric
/// structure-constant table: product(i, j) holds the coordinates of
/// b_i * b_j. Values are immutable once built.
class Algebra {
public:
    class Builder {
    public:
        Builder(FieldSpec f, std::vector<std::string> basis_names);
        /// Sets b_i * b_j and b_j * b_i. Re-setting an entry with a
        /// different value is rejected.
        Builder& set(std::size_t i, std::size_t j, Vec value);
        Builder& set(std::size_t i, std::size_t j,
                     std::initializer_list<std::pair<std::size_t, Scalar>> terms);
        Algebra build();  // unset entries default to zero

    private:
        FieldSpec field_;
        std::vector<std::string> names_;
        std::vector<Vec> table_;
        std::vector<bool> present_;
    };

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::string& basis_name(std::size_t i) const { return names_[i]; }
    /// Index of a basis name, or npos.
    std::size_t index_of(const std::string& name) const;

    const Vec& structure_constant(std::size_t i, std::size_t j) const {
        return table_[i * dim() + j];
    }

    Vec basis_vec(std::size_t i) const { return Vec::unit(field_, dim(), i); }
    Vec zero_vec() const { return Vec(field_, dim()); }

    Vec product(const Vec& x, const Vec& y) const;
    Matrix left_mul_matrix(const Vec& e) const;
    bool is_idempotent(const Vec& e) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    Algebra(FieldSpec f, std::vector<std::string> names, std::vector<Vec> table)
        : field_(f), names_(std::move(names)), table_(std::move(table)) {}

    FieldSpec field_;
    std::vector<std::string> names_;
    std::vector<Vec> table_;  // dim*dim entries, symmetric
};

/// Least subspace containing the generators and closed under the product,
/// by span-and-multiply iteration to a fixed point.
Subspace subalgebra_generated(const Algebra& alg, const std::vector<Vec>& gens);

}  // namespace axc
