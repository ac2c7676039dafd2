#include "axcheck/algebra.hpp"

namespace axc {

Algebra::Builder::Builder(FieldSpec f, std::vector<std::string> basis_names)
    : field_(f), names_(std::move(basis_names)) {
    std::size_t n = names_.size();
    if (n == 0) throw std::invalid_argument("algebra needs at least one basis element");
    table_.assign(n * n, Vec(field_, n));
    present_.assign(n * n, false);
}

Algebra::Builder& Algebra::Builder::set(std::size_t i, std::size_t j, Vec value) {
    std::size_t n = names_.size();
    if (i >= n || j >= n) throw std::out_of_range("basis index out of range");
    if (value.dim() != n) throw std::invalid_argument("product vector dimension mismatch");
    if (value.field() != field_) throw std::invalid_argument("product vector field mismatch");
    if (present_[i * n + j] && table_[i * n + j] != value)
        throw std::invalid_argument("conflicting product entries for (" +
                                    names_[i] + ", " + names_[j] + ")");
    table_[i * n + j] = value;
    table_[j * n + i] = std::move(value);
    present_[i * n + j] = present_[j * n + i] = true;
    return *this;
}

Algebra::Builder& Algebra::Builder::set(
    std::size_t i, std::size_t j,
    std::initializer_list<std::pair<std::size_t, Scalar>> terms) {
    Vec v(field_, names_.size());
    for (const auto& [k, s] : terms) v[k] += s;
    return set(i, j, std::move(v));
}

Algebra Algebra::Builder::build() {
    return Algebra(field_, std::move(names_), std::move(table_));
}

std::size_t Algebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return npos;
}

Vec Algebra::product(const Vec& x, const Vec& y) const {
    std::size_t n = dim();
    if (x.dim() != n || y.dim() != n)
        throw std::invalid_argument("vector dimension does not match algebra");
    if (x.field() != field_ || y.field() != field_)
        throw std::invalid_argument("vector field does not match algebra");
    Vec r(field_, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            const Vec& sc = structure_constant(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (!sc[k].is_zero()) r[k] += c * sc[k];
            }
        }
    }
    return r;
}

Matrix Algebra::left_mul_matrix(const Vec& e) const {
    std::size_t n = dim();
    if (e.dim() != n)
        throw std::invalid_argument("vector dimension does not match algebra");
    Matrix m(field_, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec col(field_, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i].is_zero()) continue;
            const Vec& sc = structure_constant(i, k);
            for (std::size_t r = 0; r < n; ++r)
                if (!sc[r].is_zero()) col[r] += e[i] * sc[r];
        }
        m.set_col(k, col);
    }
    return m;
}

bool Algebra::is_idempotent(const Vec& e) const {
    return product(e, e) == e;
}

Subspace subalgebra_generated(const Algebra& alg, const std::vector<Vec>& gens) {
    Subspace s = Subspace::span(alg.field(), alg.dim(), gens);
    for (;;) {
        std::vector<Vec> next;
        for (std::size_t i = 0; i < s.dim(); ++i) next.push_back(s.basis_vector(i));
        std::size_t base = next.size();
        for (std::size_t i = 0; i < base; ++i)
            for (std::size_t j = i; j < base; ++j)
                next.push_back(alg.product(next[i], next[j]));
        Subspace grown = Subspace::span(alg.field(), alg.dim(), next);
        if (grown.dim() == s.dim()) return s;
        s = std::move(grown);
    }
}

}  // namespace axc
