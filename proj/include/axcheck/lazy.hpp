#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "axcheck/scalar.hpp"

namespace axc {

/// Symbolic basis key for algebras over a countable basis, e.g. a(i) and
/// s(j) for the Highwater algebra.
struct BasisKey {
    char fam;
    long index;

    auto operator<=>(const BasisKey&) const = default;
    std::string str() const { return std::string(1, fam) + "(" + std::to_string(index) + ")"; }
};

/// Finitely supported vector over a countable basis. Zero coefficients are
/// pruned on every write, so equality is structural.
class SparseVec {
public:
    SparseVec() : field_(FieldSpec::rationals()) {}
    explicit SparseVec(const FieldSpec& f) : field_(f) {}

    static SparseVec basis(const FieldSpec& f, BasisKey k) {
        SparseVec v(f);
        v.add(k, Scalar::one(f));
        return v;
    }

    const FieldSpec& field() const { return field_; }
    const std::map<BasisKey, Scalar>& terms() const { return m_; }
    bool is_zero() const { return m_.empty(); }
    std::size_t support_size() const { return m_.size(); }

    Scalar coeff(BasisKey k) const {
        auto it = m_.find(k);
        return it == m_.end() ? Scalar::zero(field_) : it->second;
    }

    void add(BasisKey k, const Scalar& c);

    SparseVec operator-() const;
    SparseVec& operator+=(const SparseVec& o);
    SparseVec& operator-=(const SparseVec& o);
    SparseVec& operator*=(const Scalar& s);
    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend SparseVec operator*(const Scalar& s, SparseVec v) { return v *= s; }
    bool operator==(const SparseVec& o) const {
        return field_ == o.field_ && m_ == o.m_;
    }
    bool operator!=(const SparseVec& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldSpec field_;
    std::map<BasisKey, Scalar> m_;
};

/// Commutative algebra over a countable basis: a pure product rule on
/// basis keys, extended bilinearly. Products of finitely supported
/// vectors stay finitely supported by construction of the rule.
class LazyAlgebra {
public:
    using ProductRule = std::function<SparseVec(BasisKey, BasisKey)>;

    LazyAlgebra(FieldSpec f, ProductRule rule)
        : field_(f), rule_(std::move(rule)) {}

    const FieldSpec& field() const { return field_; }

    SparseVec product(BasisKey a, BasisKey b) const { return rule_(a, b); }
    SparseVec product(const SparseVec& x, const SparseVec& y) const;

    bool is_idempotent(const SparseVec& e) const { return product(e, e) == e; }

private:
    FieldSpec field_;
    ProductRule rule_;
};

}  // namespace axc
