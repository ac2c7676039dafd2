#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace axc {

enum class FieldKind { Rationals, PrimeField };

bool is_prime(unsigned long n);

/// Ground field: the rationals, or a prime field F_p.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    unsigned long modulus = 0;  // PrimeField only

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime(unsigned long p);

    unsigned long characteristic() const {
        return kind == FieldKind::PrimeField ? modulus : 0;
    }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

/// Exact field element. Rationals are kept reduced with positive
/// denominator; prime-field residues are canonical in [0, p).
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), v_(0) {}
    Scalar(const FieldSpec& f, long n);

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    static Scalar fraction(const FieldSpec& f, long num, long den);
    static Scalar from_mpq(const FieldSpec& f, const mpq_class& q);
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && v_ == o.v_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // total order within one field, for deterministic sorting
    int cmp(const Scalar& o) const;

    std::string str() const;

private:
    void check_field(const Scalar& o) const;
    void reduce_mod();

    FieldSpec field_;
    mpq_class v_;
};

}  // namespace axc
