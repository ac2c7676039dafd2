#include "axcheck/scalar.hpp"

namespace axc {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (unsigned long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(unsigned long p) {
    if (!is_prime(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) +
                                    " is not prime");
    return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
    return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(modulus);
}

Scalar::Scalar(const FieldSpec& f, long n) : field_(f), v_(n) { reduce_mod(); }

Scalar Scalar::fraction(const FieldSpec& f, long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Scalar s(f, num);
    s /= Scalar(f, den);
    return s;
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& q) {
    Scalar s;
    s.field_ = f;
    s.v_ = q;
    s.v_.canonicalize();
    if (f.kind == FieldKind::PrimeField) {
        mpz_class den = s.v_.get_den();
        mpz_class p(static_cast<unsigned long>(f.modulus));
        mpz_class num = s.v_.get_num() % p;
        if (num < 0) num += p;
        if (den == 1) {
            s.v_ = num;
        } else {
            mpz_class inv;
            if (mpz_invert(inv.get_mpz_t(), mpz_class(den % p).get_mpz_t(),
                           p.get_mpz_t()) == 0)
                throw std::domain_error("denominator not invertible mod " +
                                        std::to_string(f.modulus));
            s.v_ = (num * inv) % p;
        }
        s.reduce_mod();
    }
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::string t = text;
    if (t.empty()) throw std::invalid_argument("empty scalar literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class q(mpz_class(t), 1);
            return from_mpq(f, q);
        }
        mpz_class num(t.substr(0, slash));
        mpz_class den(t.substr(slash + 1));
        if (den == 0) throw std::domain_error("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return from_mpq(f, q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad scalar literal '" + text + "'");
    }
}

void Scalar::check_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("field mismatch: " + field_.str() +
                                    " vs " + o.field_.str());
}

void Scalar::reduce_mod() {
    if (field_.kind != FieldKind::PrimeField) return;
    mpz_class p(field_.modulus);
    mpz_class r = v_.get_num() % p;
    if (r < 0) r += p;
    v_ = r;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.v_ = -s.v_;
    s.reduce_mod();
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_field(o);
    v_ += o.v_;
    reduce_mod();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_field(o);
    v_ -= o.v_;
    reduce_mod();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_field(o);
    v_ *= o.v_;
    reduce_mod();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar s = *this;
    if (field_.kind == FieldKind::Rationals) {
        s.v_ = 1 / v_;
        return s;
    }
    mpz_class p(field_.modulus), inv;
    if (mpz_invert(inv.get_mpz_t(), mpz_class(v_.get_num()).get_mpz_t(),
                   p.get_mpz_t()) == 0)
        throw std::domain_error("non-invertible residue");
    s.v_ = inv;
    return s;
}

int Scalar::cmp(const Scalar& o) const {
    check_field(o);
    return ::cmp(v_, o.v_);
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::PrimeField) return v_.get_num().get_str();
    return v_.get_str();
}

}  // namespace axc
