#pragma once

#include <optional>
#include <random>

#include "axcheck/martindale.hpp"
#include "axcheck/zoo.hpp"

namespace axc::testing {

inline FieldSpec QQ() { return FieldSpec::rationals(); }

inline Scalar q(long num, long den = 1) {
    return Scalar::fraction(QQ(), num, den);
}

inline Vec vec(const FieldSpec& f, std::initializer_list<long> coords) {
    Vec v(f, coords.size());
    std::size_t i = 0;
    for (long c : coords) v[i++] = Scalar(f, c);
    return v;
}

inline Vec random_vec(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Vec v(f, n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = f.kind == FieldKind::Rationals ? Scalar::fraction(f, num(rng), den(rng))
                                              : Scalar(f, num(rng));
    return v;
}

/// Reduction of a rational algebra mod p; nullopt when a denominator
/// vanishes mod p.
inline std::optional<Algebra> reduce_mod(const Algebra& alg, unsigned long p) {
    FieldSpec fp = FieldSpec::prime(p);
    Algebra::Builder b(fp, alg.basis_names());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = i; j < alg.dim(); ++j) {
            Vec v(fp, alg.dim());
            for (std::size_t k = 0; k < alg.dim(); ++k) {
                const mpq_class& x = alg.structure_constant(i, j)[k].value();
                if (mpz_class(x.get_den() % p) == 0) return std::nullopt;
                v[k] = Scalar::from_mpq(fp, x);
            }
            b.set(i, j, std::move(v));
        }
    return b.build();
}

/// Element-by-element Martindale condition: for every algebra element a in
/// `part`, if t a = 0 for every element t of `mult`, then a = 0. Walks all
/// p^dim elements, not just bases.
inline bool brute_condition(const Algebra& alg, const Subspace& part,
                            const Subspace& mult) {
    unsigned long p = alg.field().modulus;
    std::size_t n = alg.dim();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (std::uint64_t ia = 0; ia < total; ++ia) {
        Vec a(alg.field(), n);
        std::uint64_t t = ia;
        for (std::size_t k = n; k-- > 0;) {
            a[k] = Scalar(alg.field(), static_cast<long>(t % p));
            t /= p;
        }
        if (a.is_zero() || !part.contains(a)) continue;
        bool annihilated = true;
        for (std::uint64_t im = 0; im < total && annihilated; ++im) {
            Vec m(alg.field(), n);
            std::uint64_t u = im;
            for (std::size_t k = n; k-- > 0;) {
                m[k] = Scalar(alg.field(), static_cast<long>(u % p));
                u /= p;
            }
            if (!mult.contains(m)) continue;
            if (!alg.product(m, a).is_zero()) annihilated = false;
        }
        if (annihilated) return false;  // nonzero annihilated element exists
    }
    return true;
}

struct BruteJ {
    bool i, ii, iii;
};

inline BruteJ brute_j_conditions(const Algebra& alg, const AxisDecomposition& d) {
    std::size_t one = d.law.index_of_one();
    std::size_t zero = d.law.index_of_zero();
    std::size_t a = d.law.extra_indices()[0];
    BruteJ r{};
    r.i = brute_condition(alg, d.parts[one], d.parts[a]) &&
          brute_condition(alg, d.parts[zero], d.parts[a]);
    r.ii = brute_condition(alg, d.parts[zero], d.parts[zero]);
    r.iii = brute_condition(alg, d.parts[a], d.parts[zero]);
    return r;
}

struct BruteM {
    bool i, ii, iii, iv, v;
};

inline BruteM brute_m_conditions(const Algebra& alg, const AxisDecomposition& d) {
    std::size_t one = d.law.index_of_one();
    std::size_t zero = d.law.index_of_zero();
    auto extra = d.law.extra_indices();
    BruteM r{};
    r.i = brute_condition(alg, d.parts[one], d.parts[extra[0]]) &&
          brute_condition(alg, d.parts[zero], d.parts[extra[0]]);
    r.ii = brute_condition(alg, d.parts[zero], d.parts[zero]);
    r.iii = brute_condition(alg, d.parts[extra[0]], d.parts[zero]) &&
            brute_condition(alg, d.parts[extra[1]], d.parts[zero]);
    r.iv = brute_condition(alg, d.parts[extra[1]], d.parts[extra[0]]);
    r.v = brute_condition(alg, d.parts[extra[0]], d.parts[extra[1]]);
    return r;
}

}  // namespace axc::testing
