#include "axcheck/enumeration.hpp"

namespace axc {

FiniteModel::FiniteModel(Algebra alg, std::uint64_t max_size)
    : alg_(std::move(alg)) {
    if (alg_.field().kind != FieldKind::PrimeField)
        throw std::invalid_argument("element enumeration needs a prime field");
    p_ = alg_.field().modulus;
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < alg_.dim(); ++i) {
        s *= p_;
        if (s > max_size)
            throw std::invalid_argument("algebra has more than " +
                                        std::to_string(max_size) + " elements");
    }
    size_ = static_cast<std::uint32_t>(s);
    pow_.assign(alg_.dim(), 1);
    for (std::size_t k = alg_.dim(); k-- > 1;)
        pow_[k - 1] = pow_[k] * static_cast<std::uint32_t>(p_);
    // structure-constant residues: sc[(i*dim + j)*dim + k]
    std::size_t n = alg_.dim();
    if (n > 16)
        throw std::invalid_argument("element enumeration limited to dimension 16");
    sc_.assign(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& v = alg_.structure_constant(i, j);
            for (std::size_t k = 0; k < n; ++k)
                sc_[(i * n + j) * n + k] = v[k].value().get_num().get_si();
        }
    if (static_cast<std::uint64_t>(size_) * size_ <= (1u << 23)) {
        mul_tab_.resize(static_cast<std::size_t>(size_) * size_);
        add_tab_.resize(static_cast<std::size_t>(size_) * size_);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b <= a; ++b) {
                std::uint32_t m = mul_slow(a, b);
                mul_tab_[static_cast<std::size_t>(a) * size_ + b] = m;
                mul_tab_[static_cast<std::size_t>(b) * size_ + a] = m;
                std::uint32_t s2 = 0;
                for (std::size_t k = 0; k < alg_.dim(); ++k) {
                    unsigned long da = (a / pow_[k]) % p_;
                    unsigned long db = (b / pow_[k]) % p_;
                    s2 += static_cast<std::uint32_t>((da + db) % p_) * pow_[k];
                }
                add_tab_[static_cast<std::size_t>(a) * size_ + b] = s2;
                add_tab_[static_cast<std::size_t>(b) * size_ + a] = s2;
            }
    }
}

std::uint32_t FiniteModel::mul_slow(std::uint32_t a, std::uint32_t b) const {
    std::size_t n = alg_.dim();
    unsigned long da[16], db[16], acc[16];
    for (std::size_t k = 0; k < n; ++k) {
        da[k] = (a / pow_[k]) % p_;
        db[k] = (b / pow_[k]) % p_;
        acc[k] = 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (da[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (db[j] == 0) continue;
            unsigned long w = da[i] * db[j] % p_;
            const long* row = &sc_[(i * n + j) * n];
            for (std::size_t k = 0; k < n; ++k) {
                if (row[k] == 0) continue;
                acc[k] = (acc[k] + w * static_cast<unsigned long>(row[k])) % p_;
            }
        }
    }
    std::uint32_t out = 0;
    for (std::size_t k = 0; k < n; ++k)
        out += static_cast<std::uint32_t>(acc[k]) * pow_[k];
    return out;
}

std::uint32_t FiniteModel::mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_tab_.empty())
        return mul_tab_[static_cast<std::size_t>(a) * size_ + b];
    return mul_slow(a, b);
}

std::uint32_t FiniteModel::add(std::uint32_t a, std::uint32_t b) const {
    if (!add_tab_.empty())
        return add_tab_[static_cast<std::size_t>(a) * size_ + b];
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < alg_.dim(); ++k) {
        unsigned long da = (a / pow_[k]) % p_;
        unsigned long db = (b / pow_[k]) % p_;
        s += static_cast<std::uint32_t>((da + db) % p_) * pow_[k];
    }
    return s;
}

std::uint32_t FiniteModel::neg(std::uint32_t a) const {
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < alg_.dim(); ++k) {
        unsigned long da = (a / pow_[k]) % p_;
        s += static_cast<std::uint32_t>((p_ - da) % p_) * pow_[k];
    }
    return s;
}

std::uint32_t FiniteModel::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t FiniteModel::encode(const Vec& v) const {
    if (v.dim() != alg_.dim() || v.field() != alg_.field())
        throw std::invalid_argument("vector does not match the enumerated algebra");
    std::uint32_t idx = 0;
    for (std::size_t k = 0; k < alg_.dim(); ++k) {
        unsigned long d = v[k].value().get_num().get_ui();
        idx += static_cast<std::uint32_t>(d) * pow_[k];
    }
    return idx;
}

Vec FiniteModel::decode(std::uint32_t idx) const {
    Vec v(alg_.field(), alg_.dim());
    for (std::size_t k = 0; k < alg_.dim(); ++k) {
        unsigned long d = (idx / pow_[k]) % p_;
        v[k] = Scalar(alg_.field(), static_cast<long>(d));
    }
    return v;
}

}  // namespace axc
