#include "axcheck/lazy.hpp"

#include <sstream>

namespace axc {

void SparseVec::add(BasisKey k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
}

SparseVec SparseVec::operator-() const {
    SparseVec v(field_);
    for (const auto& [k, c] : m_) v.m_.emplace(k, -c);
    return v;
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
    if (field_ != o.field_) throw std::invalid_argument("sparse vector field mismatch");
    for (const auto& [k, c] : o.m_) add(k, c);
    return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
    if (field_ != o.field_) throw std::invalid_argument("sparse vector field mismatch");
    for (const auto& [k, c] : o.m_) add(k, -c);
    return *this;
}

SparseVec& SparseVec::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        m_.clear();
        return *this;
    }
    for (auto& [k, c] : m_) c *= s;
    return *this;
}

std::string SparseVec::str() const {
    if (m_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : m_) {
        os << (first ? "" : " + ") << c.str() << "*" << k.str();
        first = false;
    }
    return os.str();
}

SparseVec LazyAlgebra::product(const SparseVec& x, const SparseVec& y) const {
    if (x.field() != field_ || y.field() != field_)
        throw std::invalid_argument("sparse vector field does not match algebra");
    SparseVec r(field_);
    for (const auto& [ka, ca] : x.terms())
        for (const auto& [kb, cb] : y.terms()) {
            SparseVec term = rule_(ka, kb);
            term *= ca * cb;
            r += term;
        }
    return r;
}

}  // namespace axc
