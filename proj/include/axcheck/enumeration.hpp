#pragma once

#include <cstdint>
#include <memory>

#include "axcheck/algebra.hpp"

namespace axc {

/// Canonical element enumeration of a finite-field algebra: coordinates are
/// digits in [0, p), the element index is the base-p integer with the first
/// coordinate most significant, so index order is lexicographic coordinate
/// order. Product and sum tables are precomputed for small sizes.
class FiniteModel {
public:
    explicit FiniteModel(Algebra alg, std::uint64_t max_size = 1u << 20);

    const Algebra& algebra() const { return alg_; }
    unsigned long p() const { return p_; }
    std::size_t dim() const { return alg_.dim(); }
    std::uint32_t size() const { return size_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;

    std::uint32_t encode(const Vec& v) const;
    Vec decode(std::uint32_t idx) const;

    bool is_idempotent(std::uint32_t a) const { return mul(a, a) == a; }

private:
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

    Algebra alg_;
    unsigned long p_;
    std::uint32_t size_;
    std::vector<std::uint32_t> pow_;             // p^(dim-1-k)
    std::vector<long> sc_;                       // residues of structure constants
    std::vector<std::uint32_t> mul_tab_, add_tab_;  // empty when size too large
};

}  // namespace axc
