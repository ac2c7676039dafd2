#pragma once

#include <functional>
#include <optional>

#include "axcheck/algebra.hpp"
#include "axcheck/lazy.hpp"

namespace axc {

/// Symmetric fusion table over a declared eigenvalue list. Entries are
/// stored as sorted index lists into the eigenvalue list; pairs outside
/// the declared list are implicitly empty.
class FusionLaw {
public:
    static FusionLaw assoc(const FieldSpec& f);
    static FusionLaw jordan(const Scalar& eta);
    static FusionLaw monster(const Scalar& alpha, const Scalar& beta);
    static FusionLaw highwater(const FieldSpec& f);

    const std::string& name() const { return name_; }
    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return eigs_.size(); }
    const std::vector<Scalar>& eigenvalues() const { return eigs_; }
    const Scalar& eigenvalue(std::size_t i) const { return eigs_[i]; }
    const std::vector<std::size_t>& entry(std::size_t i, std::size_t j) const {
        return table_[i * size() + j];
    }
    bool allows(std::size_t i, std::size_t j, std::size_t k) const;
    std::optional<std::size_t> index_of(const Scalar& s) const;

    std::size_t index_of_one() const;
    std::size_t index_of_zero() const;
    /// Eigenvalue list is {1, 0, alpha}: the shape of the three-condition
    /// Martindale machinery.
    bool is_j_type() const;
    /// Eigenvalue list is {1, 0, alpha, beta}: five-condition machinery.
    bool is_m_type() const;
    /// The non-1, non-0 eigenvalue indices in declared order.
    std::vector<std::size_t> extra_indices() const;

    std::string str() const;

private:
    FusionLaw(std::string name, FieldSpec f, std::vector<Scalar> eigs);
    void set(std::size_t i, std::size_t j, std::vector<std::size_t> allowed);
    void validate() const;

    std::string name_;
    FieldSpec field_;
    std::vector<Scalar> eigs_;
    std::vector<std::vector<std::size_t>> table_;
};

/// builtin_law("jordan", {1/4}) etc.; names: assoc, jordan, monster, highwater.
FusionLaw builtin_law(const FieldSpec& f, const std::string& name,
                      const std::vector<Scalar>& params);

/// Eigenspace decomposition of an algebra at an idempotent axis, over the
/// eigenvalues of a fusion law. `complete` records the direct-sum witness.
struct AxisDecomposition {
    Vec axis;
    FusionLaw law;
    std::vector<Subspace> parts;  // aligned with law.eigenvalues()
    bool complete = false;

    const Subspace& part(std::size_t i) const { return parts[i]; }
    std::size_t total_dim() const;
};

AxisDecomposition decompose(const Algebra& alg, const Vec& axis,
                            const FusionLaw& law);

/// Exact projection onto the parts of a complete decomposition.
class EigenProjector {
public:
    EigenProjector(const Algebra& alg, const AxisDecomposition& d);
    /// Component of x in part i, as an ambient vector.
    Vec component(const Vec& x, std::size_t part_idx) const;
    std::vector<Vec> split(const Vec& x) const;

private:
    const AxisDecomposition* d_;
    Matrix stacked_;          // all part bases stacked
    Matrix coeff_;            // inverse of stacked^T
    std::vector<std::size_t> row_part_;
};

struct FusionViolation {
    static constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::size_t lam = none, mu = none;  // eigenvalue indices; none = decomposition failure
    std::optional<std::pair<std::size_t, std::size_t>> pair;  // part-basis row indices
    Vec witness;
    std::optional<Scalar> offending;  // forbidden component eigenvalue; nullopt = outside-spectrum
};

struct FusionReport {
    bool pass = false;
    std::vector<FusionViolation> violations;
};

FusionReport verify_fusion(const Algebra& alg, const Vec& axis, const FusionLaw& law);
FusionReport verify_fusion(const Algebra& alg, const AxisDecomposition& d);

bool is_primitive(const Algebra& alg, const AxisDecomposition& d);

struct AxialReport {
    bool ok = false;
    std::vector<FusionReport> per_axis;
    bool generation = false;
};

AxialReport verify_axial(const Algebra& alg, const std::vector<Vec>& axes,
                         const FusionLaw& law);

/// product(axis, v) == lambda * v, exactly.
bool check_eigenvector_window(const LazyAlgebra& alg, BasisKey axis,
                              const SparseVec& v, const Scalar& lambda);

/// One declared eigenspace of a lazy algebra, restricted to a generator window.
struct LazyPart {
    Scalar eig;
    std::vector<SparseVec> gens;
};

/// Exact membership of `target` in the span of `gens`.
bool sparse_in_span(const std::vector<SparseVec>& gens, const SparseVec& target);

/// Independent spanning set for the span of `vecs` (RREF over the key union).
std::vector<SparseVec> sparse_reduce_basis(const std::vector<SparseVec>& vecs);

/// Coefficients of `target` over `gens`, or nullopt when outside the span.
std::optional<Vec> sparse_coordinates(const std::vector<SparseVec>& gens,
                                      const SparseVec& target);

struct LazyFusionViolation {
    std::size_t lam, mu;  // eigenvalue indices; gi/gj generator indices
    std::size_t gi, gj;
    std::string reason;   // "not-eigenvector" or "outside-allowed-parts"
    SparseVec witness;
};

struct LazyFusionReport {
    bool pass = false;
    unsigned window = 0;
    std::vector<LazyFusionViolation> violations;
};

/// Windowed fusion check: every generator must be an exact eigenvector of
/// the axis, and every generator-pair product must lie in the span of the
/// allowed parts' generators (`span_parts`, typically a window twice as wide).
LazyFusionReport lazy_verify_fusion(const LazyAlgebra& alg, const SparseVec& axis,
                                    const FusionLaw& law,
                                    const std::vector<LazyPart>& parts,
                                    const std::vector<LazyPart>& span_parts,
                                    unsigned window);

}  // namespace axc
