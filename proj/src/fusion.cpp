#include "axcheck/fusion.hpp"

#include <algorithm>
#include <sstream>

namespace axc {

FusionLaw::FusionLaw(std::string name, FieldSpec f, std::vector<Scalar> eigs)
    : name_(std::move(name)), field_(f), eigs_(std::move(eigs)) {
    table_.assign(size() * size(), {});
}

void FusionLaw::set(std::size_t i, std::size_t j, std::vector<std::size_t> allowed) {
    std::sort(allowed.begin(), allowed.end());
    table_[i * size() + j] = allowed;
    table_[j * size() + i] = std::move(allowed);
}

void FusionLaw::validate() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (eigs_[i] == eigs_[j])
                throw std::invalid_argument("fusion law '" + name_ +
                                            "': eigenvalues collide (" +
                                            eigs_[i].str() + ")");
    bool has_one = false;
    for (const auto& e : eigs_) has_one = has_one || e.is_one();
    if (!has_one)
        throw std::invalid_argument("fusion law '" + name_ +
                                    "' must contain the axis eigenvalue 1");
    for (const auto& entry : table_)
        for (auto k : entry)
            if (k >= size())
                throw std::invalid_argument("fusion table entry outside eigenvalue list");
}

bool FusionLaw::allows(std::size_t i, std::size_t j, std::size_t k) const {
    const auto& e = entry(i, j);
    return std::binary_search(e.begin(), e.end(), k);
}

std::optional<std::size_t> FusionLaw::index_of(const Scalar& s) const {
    for (std::size_t i = 0; i < eigs_.size(); ++i)
        if (eigs_[i] == s) return i;
    return std::nullopt;
}

std::size_t FusionLaw::index_of_one() const {
    for (std::size_t i = 0; i < eigs_.size(); ++i)
        if (eigs_[i].is_one()) return i;
    throw std::logic_error("law without eigenvalue 1");
}

std::size_t FusionLaw::index_of_zero() const {
    for (std::size_t i = 0; i < eigs_.size(); ++i)
        if (eigs_[i].is_zero()) return i;
    throw std::invalid_argument("law '" + name_ + "' has no eigenvalue 0");
}

bool FusionLaw::is_j_type() const {
    if (size() != 3) return false;
    bool one = false, zero = false;
    for (const auto& e : eigs_) {
        one = one || e.is_one();
        zero = zero || e.is_zero();
    }
    return one && zero;
}

bool FusionLaw::is_m_type() const {
    if (size() != 4) return false;
    bool one = false, zero = false;
    for (const auto& e : eigs_) {
        one = one || e.is_one();
        zero = zero || e.is_zero();
    }
    return one && zero;
}

std::vector<std::size_t> FusionLaw::extra_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < eigs_.size(); ++i)
        if (!eigs_[i].is_one() && !eigs_[i].is_zero()) out.push_back(i);
    return out;
}

std::string FusionLaw::str() const {
    std::ostringstream os;
    os << name_ << " over " << field_.str() << ", eigenvalues {";
    for (std::size_t i = 0; i < eigs_.size(); ++i)
        os << (i ? ", " : "") << eigs_[i].str();
    os << "}";
    return os.str();
}

FusionLaw FusionLaw::assoc(const FieldSpec& f) {
    FusionLaw law("assoc", f, {Scalar::one(f), Scalar::zero(f)});
    law.set(0, 0, {0});
    law.set(0, 1, {});
    law.set(1, 1, {1});
    law.validate();
    return law;
}

FusionLaw FusionLaw::jordan(const Scalar& eta) {
    const FieldSpec& f = eta.field();
    if (eta.is_zero() || eta.is_one())
        throw std::invalid_argument("jordan law requires eta outside {0, 1}, got " +
                                    eta.str());
    FusionLaw law("jordan", f, {Scalar::one(f), Scalar::zero(f), eta});
    law.set(0, 0, {0});
    law.set(0, 1, {});
    law.set(0, 2, {2});
    law.set(1, 1, {1});
    law.set(1, 2, {2});
    law.set(2, 2, {0, 1});
    law.validate();
    return law;
}

FusionLaw FusionLaw::monster(const Scalar& alpha, const Scalar& beta) {
    const FieldSpec& f = alpha.field();
    if (beta.field() != f) throw std::invalid_argument("monster law parameter field mismatch");
    if (alpha.is_zero() || alpha.is_one())
        throw std::invalid_argument("monster law requires alpha outside {0, 1}, got " +
                                    alpha.str());
    if (beta.is_zero() || beta.is_one())
        throw std::invalid_argument("monster law requires beta outside {0, 1}, got " +
                                    beta.str());
    if (alpha == beta)
        throw std::invalid_argument("monster law requires alpha != beta, got " +
                                    alpha.str());
    FusionLaw law("monster", f,
                  {Scalar::one(f), Scalar::zero(f), alpha, beta});
    law.set(0, 0, {0});
    law.set(0, 1, {});
    law.set(0, 2, {2});
    law.set(0, 3, {3});
    law.set(1, 1, {1});
    law.set(1, 2, {2});
    law.set(1, 3, {3});
    law.set(2, 2, {0, 1});
    law.set(2, 3, {3});
    law.set(3, 3, {0, 1, 2});
    law.validate();
    return law;
}

FusionLaw FusionLaw::highwater(const FieldSpec& f) {
    if (f.characteristic() == 2 || f.characteristic() == 3)
        throw std::invalid_argument(
            "highwater law needs 2 and 1/2 distinct from {0, 1}: characteristic " +
            std::to_string(f.characteristic()) + " excluded");
    Scalar two(f, 2);
    Scalar half = Scalar::fraction(f, 1, 2);
    FusionLaw law("highwater", f, {Scalar::one(f), Scalar::zero(f), two, half});
    law.set(0, 0, {0});
    law.set(0, 1, {});
    law.set(0, 2, {2});
    law.set(0, 3, {3});
    law.set(1, 1, {1});
    law.set(1, 2, {2});
    law.set(1, 3, {3});
    law.set(2, 2, {1});   // {0}: index 1 is the eigenvalue 0
    law.set(2, 3, {3});
    law.set(3, 3, {1, 2});  // {0, 2}
    law.validate();
    return law;
}

FusionLaw builtin_law(const FieldSpec& f, const std::string& name,
                      const std::vector<Scalar>& params) {
    auto arity = [&](std::size_t want) {
        if (params.size() != want)
            throw std::invalid_argument("law '" + name + "' takes " +
                                        std::to_string(want) + " parameter(s)");
    };
    if (name == "assoc") {
        arity(0);
        return FusionLaw::assoc(f);
    }
    if (name == "jordan") {
        arity(1);
        return FusionLaw::jordan(params[0]);
    }
    if (name == "monster") {
        arity(2);
        return FusionLaw::monster(params[0], params[1]);
    }
    if (name == "highwater") {
        arity(0);
        return FusionLaw::highwater(f);
    }
    throw std::invalid_argument("unknown fusion law '" + name + "'");
}

std::size_t AxisDecomposition::total_dim() const {
    std::size_t t = 0;
    for (const auto& p : parts) t += p.dim();
    return t;
}

AxisDecomposition decompose(const Algebra& alg, const Vec& axis,
                            const FusionLaw& law) {
    if (law.field() != alg.field())
        throw std::invalid_argument("law field does not match algebra field");
    if (axis.is_zero())
        throw std::invalid_argument("axis must be a nonzero idempotent");
    if (!alg.is_idempotent(axis))
        throw std::invalid_argument("axis is not idempotent");
    Matrix L = alg.left_mul_matrix(axis);
    AxisDecomposition d{axis, law, {}, false};
    for (const auto& eig : law.eigenvalues())
        d.parts.push_back(eigenspace(L, eig));
    d.complete = is_direct_sum(d.parts, alg.dim());
    return d;
}

EigenProjector::EigenProjector(const Algebra& alg, const AxisDecomposition& d)
    : d_(&d) {
    if (!d.complete)
        throw std::invalid_argument("projection needs a complete decomposition");
    std::size_t n = alg.dim();
    stacked_ = Matrix(alg.field(), n, n);
    std::size_t r = 0;
    for (std::size_t p = 0; p < d.parts.size(); ++p) {
        for (std::size_t i = 0; i < d.parts[p].dim(); ++i, ++r) {
            stacked_.set_row(r, d.parts[p].basis_vector(i));
            row_part_.push_back(p);
        }
    }
    auto inv = inverse(stacked_.transpose());
    if (!inv) throw std::logic_error("complete decomposition must be invertible");
    coeff_ = std::move(*inv);
}

Vec EigenProjector::component(const Vec& x, std::size_t part_idx) const {
    Vec c = coeff_.apply(x);
    Vec out(x.field(), x.dim());
    for (std::size_t r = 0; r < row_part_.size(); ++r) {
        if (row_part_[r] != part_idx || c[r].is_zero()) continue;
        out += c[r] * stacked_.row(r);
    }
    return out;
}

std::vector<Vec> EigenProjector::split(const Vec& x) const {
    std::vector<Vec> parts(d_->parts.size(), Vec(x.field(), x.dim()));
    Vec c = coeff_.apply(x);
    for (std::size_t r = 0; r < row_part_.size(); ++r) {
        if (c[r].is_zero()) continue;
        parts[row_part_[r]] += c[r] * stacked_.row(r);
    }
    return parts;
}

FusionReport verify_fusion(const Algebra& alg, const Vec& axis,
                           const FusionLaw& law) {
    return verify_fusion(alg, decompose(alg, axis, law));
}

FusionReport verify_fusion(const Algebra& alg, const AxisDecomposition& d) {
    FusionReport rep;
    if (!d.complete) {
        // Eigenvectors outside the law's spectrum: the part sum is proper.
        Subspace total = Subspace::zero(alg.field(), alg.dim());
        for (const auto& p : d.parts) total = subspace_sum(total, p);
        Vec witness(alg.field(), alg.dim());
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            Vec b = alg.basis_vec(k);
            if (!total.contains(b)) { witness = b; break; }
        }
        rep.pass = false;
        rep.violations.push_back(FusionViolation{
            FusionViolation::none, FusionViolation::none, std::nullopt, witness,
            std::nullopt});
        return rep;
    }
    EigenProjector proj(alg, d);
    const auto& law = d.law;
    for (std::size_t lam = 0; lam < law.size(); ++lam) {
        for (std::size_t mu = lam; mu < law.size(); ++mu) {
            const auto& allowed = law.entry(lam, mu);
            for (std::size_t i = 0; i < d.parts[lam].dim(); ++i) {
                std::size_t j0 = (lam == mu) ? i : 0;
                for (std::size_t j = j0; j < d.parts[mu].dim(); ++j) {
                    Vec prod = alg.product(d.parts[lam].basis_vector(i),
                                           d.parts[mu].basis_vector(j));
                    if (prod.is_zero()) continue;
                    auto comps = proj.split(prod);
                    for (std::size_t k = 0; k < comps.size(); ++k) {
                        if (comps[k].is_zero()) continue;
                        if (std::binary_search(allowed.begin(), allowed.end(), k))
                            continue;
                        rep.violations.push_back(FusionViolation{
                            lam, mu, std::make_pair(i, j), comps[k],
                            law.eigenvalue(k)});
                    }
                }
            }
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

bool is_primitive(const Algebra& alg, const AxisDecomposition& d) {
    if (!d.complete)
        throw std::invalid_argument("primitivity needs a complete decomposition");
    Subspace axis_line = Subspace::span(alg.field(), alg.dim(), {d.axis});
    return d.parts[d.law.index_of_one()] == axis_line;
}

AxialReport verify_axial(const Algebra& alg, const std::vector<Vec>& axes,
                         const FusionLaw& law) {
    AxialReport rep;
    bool fusion_ok = true;
    for (const auto& a : axes) {
        rep.per_axis.push_back(verify_fusion(alg, a, law));
        fusion_ok = fusion_ok && rep.per_axis.back().pass;
    }
    rep.generation =
        subalgebra_generated(alg, axes) == Subspace::full(alg.field(), alg.dim());
    rep.ok = fusion_ok && rep.generation && !axes.empty();
    return rep;
}

bool check_eigenvector_window(const LazyAlgebra& alg, BasisKey axis,
                              const SparseVec& v, const Scalar& lambda) {
    SparseVec lhs = alg.product(SparseVec::basis(alg.field(), axis), v);
    SparseVec rhs = v;
    rhs *= lambda;
    return lhs == rhs;
}

namespace {

std::vector<BasisKey> key_union(const std::vector<SparseVec>& vecs,
                                const SparseVec* extra = nullptr) {
    std::vector<BasisKey> keys;
    auto collect = [&](const SparseVec& v) {
        for (const auto& [k, c] : v.terms()) {
            (void)c;
            if (std::find(keys.begin(), keys.end(), k) == keys.end())
                keys.push_back(k);
        }
    };
    for (const auto& v : vecs) collect(v);
    if (extra) collect(*extra);
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

std::optional<Vec> sparse_coordinates(const std::vector<SparseVec>& gens,
                                      const SparseVec& target) {
    const FieldSpec& f = target.field();
    if (target.is_zero()) return Vec(f, gens.size());
    if (gens.empty()) return std::nullopt;
    auto keys = key_union(gens, &target);
    Matrix m(f, keys.size(), gens.size());
    Vec b(f, keys.size());
    for (std::size_t r = 0; r < keys.size(); ++r) {
        for (std::size_t c = 0; c < gens.size(); ++c)
            m.at(r, c) = gens[c].coeff(keys[r]);
        b[r] = target.coeff(keys[r]);
    }
    return solve(m, b);
}

bool sparse_in_span(const std::vector<SparseVec>& gens, const SparseVec& target) {
    return sparse_coordinates(gens, target).has_value();
}

std::vector<SparseVec> sparse_reduce_basis(const std::vector<SparseVec>& vecs) {
    std::vector<SparseVec> nonzero;
    for (const auto& v : vecs)
        if (!v.is_zero()) nonzero.push_back(v);
    if (nonzero.empty()) return {};
    const FieldSpec& f = nonzero.front().field();
    auto keys = key_union(nonzero);
    Matrix m(f, nonzero.size(), keys.size());
    for (std::size_t r = 0; r < nonzero.size(); ++r)
        for (std::size_t c = 0; c < keys.size(); ++c)
            m.at(r, c) = nonzero[r].coeff(keys[c]);
    auto pivots = rref_in_place(m);
    std::vector<SparseVec> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        SparseVec v(f);
        for (std::size_t c = 0; c < keys.size(); ++c) v.add(keys[c], m.at(r, c));
        out.push_back(std::move(v));
    }
    return out;
}

LazyFusionReport lazy_verify_fusion(const LazyAlgebra& alg, const SparseVec& axis,
                                    const FusionLaw& law,
                                    const std::vector<LazyPart>& parts,
                                    const std::vector<LazyPart>& span_parts,
                                    unsigned window) {
    if (parts.size() != law.size() || span_parts.size() != law.size())
        throw std::invalid_argument("parts must align with the law's eigenvalues");
    LazyFusionReport rep;
    rep.window = window;
    for (std::size_t lam = 0; lam < parts.size(); ++lam) {
        if (!(parts[lam].eig == law.eigenvalue(lam)))
            throw std::invalid_argument("part eigenvalue order mismatch");
        for (std::size_t i = 0; i < parts[lam].gens.size(); ++i) {
            SparseVec lhs = alg.product(axis, parts[lam].gens[i]);
            SparseVec rhs = parts[lam].gens[i];
            rhs *= parts[lam].eig;
            if (lhs != rhs)
                rep.violations.push_back(LazyFusionViolation{
                    lam, lam, i, i, "not-eigenvector", lhs - rhs});
        }
    }
    for (std::size_t lam = 0; lam < parts.size(); ++lam) {
        for (std::size_t mu = lam; mu < parts.size(); ++mu) {
            std::vector<SparseVec> allowed_gens;
            for (auto k : law.entry(lam, mu))
                for (const auto& g : span_parts[k].gens) allowed_gens.push_back(g);
            for (std::size_t i = 0; i < parts[lam].gens.size(); ++i) {
                std::size_t jstart = (lam == mu) ? i : 0;
                for (std::size_t j = jstart; j < parts[mu].gens.size(); ++j) {
                    SparseVec prod =
                        alg.product(parts[lam].gens[i], parts[mu].gens[j]);
                    if (!sparse_in_span(allowed_gens, prod))
                        rep.violations.push_back(LazyFusionViolation{
                            lam, mu, i, j, "outside-allowed-parts", prod});
                }
            }
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace axc
