#pragma once

#include <map>

#include "axcheck/fusion.hpp"

namespace axc {

struct MartindaleWitness {
    std::string condition;  // "i", "ii", "iii", "iv", "v"
    Scalar part_eig;        // eigenvalue of the part the witness lives in
    Vec vector;             // nonzero, annihilated by the stated multiplier basis
};

struct MartindaleReportJ {
    bool cond_i = false, cond_ii = false, cond_iii = false;
    std::vector<MartindaleWitness> witnesses;
    bool all() const { return cond_i && cond_ii && cond_iii; }
};

struct MartindaleReportM {
    bool cond_i = false, cond_ii = false, cond_iii = false;
    bool cond_iv = false, cond_v = false;
    std::vector<MartindaleWitness> witnesses;
    bool all() const { return cond_i && cond_ii && cond_iii && cond_iv && cond_v; }
};

/// Conditions (i)-(iii) for a law with eigenvalues {1, 0, alpha}.
/// "For all t in A_x" quantifiers reduce to part-basis multipliers by
/// bilinearity; an empty multiplier part makes the quantifier vacuous, so
/// the condition fails whenever the tested part is nonzero.
MartindaleReportJ check_j_conditions(const Algebra& alg, const AxisDecomposition& d);

/// Conditions (i)-(v) for a law with eigenvalues {1, 0, alpha, beta}.
MartindaleReportM check_m_conditions(const Algebra& alg, const AxisDecomposition& d);

/// {a in part : t a = 0 for every basis multiplier t}, exact.
Subspace annihilated_in_part(const Algebra& alg, const Subspace& part,
                             const Subspace& multipliers);

// ---------------------------------------------------------------------------
// Operator words and families: the L_i / G / F_i machinery instantiated on
// concrete algebras. A word is L_{t_1} ... L_{t_k} with the rightmost factor
// applied first; families hold the basis-factor generator words, which
// suffice for the annihilation/kernel statements by multilinearity.

struct OperatorWord {
    std::vector<Vec> factors;
    Matrix mat;  // product of the factor multiplication matrices, in order
};

enum class FamilyTag { L1, L0, La, Lb, G, Fa, Fb, F1, F0 };
std::string family_tag_name(FamilyTag t);

struct OperatorFamily {
    FamilyTag tag = FamilyTag::L1;
    unsigned r = 1;
    std::vector<OperatorWord> words;
};

/// Families for the decomposition's law: {L1, L0, La, Fa, F1, F0} for a
/// three-eigenvalue law, {L1, L0, La, Lb, G, Fb, Fa, F1, F0} for four.
/// Throws when a family's generator count would exceed `cap`.
std::map<FamilyTag, OperatorFamily> build_operator_families(
    const Algebra& alg, const AxisDecomposition& d, unsigned r,
    std::size_t cap = 10000);

/// Every generator maps every part-basis vector to zero.
bool verify_family_annihilation(const OperatorFamily& fam, const Subspace& part);

/// (intersection of generator kernels) meets the part trivially.
bool verify_family_injectivity(const OperatorFamily& fam, const Subspace& part);

// ---------------------------------------------------------------------------
// Windowed variants for lazy algebras. Parts are generator lists aligned
// with the law order [1, 0, alpha(, beta)]; all results are quantified over
// the window only and reports carry the window.

struct LazyMartindaleReport {
    unsigned window = 0;
    std::vector<std::pair<std::string, bool>> conditions;  // "i".."v"
    std::vector<std::pair<std::string, SparseVec>> witnesses;
    bool all() const;
};

LazyMartindaleReport check_m_conditions_window(const LazyAlgebra& alg,
                                               const std::vector<LazyPart>& parts,
                                               unsigned window);

struct LazyWord {
    std::vector<SparseVec> factors;
};

SparseVec apply_word(const LazyAlgebra& alg, const LazyWord& w, const SparseVec& v);

std::map<FamilyTag, std::vector<LazyWord>> build_lazy_families(
    const LazyAlgebra& alg, const SparseVec& axis,
    const std::vector<LazyPart>& parts, unsigned r, std::size_t cap = 10000);

bool lazy_family_annihilation(const LazyAlgebra& alg,
                              const std::vector<LazyWord>& words,
                              const std::vector<SparseVec>& part_gens);

bool lazy_family_injectivity(const LazyAlgebra& alg,
                             const std::vector<LazyWord>& words,
                             const std::vector<SparseVec>& part_gens);

/// Stage list of a family in application order (rightmost stage applied
/// first); each stage holds the basis words of one L-family. Composing one
/// word per stage enumerates the family, but the kernel/annihilation
/// statements are linear in the stage images, so they can be decided by
/// stage-wise span propagation without materializing the cross product.
std::vector<std::vector<LazyWord>> lazy_family_stages(
    const SparseVec& axis, const std::vector<LazyPart>& parts, unsigned r,
    FamilyTag tag);

/// {c : W(sum_l c_l gens_l) = 0 for every word W composed of one choice per
/// stage}, as a subspace of the coefficient space F^|gens|. The family
/// annihilates span(gens) iff this is everything; it is injective on
/// span(gens) iff this is zero.
Subspace lazy_staged_kernel(const LazyAlgebra& alg,
                            const std::vector<std::vector<LazyWord>>& stages,
                            const std::vector<SparseVec>& gens);

}  // namespace axc
