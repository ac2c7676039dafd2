#include "axcheck/martindale.hpp"

#include <algorithm>

namespace axc {

Subspace annihilated_in_part(const Algebra& alg, const Subspace& part,
                             const Subspace& multipliers) {
    std::size_t k = part.dim();
    std::size_t n = alg.dim();
    if (k == 0) return part;
    if (multipliers.dim() == 0) return part;  // vacuous quantifier
    // rows: products (t_j * p_l) stacked per multiplier; columns: coefficients
    Matrix sys(alg.field(), multipliers.dim() * n, k);
    for (std::size_t j = 0; j < multipliers.dim(); ++j) {
        Vec t = multipliers.basis_vector(j);
        for (std::size_t l = 0; l < k; ++l) {
            Vec prod = alg.product(t, part.basis_vector(l));
            for (std::size_t r = 0; r < n; ++r) sys.at(j * n + r, l) = prod[r];
        }
    }
    Subspace coeff_kernel = kernel(sys);
    std::vector<Vec> lifted;
    for (std::size_t i = 0; i < coeff_kernel.dim(); ++i) {
        Vec c = coeff_kernel.basis_vector(i);
        Vec v(alg.field(), n);
        for (std::size_t l = 0; l < k; ++l)
            if (!c[l].is_zero()) v += c[l] * part.basis_vector(l);
        lifted.push_back(std::move(v));
    }
    return Subspace::span(alg.field(), n, lifted);
}

namespace {

// Evaluates one condition; appends a witness on failure.
bool condition(const Algebra& alg, const AxisDecomposition& d,
               std::size_t part_idx, std::size_t mult_idx,
               const std::string& name, std::vector<MartindaleWitness>& out) {
    Subspace bad = annihilated_in_part(alg, d.parts[part_idx], d.parts[mult_idx]);
    if (bad.dim() == 0) return true;
    out.push_back(MartindaleWitness{name, d.law.eigenvalue(part_idx),
                                    bad.basis_vector(0)});
    return false;
}

}  // namespace

MartindaleReportJ check_j_conditions(const Algebra& alg, const AxisDecomposition& d) {
    if (!d.complete)
        throw std::invalid_argument("Martindale conditions need a complete decomposition");
    if (!d.law.is_j_type())
        throw std::invalid_argument("conditions (i)-(iii) need a {1, 0, alpha} law");
    std::size_t one = d.law.index_of_one();
    std::size_t zero = d.law.index_of_zero();
    std::size_t a = d.law.extra_indices()[0];
    MartindaleReportJ rep;
    bool i1 = condition(alg, d, one, a, "i", rep.witnesses);
    bool i0 = condition(alg, d, zero, a, "i", rep.witnesses);
    rep.cond_i = i1 && i0;
    rep.cond_ii = condition(alg, d, zero, zero, "ii", rep.witnesses);
    rep.cond_iii = condition(alg, d, a, zero, "iii", rep.witnesses);
    return rep;
}

MartindaleReportM check_m_conditions(const Algebra& alg, const AxisDecomposition& d) {
    if (!d.complete)
        throw std::invalid_argument("Martindale conditions need a complete decomposition");
    if (!d.law.is_m_type())
        throw std::invalid_argument("conditions (i)-(v) need a {1, 0, alpha, beta} law");
    std::size_t one = d.law.index_of_one();
    std::size_t zero = d.law.index_of_zero();
    auto extra = d.law.extra_indices();
    std::size_t a = extra[0], b = extra[1];
    MartindaleReportM rep;
    bool i1 = condition(alg, d, one, a, "i", rep.witnesses);
    bool i0 = condition(alg, d, zero, a, "i", rep.witnesses);
    rep.cond_i = i1 && i0;
    rep.cond_ii = condition(alg, d, zero, zero, "ii", rep.witnesses);
    bool iii_a = condition(alg, d, a, zero, "iii", rep.witnesses);
    bool iii_b = condition(alg, d, b, zero, "iii", rep.witnesses);
    rep.cond_iii = iii_a && iii_b;
    rep.cond_iv = condition(alg, d, b, a, "iv", rep.witnesses);
    rep.cond_v = condition(alg, d, a, b, "v", rep.witnesses);
    return rep;
}

std::string family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::L1: return "L1";
        case FamilyTag::L0: return "L0";
        case FamilyTag::La: return "La";
        case FamilyTag::Lb: return "Lb";
        case FamilyTag::G: return "G";
        case FamilyTag::Fa: return "Fa";
        case FamilyTag::Fb: return "Fb";
        case FamilyTag::F1: return "F1";
        case FamilyTag::F0: return "F0";
    }
    return "?";
}

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t cap,
                        FamilyTag tag) {
    bool over = b != 0 && a > cap / b;
    std::size_t c = over ? cap + 1 : a * b;
    if (c > cap)
        throw std::invalid_argument(
            "operator family " + family_tag_name(tag) + " needs " +
            (over ? "more than " + std::to_string(cap) : std::to_string(c)) +
            " generators, cap is " + std::to_string(cap));
    return c;
}

OperatorFamily compose(FamilyTag tag, const OperatorFamily& left,
                       const OperatorFamily& right, std::size_t cap) {
    OperatorFamily fam;
    fam.tag = tag;
    fam.r = left.r;
    checked_mul(left.words.size(), right.words.size(), cap, tag);
    for (const auto& a : left.words)
        for (const auto& b : right.words) {
            OperatorWord w;
            w.factors = a.factors;
            w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
            w.mat = a.mat * b.mat;
            fam.words.push_back(std::move(w));
        }
    return fam;
}

}  // namespace

std::map<FamilyTag, OperatorFamily> build_operator_families(
    const Algebra& alg, const AxisDecomposition& d, unsigned r,
    std::size_t cap) {
    if (!d.complete)
        throw std::invalid_argument("operator families need a complete decomposition");
    if (r == 0) throw std::invalid_argument("word length parameter r must be positive");
    bool m_type = d.law.is_m_type();
    if (!m_type && !d.law.is_j_type())
        throw std::invalid_argument("operator families need a {1,0,alpha(,beta)} law");

    std::size_t zero = d.law.index_of_zero();
    auto extra = d.law.extra_indices();
    const Subspace& part0 = d.parts[zero];
    const Subspace& parta = d.parts[extra[0]];

    Matrix Le = alg.left_mul_matrix(d.axis);
    Matrix Le_pow = Matrix::identity(alg.field(), alg.dim());
    for (unsigned i = 0; i + 1 < r; ++i) Le_pow = Le_pow * Le;  // L_e^(r-1)

    std::map<FamilyTag, OperatorFamily> fams;

    // L1 = {L_e^r}
    {
        OperatorFamily f{FamilyTag::L1, r, {}};
        OperatorWord w;
        w.factors.assign(r, d.axis);
        w.mat = Le_pow * Le;
        f.words.push_back(std::move(w));
        fams[FamilyTag::L1] = std::move(f);
    }
    // L0 = words over an A_0 basis, length r
    {
        OperatorFamily f{FamilyTag::L0, r, {}};
        std::size_t k = part0.dim();
        std::size_t count = 1;
        for (unsigned i = 0; i < r; ++i) count = checked_mul(count, k, cap, FamilyTag::L0);
        std::vector<Matrix> mats;
        for (std::size_t i = 0; i < k; ++i)
            mats.push_back(alg.left_mul_matrix(part0.basis_vector(i)));
        std::vector<std::size_t> idx(r, 0);
        if (k > 0) {
            for (;;) {
                OperatorWord w;
                w.mat = Matrix::identity(alg.field(), alg.dim());
                for (unsigned i = 0; i < r; ++i) {
                    w.factors.push_back(part0.basis_vector(idx[i]));
                    w.mat = w.mat * mats[idx[i]];
                }
                f.words.push_back(std::move(w));
                unsigned pos = r;
                while (pos > 0 && ++idx[pos - 1] == k) idx[pos - 1] = 0, --pos;
                if (pos == 0) break;
            }
        }
        fams[FamilyTag::L0] = std::move(f);
    }
    // La (and Lb) = {L_e^(r-1) L_t : t a part basis vector}
    auto length_r_tail = [&](FamilyTag tag, const Subspace& part) {
        OperatorFamily f{tag, r, {}};
        for (std::size_t i = 0; i < part.dim(); ++i) {
            OperatorWord w;
            w.factors.assign(r - 1, d.axis);
            w.factors.push_back(part.basis_vector(i));
            w.mat = Le_pow * alg.left_mul_matrix(part.basis_vector(i));
            f.words.push_back(std::move(w));
        }
        return f;
    };
    fams[FamilyTag::La] = length_r_tail(FamilyTag::La, parta);

    if (!m_type) {
        fams[FamilyTag::Fa] = compose(FamilyTag::Fa, fams[FamilyTag::L0],
                                      fams[FamilyTag::L1], cap);
        fams[FamilyTag::F1] = compose(
            FamilyTag::F1,
            compose(FamilyTag::F1, fams[FamilyTag::Fa], fams[FamilyTag::La], cap),
            fams[FamilyTag::L1], cap);
        fams[FamilyTag::F0] = compose(
            FamilyTag::F0,
            compose(FamilyTag::F0, fams[FamilyTag::Fa], fams[FamilyTag::La], cap),
            fams[FamilyTag::L0], cap);
        return fams;
    }

    const Subspace& partb = d.parts[extra[1]];
    fams[FamilyTag::Lb] = length_r_tail(FamilyTag::Lb, partb);
    fams[FamilyTag::G] =
        compose(FamilyTag::G, fams[FamilyTag::L0], fams[FamilyTag::L1], cap);
    fams[FamilyTag::Fb] = compose(
        FamilyTag::Fb,
        compose(FamilyTag::Fb, fams[FamilyTag::G], fams[FamilyTag::La], cap),
        fams[FamilyTag::G], cap);
    fams[FamilyTag::Fa] = compose(
        FamilyTag::Fa,
        compose(FamilyTag::Fa, fams[FamilyTag::Fb], fams[FamilyTag::Lb], cap),
        fams[FamilyTag::G], cap);
    fams[FamilyTag::F1] = compose(
        FamilyTag::F1,
        compose(FamilyTag::F1, fams[FamilyTag::Fa], fams[FamilyTag::La], cap),
        fams[FamilyTag::L1], cap);
    fams[FamilyTag::F0] = compose(
        FamilyTag::F0,
        compose(FamilyTag::F0, fams[FamilyTag::Fa], fams[FamilyTag::La], cap),
        fams[FamilyTag::L0], cap);
    return fams;
}

bool verify_family_annihilation(const OperatorFamily& fam, const Subspace& part) {
    for (const auto& w : fam.words)
        for (std::size_t i = 0; i < part.dim(); ++i)
            if (!w.mat.apply(part.basis_vector(i)).is_zero()) return false;
    return true;
}

bool verify_family_injectivity(const OperatorFamily& fam, const Subspace& part) {
    std::size_t k = part.dim();
    if (k == 0) return true;
    if (fam.words.empty()) return false;  // empty intersection is the ambient space
    std::size_t n = part.ambient();
    Matrix sys(part.field(), fam.words.size() * n, k);
    for (std::size_t wi = 0; wi < fam.words.size(); ++wi)
        for (std::size_t l = 0; l < k; ++l) {
            Vec img = fam.words[wi].mat.apply(part.basis_vector(l));
            for (std::size_t r = 0; r < n; ++r) sys.at(wi * n + r, l) = img[r];
        }
    return kernel(sys).dim() == 0;
}

// ---------------------------------------------------------------------------
// Lazy (windowed) machinery.

bool LazyMartindaleReport::all() const {
    return !conditions.empty() &&
           std::all_of(conditions.begin(), conditions.end(),
                       [](const auto& c) { return c.second; });
}

namespace {

// Coefficient-space kernel of {c : t_j (sum c_l g_l) = 0 for all j}.
Subspace lazy_annihilated_coeffs(const LazyAlgebra& alg,
                                 const std::vector<SparseVec>& gens,
                                 const std::vector<SparseVec>& multipliers) {
    const FieldSpec& f = alg.field();
    std::size_t k = gens.size();
    if (k == 0) return Subspace::zero(f, 0);
    if (multipliers.empty()) return Subspace::full(f, k);  // vacuous
    std::vector<BasisKey> keys;
    std::vector<std::vector<SparseVec>> prods(multipliers.size());
    for (std::size_t j = 0; j < multipliers.size(); ++j) {
        for (std::size_t l = 0; l < k; ++l) {
            prods[j].push_back(alg.product(multipliers[j], gens[l]));
            for (const auto& [key, c] : prods[j][l].terms()) {
                (void)c;
                if (std::find(keys.begin(), keys.end(), key) == keys.end())
                    keys.push_back(key);
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    Matrix sys(f, multipliers.size() * keys.size(), k);
    for (std::size_t j = 0; j < multipliers.size(); ++j)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t r = 0; r < keys.size(); ++r)
                sys.at(j * keys.size() + r, l) = prods[j][l].coeff(keys[r]);
    return kernel(sys);
}

SparseVec combine(const std::vector<SparseVec>& gens, const Vec& coeffs) {
    SparseVec v(gens.empty() ? FieldSpec::rationals() : gens.front().field());
    for (std::size_t l = 0; l < gens.size(); ++l) {
        if (coeffs[l].is_zero()) continue;
        SparseVec t = gens[l];
        t *= coeffs[l];
        v += t;
    }
    return v;
}

bool lazy_condition(const LazyAlgebra& alg, const std::vector<SparseVec>& gens,
                    const std::vector<SparseVec>& multipliers,
                    const std::string& name, LazyMartindaleReport& rep) {
    Subspace ker = lazy_annihilated_coeffs(alg, gens, multipliers);
    bool ok = ker.dim() == 0;
    rep.conditions.emplace_back(name, ok);
    if (!ok && !gens.empty())
        rep.witnesses.emplace_back(name, combine(gens, ker.basis_vector(0)));
    return ok;
}

}  // namespace

LazyMartindaleReport check_m_conditions_window(const LazyAlgebra& alg,
                                               const std::vector<LazyPart>& parts,
                                               unsigned window) {
    if (parts.size() != 4)
        throw std::invalid_argument("windowed conditions (i)-(v) need parts [1,0,alpha,beta]");
    LazyMartindaleReport rep;
    rep.window = window;
    const auto& g1 = parts[0].gens;
    const auto& g0 = parts[1].gens;
    const auto& ga = parts[2].gens;
    const auto& gb = parts[3].gens;
    bool i1 = lazy_annihilated_coeffs(alg, g1, ga).dim() == 0;
    bool i0 = lazy_annihilated_coeffs(alg, g0, ga).dim() == 0;
    rep.conditions.emplace_back("i", i1 && i0);
    lazy_condition(alg, g0, g0, "ii", rep);
    bool iii_a = lazy_annihilated_coeffs(alg, ga, g0).dim() == 0;
    bool iii_b = lazy_annihilated_coeffs(alg, gb, g0).dim() == 0;
    rep.conditions.emplace_back("iii", iii_a && iii_b);
    lazy_condition(alg, gb, ga, "iv", rep);
    lazy_condition(alg, ga, gb, "v", rep);
    return rep;
}

SparseVec apply_word(const LazyAlgebra& alg, const LazyWord& w, const SparseVec& v) {
    SparseVec out = v;
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
        out = alg.product(*it, out);
    return out;
}

namespace {

std::vector<LazyWord> lazy_base_words(const SparseVec& axis,
                                      const std::vector<SparseVec>& part_gens,
                                      unsigned r, FamilyTag tag, std::size_t cap) {
    std::vector<LazyWord> words;
    if (tag == FamilyTag::L1) {
        LazyWord w;
        w.factors.assign(r, axis);
        words.push_back(std::move(w));
        return words;
    }
    if (tag == FamilyTag::L0) {
        std::size_t k = part_gens.size();
        std::size_t count = 1;
        for (unsigned i = 0; i < r; ++i) {
            count *= k;
            if (count > cap)
                throw std::invalid_argument("lazy operator family L0 exceeds cap");
        }
        if (k == 0) return words;
        std::vector<std::size_t> idx(r, 0);
        for (;;) {
            LazyWord w;
            for (unsigned i = 0; i < r; ++i) w.factors.push_back(part_gens[idx[i]]);
            words.push_back(std::move(w));
            unsigned pos = r;
            while (pos > 0 && ++idx[pos - 1] == k) idx[pos - 1] = 0, --pos;
            if (pos == 0) break;
        }
        return words;
    }
    // La / Lb shape: L_e^(r-1) L_t
    for (const auto& t : part_gens) {
        LazyWord w;
        w.factors.assign(r - 1, axis);
        w.factors.push_back(t);
        words.push_back(std::move(w));
    }
    return words;
}

std::vector<LazyWord> lazy_compose(const std::vector<LazyWord>& left,
                                   const std::vector<LazyWord>& right,
                                   std::size_t cap, FamilyTag tag) {
    if (left.size() * right.size() > cap)
        throw std::invalid_argument("lazy operator family " + family_tag_name(tag) +
                                    " exceeds cap");
    std::vector<LazyWord> out;
    for (const auto& a : left)
        for (const auto& b : right) {
            LazyWord w;
            w.factors = a.factors;
            w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
            out.push_back(std::move(w));
        }
    return out;
}

}  // namespace

std::map<FamilyTag, std::vector<LazyWord>> build_lazy_families(
    const LazyAlgebra& alg, const SparseVec& axis,
    const std::vector<LazyPart>& parts, unsigned r, std::size_t cap) {
    (void)alg;
    if (r == 0) throw std::invalid_argument("word length parameter r must be positive");
    if (parts.size() != 3 && parts.size() != 4)
        throw std::invalid_argument("lazy families need parts [1,0,alpha(,beta)]");
    bool m_type = parts.size() == 4;
    std::map<FamilyTag, std::vector<LazyWord>> fams;
    fams[FamilyTag::L1] = lazy_base_words(axis, {}, r, FamilyTag::L1, cap);
    fams[FamilyTag::L0] = lazy_base_words(axis, parts[1].gens, r, FamilyTag::L0, cap);
    fams[FamilyTag::La] = lazy_base_words(axis, parts[2].gens, r, FamilyTag::La, cap);
    if (!m_type) {
        fams[FamilyTag::Fa] =
            lazy_compose(fams[FamilyTag::L0], fams[FamilyTag::L1], cap, FamilyTag::Fa);
        fams[FamilyTag::F1] = lazy_compose(
            lazy_compose(fams[FamilyTag::Fa], fams[FamilyTag::La], cap, FamilyTag::F1),
            fams[FamilyTag::L1], cap, FamilyTag::F1);
        fams[FamilyTag::F0] = lazy_compose(
            lazy_compose(fams[FamilyTag::Fa], fams[FamilyTag::La], cap, FamilyTag::F0),
            fams[FamilyTag::L0], cap, FamilyTag::F0);
        return fams;
    }
    fams[FamilyTag::Lb] = lazy_base_words(axis, parts[3].gens, r, FamilyTag::Lb, cap);
    fams[FamilyTag::G] =
        lazy_compose(fams[FamilyTag::L0], fams[FamilyTag::L1], cap, FamilyTag::G);
    fams[FamilyTag::Fb] = lazy_compose(
        lazy_compose(fams[FamilyTag::G], fams[FamilyTag::La], cap, FamilyTag::Fb),
        fams[FamilyTag::G], cap, FamilyTag::Fb);
    fams[FamilyTag::Fa] = lazy_compose(
        lazy_compose(fams[FamilyTag::Fb], fams[FamilyTag::Lb], cap, FamilyTag::Fa),
        fams[FamilyTag::G], cap, FamilyTag::Fa);
    fams[FamilyTag::F1] = lazy_compose(
        lazy_compose(fams[FamilyTag::Fa], fams[FamilyTag::La], cap, FamilyTag::F1),
        fams[FamilyTag::L1], cap, FamilyTag::F1);
    fams[FamilyTag::F0] = lazy_compose(
        lazy_compose(fams[FamilyTag::Fa], fams[FamilyTag::La], cap, FamilyTag::F0),
        fams[FamilyTag::L0], cap, FamilyTag::F0);
    return fams;
}

bool lazy_family_annihilation(const LazyAlgebra& alg,
                              const std::vector<LazyWord>& words,
                              const std::vector<SparseVec>& part_gens) {
    for (const auto& w : words)
        for (const auto& g : part_gens)
            if (!apply_word(alg, w, g).is_zero()) return false;
    return true;
}

bool lazy_family_injectivity(const LazyAlgebra& alg,
                             const std::vector<LazyWord>& words,
                             const std::vector<SparseVec>& part_gens) {
    std::size_t k = part_gens.size();
    if (k == 0) return true;
    if (words.empty()) return false;
    const FieldSpec& f = alg.field();
    std::vector<std::vector<SparseVec>> images(words.size());
    std::vector<BasisKey> keys;
    for (std::size_t wi = 0; wi < words.size(); ++wi)
        for (std::size_t l = 0; l < k; ++l) {
            images[wi].push_back(apply_word(alg, words[wi], part_gens[l]));
            for (const auto& [key, c] : images[wi][l].terms()) {
                (void)c;
                if (std::find(keys.begin(), keys.end(), key) == keys.end())
                    keys.push_back(key);
            }
        }
    std::sort(keys.begin(), keys.end());
    Matrix sys(f, words.size() * keys.size(), k);
    for (std::size_t wi = 0; wi < words.size(); ++wi)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t r = 0; r < keys.size(); ++r)
                sys.at(wi * keys.size() + r, l) = images[wi][l].coeff(keys[r]);
    return kernel(sys).dim() == 0;
}

std::vector<std::vector<LazyWord>> lazy_family_stages(
    const SparseVec& axis, const std::vector<LazyPart>& parts, unsigned r,
    FamilyTag tag) {
    if (parts.size() != 3 && parts.size() != 4)
        throw std::invalid_argument("lazy families need parts [1,0,alpha(,beta)]");
    bool m_type = parts.size() == 4;
    std::size_t cap = static_cast<std::size_t>(-1);  // per-stage words stay tiny
    auto L1 = [&] { return lazy_base_words(axis, {}, r, FamilyTag::L1, cap); };
    auto L0 = [&] { return lazy_base_words(axis, parts[1].gens, r, FamilyTag::L0, cap); };
    auto La = [&] { return lazy_base_words(axis, parts[2].gens, r, FamilyTag::La, cap); };
    auto Lb = [&] {
        return lazy_base_words(axis, parts[3].gens, r, FamilyTag::Lb, cap);
    };
    using Stages = std::vector<std::vector<LazyWord>>;
    auto cat = [](Stages a, const Stages& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    switch (tag) {
        case FamilyTag::L1: return {L1()};
        case FamilyTag::L0: return {L0()};
        case FamilyTag::La: return {La()};
        case FamilyTag::Lb:
            if (!m_type) throw std::invalid_argument("Lb needs a beta part");
            return {Lb()};
        default: break;
    }
    if (!m_type) {
        Stages fa = {L1(), L0()};  // F_a = L0 L1, rightmost applied first
        switch (tag) {
            case FamilyTag::Fa: return fa;
            case FamilyTag::F1: return cat({L1(), La()}, fa);
            case FamilyTag::F0: return cat({L0(), La()}, fa);
            default:
                throw std::invalid_argument("family " + family_tag_name(tag) +
                                            " undefined for a three-eigenvalue law");
        }
    }
    Stages g = {L1(), L0()};                  // G = L0 L1
    Stages fb = cat(cat(g, {La()}), g);       // F_b = G La G
    Stages fa = cat(cat(g, {Lb()}), fb);      // F_a = F_b Lb G
    switch (tag) {
        case FamilyTag::G: return g;
        case FamilyTag::Fb: return fb;
        case FamilyTag::Fa: return fa;
        case FamilyTag::F1: return cat({L1(), La()}, fa);
        case FamilyTag::F0: return cat({L0(), La()}, fa);
        default:
            throw std::invalid_argument("unexpected family tag");
    }
}

Subspace lazy_staged_kernel(const LazyAlgebra& alg,
                            const std::vector<std::vector<LazyWord>>& stages,
                            const std::vector<SparseVec>& gens) {
    const FieldSpec& f = alg.field();
    std::size_t k = gens.size();
    if (k == 0) return Subspace::zero(f, 0);
    if (stages.empty()) {
        // kernel of the identity family: {c : sum c_l g_l = 0}
        std::vector<BasisKey> keys;
        for (const auto& g : gens)
            for (const auto& [key, c] : g.terms()) {
                (void)c;
                if (std::find(keys.begin(), keys.end(), key) == keys.end())
                    keys.push_back(key);
            }
        std::sort(keys.begin(), keys.end());
        Matrix m(f, keys.size(), k);
        for (std::size_t r = 0; r < keys.size(); ++r)
            for (std::size_t l = 0; l < k; ++l) m.at(r, l) = gens[l].coeff(keys[r]);
        return kernel(m);
    }
    const auto& stage = stages.front();
    if (stage.empty()) return Subspace::full(f, k);  // no words: vacuous
    std::vector<std::vector<SparseVec>> imgs(stage.size());
    std::vector<SparseVec> flat;
    for (std::size_t w = 0; w < stage.size(); ++w)
        for (std::size_t l = 0; l < k; ++l) {
            imgs[w].push_back(apply_word(alg, stage[w], gens[l]));
            flat.push_back(imgs[w][l]);
        }
    std::vector<SparseVec> u = sparse_reduce_basis(flat);
    if (u.empty()) return Subspace::full(f, k);  // stage kills everything
    std::vector<std::vector<LazyWord>> rest(stages.begin() + 1, stages.end());
    Subspace ku = lazy_staged_kernel(alg, rest, u);
    // functionals vanishing exactly on ku
    Matrix q = kernel(ku.basis()).basis();
    if (q.rows() == 0) return Subspace::full(f, k);  // suffix kills span(u)
    Matrix sys(f, stage.size() * q.rows(), k);
    for (std::size_t w = 0; w < stage.size(); ++w) {
        Matrix cw(f, u.size(), k);
        for (std::size_t l = 0; l < k; ++l) {
            auto coords = sparse_coordinates(u, imgs[w][l]);
            if (!coords) throw std::logic_error("stage image escaped its own span");
            cw.set_col(l, *coords);
        }
        Matrix qc = q * cw;
        for (std::size_t r = 0; r < qc.rows(); ++r)
            for (std::size_t c = 0; c < k; ++c)
                sys.at(w * q.rows() + r, c) = qc.at(r, c);
    }
    return kernel(sys);
}

}  // namespace axc
