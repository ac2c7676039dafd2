#include "axcheck/maps.hpp"

#include <algorithm>

namespace axc {

MapTable MapTable::table(std::shared_ptr<const FiniteModel> dom,
                         std::shared_ptr<const FiniteModel> cod,
                         std::vector<std::uint32_t> tab, bool claim_bijective) {
    if (!dom || !cod) throw std::invalid_argument("table map needs models");
    if (tab.size() != dom->size())
        throw std::invalid_argument("table size does not match the domain");
    for (auto v : tab)
        if (v >= cod->size())
            throw std::invalid_argument("table value outside the codomain");
    MapTable m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    m.tab_ = std::move(tab);
    if (claim_bijective && !m.bijective())
        throw std::invalid_argument("map claimed bijective is not");
    return m;
}

MapTable MapTable::linear(const Algebra& dom, const Algebra& cod, Matrix mat) {
    if (mat.rows() != cod.dim() || mat.cols() != dom.dim())
        throw std::invalid_argument("linear map shape mismatch");
    if (mat.field() != dom.field() || dom.field() != cod.field())
        throw std::invalid_argument("linear map field mismatch");
    MapTable m;
    m.dom_alg_ = std::make_shared<Algebra>(dom);
    m.cod_alg_ = std::make_shared<Algebra>(cod);
    m.mat_ = std::move(mat);
    return m;
}

MapTable MapTable::identity(std::shared_ptr<const FiniteModel> model) {
    std::vector<std::uint32_t> tab(model->size());
    for (std::uint32_t i = 0; i < model->size(); ++i) tab[i] = i;
    return table(model, model, std::move(tab), true);
}

const FiniteModel& MapTable::dom_model() const {
    if (!dom_) throw std::logic_error("linear map has no element model");
    return *dom_;
}

const FiniteModel& MapTable::cod_model() const {
    if (!cod_) throw std::logic_error("linear map has no element model");
    return *cod_;
}

const Algebra& MapTable::dom_algebra() const {
    return dom_ ? dom_->algebra() : *dom_alg_;
}

const Algebra& MapTable::cod_algebra() const {
    return cod_ ? cod_->algebra() : *cod_alg_;
}

const Matrix& MapTable::matrix() const {
    if (!mat_) throw std::logic_error("table map has no matrix");
    return *mat_;
}

std::uint32_t MapTable::apply_index(std::uint32_t i) const {
    if (tab_.empty()) throw std::logic_error("linear map has no index table");
    return tab_[i];
}

Vec MapTable::apply(const Vec& x) const {
    if (is_table()) return cod_->decode(tab_[dom_->encode(x)]);
    return mat_->apply(x);
}

bool MapTable::bijective() const {
    if (is_table()) {
        if (dom_->size() != cod_->size()) return false;
        std::vector<bool> seen(cod_->size(), false);
        for (auto v : tab_) {
            if (seen[v]) return false;
            seen[v] = true;
        }
        return true;
    }
    return mat_->rows() == mat_->cols() && inverse(*mat_).has_value();
}

MapTable MapTable::inverted() const {
    if (is_table()) {
        if (!bijective()) throw std::invalid_argument("map is not invertible");
        std::vector<std::uint32_t> inv(tab_.size());
        for (std::uint32_t i = 0; i < tab_.size(); ++i) inv[tab_[i]] = i;
        return table(cod_, dom_, std::move(inv), true);
    }
    auto m = inverse(*mat_);
    if (!m) throw std::invalid_argument("map is not invertible");
    return linear(*cod_alg_, *dom_alg_, std::move(*m));
}

MapClass parse_map_class(const std::string& name) {
    if (name == "iso") return MapClass::Iso;
    if (name == "der") return MapClass::Derivation;
    if (name == "elem") return MapClass::Elementary;
    if (name == "jelem") return MapClass::JordanElementary;
    throw std::invalid_argument("unknown map class '" + name +
                                "' (expected iso|der|elem|jelem)");
}

std::string map_class_name(MapClass c) {
    switch (c) {
        case MapClass::Iso: return "iso";
        case MapClass::Derivation: return "der";
        case MapClass::Elementary: return "elem";
        case MapClass::JordanElementary: return "jelem";
    }
    return "?";
}

namespace {

// Visits index tuples, slot k ranging over [0, sizes[k]), exhaustively or
// sampled; stops early when fn returns false.
void for_each_mixed_tuple(
    const std::vector<std::uint32_t>& sizes, const CheckMode& mode,
    std::uint64_t* counter,
    const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
    std::size_t slots = sizes.size();
    std::vector<std::uint32_t> t(slots, 0);
    if (mode.exhaustive) {
        for (;;) {
            ++*counter;
            if (!fn(t)) return;
            std::size_t pos = slots;
            while (pos > 0 && ++t[pos - 1] == sizes[pos - 1]) t[pos - 1] = 0, --pos;
            if (pos == 0) return;
        }
    }
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
        for (std::size_t k = 0; k < slots; ++k)
            t[k] = std::uniform_int_distribution<std::uint32_t>(0, sizes[k] - 1)(rng);
        ++*counter;
        if (!fn(t)) return;
    }
}

void for_each_tuple(std::size_t slots, std::uint32_t size, const CheckMode& mode,
                    std::uint64_t* counter,
                    const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
    for_each_mixed_tuple(std::vector<std::uint32_t>(slots, size), mode, counter, fn);
}

Counterexample decode_tuple(const FiniteModel& m, const std::vector<std::uint32_t>& t) {
    Counterexample c;
    for (auto i : t) c.args.push_back(m.decode(i));
    return c;
}

// Random vector with small integer coordinates, for sampled linear checks.
Vec sample_vec(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Vec v(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f.kind == FieldKind::Rationals)
            v[i] = Scalar::fraction(f, num(rng), den(rng));
        else
            v[i] = Scalar(f, num(rng));
    }
    return v;
}

void require_table_bound(const FiniteModel& m, const CheckMode& mode) {
    if (mode.exhaustive && m.size() > mode.exhaustive_bound)
        throw std::invalid_argument(
            "exhaustive mode bound exceeded: " + std::to_string(m.size()) +
            " elements > " + std::to_string(mode.exhaustive_bound));
}

}  // namespace

CheckResult check_n_multiplicative_iso(const MapTable& phi, unsigned n,
                                       const CheckMode& mode) {
    if (n < 1) throw std::invalid_argument("arity n must be positive");
    if (!phi.bijective())
        throw std::invalid_argument("an n-multiplicative isomorphism must be bijective");
    CheckResult res;
    if (phi.is_table()) {
        const FiniteModel& dom = phi.dom_model();
        const FiniteModel& cod = phi.cod_model();
        require_table_bound(dom, mode);
        for_each_tuple(n, dom.size(), mode, &res.checked,
                       [&](const std::vector<std::uint32_t>& t) {
                           // t = (t_1, ..., t_{n-1}, x)
                           std::uint32_t chain = t[n - 1];
                           for (std::size_t k = n - 1; k-- > 0;)
                               chain = dom.mul(t[k], chain);
                           std::uint32_t lhs = phi.apply_index(chain);
                           std::uint32_t rhs = phi.apply_index(t[n - 1]);
                           for (std::size_t k = n - 1; k-- > 0;)
                               rhs = cod.mul(phi.apply_index(t[k]), rhs);
                           if (lhs == rhs) return true;
                           res.counterexample = decode_tuple(dom, t);
                           return false;
                       });
        res.ok = !res.counterexample;
        return res;
    }
    if (mode.exhaustive)
        throw std::invalid_argument("exhaustive mode needs an element table");
    const Algebra& dom = phi.dom_algebra();
    const Algebra& cod = phi.cod_algebra();
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
        std::vector<Vec> t;
        for (unsigned k = 0; k < n; ++k)
            t.push_back(sample_vec(dom.field(), dom.dim(), rng));
        Vec chain = t[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) chain = dom.product(t[k], chain);
        Vec lhs = phi.apply(chain);
        Vec rhs = phi.apply(t[n - 1]);
        for (std::size_t k = n - 1; k-- > 0;) rhs = cod.product(phi.apply(t[k]), rhs);
        ++res.checked;
        if (lhs != rhs) {
            res.counterexample = Counterexample{t};
            res.ok = false;
            return res;
        }
    }
    res.ok = true;
    return res;
}

CheckResult check_n_multiplicative_derivation(const MapTable& d, unsigned n,
                                              const CheckMode& mode) {
    if (n < 2)
        throw std::invalid_argument("a multiplicative derivation needs n >= 2");
    CheckResult res;
    if (d.is_table()) {
        const FiniteModel& m = d.dom_model();
        if (&d.cod_model() != &m && d.cod_model().size() != m.size())
            throw std::invalid_argument("a derivation maps an algebra to itself");
        require_table_bound(m, mode);
        for_each_tuple(n, m.size(), mode, &res.checked,
                       [&](const std::vector<std::uint32_t>& t) {
                           std::uint32_t chain = t[n - 1];
                           for (std::size_t k = n - 1; k-- > 0;)
                               chain = m.mul(t[k], chain);
                           std::uint32_t lhs = d.apply_index(chain);
                           // sum over single-slot replacements, plus L d(x)
                           std::uint32_t rhs = 0;
                           for (std::size_t rep = 0; rep < n; ++rep) {
                               std::uint32_t w =
                                   rep == n - 1 ? d.apply_index(t[n - 1]) : t[n - 1];
                               for (std::size_t k = n - 1; k-- > 0;) {
                                   std::uint32_t f =
                                       (k == rep) ? d.apply_index(t[k]) : t[k];
                                   w = m.mul(f, w);
                               }
                               rhs = m.add(rhs, w);
                           }
                           if (lhs == rhs) return true;
                           res.counterexample = decode_tuple(m, t);
                           return false;
                       });
        res.ok = !res.counterexample;
        return res;
    }
    if (mode.exhaustive)
        throw std::invalid_argument("exhaustive mode needs an element table");
    const Algebra& alg = d.dom_algebra();
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
        std::vector<Vec> t;
        for (unsigned k = 0; k < n; ++k)
            t.push_back(sample_vec(alg.field(), alg.dim(), rng));
        Vec chain = t[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) chain = alg.product(t[k], chain);
        Vec lhs = d.apply(chain);
        Vec rhs(alg.field(), alg.dim());
        for (std::size_t rep = 0; rep < n; ++rep) {
            Vec w = rep == n - 1 ? d.apply(t[n - 1]) : t[n - 1];
            for (std::size_t k = n - 1; k-- > 0;)
                w = alg.product(k == rep ? d.apply(t[k]) : t[k], w);
            rhs += w;
        }
        ++res.checked;
        if (lhs != rhs) {
            res.counterexample = Counterexample{t};
            res.ok = false;
            return res;
        }
    }
    res.ok = true;
    return res;
}

CheckResult check_elementary_pair(const MapTable& m, const MapTable& mstar,
                                  bool jordan, const CheckMode& mode) {
    if (jordan && m.dom_algebra().field().characteristic() == 2)
        throw std::invalid_argument(
            "Jordan elementary checks need characteristic != 2");
    CheckResult res;
    if (m.is_table()) {
        const FiniteModel& A = m.dom_model();
        const FiniteModel& B = m.cod_model();
        require_table_bound(A, mode);
        require_table_bound(B, mode);
        auto M = [&](std::uint32_t i) { return m.apply_index(i); };
        auto Ms = [&](std::uint32_t i) { return mstar.apply_index(i); };
        if (!jordan) {
            // M(a (M*(x) b)) = M(a)(x M(b)) over (a, b, x)
            bool go = true;
            for_each_mixed_tuple({A.size(), A.size(), B.size()}, mode, &res.checked,
                                 [&](const std::vector<std::uint32_t>& t) {
                                     std::uint32_t a = t[0], b = t[1], x = t[2];
                                     std::uint32_t lhs = M(A.mul(a, A.mul(Ms(x), b)));
                                     std::uint32_t rhs = B.mul(M(a), B.mul(x, M(b)));
                                     if (lhs == rhs) return true;
                                     res.counterexample = Counterexample{
                                         {A.decode(a), A.decode(b), B.decode(x)}};
                                     go = false;
                                     return false;
                                 });
            if (!go) { res.ok = false; return res; }
            // M*(x (M(a) y)) = M*(x)(a M*(y)) over (x, y, a)
            for_each_mixed_tuple({B.size(), B.size(), A.size()}, mode, &res.checked,
                                 [&](const std::vector<std::uint32_t>& t) {
                                     std::uint32_t x = t[0], y = t[1], a = t[2];
                                     std::uint32_t lhs = Ms(B.mul(x, B.mul(M(a), y)));
                                     std::uint32_t rhs = A.mul(Ms(x), A.mul(a, Ms(y)));
                                     if (lhs == rhs) return true;
                                     res.counterexample = Counterexample{
                                         {B.decode(x), B.decode(y), A.decode(a)}};
                                     return false;
                                 });
            res.ok = !res.counterexample;
            return res;
        }
        // M(a M*(x) + M*(x) a) = M(a) x + x M(a) over (a, x), and the M* twin
        bool go = true;
        for_each_mixed_tuple({A.size(), B.size()}, mode, &res.checked,
                             [&](const std::vector<std::uint32_t>& t) {
                                 std::uint32_t a = t[0], x = t[1];
                                 std::uint32_t am = A.mul(a, Ms(x));
                                 std::uint32_t lhs = M(A.add(am, am));
                                 std::uint32_t mx = B.mul(M(a), x);
                                 std::uint32_t rhs = B.add(mx, mx);
                                 if (lhs == rhs) return true;
                                 res.counterexample =
                                     Counterexample{{A.decode(a), B.decode(x)}};
                                 go = false;
                                 return false;
                             });
        if (!go) { res.ok = false; return res; }
        for_each_mixed_tuple({B.size(), A.size()}, mode, &res.checked,
                             [&](const std::vector<std::uint32_t>& t) {
                                 std::uint32_t x = t[0], a = t[1];
                                 std::uint32_t mx = B.mul(M(a), x);
                                 std::uint32_t lhs = Ms(B.add(mx, mx));
                                 std::uint32_t am = A.mul(a, Ms(x));
                                 std::uint32_t rhs = A.add(am, am);
                                 if (lhs == rhs) return true;
                                 res.counterexample =
                                     Counterexample{{B.decode(x), A.decode(a)}};
                                 return false;
                             });
        res.ok = !res.counterexample;
        return res;
    }
    if (mode.exhaustive)
        throw std::invalid_argument("exhaustive mode needs an element table");
    const Algebra& A = m.dom_algebra();
    const Algebra& B = m.cod_algebra();
    std::mt19937_64 rng(mode.seed);
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
        Vec a = sample_vec(A.field(), A.dim(), rng);
        Vec b = sample_vec(A.field(), A.dim(), rng);
        Vec x = sample_vec(B.field(), B.dim(), rng);
        Vec y = sample_vec(B.field(), B.dim(), rng);
        ++res.checked;
        bool ok;
        if (!jordan) {
            ok = m.apply(A.product(a, A.product(mstar.apply(x), b))) ==
                     B.product(m.apply(a), B.product(x, m.apply(b))) &&
                 mstar.apply(B.product(x, B.product(m.apply(a), y))) ==
                     A.product(mstar.apply(x), A.product(a, mstar.apply(y)));
        } else {
            Vec am = A.product(a, mstar.apply(x));
            Vec mx = B.product(m.apply(a), x);
            ok = m.apply(am + am) == mx + mx &&
                 mstar.apply(mx + mx) == am + am;
        }
        if (!ok) {
            res.counterexample = Counterexample{{a, b, x, y}};
            res.ok = false;
            return res;
        }
    }
    res.ok = true;
    return res;
}

CheckResult class_check(const MapUnderTest& m, const CheckMode& mode) {
    switch (m.cls) {
        case MapClass::Iso: return check_n_multiplicative_iso(m.fwd, m.n, mode);
        case MapClass::Derivation:
            return check_n_multiplicative_derivation(m.fwd, m.n, mode);
        case MapClass::Elementary:
        case MapClass::JordanElementary:
            if (!m.star)
                throw std::invalid_argument("elementary checks need the M* map");
            return check_elementary_pair(m.fwd, *m.star,
                                         m.cls == MapClass::JordanElementary, mode);
    }
    throw std::logic_error("unreachable");
}

Vec residual(const MapUnderTest& m, const std::vector<Vec>& args) {
    if (args.empty()) throw std::invalid_argument("residual needs arguments");
    const MapTable& fwd = m.fwd;
    if (m.cls == MapClass::Derivation) {
        const Algebra& alg = fwd.dom_algebra();
        Vec sum(alg.field(), alg.dim());
        for (const auto& a : args) sum += a;
        Vec out = fwd.apply(sum);
        for (const auto& a : args) out -= fwd.apply(a);
        return out;
    }
    // iso / elementary flavors: fwd^{-1}(fwd(sum) - sum of fwd(x_i))
    MapTable inv = fwd.inverted();
    const Algebra& dom = fwd.dom_algebra();
    Vec sum(dom.field(), dom.dim());
    for (const auto& a : args) sum += a;
    Vec diff = fwd.apply(sum);
    for (const auto& a : args) diff -= fwd.apply(a);
    return inv.apply(diff);
}

TupleKind parse_tuple_kind(const std::string& name) {
    if (name == "peirce-components") return TupleKind::PeirceComponents;
    if (name == "mixed-product") return TupleKind::MixedProduct;
    if (name == "same-part") return TupleKind::SamePart;
    if (name == "general-pairs") return TupleKind::GeneralPairs;
    throw std::invalid_argument("unknown tuple kind '" + name + "'");
}

namespace {

// Nonzero combinations of the part's basis with coefficients in {-1,0,1,2}.
std::vector<Vec> part_combos(const Subspace& part) {
    const FieldSpec& f = part.field();
    std::vector<Scalar> coeffs = {Scalar(f, -1), Scalar(f, 0), Scalar(f, 1),
                                  Scalar(f, 2)};
    std::size_t k = part.dim();
    std::vector<Vec> out;
    if (k == 0) return out;
    if (k > 3) {
        for (std::size_t i = 0; i < k; ++i) {
            out.push_back(part.basis_vector(i));
            out.push_back(-part.basis_vector(i));
        }
        Vec total(f, part.ambient());
        for (std::size_t i = 0; i < k; ++i) total += part.basis_vector(i);
        out.push_back(total);
        return out;
    }
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        Vec v(f, part.ambient());
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (coeffs[idx[i]].is_zero()) continue;
            v += coeffs[idx[i]] * part.basis_vector(i);
            nonzero = true;
        }
        if (nonzero) out.push_back(std::move(v));
        std::size_t pos = k;
        while (pos > 0 && ++idx[pos - 1] == coeffs.size()) idx[pos - 1] = 0, --pos;
        if (pos == 0) break;
    }
    return out;
}

}  // namespace

TupleFamily lemma_tuples(const Algebra& alg, const AxisDecomposition& d,
                         TupleKind kind, const TupleOptions& opts) {
    if (!d.complete)
        throw std::invalid_argument("lemma tuples need a complete decomposition");
    TupleFamily fam;
    fam.kind = kind;
    const FieldSpec& f = alg.field();
    std::vector<std::vector<Vec>> combos;
    for (const auto& p : d.parts) combos.push_back(part_combos(p));

    switch (kind) {
        case TupleKind::PeirceComponents: {
            // one entry per part in law order; degenerate parts contribute 0
            std::vector<std::vector<Vec>> pools;
            for (std::size_t i = 0; i < d.parts.size(); ++i) {
                auto pool = combos[i];
                pool.push_back(Vec(f, alg.dim()));
                pools.push_back(std::move(pool));
            }
            std::vector<std::size_t> idx(pools.size(), 0);
            for (;;) {
                std::vector<Vec> tuple;
                bool all_zero = true;
                for (std::size_t i = 0; i < pools.size(); ++i) {
                    tuple.push_back(pools[i][idx[i]]);
                    all_zero = all_zero && tuple.back().is_zero();
                }
                if (!all_zero) fam.tuples.push_back(std::move(tuple));
                std::size_t pos = pools.size();
                while (pos > 0 && ++idx[pos - 1] == pools[pos - 1].size())
                    idx[pos - 1] = 0, --pos;
                if (pos == 0) break;
            }
            break;
        }
        case TupleKind::MixedProduct: {
            // (a_x * a_0, b_x) with x = beta for a four-eigenvalue law, else alpha
            std::size_t zero = d.law.index_of_zero();
            auto extra = d.law.extra_indices();
            std::size_t x = extra.empty() ? zero : extra.back();
            for (const auto& ax : combos[x])
                for (const auto& a0 : combos[zero])
                    for (const auto& bx : combos[x])
                        fam.tuples.push_back({alg.product(ax, a0), bx});
            break;
        }
        case TupleKind::SamePart: {
            for (std::size_t i = 0; i < d.parts.size(); ++i) {
                if (opts.part && *opts.part != i) continue;
                for (const auto& a : combos[i])
                    for (const auto& b : combos[i]) fam.tuples.push_back({a, b});
            }
            break;
        }
        case TupleKind::GeneralPairs: {
            std::vector<Vec> pool;
            for (const auto& c : combos) pool.insert(pool.end(), c.begin(), c.end());
            for (std::size_t k = 0; k < alg.dim(); ++k) pool.push_back(alg.basis_vec(k));
            for (const auto& a : pool)
                for (const auto& b : pool) fam.tuples.push_back({a, b});
            std::mt19937_64 rng(opts.seed);
            std::uniform_int_distribution<int> coeff(-2, 2);
            for (std::uint64_t i = 0; i < opts.pairs; ++i) {
                Vec a(f, alg.dim()), b(f, alg.dim());
                for (std::size_t k = 0; k < alg.dim(); ++k) {
                    a[k] = Scalar(f, coeff(rng));
                    b[k] = Scalar(f, coeff(rng));
                }
                fam.tuples.push_back({a, b});
            }
            break;
        }
    }
    return fam;
}

std::pair<bool, std::optional<Counterexample>> residual_vanishes_on(
    const MapUnderTest& m, const TupleFamily& family) {
    for (const auto& tuple : family.tuples) {
        Vec r = residual(m, tuple);
        if (!r.is_zero()) return {false, Counterexample{tuple}};
    }
    return {true, std::nullopt};
}

}  // namespace axc
