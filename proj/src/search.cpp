#include "axcheck/search.hpp"

namespace axc {

SearchTarget parse_search_target(const std::string& name) {
    if (name == "nonadditive-iso") return SearchTarget::NonadditiveIso;
    if (name == "nonadditive-derivation") return SearchTarget::NonadditiveDerivation;
    throw std::invalid_argument("unknown search target '" + name + "'");
}

std::string search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::WitnessFound: return "witness-found";
        case SearchStatus::ExhaustedNone: return "exhausted-none";
        case SearchStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

struct SearchEngine {
    const FiniteModel& m;
    const SearchSpec& spec;
    std::uint32_t size;
    bool bijective;  // iso target
    std::vector<std::uint32_t> phi;
    std::vector<bool> used;
    // for n = 2: constraint pairs (a, b) become checkable once
    // max(a, b, a*b) elements are assigned; listed per trigger index
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> ready;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::uint64_t mult_count = 0, add_count = 0;
    std::optional<std::vector<std::uint32_t>> witness;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> bad_pair;

    SearchEngine(const FiniteModel& model, const SearchSpec& s)
        : m(model), spec(s), size(model.size()),
          bijective(s.target == SearchTarget::NonadditiveIso) {
        phi.assign(size, 0);
        used.assign(size, false);
        if (spec.n == 2) {
            ready.resize(size);
            for (std::uint32_t a = 0; a < size; ++a)
                for (std::uint32_t b = 0; b < size; ++b) {
                    std::uint32_t trig = std::max({a, b, m.mul(a, b)});
                    ready[trig].emplace_back(a, b);
                }
        }
    }

    bool ok_pair(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t q = m.mul(a, b);
        if (spec.target == SearchTarget::NonadditiveIso)
            return phi[q] == m.mul(phi[a], phi[b]);
        return phi[q] == m.add(m.mul(phi[a], b), m.mul(a, phi[b]));
    }

    // constraints that became checkable when index k got its value
    bool consistent_after(std::uint32_t k) {
        if (spec.n == 2) {
            for (const auto& [a, b] : ready[k])
                if (!ok_pair(a, b)) return false;
            return true;
        }
        return consistent_general(k);
    }

    // n >= 3: walk tuples over assigned elements; a constraint becomes
    // active when index k enters the tuple or is the chain value
    bool consistent_general(std::uint32_t k) {
        std::uint32_t assigned = k + 1;
        std::vector<std::uint32_t> t(spec.n, 0);
        for (;;) {
            bool involves_k = false;
            for (auto v : t) involves_k = involves_k || v == k;
            std::uint32_t chain = t[spec.n - 1];
            for (std::size_t i = spec.n - 1; i-- > 0;) chain = m.mul(t[i], chain);
            if ((involves_k || chain == k) && chain < assigned) {
                std::uint32_t lhs = phi[chain];
                std::uint32_t rhs;
                if (spec.target == SearchTarget::NonadditiveIso) {
                    rhs = phi[t[spec.n - 1]];
                    for (std::size_t i = spec.n - 1; i-- > 0;)
                        rhs = m.mul(phi[t[i]], rhs);
                } else {
                    rhs = 0;
                    for (std::size_t rep = 0; rep < spec.n; ++rep) {
                        std::uint32_t w =
                            rep == spec.n - 1 ? phi[t[spec.n - 1]] : t[spec.n - 1];
                        for (std::size_t i = spec.n - 1; i-- > 0;)
                            w = m.mul(rep == i ? phi[t[i]] : t[i], w);
                        rhs = m.add(rhs, w);
                    }
                }
                if (lhs != rhs) return false;
            }
            std::size_t pos = spec.n;
            while (pos > 0 && ++t[pos - 1] == assigned) t[pos - 1] = 0, --pos;
            if (pos == 0) return true;
        }
    }

    // first additivity defect of the completed table, if any
    std::optional<std::pair<std::uint32_t, std::uint32_t>> additivity_defect() const {
        for (std::uint32_t x = 0; x < size; ++x)
            for (std::uint32_t y = x; y < size; ++y)
                if (phi[m.add(x, y)] != m.add(phi[x], phi[y]))
                    return std::make_pair(x, y);
        return std::nullopt;
    }

    // returns false to abort the whole search (budget / early witness)
    bool dfs(std::uint32_t k) {
        if (k == size) {
            ++mult_count;
            auto defect = additivity_defect();
            if (!defect) {
                ++add_count;
                return true;
            }
            if (!witness) {
                witness = phi;
                bad_pair = defect;
            }
            return spec.exhaustive;  // stop at the first witness otherwise
        }
        for (std::uint32_t v = 0; v < size; ++v) {
            if (bijective && used[v]) continue;
            ++nodes;
            if (spec.exhaustive) {
                if (nodes > spec.node_bound)
                    throw std::invalid_argument(
                        "exhaustive search exceeded the node bound of " +
                        std::to_string(spec.node_bound));
            } else if (nodes > spec.budget) {
                budget_hit = true;
                return false;
            }
            phi[k] = v;
            used[v] = true;
            bool keep_going = true;
            if (consistent_after(k)) keep_going = dfs(k + 1);
            used[v] = false;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

SearchOutcome run_search(const FiniteModel& model, const SearchSpec& spec,
                         const AxisDecomposition* martindale_ctx) {
    if (spec.n < 2) throw std::invalid_argument("search arity n must be >= 2");
    if (spec.n > 2 && model.size() > 64)
        throw std::invalid_argument("search with n > 2 is limited to 64 elements");
    SearchOutcome out;
    if (martindale_ctx) {
        const Algebra& alg = model.algebra();
        if (martindale_ctx->law.is_j_type()) {
            auto rep = check_j_conditions(alg, *martindale_ctx);
            out.martindale_context = {{"i", rep.cond_i},
                                      {"ii", rep.cond_ii},
                                      {"iii", rep.cond_iii}};
            out.theorem_applies = rep.all();
        } else if (martindale_ctx->law.is_m_type()) {
            auto rep = check_m_conditions(alg, *martindale_ctx);
            out.martindale_context = {{"i", rep.cond_i},
                                      {"ii", rep.cond_ii},
                                      {"iii", rep.cond_iii},
                                      {"iv", rep.cond_iv},
                                      {"v", rep.cond_v}};
            out.theorem_applies = rep.all();
        }
    }
    SearchEngine eng(model, spec);
    eng.dfs(0);
    out.nodes = eng.nodes;
    out.witness = eng.witness;
    out.nonadditive_pair = eng.bad_pair;
    if (spec.exhaustive) out.counts = std::make_pair(eng.mult_count, eng.add_count);
    if (out.witness)
        out.status = SearchStatus::WitnessFound;
    else if (eng.budget_hit)
        out.status = SearchStatus::BudgetExhausted;
    else
        out.status = SearchStatus::ExhaustedNone;
    return out;
}

std::pair<std::uint64_t, std::uint64_t> count_derivations(const FiniteModel& model,
                                                          unsigned n,
                                                          std::uint64_t domain_limit) {
    if (model.size() > domain_limit)
        throw std::invalid_argument("derivation enumeration limited to " +
                                    std::to_string(domain_limit) + " elements");
    SearchSpec spec;
    spec.target = SearchTarget::NonadditiveDerivation;
    spec.n = n;
    spec.exhaustive = true;
    spec.node_bound = static_cast<std::uint64_t>(-1);
    SearchOutcome out = run_search(model, spec);
    return *out.counts;
}

std::vector<MapTable> linear_multiplicative_bijections(
    std::shared_ptr<const FiniteModel> model) {
    const Algebra& alg = model->algebra();
    std::size_t dim = alg.dim();
    std::uint32_t size = model->size();
    // constraint (i, j) is checkable once its product's support is assigned
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ready(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            std::size_t trig = std::max(i, j);
            const Vec& sc = alg.structure_constant(i, j);
            for (std::size_t k = 0; k < dim; ++k)
                if (!sc[k].is_zero()) trig = std::max(trig, k);
            ready[trig].emplace_back(i, j);
        }
    std::vector<std::uint32_t> cols(dim, 0);
    std::vector<MapTable> found;

    // image of b_i b_j under the partial linear map, via encoded arithmetic
    auto image_of_product = [&](std::size_t i, std::size_t j) {
        const Vec& sc = alg.structure_constant(i, j);
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < dim; ++k) {
            if (sc[k].is_zero()) continue;
            long c = sc[k].value().get_num().get_si();
            std::uint32_t term = 0;
            for (long t = 0; t < c; ++t) term = model->add(term, cols[k]);
            acc = model->add(acc, term);
        }
        return acc;
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t k) {
        if (k == dim) {
            Matrix mat(alg.field(), dim, dim);
            for (std::size_t j = 0; j < dim; ++j)
                mat.set_col(j, model->decode(cols[j]));
            if (rank(mat) != dim) return;
            found.push_back(MapTable::linear(alg, alg, std::move(mat)));
            return;
        }
        for (std::uint32_t v = 0; v < size; ++v) {
            cols[k] = v;
            bool ok = true;
            for (const auto& [i, j] : ready[k]) {
                if (model->mul(cols[i], cols[j]) != image_of_product(i, j)) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(k + 1);
        }
    };
    dfs(0);
    return found;
}

}  // namespace axc
