#pragma once

#include "axcheck/maps.hpp"
#include "axcheck/martindale.hpp"

namespace axc {

enum class SearchTarget { NonadditiveIso, NonadditiveDerivation };
SearchTarget parse_search_target(const std::string& name);

enum class SearchStatus { WitnessFound, ExhaustedNone, BudgetExhausted };
std::string search_status_name(SearchStatus s);

struct SearchSpec {
    SearchTarget target = SearchTarget::NonadditiveIso;
    unsigned n = 2;
    bool exhaustive = false;
    std::uint64_t budget = 100000;        // backtracking node budget
    std::uint64_t seed = 0;               // kept for reproducibility records;
                                          // exploration order is lexicographic
    std::uint64_t node_bound = 10000000;  // exhaustive traversal limit
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<std::vector<std::uint32_t>> witness;  // lexicographically least
    std::optional<std::pair<std::uint32_t, std::uint32_t>> nonadditive_pair;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> counts;  // (multiplicative, additive)
    std::uint64_t nodes = 0;
    std::vector<std::pair<std::string, bool>> martindale_context;
    bool theorem_applies = false;
};

/// Backtracking or exhaustive enumeration of elementwise maps fixing the
/// defining identity of the target class, testing additivity at the leaves.
/// Assignments are made in element-index order with candidate values tried
/// in ascending order, so any reported witness is the lexicographically
/// least completed table. When a decomposition is supplied, the matching
/// Martindale conditions are re-validated first and recorded in the outcome.
SearchOutcome run_search(const FiniteModel& model, const SearchSpec& spec,
                         const AxisDecomposition* martindale_ctx = nullptr);

/// Exact (multiplicative-derivation count, additive count) by constrained
/// enumeration of all self-maps fixing the Leibniz identity.
std::pair<std::uint64_t, std::uint64_t> count_derivations(
    const FiniteModel& model, unsigned n, std::uint64_t domain_limit = 25);

/// All invertible linear maps that are multiplicative (algebra
/// automorphisms), by column backtracking with structure-constant pruning.
std::vector<MapTable> linear_multiplicative_bijections(
    std::shared_ptr<const FiniteModel> model);

}  // namespace axc
