#pragma once

#include <memory>
#include <random>

#include "axcheck/enumeration.hpp"
#include "axcheck/fusion.hpp"

namespace axc {

/// A map between algebras, either as an exhaustive table over the canonical
/// element enumeration of a finite-field algebra, or as a matrix (linear
/// maps, the only exhaustively checkable representation over Q).
class MapTable {
public:
    MapTable() = default;  // empty; fill via table()/linear()
    static MapTable table(std::shared_ptr<const FiniteModel> dom,
                          std::shared_ptr<const FiniteModel> cod,
                          std::vector<std::uint32_t> tab,
                          bool claim_bijective = false);
    static MapTable linear(const Algebra& dom, const Algebra& cod, Matrix m);
    static MapTable identity(std::shared_ptr<const FiniteModel> model);

    bool is_table() const { return !tab_.empty(); }
    const FiniteModel& dom_model() const;
    const FiniteModel& cod_model() const;
    const Algebra& dom_algebra() const;
    const Algebra& cod_algebra() const;
    const std::vector<std::uint32_t>& tab() const { return tab_; }
    const Matrix& matrix() const;

    std::uint32_t apply_index(std::uint32_t i) const;
    Vec apply(const Vec& x) const;
    bool bijective() const;
    MapTable inverted() const;  // table transposition or exact matrix inverse

private:
    std::shared_ptr<const FiniteModel> dom_, cod_;
    std::shared_ptr<const Algebra> dom_alg_, cod_alg_;
    std::vector<std::uint32_t> tab_;
    std::optional<Matrix> mat_;
};

enum class MapClass { Iso, Derivation, Elementary, JordanElementary };
MapClass parse_map_class(const std::string& name);
std::string map_class_name(MapClass c);

/// A concrete map with the class it claims: phi/d/M in `fwd`; M* in `star`
/// for the elementary flavors; n is the multiplicativity arity.
struct MapUnderTest {
    MapClass cls = MapClass::Iso;
    unsigned n = 2;
    MapTable fwd;
    std::optional<MapTable> star;
};

struct CheckMode {
    bool exhaustive = true;
    std::uint64_t samples = 200;
    std::uint64_t seed = 1;
    std::uint64_t exhaustive_bound = 3125;  // max element count
};

struct Counterexample {
    std::vector<Vec> args;
};

struct CheckResult {
    bool ok = false;
    std::optional<Counterexample> counterexample;
    std::uint64_t checked = 0;
};

CheckResult check_n_multiplicative_iso(const MapTable& phi, unsigned n,
                                       const CheckMode& mode);
CheckResult check_n_multiplicative_derivation(const MapTable& d, unsigned n,
                                              const CheckMode& mode);
CheckResult check_elementary_pair(const MapTable& m, const MapTable& mstar,
                                  bool jordan, const CheckMode& mode);
CheckResult class_check(const MapUnderTest& m, const CheckMode& mode);

/// Value of the nullifying function attached to the map class:
///   iso:        phi^{-1}(phi(sum) - sum of phi(x_i))
///   derivation: d(sum) - sum of d(x_i)
///   elementary: M^{-1}(M(sum) - sum of M(x_i))
Vec residual(const MapUnderTest& m, const std::vector<Vec>& args);

enum class TupleKind { PeirceComponents, MixedProduct, SamePart, GeneralPairs };
TupleKind parse_tuple_kind(const std::string& name);

struct TupleOptions {
    std::optional<std::size_t> part;  // SamePart: restrict to one part index
    std::uint64_t pairs = 64;         // GeneralPairs: sampled pair count
    std::uint64_t seed = 1;
};

struct TupleFamily {
    TupleKind kind = TupleKind::GeneralPairs;
    std::vector<std::vector<Vec>> tuples;
};

/// Lemma-shaped argument tuples over part-basis vectors and small scalar
/// combinations (coefficients in {-1, 0, 1, 2}).
TupleFamily lemma_tuples(const Algebra& alg, const AxisDecomposition& d,
                         TupleKind kind, const TupleOptions& opts = {});

std::pair<bool, std::optional<Counterexample>> residual_vanishes_on(
    const MapUnderTest& m, const TupleFamily& family);

}  // namespace axc
