#pragma once

#include <variant>

#include "axcheck/maps.hpp"
#include "axcheck/zoo.hpp"

namespace axc {

/// Parsed algebra file: field, basis, symmetric product table, declared
/// axes and an optional declared law.
struct AlgebraFile {
    Algebra algebra;
    std::vector<Vec> axes;
    std::optional<FusionLaw> law;
};

/// Marker file standing in for an algebra that cannot be tabulated; only
/// commands with windowed (lazy) support consume it.
struct LazyMarker {
    std::string name;
    FieldSpec field;
};

using ParsedInput = std::variant<AlgebraFile, LazyMarker>;

AlgebraFile parse_algebra(const std::string& text);
ParsedInput parse_input(const std::string& text);

/// Canonical emission: sorted basis order, reduced coefficients with
/// positive denominators, products listed once per unordered pair.
/// emit(parse(emit(x))) == emit(x) byte for byte.
std::string emit_algebra(const Algebra& alg, const std::vector<Vec>& axes,
                         const FusionLaw* law);
std::string emit_entry(const ZooEntry& z);

FieldSpec parse_field_token(const std::string& tok);
Vec parse_linear_combo(const Algebra& alg, const std::string& text);
FusionLaw parse_law_tokens(const FieldSpec& f, const std::vector<std::string>& toks);
BasisKey parse_basis_key(const std::string& text);
std::string combo_str(const Algebra& alg, const Vec& v);

/// Map files: `map <domain-size>` with lines `i -> j` over canonical
/// element indices, or `linmap <rows> <cols>` with scalar matrix rows.
struct MapFileData {
    std::vector<std::uint32_t> table;
    std::optional<Matrix> matrix;
    bool is_table() const { return !table.empty(); }
};

MapFileData parse_map_file(const std::string& text, const FieldSpec& f);
std::string emit_map_table(const std::vector<std::uint32_t>& tab);
std::string emit_linmap(const Matrix& m);

std::string fnv1a_digest(const std::string& data);

}  // namespace axc
