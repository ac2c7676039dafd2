#pragma once

#include <array>

#include "axcheck/fusion.hpp"

namespace axc {

/// Point-line geometry for the Matsuo construction: every line has three
/// distinct points and two distinct points lie on at most one line.
struct FischerSpace {
    std::vector<std::string> points;
    std::vector<std::array<std::size_t, 3>> lines;

    void validate() const;
    /// Third point of the line through i and j, or npos when non-collinear.
    std::size_t third_point(std::size_t i, std::size_t j) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

FischerSpace single_line_space();     // 3 points on one line
FischerSpace two_point_space();       // 2 points, no lines
FischerSpace disjoint_lines_space();  // 6 points, two disjoint lines
/// The six transpositions of Sym(4) with its four collinearity triples
/// (the dual affine plane of order 2) -- the smallest Fischer space in
/// which non-collinear point pairs see a common collinear point.
FischerSpace sym4_space();

struct ZooEntry {
    std::string name;
    std::optional<Algebra> algebra;
    std::optional<FusionLaw> law;
    std::vector<Vec> axes;
    std::vector<Vec> double_axes;  // Matsuo: a + b over zero-product pairs
    std::optional<FusionLaw> double_axis_law;
    std::vector<unsigned long> excluded_characteristics;
    // lazy entries (Highwater)
    std::optional<LazyAlgebra> lazy_algebra;
    std::vector<BasisKey> lazy_axes;
    bool is_lazy() const { return lazy_algebra.has_value(); }
};

/// Norton-Sakuma algebra of type 2A: three axes, law J(1/4),
/// characteristic outside {2, 3, 5}.
ZooEntry norton_sakuma_2a(const FieldSpec& f);

/// Jordan algebra B+ of the 2x2 matrix units under x*y = (xy + yx)/2:
/// axis e11, law J(1/2), characteristic != 2.
ZooEntry jordan_b_plus(const FieldSpec& f);

/// Matsuo algebra of a Fischer space at parameter eta (outside {0, 1}),
/// characteristic != 2: x^2 = x, xy = 0 off lines, xy = (eta/2)(x + y - z)
/// along the line {x, y, z}. Point axes carry J(eta); the emitted double
/// axes a + b (ab = 0) carry M(2 eta, eta) where that law is admissible.
ZooEntry matsuo(const FischerSpace& space, const Scalar& eta, const FieldSpec& f);

/// The infinite-dimensional Highwater algebra on {a_i, s_j}, lazy:
/// characteristic outside {2, 3}; declared axes a(0) and a(1).
ZooEntry highwater(const FieldSpec& f);

/// Windowed eigenspace generators of the Highwater algebra at axis a_i,
/// in law order [1, 0, 2, 1/2], with sigma index j running 1..window.
std::vector<LazyPart> highwater_window_parts(const FieldSpec& f, long axis_index,
                                             unsigned window);

enum class DegenerateKind { Zero, Diag2, TwoPointMatsuo };
/// Negative controls: zero(n) with all products zero; diag2 = F x F
/// componentwise; the two-point Matsuo algebra.
ZooEntry degenerates(DegenerateKind kind, std::size_t n, const FieldSpec& f);

/// Entry by CLI name: 2a, bplus, matsuo-line, matsuo-pair, matsuo-sym4,
/// diag2, zero, highwater.
ZooEntry zoo_by_name(const std::string& name, const FieldSpec& f,
                     const std::optional<Scalar>& eta = std::nullopt,
                     std::size_t n = 1);
std::vector<std::string> zoo_names();

}  // namespace axc
