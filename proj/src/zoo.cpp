#include "axcheck/zoo.hpp"

#include <algorithm>
#include <set>

namespace axc {

void FischerSpace::validate() const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& line : lines) {
        for (auto p : line)
            if (p >= points.size())
                throw std::invalid_argument("line references an unknown point");
        if (line[0] == line[1] || line[0] == line[2] || line[1] == line[2])
            throw std::invalid_argument("line points must be distinct");
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                auto key = std::minmax(line[a], line[b]);
                if (!seen.insert(key).second)
                    throw std::invalid_argument(
                        "two points lie on more than one line");
            }
    }
}

std::size_t FischerSpace::third_point(std::size_t i, std::size_t j) const {
    for (const auto& line : lines) {
        bool has_i = line[0] == i || line[1] == i || line[2] == i;
        bool has_j = line[0] == j || line[1] == j || line[2] == j;
        if (has_i && has_j)
            for (auto p : line)
                if (p != i && p != j) return p;
    }
    return npos;
}

FischerSpace single_line_space() {
    return FischerSpace{{"a", "b", "c"}, {{0, 1, 2}}};
}

FischerSpace two_point_space() { return FischerSpace{{"a", "b"}, {}}; }

FischerSpace disjoint_lines_space() {
    return FischerSpace{{"a", "b", "c", "d", "e", "f"}, {{0, 1, 2}, {3, 4, 5}}};
}

FischerSpace sym4_space() {
    // points = transpositions (12),(13),(14),(23),(24),(34); a triple is
    // collinear when its product cycles have order 3
    return FischerSpace{{"t12", "t13", "t14", "t23", "t24", "t34"},
                        {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}};
}

namespace {

void require_char_not_in(const FieldSpec& f,
                         const std::vector<unsigned long>& excluded,
                         const std::string& what) {
    unsigned long c = f.characteristic();
    for (auto p : excluded)
        if (c == p)
            throw std::invalid_argument(what + " needs characteristic outside {" +
                                        [&] {
                                            std::string s;
                                            for (auto q : excluded)
                                                s += (s.empty() ? "" : ", ") +
                                                     std::to_string(q);
                                            return s;
                                        }() +
                                        "}");
}

}  // namespace

ZooEntry norton_sakuma_2a(const FieldSpec& f) {
    require_char_not_in(f, {2, 3, 5}, "the 2A algebra");
    Scalar e8 = Scalar::fraction(f, 1, 8);
    Algebra::Builder b(f, {"eA", "eB", "eC"});
    b.set(0, 0, {{0ul, Scalar::one(f)}});
    b.set(1, 1, {{1ul, Scalar::one(f)}});
    b.set(2, 2, {{2ul, Scalar::one(f)}});
    b.set(0, 1, {{0ul, e8}, {1ul, e8}, {2ul, -e8}});
    b.set(0, 2, {{0ul, e8}, {1ul, -e8}, {2ul, e8}});
    b.set(1, 2, {{0ul, -e8}, {1ul, e8}, {2ul, e8}});
    ZooEntry z;
    z.name = "2a";
    z.algebra = b.build();
    z.law = FusionLaw::jordan(Scalar::fraction(f, 1, 4));
    for (std::size_t i = 0; i < 3; ++i) z.axes.push_back(z.algebra->basis_vec(i));
    z.excluded_characteristics = {2, 3, 5};
    return z;
}

ZooEntry jordan_b_plus(const FieldSpec& f) {
    require_char_not_in(f, {2}, "the Jordan algebra B+");
    // basis e11, e10, e01, e00 with x*y = (xy + yx)/2 on matrix units
    Scalar half = Scalar::fraction(f, 1, 2);
    Algebra::Builder b(f, {"e11", "e10", "e01", "e00"});
    b.set(0, 0, {{0ul, Scalar::one(f)}});
    b.set(0, 1, {{1ul, half}});
    b.set(0, 2, {{2ul, half}});
    b.set(1, 2, {{0ul, half}, {3ul, half}});
    b.set(1, 3, {{1ul, half}});
    b.set(2, 3, {{2ul, half}});
    b.set(3, 3, {{3ul, Scalar::one(f)}});
    ZooEntry z;
    z.name = "bplus";
    z.algebra = b.build();
    z.law = FusionLaw::jordan(half);
    z.axes.push_back(z.algebra->basis_vec(0));
    z.excluded_characteristics = {2};
    return z;
}

ZooEntry matsuo(const FischerSpace& space, const Scalar& eta, const FieldSpec& f) {
    space.validate();
    require_char_not_in(f, {2}, "a Matsuo algebra");
    if (eta.field() != f) throw std::invalid_argument("eta field mismatch");
    if (eta.is_zero() || eta.is_one())
        throw std::invalid_argument("Matsuo parameter eta must avoid {0, 1}");
    std::size_t n = space.points.size();
    Scalar half_eta = eta / Scalar(f, 2);
    Algebra::Builder b(f, space.points);
    for (std::size_t i = 0; i < n; ++i)
        b.set(i, i, {{i, Scalar::one(f)}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t k = space.third_point(i, j);
            if (k != FischerSpace::npos)
                b.set(i, j, {{i, half_eta}, {j, half_eta}, {k, -half_eta}});
        }
    ZooEntry z;
    z.name = "matsuo";
    z.algebra = b.build();
    z.law = FusionLaw::jordan(eta);
    for (std::size_t i = 0; i < n; ++i) z.axes.push_back(z.algebra->basis_vec(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (space.third_point(i, j) == FischerSpace::npos)
                z.double_axes.push_back(z.algebra->basis_vec(i) +
                                        z.algebra->basis_vec(j));
    Scalar two_eta = Scalar(f, 2) * eta;
    if (!two_eta.is_zero() && !two_eta.is_one() && two_eta != eta)
        z.double_axis_law = FusionLaw::monster(two_eta, eta);
    z.excluded_characteristics = {2};
    return z;
}

ZooEntry highwater(const FieldSpec& f) {
    require_char_not_in(f, {2, 3}, "the Highwater algebra");
    Scalar half = Scalar::fraction(f, 1, 2);
    Scalar q34 = Scalar::fraction(f, 3, 4);
    Scalar q38 = Scalar::fraction(f, 3, 8);
    Scalar q32 = Scalar::fraction(f, 3, 2);
    auto rule = [f, half, q34, q38, q32](BasisKey x, BasisKey y) {
        if (x.fam == 's' && y.fam == 'a') std::swap(x, y);
        SparseVec v(f);
        if (x.fam == 'a' && y.fam == 'a') {
            // a_i a_j = (a_i + a_j)/2 + s_|i-j|
            v.add(x, half);
            v.add(y, half);
            long d = std::abs(x.index - y.index);
            if (d != 0) v.add(BasisKey{'s', d}, Scalar::one(f));
            return v;
        }
        if (x.fam == 'a' && y.fam == 's') {
            // a_i s_j = -3/4 a_i + 3/8 (a_{i-j} + a_{i+j}) + 3/2 s_j
            long i = x.index, j = y.index;
            v.add(x, -q34);
            v.add(BasisKey{'a', i - j}, q38);
            v.add(BasisKey{'a', i + j}, q38);
            v.add(y, q32);
            return v;
        }
        // s_i s_j = 3/4 (s_i + s_j) - 3/8 (s_|i-j| + s_{i+j}), s_0 = 0
        long i = x.index, j = y.index;
        v.add(x, q34);
        v.add(y, q34);
        long d = std::abs(i - j);
        if (d != 0) v.add(BasisKey{'s', d}, -q38);
        v.add(BasisKey{'s', i + j}, -q38);
        return v;
    };
    ZooEntry z;
    z.name = "highwater";
    z.lazy_algebra = LazyAlgebra(f, rule);
    z.law = FusionLaw::highwater(f);
    z.lazy_axes = {BasisKey{'a', 0}, BasisKey{'a', 1}};
    z.excluded_characteristics = {2, 3};
    return z;
}

std::vector<LazyPart> highwater_window_parts(const FieldSpec& f, long axis_index,
                                             unsigned window) {
    const long c = axis_index;
    auto a = [&](long i) { return BasisKey{'a', i}; };
    auto s = [&](long j) { return BasisKey{'s', j}; };
    std::vector<LazyPart> parts;
    LazyPart p1{Scalar::one(f), {SparseVec::basis(f, a(c))}};
    LazyPart p0{Scalar::zero(f), {}};
    LazyPart p2{Scalar(f, 2), {}};
    LazyPart ph{Scalar::fraction(f, 1, 2), {}};
    for (unsigned j = 1; j <= window; ++j) {
        long jj = static_cast<long>(j);
        // 6 a_c - 3(a_{c-j} + a_{c+j}) + 4 s_j
        SparseVec g0(f);
        g0.add(a(c), Scalar(f, 6));
        g0.add(a(c - jj), Scalar(f, -3));
        g0.add(a(c + jj), Scalar(f, -3));
        g0.add(s(jj), Scalar(f, 4));
        p0.gens.push_back(std::move(g0));
        // 2 a_c - (a_{c-j} + a_{c+j}) - 4 s_j
        SparseVec g2(f);
        g2.add(a(c), Scalar(f, 2));
        g2.add(a(c - jj), Scalar(f, -1));
        g2.add(a(c + jj), Scalar(f, -1));
        g2.add(s(jj), Scalar(f, -4));
        p2.gens.push_back(std::move(g2));
        // a_{c-j} - a_{c+j}
        SparseVec gh(f);
        gh.add(a(c - jj), Scalar::one(f));
        gh.add(a(c + jj), Scalar(f, -1));
        ph.gens.push_back(std::move(gh));
    }
    parts.push_back(std::move(p1));
    parts.push_back(std::move(p0));
    parts.push_back(std::move(p2));
    parts.push_back(std::move(ph));
    return parts;
}

ZooEntry degenerates(DegenerateKind kind, std::size_t n, const FieldSpec& f) {
    ZooEntry z;
    switch (kind) {
        case DegenerateKind::Zero: {
            if (n == 0) throw std::invalid_argument("zero algebra needs dimension >= 1");
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i));
            Algebra::Builder b(f, names);
            z.name = "zero";
            z.algebra = b.build();  // all products default to zero
            z.law = FusionLaw::assoc(f);
            return z;
        }
        case DegenerateKind::Diag2: {
            Algebra::Builder b(f, {"d1", "d2"});
            b.set(0, 0, {{0ul, Scalar::one(f)}});
            b.set(1, 1, {{1ul, Scalar::one(f)}});
            z.name = "diag2";
            z.algebra = b.build();
            z.law = FusionLaw::assoc(f);
            z.axes.push_back(z.algebra->basis_vec(0));
            z.axes.push_back(z.algebra->basis_vec(1));
            return z;
        }
        case DegenerateKind::TwoPointMatsuo:
            z = matsuo(two_point_space(), Scalar::fraction(f, 1, 4), f);
            z.name = "matsuo-pair";
            return z;
    }
    throw std::logic_error("unreachable");
}

ZooEntry zoo_by_name(const std::string& name, const FieldSpec& f,
                     const std::optional<Scalar>& eta, std::size_t n) {
    Scalar eta_eff = eta.value_or(Scalar::fraction(f, 1, 4));
    if (name == "2a") return norton_sakuma_2a(f);
    if (name == "bplus") return jordan_b_plus(f);
    if (name == "matsuo-line") {
        ZooEntry z = matsuo(single_line_space(), eta_eff, f);
        z.name = "matsuo-line";
        return z;
    }
    if (name == "matsuo-pair") return degenerates(DegenerateKind::TwoPointMatsuo, 0, f);
    if (name == "matsuo-sym4") {
        ZooEntry z = matsuo(sym4_space(), eta_eff, f);
        z.name = "matsuo-sym4";
        return z;
    }
    if (name == "diag2") return degenerates(DegenerateKind::Diag2, 0, f);
    if (name == "zero") return degenerates(DegenerateKind::Zero, n, f);
    if (name == "highwater") return highwater(f);
    throw std::invalid_argument("unknown zoo entry '" + name + "'");
}

std::vector<std::string> zoo_names() {
    return {"2a",         "bplus", "matsuo-line", "matsuo-pair",
            "matsuo-sym4", "diag2", "zero",        "highwater"};
}

}  // namespace axc
