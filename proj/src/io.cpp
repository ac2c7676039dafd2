#include "axcheck/io.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace axc {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool looks_like_number(const std::string& t) {
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    return i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]));
}

struct FileBuilder {
    std::optional<FieldSpec> field;
    std::optional<std::size_t> dim;
    std::vector<std::string> names;
    std::vector<std::tuple<std::size_t, std::size_t, Vec>> products;
    std::vector<std::string> axis_lines;
    std::optional<std::vector<std::string>> law_tokens;
};

std::size_t name_index(const std::vector<std::string>& names, const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return i;
    throw std::invalid_argument("unknown basis name '" + n + "'");
}

// coefficient/name list after `->`: <coeff> <name> [(+|-) <coeff> <name>]...
Vec parse_terms(const FieldSpec& f, const std::vector<std::string>& names,
                const std::vector<std::string>& toks, std::size_t start) {
    Vec v(f, names.size());
    if (start < toks.size() && toks.size() == start + 1 && toks[start] == "0")
        return v;
    int sign = 1;
    std::size_t i = start;
    bool any = false;
    while (i < toks.size()) {
        const std::string& t = toks[i];
        if (t == "+") { sign = 1; ++i; continue; }
        if (t == "-") { sign = -1; ++i; continue; }
        Scalar coeff = Scalar::one(f);
        std::string name;
        if (looks_like_number(t)) {
            coeff = Scalar::parse(f, t);
            if (i + 1 >= toks.size())
                throw std::invalid_argument("coefficient without a basis name");
            name = toks[i + 1];
            i += 2;
        } else {
            name = t;
            ++i;
        }
        if (sign < 0) coeff = -coeff;
        v[name_index(names, name)] += coeff;
        sign = 1;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty product expansion");
    return v;
}

}  // namespace

FieldSpec parse_field_token(const std::string& tok) {
    if (tok == "Q" || tok == "q") return FieldSpec::rationals();
    if ((tok[0] == 'F' || tok[0] == 'f') && tok.size() > 1) {
        unsigned long p = std::stoul(tok.substr(1));
        return FieldSpec::prime(p);
    }
    throw std::invalid_argument("bad field '" + tok + "' (expected Q or F<p>)");
}

ParsedInput parse_input(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "lazy") {
            if (toks.size() != 2)
                throw std::invalid_argument("lazy marker needs a name");
            LazyMarker m;
            m.name = toks[1];
            m.field = FieldSpec::rationals();
            while (std::getline(is, line)) {
                auto t2 = tokens_of(strip_comment(line));
                if (t2.empty()) continue;
                if (t2[0] == "field") {
                    if (t2.size() == 2)
                        m.field = parse_field_token(t2[1]);
                    else if (t2.size() == 3 && (t2[1] == "F" || t2[1] == "f"))
                        m.field = FieldSpec::prime(std::stoul(t2[2]));
                    else
                        throw std::invalid_argument("bad field line");
                }
            }
            return m;
        }
        break;
    }
    return parse_algebra(text);
}

AlgebraFile parse_algebra(const std::string& text) {
    FileBuilder fb;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    std::vector<std::vector<std::string>> muls;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "field") {
            if (toks.size() == 2)
                fb.field = parse_field_token(toks[1]);
            else if (toks.size() == 3 && (toks[1] == "F" || toks[1] == "f"))
                fb.field = FieldSpec::prime(std::stoul(toks[2]));
            else
                fail("bad field line (field Q | field F <p>)");
        } else if (kw == "dim") {
            if (toks.size() != 2) fail("bad dim line");
            fb.dim = std::stoul(toks[1]);
        } else if (kw == "basis") {
            fb.names.assign(toks.begin() + 1, toks.end());
            if (fb.names.empty()) fail("empty basis");
        } else if (kw == "mul") {
            muls.push_back(toks);
        } else if (kw == "axis") {
            std::string stripped = strip_comment(line);
            fb.axis_lines.push_back(stripped.substr(stripped.find("axis") + 4));
        } else if (kw == "law") {
            fb.law_tokens = std::vector<std::string>(toks.begin() + 1, toks.end());
        } else {
            fail("unknown directive '" + kw + "'");
        }
    }
    if (!fb.field) throw std::invalid_argument("missing field line");
    if (fb.names.empty()) throw std::invalid_argument("missing basis line");
    if (fb.dim && *fb.dim != fb.names.size())
        throw std::invalid_argument("dim does not match the basis length");

    Algebra::Builder build(*fb.field, fb.names);
    for (const auto& toks : muls) {
        if (toks.size() < 4 || toks[3] != "->")
            throw std::invalid_argument("bad mul line (mul <b1> <b2> -> ...)");
        std::size_t i = name_index(fb.names, toks[1]);
        std::size_t j = name_index(fb.names, toks[2]);
        Vec v = parse_terms(*fb.field, fb.names, toks, 4);
        try {
            build.set(i, j, std::move(v));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("asymmetric duplicate entries for (" +
                                        toks[1] + ", " + toks[2] + ")");
        }
    }
    AlgebraFile out{build.build(), {}, std::nullopt};
    for (const auto& a : fb.axis_lines)
        out.axes.push_back(parse_linear_combo(out.algebra, a));
    if (fb.law_tokens)
        out.law = parse_law_tokens(out.algebra.field(), *fb.law_tokens);
    return out;
}

Vec parse_linear_combo(const Algebra& alg, const std::string& text) {
    const FieldSpec& f = alg.field();
    Vec v(f, alg.dim());
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty axis expression");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected + or - between terms");
        }
        std::string num;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            num.push_back(text[i++]);
        skip_ws();
        if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        std::string name;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '_'))
            name.push_back(text[i++]);
        if (name.empty()) throw std::invalid_argument("expected a basis name in '" + text + "'");
        Scalar coeff = num.empty() ? Scalar::one(f) : Scalar::parse(f, num);
        if (sign < 0) coeff = -coeff;
        std::size_t idx = alg.index_of(name);
        if (idx == Algebra::npos)
            throw std::invalid_argument("unknown basis name '" + name + "'");
        v[idx] += coeff;
        first = false;
        skip_ws();
    }
    return v;
}

FusionLaw parse_law_tokens(const FieldSpec& f, const std::vector<std::string>& toks) {
    if (toks.empty()) throw std::invalid_argument("empty law specification");
    std::vector<Scalar> params;
    for (std::size_t i = 1; i < toks.size(); ++i)
        params.push_back(Scalar::parse(f, toks[i]));
    return builtin_law(f, toks[0], params);
}

BasisKey parse_basis_key(const std::string& text) {
    if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0])))
        throw std::invalid_argument("bad basis key '" + text + "'");
    std::string rest = text.substr(1);
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
        rest = rest.substr(1, rest.size() - 2);
    if (rest.empty()) throw std::invalid_argument("bad basis key '" + text + "'");
    return BasisKey{text[0], std::stol(rest)};
}

std::string combo_str(const Algebra& alg, const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < v.dim(); ++k) {
        if (v[k].is_zero()) continue;
        if (!first) os << " + ";
        if (v[k].is_one())
            os << alg.basis_name(k);
        else
            os << v[k].str() << " " << alg.basis_name(k);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string emit_algebra(const Algebra& alg, const std::vector<Vec>& axes,
                         const FusionLaw* law) {
    std::size_t n = alg.dim();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return alg.basis_name(a) < alg.basis_name(b);
    });
    std::vector<std::size_t> pos(n);  // old index -> sorted position
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    std::ostringstream os;
    os << "# axcheck algebra file\n";
    os << "field " << (alg.field().kind == FieldKind::Rationals
                           ? std::string("Q")
                           : "F " + std::to_string(alg.field().modulus))
       << "\n";
    os << "dim " << n << "\n";
    os << "basis";
    for (auto i : order) os << " " << alg.basis_name(i);
    os << "\n";
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            const Vec& prod = alg.structure_constant(order[a], order[b]);
            if (prod.is_zero()) continue;
            os << "mul " << alg.basis_name(order[a]) << " "
               << alg.basis_name(order[b]) << " ->";
            bool first = true;
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& s = prod[order[c]];
                if (s.is_zero()) continue;
                os << (first ? " " : " + ") << s.str() << " "
                   << alg.basis_name(order[c]);
                first = false;
            }
            os << "\n";
        }
    for (const auto& ax : axes) {
        os << "axis ";
        bool first = true;
        bool unit = false;
        std::size_t nonzero = 0, unit_idx = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (!ax[c].is_zero()) { ++nonzero; unit_idx = c; }
        unit = nonzero == 1 && ax[unit_idx].is_one();
        if (unit) {
            os << alg.basis_name(unit_idx);
        } else {
            for (std::size_t c = 0; c < n; ++c) {
                const Scalar& s = ax[order[c]];
                if (s.is_zero()) continue;
                os << (first ? "" : " + ") << s.str() << " "
                   << alg.basis_name(order[c]);
                first = false;
            }
        }
        os << "\n";
    }
    if (law) {
        os << "law " << law->name();
        if (law->name() == "jordan") os << " " << law->eigenvalue(2).str();
        if (law->name() == "monster")
            os << " " << law->eigenvalue(2).str() << " " << law->eigenvalue(3).str();
        os << "\n";
    }
    return os.str();
}

std::string emit_entry(const ZooEntry& z) {
    if (z.is_lazy()) {
        std::ostringstream os;
        os << "# axcheck lazy algebra marker\n";
        os << "lazy " << z.name << "\n";
        os << "field "
           << (z.lazy_algebra->field().kind == FieldKind::Rationals
                   ? std::string("Q")
                   : "F " + std::to_string(z.lazy_algebra->field().modulus))
           << "\n";
        if (z.law) os << "law " << z.law->name() << "\n";
        for (const auto& k : z.lazy_axes)
            os << "axis " << k.fam << k.index << "\n";
        return os.str();
    }
    return emit_algebra(*z.algebra, z.axes, z.law ? &*z.law : nullptr);
}

MapFileData parse_map_file(const std::string& text, const FieldSpec& f) {
    std::istringstream is(text);
    std::string line;
    MapFileData out;
    std::optional<std::size_t> expect;
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> entries;
    bool linmap = false;
    while (std::getline(is, line)) {
        auto toks = tokens_of(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "map") {
            if (toks.size() != 2) throw std::invalid_argument("bad map header");
            expect = std::stoul(toks[1]);
            out.table.assign(*expect, 0);
            continue;
        }
        if (toks[0] == "linmap") {
            if (toks.size() != 3) throw std::invalid_argument("bad linmap header");
            linmap = true;
            rows = std::stoul(toks[1]);
            cols = std::stoul(toks[2]);
            continue;
        }
        if (linmap) {
            for (const auto& t : toks) entries.push_back(Scalar::parse(f, t));
            continue;
        }
        if (!expect) throw std::invalid_argument("map file needs a header line");
        if (toks.size() != 3 || toks[1] != "->")
            throw std::invalid_argument("bad map line (i -> j)");
        std::size_t i = std::stoul(toks[0]);
        if (i >= *expect) throw std::invalid_argument("map index out of range");
        out.table[i] = static_cast<std::uint32_t>(std::stoul(toks[2]));
    }
    if (linmap) {
        if (entries.size() != rows * cols)
            throw std::invalid_argument("linmap entry count mismatch");
        Matrix m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entries[i * cols + j];
        out.matrix = std::move(m);
        out.table.clear();
    } else if (!expect) {
        throw std::invalid_argument("empty map file");
    }
    return out;
}

std::string emit_map_table(const std::vector<std::uint32_t>& tab) {
    std::ostringstream os;
    os << "map " << tab.size() << "\n";
    for (std::size_t i = 0; i < tab.size(); ++i)
        os << i << " -> " << tab[i] << "\n";
    return os.str();
}

std::string emit_linmap(const Matrix& m) {
    std::ostringstream os;
    os << "linmap " << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.at(i, j).str();
        os << "\n";
    }
    return os.str();
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return "fnv1a:" + os.str();
}

}  // namespace axc
