#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "axcheck/report.hpp"
#include "axcheck/search.hpp"

namespace py = pybind11;
using namespace axc;

namespace {

// json -> python via the stdlib json module: small surface, zero glue types
py::object to_py(const json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

FieldSpec field_of(const std::string& tok) { return parse_field_token(tok); }

AlgebraFile parse_file(const std::string& text) {
    return std::get<AlgebraFile>(parse_input(text));
}

FusionLaw law_of(const AlgebraFile& f, const std::vector<std::string>& toks) {
    if (!toks.empty()) return parse_law_tokens(f.algebra.field(), toks);
    if (f.law) return *f.law;
    throw std::invalid_argument("no law given and the file declares none");
}

}  // namespace

PYBIND11_MODULE(_axcheck, m) {
    m.doc() = "exact verification of fusion laws, Martindale-like conditions, "
              "and additivity machinery on commutative algebras with idempotents";

    m.def("zoo_names", &zoo_names);

    m.def(
        "zoo_emit",
        [](const std::string& name, const std::string& field,
           const std::string& eta, std::size_t n) {
            FieldSpec f = field_of(field);
            std::optional<Scalar> e;
            if (!eta.empty()) e = Scalar::parse(f, eta);
            return emit_entry(zoo_by_name(name, f, e, n));
        },
        py::arg("name"), py::arg("field") = "Q", py::arg("eta") = "",
        py::arg("n") = 1,
        "algebra file text for a built-in algebra");

    m.def(
        "decompose",
        [](const std::string& text, const std::string& axis,
           const std::vector<std::string>& law) {
            AlgebraFile f = parse_file(text);
            FusionLaw l = law_of(f, law);
            Vec a = parse_linear_combo(f.algebra, axis);
            return to_py(decomposition_json(axc::decompose(f.algebra, a, l)));
        },
        py::arg("text"), py::arg("axis"),
        py::arg("law") = std::vector<std::string>{},
        "axis eigenspace decomposition of an algebra file");

    m.def(
        "fusion_check",
        [](const std::string& text, const std::string& axis,
           const std::vector<std::string>& law) {
            AlgebraFile f = parse_file(text);
            FusionLaw l = law_of(f, law);
            Vec a = parse_linear_combo(f.algebra, axis);
            return to_py(fusion_report_json(verify_fusion(f.algebra, a, l), l));
        },
        py::arg("text"), py::arg("axis"),
        py::arg("law") = std::vector<std::string>{});

    m.def(
        "martindale",
        [](const std::string& text, const std::string& axis,
           const std::vector<std::string>& law) {
            AlgebraFile f = parse_file(text);
            FusionLaw l = law_of(f, law);
            Vec a = parse_linear_combo(f.algebra, axis);
            AxisDecomposition d = axc::decompose(f.algebra, a, l);
            if (l.is_j_type())
                return to_py(martindale_j_json(check_j_conditions(f.algebra, d)));
            if (l.is_m_type())
                return to_py(martindale_m_json(check_m_conditions(f.algebra, d)));
            throw std::invalid_argument("martindale needs a {1,0,alpha(,beta)} law");
        },
        py::arg("text"), py::arg("axis"),
        py::arg("law") = std::vector<std::string>{});

    m.def(
        "axial_check",
        [](const std::string& text, const std::vector<std::string>& law) {
            AlgebraFile f = parse_file(text);
            FusionLaw l = law_of(f, law);
            return to_py(axial_json(verify_axial(f.algebra, f.axes, l), l));
        },
        py::arg("text"), py::arg("law") = std::vector<std::string>{});

    m.def(
        "lemma_check",
        [](const std::string& text, const std::string& axis,
           const std::vector<std::string>& law, unsigned r, std::size_t cap) {
            AlgebraFile f = parse_file(text);
            FusionLaw l = law_of(f, law);
            Vec a = parse_linear_combo(f.algebra, axis);
            AxisDecomposition d = axc::decompose(f.algebra, a, l);
            auto fams = build_operator_families(f.algebra, d, r, cap);
            json out = json::object();
            std::vector<FamilyTag> ftags = {FamilyTag::F1, FamilyTag::F0,
                                            FamilyTag::Fa};
            std::vector<std::size_t> own = {l.index_of_one(), l.index_of_zero(),
                                            l.extra_indices()[0]};
            if (l.is_m_type()) {
                ftags.push_back(FamilyTag::Fb);
                own.push_back(l.extra_indices()[1]);
            }
            for (std::size_t fi = 0; fi < ftags.size(); ++fi) {
                json entry{{"generators", fams[ftags[fi]].words.size()}};
                for (std::size_t pj = 0; pj < d.parts.size(); ++pj) {
                    if (pj == own[fi])
                        entry["injective"] = verify_family_injectivity(
                            fams[ftags[fi]], d.parts[pj]);
                    else
                        entry["annihilates"][l.eigenvalue(pj).str()] =
                            verify_family_annihilation(fams[ftags[fi]],
                                                       d.parts[pj]);
                }
                out[family_tag_name(ftags[fi])] = entry;
            }
            return to_py(out);
        },
        py::arg("text"), py::arg("axis"),
        py::arg("law") = std::vector<std::string>{}, py::arg("r") = 1,
        py::arg("cap") = 10000);

    m.def(
        "search",
        [](const std::string& text, const std::string& target, unsigned n,
           bool exhaustive, std::uint64_t budget, std::uint64_t seed) {
            AlgebraFile f = parse_file(text);
            FiniteModel model(f.algebra);
            SearchSpec spec;
            spec.target = parse_search_target(target);
            spec.n = n;
            spec.exhaustive = exhaustive;
            spec.budget = budget;
            spec.seed = seed;
            std::optional<AxisDecomposition> ctx;
            if (!f.axes.empty() && f.law &&
                (f.law->is_j_type() || f.law->is_m_type()))
                ctx = axc::decompose(f.algebra, f.axes[0], *f.law);
            return to_py(
                search_outcome_json(run_search(model, spec, ctx ? &*ctx : nullptr)));
        },
        py::arg("text"), py::arg("target") = "nonadditive-iso", py::arg("n") = 2,
        py::arg("exhaustive") = false, py::arg("budget") = 100000,
        py::arg("seed") = 0);

    m.def(
        "residual_check",
        [](const std::string& text, const std::string& map_text,
           const std::string& cls, unsigned n, std::uint64_t samples,
           std::uint64_t seed) {
            AlgebraFile f = parse_file(text);
            MapFileData mf = parse_map_file(map_text, f.algebra.field());
            MapUnderTest mut;
            mut.cls = parse_map_class(cls);
            mut.n = n;
            if (mf.is_table()) {
                auto model = std::make_shared<FiniteModel>(f.algebra);
                mut.fwd = MapTable::table(model, model, mf.table);
            } else {
                mut.fwd = MapTable::linear(f.algebra, f.algebra, *mf.matrix);
            }
            if (mut.cls == MapClass::Elementary ||
                mut.cls == MapClass::JordanElementary)
                mut.star = mut.fwd.inverted();
            CheckMode mode;
            mode.exhaustive = samples == 0 && mut.fwd.is_table();
            mode.samples = samples ? samples : 500;
            mode.seed = seed;
            CheckResult cr = class_check(mut, mode);
            json out{{"class_check", check_result_json(cr)}};
            if (cr.ok && mut.fwd.is_table()) {
                const FiniteModel& model = mut.fwd.dom_model();
                bool ok = true;
                json cex;
                for (std::uint32_t x = 0; x < model.size() && ok; ++x)
                    for (std::uint32_t y = 0; y < model.size() && ok; ++y) {
                        Vec r = residual(mut, {model.decode(x), model.decode(y)});
                        if (!r.is_zero()) {
                            ok = false;
                            cex = json::array({x, y});
                        }
                    }
                out["residual"] = json{{"pass", ok}};
                if (!ok) out["residual"]["counterexample"] = cex;
            }
            return to_py(out);
        },
        py::arg("text"), py::arg("map_text"), py::arg("cls") = "iso",
        py::arg("n") = 2, py::arg("samples") = 0, py::arg("seed") = 1);

    m.def(
        "highwater_window_report",
        [](long axis_index, unsigned window) {
            ZooEntry z = highwater(FieldSpec::rationals());
            const LazyAlgebra& h = *z.lazy_algebra;
            auto parts =
                highwater_window_parts(h.field(), axis_index, window);
            auto span_parts =
                highwater_window_parts(h.field(), axis_index, 2 * window + 1);
            FusionLaw law = FusionLaw::monster(Scalar(h.field(), 2),
                                               Scalar::fraction(h.field(), 1, 2));
            SparseVec ax = SparseVec::basis(h.field(), BasisKey{'a', axis_index});
            LazyFusionReport fus =
                lazy_verify_fusion(h, ax, law, parts, span_parts, window);
            LazyMartindaleReport mar = check_m_conditions_window(h, parts, window);
            return to_py(json{{"fusion", lazy_fusion_json(fus, law)},
                              {"martindale", lazy_martindale_json(mar)}});
        },
        py::arg("axis_index") = 0, py::arg("window") = 8,
        "windowed fusion and Martindale report for the Highwater algebra");

    m.def("parse_roundtrip", [](const std::string& text) {
        AlgebraFile f = parse_file(text);
        return emit_algebra(f.algebra, f.axes, f.law ? &*f.law : nullptr);
    });
}
