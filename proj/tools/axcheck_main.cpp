#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "axcheck/report.hpp"
#include "axcheck/search.hpp"

using namespace axc;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

std::string default_format() {
    const char* env = std::getenv("AXCHECK_FORMAT");
    return env ? env : "text";
}

int finish(const json& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << render_text(rep);
    return rep.at("pass").get<bool>() ? 0 : 1;
}

FusionLaw resolve_law(const AlgebraFile& f, const std::vector<std::string>& toks) {
    if (!toks.empty()) return parse_law_tokens(f.algebra.field(), toks);
    if (f.law) return *f.law;
    throw std::runtime_error("no --law given and the file declares none");
}

struct LazySetup {
    ZooEntry entry;
    FusionLaw law;
    long axis_index = 0;
    unsigned window = 0;
};

LazySetup lazy_setup(const LazyMarker& marker, const std::string& axis,
                     const std::vector<std::string>& law_toks, unsigned window) {
    if (marker.name != "highwater")
        throw std::runtime_error("unknown lazy algebra '" + marker.name + "'");
    if (window == 0)
        throw std::runtime_error("lazy algebras need --window N");
    LazySetup s{highwater(marker.field),
                law_toks.empty() ? FusionLaw::highwater(marker.field)
                                 : parse_law_tokens(marker.field, law_toks),
                0, window};
    if (!axis.empty()) {
        BasisKey key = parse_basis_key(axis);
        if (key.fam != 'a')
            throw std::runtime_error("Highwater axes are the a(i) idempotents");
        s.axis_index = key.index;
    }
    if (s.law.size() != 4)
        throw std::runtime_error("windowed checks need a four-eigenvalue law");
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of fusion laws, Martindale-like conditions,\n"
                 "and additivity machinery on commutative algebras with idempotents"};
    app.require_subcommand(1);

    std::string input, axis, format = default_format(), map_path, star_path;
    std::string map_class = "iso", target = "nonadditive-iso", out_path;
    std::vector<std::string> law_toks;
    unsigned window = 0, r_param = 1, arity = 2;
    std::size_t cap = 10000;
    std::uint64_t samples = 0, seed = 1, budget = 100000;
    bool exhaustive = false;

    auto add_common = [&](CLI::App* cmd, bool needs_axis) {
        cmd->add_option("file", input, "algebra file, or - for stdin")->required();
        if (needs_axis) cmd->add_option("--axis", axis, "axis (name or combination)");
        cmd->add_option("--law", law_toks,
                        "fusion law, e.g. --law jordan 1/4 | monster 1/4 1/32 | "
                        "assoc | highwater")
            ->expected(-1);
        cmd->add_option("--format", format, "text|json")->capture_default_str();
    };

    CLI::App* c_decompose = app.add_subcommand("decompose", "axis eigenspace decomposition");
    add_common(c_decompose, true);

    CLI::App* c_fusion = app.add_subcommand("fusion-check", "verify the fusion law at an axis");
    add_common(c_fusion, true);
    c_fusion->add_option("--window", window, "generator window for lazy algebras");

    CLI::App* c_mart = app.add_subcommand("martindale", "Martindale-like conditions");
    add_common(c_mart, true);
    c_mart->add_option("--window", window, "generator window for lazy algebras");

    CLI::App* c_axial = app.add_subcommand("axial-check", "fusion at every declared axis plus generation");
    add_common(c_axial, false);

    CLI::App* c_lemma = app.add_subcommand("lemma-check", "operator-family annihilation/injectivity matrix");
    add_common(c_lemma, true);
    c_lemma->add_option("--r", r_param, "word length parameter")->capture_default_str();
    c_lemma->add_option("--cap", cap, "generator count cap")->capture_default_str();
    c_lemma->add_option("--window", window, "generator window for lazy algebras");

    CLI::App* c_resid = app.add_subcommand("residual-check", "map class identity and residual vanishing");
    add_common(c_resid, true);
    c_resid->add_option("--map", map_path, "map file")->required();
    c_resid->add_option("--star", star_path, "M* map file (elementary flavors; default inverse)");
    c_resid->add_option("--class", map_class, "iso|der|elem|jelem")->capture_default_str();
    c_resid->add_option("--n", arity, "multiplicativity arity")->capture_default_str();
    c_resid->add_option("--samples", samples, "sampled tuples (0 = exhaustive)");
    c_resid->add_option("--seed", seed, "sampling seed")->capture_default_str();

    CLI::App* c_search = app.add_subcommand("search", "hunt for non-additive multiplicative maps");
    add_common(c_search, true);
    c_search->add_option("--target", target, "nonadditive-iso|nonadditive-derivation")
        ->capture_default_str();
    c_search->add_option("--n", arity, "multiplicativity arity")->capture_default_str();
    c_search->add_option("--budget", budget, "backtracking node budget")->capture_default_str();
    c_search->add_option("--seed", seed, "recorded in the outcome")->capture_default_str();
    c_search->add_flag("--exhaustive", exhaustive, "full traversal with counts");
    c_search->add_option("--witness-out", out_path, "write a found witness map file");

    CLI::App* c_zoo = app.add_subcommand("zoo", "built-in algebras");
    CLI::App* c_emit = c_zoo->add_subcommand("emit", "write an algebra file");
    std::string zoo_name, field_tok = "Q", eta_tok;
    std::size_t zero_dim = 1;
    c_emit->add_option("name", zoo_name,
                       "2a|bplus|matsuo-line|matsuo-pair|matsuo-sym4|diag2|zero|highwater")
        ->required();
    c_emit->add_option("--field", field_tok, "Q or F<p>")->capture_default_str();
    c_emit->add_option("--eta", eta_tok, "Matsuo parameter (default 1/4)");
    c_emit->add_option("--n", zero_dim, "dimension for zero(n)")->capture_default_str();
    c_emit->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (c_emit->parsed()) {
            FieldSpec f = parse_field_token(field_tok);
            std::optional<Scalar> eta;
            if (!eta_tok.empty()) eta = Scalar::parse(f, eta_tok);
            ZooEntry z = zoo_by_name(zoo_name, f, eta, zero_dim);
            write_output(out_path, emit_entry(z));
            return 0;
        }

        std::string text = read_input(input);

        if (c_decompose->parsed()) {
            AlgebraFile f = std::get<AlgebraFile>(parse_input(text));
            if (axis.empty()) throw std::runtime_error("decompose needs --axis");
            FusionLaw law = resolve_law(f, law_toks);
            Vec a = parse_linear_combo(f.algebra, axis);
            AxisDecomposition d = decompose(f.algebra, a, law);
            json rep = report_envelope("decompose", input, text, d.complete,
                                       decomposition_json(d));
            return finish(rep, format);
        }

        if (c_fusion->parsed()) {
            ParsedInput in = parse_input(text);
            if (std::holds_alternative<LazyMarker>(in)) {
                LazySetup s = lazy_setup(std::get<LazyMarker>(in), axis, law_toks,
                                         window);
                auto parts = highwater_window_parts(s.entry.lazy_algebra->field(),
                                                    s.axis_index, s.window);
                auto span_parts = highwater_window_parts(
                    s.entry.lazy_algebra->field(), s.axis_index, 2 * s.window + 1);
                LazyFusionReport rep = lazy_verify_fusion(
                    *s.entry.lazy_algebra,
                    SparseVec::basis(s.entry.lazy_algebra->field(),
                                     BasisKey{'a', s.axis_index}),
                    s.law, parts, span_parts, s.window);
                return finish(report_envelope("fusion-check", input, text, rep.pass,
                                              lazy_fusion_json(rep, s.law)),
                              format);
            }
            AlgebraFile f = std::get<AlgebraFile>(in);
            if (axis.empty()) throw std::runtime_error("fusion-check needs --axis");
            FusionLaw law = resolve_law(f, law_toks);
            Vec a = parse_linear_combo(f.algebra, axis);
            FusionReport rep = verify_fusion(f.algebra, a, law);
            return finish(report_envelope("fusion-check", input, text, rep.pass,
                                          fusion_report_json(rep, law)),
                          format);
        }

        if (c_mart->parsed()) {
            ParsedInput in = parse_input(text);
            if (std::holds_alternative<LazyMarker>(in)) {
                LazySetup s = lazy_setup(std::get<LazyMarker>(in), axis, law_toks,
                                         window);
                auto parts = highwater_window_parts(s.entry.lazy_algebra->field(),
                                                    s.axis_index, s.window);
                LazyMartindaleReport rep =
                    check_m_conditions_window(*s.entry.lazy_algebra, parts, s.window);
                return finish(report_envelope("martindale", input, text, rep.all(),
                                              lazy_martindale_json(rep)),
                              format);
            }
            AlgebraFile f = std::get<AlgebraFile>(in);
            if (axis.empty()) throw std::runtime_error("martindale needs --axis");
            FusionLaw law = resolve_law(f, law_toks);
            Vec a = parse_linear_combo(f.algebra, axis);
            AxisDecomposition d = decompose(f.algebra, a, law);
            json payload;
            bool pass;
            if (law.is_j_type()) {
                MartindaleReportJ rep = check_j_conditions(f.algebra, d);
                payload = martindale_j_json(rep);
                pass = rep.all();
            } else if (law.is_m_type()) {
                MartindaleReportM rep = check_m_conditions(f.algebra, d);
                payload = martindale_m_json(rep);
                pass = rep.all();
            } else {
                throw std::runtime_error(
                    "martindale needs a {1,0,alpha(,beta)} law");
            }
            return finish(report_envelope("martindale", input, text, pass, payload),
                          format);
        }

        if (c_axial->parsed()) {
            AlgebraFile f = std::get<AlgebraFile>(parse_input(text));
            FusionLaw law = resolve_law(f, law_toks);
            if (f.axes.empty())
                throw std::runtime_error("axial-check needs declared axes");
            AxialReport rep = verify_axial(f.algebra, f.axes, law);
            return finish(report_envelope("axial-check", input, text, rep.ok,
                                          axial_json(rep, law)),
                          format);
        }

        if (c_lemma->parsed()) {
            ParsedInput in = parse_input(text);
            json fam_json = json::object();
            bool all_ok = true;
            if (std::holds_alternative<LazyMarker>(in)) {
                LazySetup s = lazy_setup(std::get<LazyMarker>(in), axis, law_toks,
                                         window);
                const LazyAlgebra& h = *s.entry.lazy_algebra;
                auto parts = highwater_window_parts(h.field(), s.axis_index,
                                                    s.window);
                SparseVec ax = SparseVec::basis(h.field(),
                                                BasisKey{'a', s.axis_index});
                std::vector<FamilyTag> ftags = {FamilyTag::F1, FamilyTag::F0,
                                                FamilyTag::Fa, FamilyTag::Fb};
                std::vector<std::size_t> own = {0, 1, 2, 3};
                for (std::size_t fi = 0; fi < ftags.size(); ++fi) {
                    auto stages = lazy_family_stages(ax, parts, r_param, ftags[fi]);
                    json entry;
                    for (std::size_t pj = 0; pj < parts.size(); ++pj) {
                        Subspace ker = lazy_staged_kernel(h, stages, parts[pj].gens);
                        if (pj == own[fi]) {
                            bool inj = ker.dim() == 0;
                            entry["injective"] = inj;
                            all_ok = all_ok && inj;
                        } else {
                            bool ann = ker.dim() == parts[pj].gens.size();
                            entry["annihilates"][s.law.eigenvalue(pj).str()] = ann;
                            all_ok = all_ok && ann;
                        }
                    }
                    fam_json[family_tag_name(ftags[fi])] = entry;
                }
                json payload{{"r", r_param}, {"window", s.window},
                             {"families", fam_json}};
                return finish(report_envelope("lemma-check", input, text, all_ok,
                                              payload),
                              format);
            }
            AlgebraFile f = std::get<AlgebraFile>(in);
            if (axis.empty()) throw std::runtime_error("lemma-check needs --axis");
            FusionLaw law = resolve_law(f, law_toks);
            Vec a = parse_linear_combo(f.algebra, axis);
            AxisDecomposition d = decompose(f.algebra, a, law);
            auto fams = build_operator_families(f.algebra, d, r_param, cap);
            std::vector<FamilyTag> ftags = {FamilyTag::F1, FamilyTag::F0,
                                            FamilyTag::Fa};
            std::vector<std::size_t> own = {law.index_of_one(), law.index_of_zero(),
                                            law.extra_indices()[0]};
            if (law.is_m_type()) {
                ftags.push_back(FamilyTag::Fb);
                own.push_back(law.extra_indices()[1]);
            }
            for (std::size_t fi = 0; fi < ftags.size(); ++fi) {
                const OperatorFamily& fam = fams[ftags[fi]];
                json entry{{"generators", fam.words.size()}};
                for (std::size_t pj = 0; pj < d.parts.size(); ++pj) {
                    if (pj == own[fi]) {
                        bool inj = verify_family_injectivity(fam, d.parts[pj]);
                        entry["injective"] = inj;
                        all_ok = all_ok && inj;
                    } else {
                        bool ann = verify_family_annihilation(fam, d.parts[pj]);
                        entry["annihilates"][law.eigenvalue(pj).str()] = ann;
                        all_ok = all_ok && ann;
                    }
                }
                fam_json[family_tag_name(ftags[fi])] = entry;
            }
            json payload{{"r", r_param}, {"families", fam_json}};
            return finish(report_envelope("lemma-check", input, text, all_ok, payload),
                          format);
        }

        if (c_resid->parsed()) {
            AlgebraFile f = std::get<AlgebraFile>(parse_input(text));
            MapFileData mf = parse_map_file(read_input(map_path), f.algebra.field());
            MapUnderTest mut;
            mut.cls = parse_map_class(map_class);
            mut.n = arity;
            if (mf.is_table()) {
                auto model = std::make_shared<FiniteModel>(f.algebra);
                mut.fwd = MapTable::table(model, model, mf.table);
            } else {
                mut.fwd = MapTable::linear(f.algebra, f.algebra, *mf.matrix);
            }
            if (mut.cls == MapClass::Elementary ||
                mut.cls == MapClass::JordanElementary) {
                if (!star_path.empty()) {
                    MapFileData sf =
                        parse_map_file(read_input(star_path), f.algebra.field());
                    if (sf.is_table()) {
                        auto model = std::make_shared<FiniteModel>(f.algebra);
                        mut.star = MapTable::table(model, model, sf.table);
                    } else {
                        mut.star = MapTable::linear(f.algebra, f.algebra, *sf.matrix);
                    }
                } else {
                    mut.star = mut.fwd.inverted();
                }
            }
            CheckMode mode;
            mode.exhaustive = samples == 0;
            mode.samples = samples;
            mode.seed = seed;
            if (mode.exhaustive && !mut.fwd.is_table()) {
                mode.exhaustive = false;
                mode.samples = 500;
            }
            CheckResult cls = class_check(mut, mode);
            json payload{{"class", map_class}, {"n", arity},
                         {"class_check", check_result_json(cls)}};
            bool pass = cls.ok;
            if (cls.ok) {
                TupleFamily fam;
                fam.kind = TupleKind::GeneralPairs;
                if (mut.fwd.is_table()) {
                    const FiniteModel& m = mut.fwd.dom_model();
                    std::mt19937_64 rng(seed);
                    std::uint64_t want = samples ? samples : 500;
                    if (static_cast<std::uint64_t>(m.size()) * m.size() <= want) {
                        for (std::uint32_t x = 0; x < m.size(); ++x)
                            for (std::uint32_t y = 0; y < m.size(); ++y)
                                fam.tuples.push_back({m.decode(x), m.decode(y)});
                    } else {
                        for (std::uint64_t i = 0; i < want; ++i)
                            fam.tuples.push_back({m.decode(rng() % m.size()),
                                                  m.decode(rng() % m.size())});
                    }
                } else {
                    std::mt19937_64 rng(seed);
                    std::uniform_int_distribution<int> c(-3, 3);
                    std::uint64_t want = samples ? samples : 500;
                    for (std::uint64_t i = 0; i < want; ++i) {
                        Vec x(f.algebra.field(), f.algebra.dim());
                        Vec y(f.algebra.field(), f.algebra.dim());
                        for (std::size_t k = 0; k < f.algebra.dim(); ++k) {
                            x[k] = Scalar(f.algebra.field(), c(rng));
                            y[k] = Scalar(f.algebra.field(), c(rng));
                        }
                        fam.tuples.push_back({x, y});
                    }
                }
                auto [ok, cex] = residual_vanishes_on(mut, fam);
                json rj{{"pass", ok}, {"pairs", fam.tuples.size()}};
                if (cex) {
                    json args = json::array();
                    for (const auto& v : cex->args) args.push_back(vec_json(v));
                    rj["counterexample"] = args;
                }
                payload["residual"] = rj;
                pass = pass && ok;
            }
            return finish(report_envelope("residual-check", input, text, pass,
                                          payload),
                          format);
        }

        if (c_search->parsed()) {
            AlgebraFile f = std::get<AlgebraFile>(parse_input(text));
            FiniteModel model(f.algebra);
            SearchSpec spec;
            spec.target = parse_search_target(target);
            spec.n = arity;
            spec.exhaustive = exhaustive;
            spec.budget = budget;
            spec.seed = seed;
            std::optional<AxisDecomposition> ctx;
            if (!f.axes.empty() && f.law &&
                (f.law->is_j_type() || f.law->is_m_type())) {
                Vec a = axis.empty() ? f.axes[0]
                                     : parse_linear_combo(f.algebra, axis);
                ctx = decompose(f.algebra, a, *f.law);
            }
            SearchOutcome out = run_search(model, spec, ctx ? &*ctx : nullptr);
            if (out.witness && !out_path.empty())
                write_output(out_path, emit_map_table(*out.witness));
            json payload = search_outcome_json(out);
            return finish(report_envelope("search", input, text, true, payload),
                          format);
        }
    } catch (const std::bad_variant_access&) {
        std::cerr << "error: this command does not support lazy algebra markers\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
