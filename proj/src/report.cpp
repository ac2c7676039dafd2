#include "axcheck/report.hpp"

#include <sstream>

namespace axc {

json vec_json(const Vec& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].str());
    return a;
}

json subspace_json(const Subspace& s) {
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(vec_json(s.basis_vector(i)));
    return json{{"dim", s.dim()}, {"basis", rows}};
}

json sparse_json(const SparseVec& v) {
    json o = json::object();
    for (const auto& [k, c] : v.terms()) o[k.str()] = c.str();
    return o;
}

json decomposition_json(const AxisDecomposition& d) {
    json parts = json::array();
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        parts.push_back(json{{"eigenvalue", d.law.eigenvalue(i).str()},
                             {"part", subspace_json(d.parts[i])}});
    return json{{"axis", vec_json(d.axis)},
                {"law", d.law.name()},
                {"parts", parts},
                {"complete", d.complete}};
}

json fusion_report_json(const FusionReport& rep, const FusionLaw& law) {
    json viols = json::array();
    for (const auto& v : rep.violations) {
        json o;
        if (v.lam == FusionViolation::none) {
            o["reason"] = "outside-spectrum";
        } else {
            o["lambda"] = law.eigenvalue(v.lam).str();
            o["mu"] = law.eigenvalue(v.mu).str();
            if (v.pair) o["pair"] = json::array({v.pair->first, v.pair->second});
            o["reason"] = v.offending ? v.offending->str() : "outside-spectrum";
        }
        o["witness"] = vec_json(v.witness);
        viols.push_back(o);
    }
    return json{{"pass", rep.pass}, {"violations", viols}};
}

json lazy_fusion_json(const LazyFusionReport& rep, const FusionLaw& law) {
    json viols = json::array();
    for (const auto& v : rep.violations)
        viols.push_back(json{{"lambda", law.eigenvalue(v.lam).str()},
                             {"mu", law.eigenvalue(v.mu).str()},
                             {"generators", json::array({v.gi, v.gj})},
                             {"reason", v.reason},
                             {"witness", sparse_json(v.witness)}});
    return json{{"pass", rep.pass}, {"window", rep.window}, {"violations", viols}};
}

namespace {

json witnesses_json(const std::vector<MartindaleWitness>& ws) {
    json a = json::array();
    for (const auto& w : ws)
        a.push_back(json{{"condition", w.condition},
                         {"part", w.part_eig.str()},
                         {"vector", vec_json(w.vector)}});
    return a;
}

}  // namespace

json martindale_j_json(const MartindaleReportJ& rep) {
    return json{{"conditions",
                 {{"i", rep.cond_i}, {"ii", rep.cond_ii}, {"iii", rep.cond_iii}}},
                {"pass", rep.all()},
                {"witnesses", witnesses_json(rep.witnesses)}};
}

json martindale_m_json(const MartindaleReportM& rep) {
    return json{{"conditions",
                 {{"i", rep.cond_i},
                  {"ii", rep.cond_ii},
                  {"iii", rep.cond_iii},
                  {"iv", rep.cond_iv},
                  {"v", rep.cond_v}}},
                {"pass", rep.all()},
                {"witnesses", witnesses_json(rep.witnesses)}};
}

json lazy_martindale_json(const LazyMartindaleReport& rep) {
    json conds = json::object();
    for (const auto& [name, ok] : rep.conditions) conds[name] = ok;
    json ws = json::array();
    for (const auto& [name, w] : rep.witnesses)
        ws.push_back(json{{"condition", name}, {"vector", sparse_json(w)}});
    return json{{"conditions", conds},
                {"window", rep.window},
                {"pass", rep.all()},
                {"witnesses", ws}};
}

json axial_json(const AxialReport& rep, const FusionLaw& law) {
    json per = json::array();
    for (const auto& r : rep.per_axis) per.push_back(fusion_report_json(r, law));
    return json{{"pass", rep.ok}, {"generation", rep.generation}, {"per_axis", per}};
}

json search_outcome_json(const SearchOutcome& out) {
    json o{{"status", search_status_name(out.status)}, {"nodes", out.nodes}};
    if (out.counts)
        o["counts"] = {{"multiplicative", out.counts->first},
                       {"additive", out.counts->second}};
    if (out.witness) o["witness"] = emit_map_table(*out.witness);
    if (out.nonadditive_pair)
        o["nonadditive_pair"] =
            json::array({out.nonadditive_pair->first, out.nonadditive_pair->second});
    if (!out.martindale_context.empty()) {
        json c = json::object();
        for (const auto& [name, ok] : out.martindale_context) c[name] = ok;
        o["martindale"] = c;
        o["theorem_applies"] = out.theorem_applies;
    }
    return o;
}

json check_result_json(const CheckResult& res) {
    json o{{"pass", res.ok}, {"checked", res.checked}};
    if (res.counterexample) {
        json args = json::array();
        for (const auto& a : res.counterexample->args) args.push_back(vec_json(a));
        o["counterexample"] = args;
    }
    return o;
}

json report_envelope(const std::string& command, const std::string& input_name,
                     const std::string& input_text, bool pass, json payload) {
    return json{{"command", command},
                {"input", input_name},
                {"input_digest", fnv1a_digest(input_text)},
                {"pass", pass},
                {"report", std::move(payload)}};
}

namespace {

void render_value(std::ostream& os, const json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                os << pad << it.key() << ":\n";
                render_value(os, it.value(), indent + 2);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (e.is_object() || e.is_array()) {
                os << pad << "-\n";
                render_value(os, e, indent + 2);
            } else {
                os << pad << "- " << e.dump() << "\n";
            }
        }
    } else {
        os << pad << v.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    render_value(os, report, 0);
    return os.str();
}

}  // namespace axc
