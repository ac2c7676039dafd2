#pragma once

#include <json.hpp>

#include "axcheck/io.hpp"
#include "axcheck/martindale.hpp"
#include "axcheck/search.hpp"

namespace axc {

using json = nlohmann::json;

json vec_json(const Vec& v);
json subspace_json(const Subspace& s);
json sparse_json(const SparseVec& v);

json decomposition_json(const AxisDecomposition& d);
json fusion_report_json(const FusionReport& rep, const FusionLaw& law);
json lazy_fusion_json(const LazyFusionReport& rep, const FusionLaw& law);
json martindale_j_json(const MartindaleReportJ& rep);
json martindale_m_json(const MartindaleReportM& rep);
json lazy_martindale_json(const LazyMartindaleReport& rep);
json axial_json(const AxialReport& rep, const FusionLaw& law);
json search_outcome_json(const SearchOutcome& out);
json check_result_json(const CheckResult& res);

/// Standard report envelope with stable keys: command, input, input_digest,
/// checks, pass. Exit status 0 corresponds to pass == true.
json report_envelope(const std::string& command, const std::string& input_name,
                     const std::string& input_text, bool pass, json payload);

std::string render_text(const json& report);

}  // namespace axc
