#pragma once

#include <json.hpp>

#include "qhelly/analytics.hpp"
#include "qhelly/constructions.hpp"
#include "qhelly/engine.hpp"
#include "qhelly/lift.hpp"

namespace qhelly {

using json = nlohmann::json;

// Family files: {"dim": d, "members": [{"id", "type": "H"|"V",
// "halfspaces": [{"a": ["p/q", ...], "b": "p/q"}] | "points": [...]}]}.
// Rationals travel as strings so any JSON reader keeps them exact.
json family_to_json(const Family& family);
Family family_from_json(const json& j);

json norm_to_json(const PolytopeNorm& norm);
PolytopeNorm norm_from_json(const json& j);

// "linf" / "l1" resolve directly, anything else is read as a file path.
PolytopeNorm resolve_norm(const std::string& spec, int dim);

json rational_vec_to_json(const RatVec& v);
RatVec rational_vec_from_json(const json& j);

json witness_to_json(const LatticeWitness& w);
json width_certificate_to_json(const WidthCertificate& w);
json l2_diameter_to_json(const L2Diameter& d);
json fractional_report_to_json(const FractionalReport& r);
json colorful_report_to_json(const ColorfulReport& r);
json certificate_to_json(const DiameterCertificate& c);
json gamma_to_json(const GammaEval& g);
json cap_cover_to_json(const CapCoverReport& r);
json minkowski_report_to_json(const MinkowskiTightReport& r);
json discrete_report_to_json(const DiscreteTightReport& r);
json nonpolytope_report_to_json(const NonpolytopeDemoReport& r);

// Lifted members keep the same schema plus a "lift" metadata tag.
json lifted_family_to_json(const std::vector<LiftedBody>& lifts,
                           const std::vector<std::string>& ids);

Family read_family_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

}  // namespace qhelly
