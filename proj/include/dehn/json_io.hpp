#pragma once

// JSON schemas for the document types the CLI reads and writes.
//
//   slope            "m/n" or [m, n]
//   seminorm         {"functionals": [{"c1": int, "c2": int, "label": str}]}
//   seifert data     {"base": {"orientable": bool, "genus": int},
//                     "gamma": int, "fibers": [[alpha, beta], ...]}
//   edge-path system {"paths": [[{"from": "p/q", "to": "r/s",
//                     "weight": "k/l" | "complete", "sign": 1|-1}, ...], ...]}
//
// Parse errors throw SchemaError (the CLI maps it to exit code 2).

#include <stdexcept>

#include <json.hpp>

#include "dehn/bounds.hpp"
#include "dehn/pretzel.hpp"
#include "dehn/seifert.hpp"
#include "dehn/seminorm.hpp"

namespace dehn {

using json = nlohmann::json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json int_to_json(const Int& v);     // number when it fits, string otherwise
Int json_to_int(const json& j);
json rat_to_json(const Rat& v);     // "p/q" (or number when integral and small)

Slope slope_from_json(const json& j);
json slope_to_json(const Slope& s);

CullerShalenSeminorm seminorm_from_json(const json& j);
json seminorm_to_json(const CullerShalenSeminorm& sn);

json ball_to_json(const BallGeometry& ball);

SeifertData seifert_from_json(const json& j);
json seifert_to_json(const SeifertData& sd);

EdgePathSystem edge_paths_from_json(const json& j);
json edge_paths_to_json(const EdgePathSystem& sys);

json surgery_to_json(const SurgeryClass& sc);
json audit_to_json(const AuditReport& report);
json h1_to_json(const AbelianGroup& g);

}  // namespace dehn
