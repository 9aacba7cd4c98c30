#include "dehn/json_io.hpp"

namespace dehn {

static constexpr int64_t kSafeMax = 9007199254740992;  // 2^53: round-trips as a double

json int_to_json(const Int& v) {
    if (v <= kSafeMax && v >= -kSafeMax) return v.convert_to<int64_t>();
    return v.str();
}

Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::runtime_error&) {
        }
    }
    throw SchemaError("expected an integer, got " + j.dump());
}

json rat_to_json(const Rat& v) {
    if (rat_den(v) == 1) return int_to_json(rat_num(v));
    return to_string(v);
}

Slope slope_from_json(const json& j) {
    try {
        if (j.is_string()) return Slope::parse(j.get<std::string>());
        if (j.is_array() && j.size() == 2) return Slope(json_to_int(j[0]), json_to_int(j[1]));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
    throw SchemaError("expected a slope \"m/n\" or [m, n], got " + j.dump());
}

json slope_to_json(const Slope& s) { return json::array({int_to_json(s.p()), int_to_json(s.q())}); }

CullerShalenSeminorm seminorm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("functionals") || !j["functionals"].is_array())
        throw SchemaError("seminorm document needs a \"functionals\" array");
    CullerShalenSeminorm sn;
    for (const auto& f : j["functionals"]) {
        if (!f.is_object() || !f.contains("c1") || !f.contains("c2"))
            throw SchemaError("functional needs \"c1\" and \"c2\": " + f.dump());
        IdealFunctional fn(json_to_int(f["c1"]), json_to_int(f["c2"]));
        if (f.contains("label")) {
            if (!f["label"].is_string()) throw SchemaError("functional label must be a string");
            fn.label = f["label"].get<std::string>();
        }
        sn.functionals.push_back(std::move(fn));
    }
    return sn;
}

json seminorm_to_json(const CullerShalenSeminorm& sn) {
    json fs = json::array();
    for (const auto& f : sn.functionals)
        fs.push_back({{"c1", int_to_json(f.c1)}, {"c2", int_to_json(f.c2)}, {"label", f.label}});
    return {{"functionals", fs}};
}

json ball_to_json(const BallGeometry& ball) {
    if (std::holds_alternative<PlaneBall>(ball)) return {{"kind", "plane"}};
    if (const auto* band = std::get_if<BandBall>(&ball)) {
        return {{"kind", "band"},
                {"s", int_to_json(band->s)},
                {"kernel", band->kernel.str()},
                {"halfwidth", to_string(band->halfwidth)},
                {"axis", {{"c1", int_to_json(band->axis_functional.c1)},
                          {"c2", int_to_json(band->axis_functional.c2)}}}};
    }
    const auto& poly = std::get<PolygonBall>(ball);
    json verts = json::array();
    for (const auto& v : poly.vertices)
        verts.push_back(json::array({to_string(v.x), to_string(v.y)}));
    return {{"kind", "polygon"}, {"s", int_to_json(poly.s)}, {"vertices", verts}};
}

SeifertData seifert_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("gamma") || !j.contains("fibers"))
        throw SchemaError("seifert document needs \"base\", \"gamma\", \"fibers\"");
    const auto& base = j["base"];
    if (!base.is_object() || !base.contains("orientable") || !base.contains("genus") ||
        !base["orientable"].is_boolean())
        throw SchemaError("seifert base needs {\"orientable\": bool, \"genus\": int}");
    if (!j["fibers"].is_array()) throw SchemaError("seifert \"fibers\" must be an array of pairs");
    std::vector<std::pair<Int, Int>> fibers;
    for (const auto& f : j["fibers"]) {
        if (!f.is_array() || f.size() != 2)
            throw SchemaError("seifert fiber must be a pair [alpha, beta]: " + f.dump());
        fibers.emplace_back(json_to_int(f[0]), json_to_int(f[1]));
    }
    try {
        Orbifold2 orb(base["orientable"].get<bool>(),
                      json_to_int(base["genus"]).convert_to<int>(), {});
        return SeifertData(std::move(orb), json_to_int(j["gamma"]), std::move(fibers));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

json seifert_to_json(const SeifertData& sd) {
    json fibers = json::array();
    for (const auto& [a, b] : sd.fibers)
        fibers.push_back(json::array({int_to_json(a), int_to_json(b)}));
    return {{"base", {{"orientable", sd.base.orientable}, {"genus", sd.base.genus}}},
            {"gamma", int_to_json(sd.gamma)},
            {"fibers", fibers}};
}

EdgePathSystem edge_paths_from_json(const json& j) {
    if (!j.is_object() || !j.contains("paths") || !j["paths"].is_array())
        throw SchemaError("edge-path document needs a \"paths\" array");
    EdgePathSystem sys;
    for (const auto& path : j["paths"]) {
        if (!path.is_array()) throw SchemaError("each path must be an array of steps");
        std::vector<PathStep> steps;
        for (const auto& st : path) {
            if (!st.is_object() || !st.contains("from") || !st.contains("to") ||
                !st.contains("weight") || !st.contains("sign"))
                throw SchemaError("step needs \"from\", \"to\", \"weight\", \"sign\": " + st.dump());
            if (!st["sign"].is_number_integer())
                throw SchemaError("step sign must be 1 or -1");
            int sign = st["sign"].get<int>();
            FVertex from(0, 1), to(0, 1);
            try {
                from = FVertex::parse(st["from"].get<std::string>());
                to = FVertex::parse(st["to"].get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw SchemaError(e.what());
            }
            if (st["weight"].is_string() && st["weight"].get<std::string>() == "complete") {
                steps.push_back(PathStep::complete_edge(from, to, sign));
            } else if (st["weight"].is_string()) {
                std::string w = st["weight"].get<std::string>();
                auto pos = w.find('/');
                try {
                    Rat weight = pos == std::string::npos
                                     ? Rat(Int(w))
                                     : Rat(Int(w.substr(0, pos)), Int(w.substr(pos + 1)));
                    steps.push_back(PathStep::partial_edge(from, to, weight, sign));
                } catch (const std::runtime_error&) {
                    throw SchemaError("bad weight \"" + w + "\"");
                }
            } else {
                throw SchemaError("step weight must be \"complete\" or a fraction string");
            }
        }
        sys.paths.push_back(std::move(steps));
    }
    return sys;
}

json edge_paths_to_json(const EdgePathSystem& sys) {
    json paths = json::array();
    for (const auto& path : sys.paths) {
        json steps = json::array();
        for (const auto& st : path)
            steps.push_back({{"from", st.from.str()},
                             {"to", st.to.str()},
                             {"weight", st.complete ? json("complete") : json(to_string(st.weight))},
                             {"sign", st.sign}});
        paths.push_back(steps);
    }
    return {{"paths", paths}};
}

json surgery_to_json(const SurgeryClass& sc) {
    json out{{"class", sc.str()}};
    switch (sc.kind) {
        case SurgeryClass::Kind::MeridianS3: out["kind"] = "meridian-s3"; break;
        case SurgeryClass::Kind::Reducible:
            out["kind"] = "reducible";
            out["lens_orders"] = json::array({int_to_json(sc.lens_p), int_to_json(sc.lens_q)});
            break;
        case SurgeryClass::Kind::Cyclic:
            out["kind"] = "cyclic";
            out["order"] = int_to_json(sc.cyclic_order);
            break;
        case SurgeryClass::Kind::FiniteSeifert:
            out["kind"] = "finite-seifert";
            out["type"] = finite_type_str(sc.type);
            out["triple"] = json::array(
                {int_to_json(sc.tri_p), int_to_json(sc.tri_q), int_to_json(sc.tri_e)});
            break;
        case SurgeryClass::Kind::InfiniteSeifert:
            out["kind"] = "infinite-seifert";
            out["triple"] = json::array(
                {int_to_json(sc.tri_p), int_to_json(sc.tri_q), int_to_json(sc.tri_e)});
            break;
    }
    return out;
}

json audit_to_json(const AuditReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json row{{"slope", e.slope.str()},
                 {"type", finite_type_str(e.type)},
                 {"seminorm_value", int_to_json(e.seminorm_value)},
                 {"bound", e.bound.str()},
                 {"violation", e.violation},
                 {"attained", e.attained}};
        if (e.dist) row["distance"] = int_to_json(*e.dist);
        if (e.dist_bound) row["distance_bound"] = int_to_json(*e.dist_bound);
        if (!e.reason.empty()) row["reason"] = e.reason;
        entries.push_back(row);
    }
    return {{"entries", entries}, {"violations", report.violations().size()}};
}

json h1_to_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion) torsion.push_back(int_to_json(d));
    return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"group", g.str()}};
}

}  // namespace dehn
