#include "dehn/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn {

std::string finite_type_str(FiniteType t) {
    switch (t) {
        case FiniteType::C: return "C";
        case FiniteType::D: return "D";
        case FiniteType::T: return "T";
        case FiniteType::O: return "O";
        case FiniteType::I: return "I";
        case FiniteType::Q: return "Q";
    }
    return "?";
}

std::string NormBound::str() const { return (exact ? "Exact(" : "AtMost(") + value.str() + ")"; }

static void require_hypothesis(const BoundContext& ctx) {
    if (!ctx.hypothesis_ok())
        throw std::invalid_argument(
            "bound precondition violated: zero-multiplicity hypothesis not certified");
    if (ctx.s < 1) throw std::invalid_argument("bound precondition violated: s must be >= 1");
}

NormBound norm_bound(FiniteType t, const BoundContext& ctx) {
    require_hypothesis(ctx);
    const Int& s = ctx.s;
    switch (t) {
        case FiniteType::C: return {true, s};
        case FiniteType::D:
        case FiniteType::Q: {
            Int b = s + ctx.n_dihedral;
            if (ctx.virtually_irreducible.count(2)) b = std::min(b, Int(2 * s));
            return {false, b};
        }
        case FiniteType::T: return {false, s + 2};
        case FiniteType::O: return {false, s + 3};
        case FiniteType::I: return {false, s + 4};
    }
    throw std::logic_error("norm_bound: unreachable");
}

DistanceBound distance_bound(FiniteType t, const BoundContext& ctx) {
    require_hypothesis(ctx);
    Rat s(ctx.s);
    Rat b;
    switch (t) {
        case FiniteType::C: b = 1; break;
        case FiniteType::D:
        case FiniteType::Q:
            b = 1 + Rat(ctx.n_dihedral) / s;
            if (ctx.virtually_irreducible.count(2)) b = std::min(b, Rat(2));
            break;
        case FiniteType::T: b = 1 + Rat(2) / s; break;
        case FiniteType::O: b = 1 + Rat(3) / s; break;
        case FiniteType::I: b = 1 + Rat(4) / s; break;
    }
    return {b, rat_floor(b)};
}

std::string TriangleType::str() const { return finite ? finite_type_str(type) : "Infinite"; }

TriangleType triangle_type(const Int& p, const Int& q, const Int& e) {
    if (p < 1 || q < 1 || e < 1) throw std::invalid_argument("triangle_type: entries must be >= 1");
    // 1/p + 1/q + 1/e <= 1  <=>  qe + pe + pq <= pqe
    if (q * e + p * e + p * q <= p * q * e) return {false, FiniteType::C};
    Int a = p, b = q, c = e;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (a == 1) return {true, FiniteType::C};
    if (a == 2 && b == 2) return {true, FiniteType::D};
    if (a == 2 && b == 3 && c == 3) return {true, FiniteType::T};
    if (a == 2 && b == 3 && c == 4) return {true, FiniteType::O};
    if (a == 2 && b == 3 && c == 5) return {true, FiniteType::I};
    throw std::logic_error("triangle_type: unreachable");
}

std::string SurgeryClass::str() const {
    switch (kind) {
        case Kind::MeridianS3: return "MeridianS3";
        case Kind::Reducible:
            return "Reducible L(" + lens_p.str() + ",1) # L(" + lens_q.str() + ",1)";
        case Kind::Cyclic: return "Cyclic(" + cyclic_order.str() + ")";
        case Kind::FiniteSeifert:
            return "FiniteSeifert(" + finite_type_str(type) + ", (" + tri_p.str() + "," +
                   tri_q.str() + "," + tri_e.str() + "))";
        case Kind::InfiniteSeifert:
            return "InfiniteSeifert((" + tri_p.str() + "," + tri_q.str() + "," + tri_e.str() + "))";
    }
    return "?";
}

SurgeryClass torus_knot_surgery(const Int& p, const Int& q, const Slope& r) {
    if (p < 2 || q < 2 || gcd_int(p, q) != 1)
        throw std::invalid_argument("torus_knot_surgery: need coprime p, q >= 2");
    Slope fiber(p * q, 1);
    Int e = distance(r, fiber);
    SurgeryClass out{};
    // triple reported in ascending order
    out.tri_p = std::min(p, q);
    out.tri_q = std::max(p, q);
    out.tri_e = e;
    if (out.tri_e < out.tri_p) std::swap(out.tri_e, out.tri_p);
    if (out.tri_e < out.tri_q) std::swap(out.tri_e, out.tri_q);
    if (out.tri_q < out.tri_p) std::swap(out.tri_q, out.tri_p);
    if (e == 0) {
        out.kind = SurgeryClass::Kind::Reducible;
        out.lens_p = p;
        out.lens_q = q;
    } else if (e == 1) {
        if (r == Slope(1, 0)) {
            out.kind = SurgeryClass::Kind::MeridianS3;
        } else {
            out.kind = SurgeryClass::Kind::Cyclic;
            out.cyclic_order = abs_int(r.p());
        }
    } else {
        TriangleType tt = triangle_type(p, q, e);
        if (tt.finite) {
            out.kind = SurgeryClass::Kind::FiniteSeifert;
            out.type = tt.type;
        } else {
            out.kind = SurgeryClass::Kind::InfiniteSeifert;
        }
    }
    return out;
}

std::vector<AuditEntry> AuditReport::violations() const {
    std::vector<AuditEntry> out;
    std::copy_if(entries.begin(), entries.end(), std::back_inserter(out),
                 [](const AuditEntry& e) { return e.violation; });
    return out;
}

AuditReport audit_fillings(const CullerShalenSeminorm& sn, const std::vector<FillingClaim>& claims) {
    AuditReport report;
    auto cls = classify(sn);
    for (size_t i = 0; i < claims.size(); ++i) {
        const auto& c = claims[i];
        AuditEntry e{.claim_index = i,
                     .slope = c.slope,
                     .type = c.type,
                     .seminorm_value = evaluate(sn, c.slope.rep())};
        if (!c.ctx.hypothesis_ok()) {
            e.violation = true;
            e.reason = "multiplicity hypothesis not certified";
            report.entries.push_back(e);
            continue;
        }
        e.bound = norm_bound(c.type, c.ctx);
        if (e.bound.exact) {
            e.violation = e.seminorm_value != e.bound.value;
            e.attained = !e.violation;
            if (e.violation) e.reason = "seminorm value differs from the exact C-type value";
        } else {
            e.violation = e.seminorm_value > e.bound.value;
            e.attained = e.seminorm_value == e.bound.value;
            if (e.violation) e.reason = "seminorm value exceeds bound";
        }
        if (cls.is_indefinite()) {
            e.dist = distance(c.slope, *cls.kernel);
            e.dist_bound = distance_bound(c.type, c.ctx).floored;
            if (*e.dist > *e.dist_bound) {
                e.violation = true;
                e.reason = "distance to kernel slope exceeds bound";
            }
            e.attained = e.attained || *e.dist == *e.dist_bound;
        }
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace dehn
