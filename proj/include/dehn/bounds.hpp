#pragma once

// Bounds on seminorms and distances of finite/cyclic filling slopes, the
// finite triangle-group trichotomy, and Moser's classification of torus-knot
// surgeries, plus an audit that checks claimed filling types against a
// seminorm's bounds.

#include <set>
#include <string>
#include <vector>

#include "dehn/lattice.hpp"
#include "dehn/seminorm.hpp"

namespace dehn {

// The six types of finite 3-manifold groups.
enum class FiniteType { C, D, T, O, I, Q };

std::string finite_type_str(FiniteType t);

// How the zero-multiplicity hypothesis on the filling slope was certified.
enum class MultiplicityCertificate {
    None,                  // not certified; the bounds do not apply
    NotBoundarySlope,      // slope is not a boundary slope
    NotStrictBoundary,     // curve not index-2 virtually abelian, slope not a strict boundary slope
    RCurveDistance,        // r-curve, distance > 1, no surviving closed essential surface
    SmallManifoldCurve,    // small manifold, curve from the filled manifold, slope differs
};

struct BoundContext {
    Int s = 1;                        // minimal seminorm value, >= 1
    Int n_dihedral = 0;               // dihedral character count
    std::set<int> virtually_irreducible;  // indices q with index-q virtual irreducibility
    MultiplicityCertificate certificate = MultiplicityCertificate::None;

    bool hypothesis_ok() const { return certificate != MultiplicityCertificate::None; }
};

struct NormBound {
    bool exact;  // exact value (C-type) vs upper bound
    Int value;
    std::string str() const;
};

NormBound norm_bound(FiniteType t, const BoundContext& ctx);

struct DistanceBound {
    Rat exact;    // the bound as a rational
    Int floored;  // usable directly against an integer distance
};

DistanceBound distance_bound(FiniteType t, const BoundContext& ctx);

// Triangle group of the triple (p,q,e): a finite type, or infinite when
// 1/p + 1/q + 1/e <= 1.
struct TriangleType {
    bool finite;
    FiniteType type;  // valid when finite
    std::string str() const;
};

TriangleType triangle_type(const Int& p, const Int& q, const Int& e);

// Surgery on the (p,q) torus knot.
struct SurgeryClass {
    enum class Kind { MeridianS3, Reducible, Cyclic, FiniteSeifert, InfiniteSeifert };
    Kind kind;
    Int lens_p, lens_q;   // Reducible: the two lens orders
    Int cyclic_order;     // Cyclic: |H_1|
    FiniteType type;      // FiniteSeifert
    Int tri_p, tri_q, tri_e;  // (p, q, distance-to-fiber) triple for Seifert cases

    bool finite_or_cyclic() const {
        return kind == Kind::MeridianS3 || kind == Kind::Cyclic || kind == Kind::FiniteSeifert;
    }
    std::string str() const;
};

SurgeryClass torus_knot_surgery(const Int& p, const Int& q, const Slope& r);

// One claimed filling: a slope, its finite type, and the context certifying
// the bound hypotheses.
struct FillingClaim {
    Slope slope;
    FiniteType type;
    BoundContext ctx;
};

struct AuditEntry {
    size_t claim_index;
    Slope slope;
    FiniteType type;
    Int seminorm_value;
    NormBound bound;
    std::optional<Int> dist;          // distance to the kernel slope (indefinite case)
    std::optional<Int> dist_bound;    // floored distance bound
    bool violation;
    bool attained;                    // bound met with equality
    std::string reason;
};

struct AuditReport {
    std::vector<AuditEntry> entries;
    std::vector<AuditEntry> violations() const;
};

AuditReport audit_fillings(const CullerShalenSeminorm& sn, const std::vector<FillingClaim>& claims);

}  // namespace dehn
