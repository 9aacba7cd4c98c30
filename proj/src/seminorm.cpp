#include "dehn/seminorm.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn {

Slope IdealFunctional::kernel_slope() const {
    if (is_zero()) throw std::invalid_argument("kernel_slope: zero functional has no kernel slope");
    return Slope(c2, -c1);
}

Int evaluate(const CullerShalenSeminorm& sn, const PeripheralClass& v) {
    Int total = 0;
    for (const auto& f : sn.functionals) total += abs_int(f(v));
    return total;
}

Int pole_order(const IdealFunctional& f, const PeripheralClass& a) { return abs_int(f(a)); }

std::string Classification::str() const {
    switch (kind) {
        case SeminormKind::Zero: return "Zero";
        case SeminormKind::Norm: return "Norm";
        case SeminormKind::Indefinite: return "Indefinite(kernel " + kernel->str() + ")";
    }
    return "?";
}

static std::vector<IdealFunctional> nonzero_functionals(const CullerShalenSeminorm& sn) {
    std::vector<IdealFunctional> out;
    for (const auto& f : sn.functionals)
        if (!f.is_zero()) out.push_back(f);
    return out;
}

static Int cross(const IdealFunctional& a, const IdealFunctional& b) {
    return a.c1 * b.c2 - a.c2 * b.c1;
}

Classification classify(const CullerShalenSeminorm& sn) {
    auto fs = nonzero_functionals(sn);
    if (fs.empty()) return {SeminormKind::Zero, std::nullopt};
    for (size_t i = 1; i < fs.size(); ++i)
        if (cross(fs[0], fs[i]) != 0) return {SeminormKind::Norm, std::nullopt};
    return {SeminormKind::Indefinite, fs[0].kernel_slope()};
}

// Primitive functional with the same kernel, sign-canonical.
static IdealFunctional primitive_axis(const IdealFunctional& f) {
    Int g = gcd_int(f.c1, f.c2);
    Int a = f.c1 / g, b = f.c2 / g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return IdealFunctional(a, b);
}

std::vector<RatPoint> ball_polygon(const CullerShalenSeminorm& sn, const Rat& level) {
    if (!classify(sn).is_norm()) throw std::invalid_argument("ball_polygon: seminorm is not a norm");
    if (level <= 0) throw std::invalid_argument("ball_polygon: level must be positive");
    auto fs = nonzero_functionals(sn);

    // The boundary is piecewise linear and bends exactly on the kernel lines
    // of the functionals, so the vertex set is the +/- pair of boundary
    // points on each kernel ray.
    std::vector<RatPoint> verts;
    for (const auto& f : fs) {
        Slope k = f.kernel_slope();
        Int norm_k = evaluate(sn, k.rep());  // > 0: not all functionals kill k
        Rat t = level / Rat(norm_k);
        RatPoint v{t * Rat(k.p()), t * Rat(k.q())};
        RatPoint w{-v.x, -v.y};
        if (std::find(verts.begin(), verts.end(), v) == verts.end()) verts.push_back(v);
        if (std::find(verts.begin(), verts.end(), w) == verts.end()) verts.push_back(w);
    }

    // counterclockwise order, exact comparisons
    auto half = [](const RatPoint& a) { return (a.y > 0 || (a.y == 0 && a.x > 0)) ? 0 : 1; };
    std::sort(verts.begin(), verts.end(), [&](const RatPoint& a, const RatPoint& b) {
        if (half(a) != half(b)) return half(a) < half(b);
        return a.x * b.y - a.y * b.x > 0;
    });
    return verts;
}

// Upper bound for s from a small probe set: coordinate vectors, diagonals,
// and the kernel slopes of the functionals.
static Int probe_upper_bound(const CullerShalenSeminorm& sn, const std::vector<IdealFunctional>& fs) {
    std::vector<PeripheralClass> probes = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (const auto& f : fs) probes.push_back(f.kernel_slope().rep());
    Int best = -1;
    for (const auto& v : probes) {
        Int e = evaluate(sn, v);
        if (e > 0 && (best < 0 || e < best)) best = e;
    }
    return best;  // > 0 for a norm
}

Int minimal_value(const CullerShalenSeminorm& sn) {
    auto cls = classify(sn);
    if (cls.is_zero()) return 0;

    auto fs = nonzero_functionals(sn);
    if (cls.is_indefinite()) {
        // Every functional is an integer multiple of the primitive axis psi,
        // and psi takes the value 1 on some primitive class.
        IdealFunctional psi = primitive_axis(fs[0]);
        Int s = 0;
        for (const auto& f : fs) s += abs_int(psi.c1 != 0 ? Int(f.c1 / psi.c1) : Int(f.c2 / psi.c2));
        return s;
    }

    // Norm case. Any candidate with |v| <= bound lies in the polygon
    // {|v| <= bound}, so an integer bounding box of that polygon contains the
    // minimizer; enumerate its primitive points exactly.
    Int bound = probe_upper_bound(sn, fs);
    std::vector<RatPoint> unit = ball_polygon(sn, Rat(1));
    Rat radius = 0;
    for (const auto& v : unit) {
        Rat ax = v.x < 0 ? Rat(-v.x) : v.x;
        Rat ay = v.y < 0 ? Rat(-v.y) : v.y;
        if (ax > radius) radius = ax;
        if (ay > radius) radius = ay;
    }
    Int box = rat_floor(Rat(bound) * radius);

    Int best = bound;
    for (Int p = 0; p <= box; ++p) {
        for (Int q = (p == 0 ? Int(1) : Int(-box)); q <= box; ++q) {
            if (gcd_int(p, q) != 1) continue;
            Int e = evaluate(sn, PeripheralClass(p, q));
            if (e > 0 && e < best) best = e;
        }
    }
    return best;
}

BallGeometry fundamental_ball(const CullerShalenSeminorm& sn) {
    auto cls = classify(sn);
    if (cls.is_zero()) return PlaneBall{};
    Int s = minimal_value(sn);
    if (cls.is_indefinite()) {
        auto fs = nonzero_functionals(sn);
        IdealFunctional psi = primitive_axis(fs[0]);
        Int c = 0;
        for (const auto& f : fs) c += abs_int(psi.c1 != 0 ? Int(f.c1 / psi.c1) : Int(f.c2 / psi.c2));
        return BandBall{s, *cls.kernel, Rat(s) / Rat(c), psi};
    }
    return PolygonBall{s, ball_polygon(sn, Rat(s))};
}

std::vector<Slope> vertex_slopes(const CullerShalenSeminorm& sn) {
    if (!classify(sn).is_norm())
        throw std::invalid_argument("vertex_slopes: precondition violated, seminorm is not a norm");
    auto ball = ball_polygon(sn, Rat(minimal_value(sn)));
    std::vector<Slope> out;
    for (const auto& v : ball) {
        Int a = rat_num(v.x) * rat_den(v.y);
        Int b = rat_num(v.y) * rat_den(v.x);
        Slope s(a, b);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dehn
