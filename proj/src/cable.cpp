#include "dehn/cable.hpp"

#include <stdexcept>

namespace dehn {

CableSpace::CableSpace(Int m_, Int n_) : m(std::move(m_)), n(std::move(n_)) {
    if (n < 2) throw std::invalid_argument("cable space: need n >= 2");
}

FillPlusResult fill_plus(const CableSpace& cs, const Int& k) {
    return {PeripheralClass(k * cs.m * cs.n + 1, k),
            PeripheralClass(k * cs.m * cs.n + 1, k * cs.n * cs.n)};
}

// k with r = +/- (k m n + 1, k); rejects slopes not at distance 1 from the
// outer fiber.
static Int fill_parameter(const CableSpace& cs, const Slope& r) {
    Int d = r.p() - cs.m * cs.n * r.q();
    if (d == 1) return r.q();
    if (d == -1) return -r.q();
    throw std::invalid_argument(
        "distance_scaling precondition violated: slope " + r.str() +
        " is not at distance 1 from the outer fiber slope");
}

DistanceScaling distance_scaling(const CableSpace& cs, const Slope& r1, const Slope& r2) {
    Int k1 = fill_parameter(cs, r1);
    Int k2 = fill_parameter(cs, r2);
    FillPlusResult f1 = fill_plus(cs, k1);
    FillPlusResult f2 = fill_plus(cs, k2);
    DistanceScaling out;
    out.inner = distance(r1, r2);
    out.outer = distance(f1.meridian_out, f2.meridian_out);
    if (out.outer != cs.n * cs.n * out.inner)
        throw std::logic_error("distance_scaling: n^2 law failed");  // formula identity
    return out;
}

SeifertFiniteGapReport d235_cable_report(const Int& k, const Int& m, const Int& n) {
    CableSpace cs(m, n);
    SeifertFiniteGapReport rep;
    rep.k = k;
    rep.m = m;
    rep.n = n;
    rep.alpha_r1 = PeripheralClass(k * m * n + 1, k);
    rep.alpha_r2 = PeripheralClass(1, 0);
    rep.dist_r1_r2 = distance(rep.alpha_r1, rep.alpha_r2);  // = |k|
    // the inner images are (kmn+1) beta + k n^2 fiber  and  beta
    rep.dist_r1p_fiber = abs_int(k * m * n + 1);
    rep.dist_r2p_fiber = 1;
    rep.big_seifert = rep.dist_r1p_fiber > 1;
    rep.r2_finite = true;
    return rep;
}

KleinCableReport twisted_ik_cable_report(const Int& k) {
    CableSpace cs(1, 2);
    KleinCableReport rep;
    rep.k = k;
    rep.alpha_r1 = PeripheralClass(4 * k, 2 * k + 1);
    rep.alpha_r2 = PeripheralClass(1, 0);
    rep.dist_r1_r2 = distance(rep.alpha_r1, rep.alpha_r2);            // = |2k+1|
    rep.dist_r1_fiber = distance(rep.alpha_r1, cs.fiber_plus());      // = 2
    rep.finite_condition = rep.dist_r1_r2 >= 2;
    return rep;
}

std::set<std::tuple<Int, Int, Int>> lemma24_feasible() {
    // n*D*Dphi <= 3 bounds every factor by 3
    std::set<std::tuple<Int, Int, Int>> out;
    for (Int n = 2; n <= 3; ++n)
        for (Int d = 1; d <= 3; ++d)
            for (Int dphi = 1; dphi <= 3; ++dphi) {
                Int prod = n * d * dphi;
                if (prod == 1 || prod == 3) out.insert({n, d, dphi});
            }
    return out;
}

}  // namespace dehn
