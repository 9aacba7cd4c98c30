#pragma once

// Filling calculus for cable spaces: the two boundary bases, the solid-torus
// filling of the outer torus, the n^2 distance-scaling law, two families of
// cables on Seifert manifolds with arbitrarily separated Seifert and finite
// filling slopes, and the closing Diophantine enumeration.

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dehn/lattice.hpp"

namespace dehn {

// Cable space of type (m, n), n >= 2, with bases {mu+, lambda+} on the outer
// torus and {mu-, lambda-} on the inner one. The fiber classes are
// (m*n, 1) and (m, n) in these bases.
struct CableSpace {
    Int m;
    Int n;

    CableSpace(Int m_, Int n_);

    PeripheralClass fiber_plus() const { return {m * n, 1}; }
    PeripheralClass fiber_minus() const { return {m, n}; }
};

struct FillPlusResult {
    PeripheralClass input_class;   // (k m n + 1, k) on the outer torus
    PeripheralClass meridian_out;  // (k m n + 1, k n^2) on the inner torus
};

// Fills the outer torus along the distance-1 slope with parameter k; the
// piece becomes a solid torus and meridian_out is its meridian on the inner
// torus.
FillPlusResult fill_plus(const CableSpace& cs, const Int& k);

struct DistanceScaling {
    Int inner;  // distance of the two slopes on the outer torus
    Int outer;  // distance of their meridian images inside; equals n^2 * inner
};

// Both slopes must be at distance 1 from the outer fiber slope.
DistanceScaling distance_scaling(const CableSpace& cs, const Slope& r1, const Slope& r2);

// Cable on a Seifert piece with base D^2(2,3,5): r1 = (kmn+1, k) is a
// big-Seifert filling slope once |kmn+1| > 1, r2 = mu+ is a finite filling
// slope, and their distance is |k|.
struct SeifertFiniteGapReport {
    Int k, m, n;
    PeripheralClass alpha_r1;
    PeripheralClass alpha_r2;
    Int dist_r1_r2;          // |k|
    Int dist_r1p_fiber;      // |k m n + 1|
    Int dist_r2p_fiber;      // 1
    bool big_seifert;        // |k m n + 1| > 1
    bool r2_finite;          // always true in this family
};

SeifertFiniteGapReport d235_cable_report(const Int& k, const Int& m, const Int& n);

// Cable of type (1,2) on the twisted I-bundle over the Klein bottle:
// r1 = (4k, 2k+1) fills to a Seifert space over RP^2(2,2), r2 = mu+ is a
// finite filling slope once |2k+1| >= 2, distance |2k+1|.
struct KleinCableReport {
    Int k;
    PeripheralClass alpha_r1;  // (4k, 2k+1)
    PeripheralClass alpha_r2;  // (1, 0)
    Int dist_r1_r2;            // |2k+1|
    Int dist_r1_fiber;         // 2
    bool finite_condition;     // |2k+1| >= 2
};

KleinCableReport twisted_ik_cable_report(const Int& k);

// All (n, D, Dphi) with n >= 2, D >= 1, Dphi >= 1 and n*D*Dphi in {1, 3}.
// Exactly {(3,1,1)}; in particular D = 1 always.
std::set<std::tuple<Int, Int, Int>> lemma24_feasible();

}  // namespace dehn
