#pragma once

// Closed 2-orbifolds and Seifert-fibered spaces: orbifold Euler
// characteristic and geometric type, fundamental-group presentations, first
// homology via Smith normal form, Teichmueller dimension, and the decision
// rules for when the character variety carries a curve of irreducible
// characters.

#include <string>
#include <vector>

#include "dehn/numbers.hpp"

namespace dehn {

struct Orbifold2 {
    bool orientable = true;
    int genus = 0;  // genus if orientable, crosscap count (>= 1) otherwise
    int boundary_circles = 0;
    std::vector<Int> cone_orders;  // each >= 2

    Orbifold2() = default;
    Orbifold2(bool orient, int g, std::vector<Int> cones, int boundary = 0);

    bool closed() const { return boundary_circles == 0; }
    std::string str() const;  // e.g. "S2(2,3,6)", "RP2(2,2)", "T2"
};

Rat chi_orb(const Orbifold2& o);

enum class OrbifoldClass { Hyperbolic, Parabolic, Spherical };

OrbifoldClass classify_orbifold(const Orbifold2& o);

std::string orbifold_class_str(OrbifoldClass c);

// Membership in the explicit list of closed parabolic 2-orbifolds: torus,
// Klein bottle, S2(2,2,2,2), S2(2,3,6), S2(2,4,4), S2(3,3,3), RP2(2,2).
bool is_listed_parabolic(const Orbifold2& o);

// Teichmueller space dimension of a closed hyperbolic 2-orbifold.
int teichmuller_dim(const Orbifold2& o);

struct SeifertData {
    Orbifold2 base;  // closed
    Int gamma = 0;
    std::vector<std::pair<Int, Int>> fibers;  // (alpha_j, beta_j), 0 < beta < alpha, coprime

    SeifertData() = default;
    SeifertData(Orbifold2 base_orb, Int g, std::vector<std::pair<Int, Int>> f);

    // Base orbifold including the exceptional-fiber cone points.
    Orbifold2 base_with_cones() const;
};

struct Presentation {
    std::vector<std::string> generators;
    // relator = word in the generators, letters (generator index, exponent)
    using Word = std::vector<std::pair<int, int>>;
    std::vector<Word> relators;
    bool h_central = false;  // orientable base: h commutes with everything

    std::string str() const;
};

Presentation presentation(const SeifertData& sd);

struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;  // finite groups only
    std::string str() const;  // e.g. "Z^2 + Z/6", "Z", "0"
    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

// Diagonalizes an integer matrix; returns the invariant factors d1 | d2 | ...
std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m);

AbelianGroup h1(const SeifertData& sd);

enum class Determination { Yes, No, Undetermined };

struct Decision {
    Determination result;
    std::string reason;
    bool yes() const { return result == Determination::Yes; }
    bool no() const { return result == Determination::No; }
    std::string str() const;
};

// Is the total space Haken? Decided from the base type and H_1 where the
// classification rules allow; Undetermined otherwise.
Decision haken(const SeifertData& sd);

// Does the PSL2(C)-character variety contain a curve through an irreducible
// character?
Decision irreducible_curve_exists(const SeifertData& sd);

// ... a curve that is index-q virtually irreducible for every q?
Decision virtually_irreducible_curve_exists(const SeifertData& sd);

// Reducible total spaces, recognized exactly.
bool is_s1_x_s2(const SeifertData& sd);
bool is_rp3_rp3(const SeifertData& sd);

}  // namespace dehn
