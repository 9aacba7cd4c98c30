#pragma once

// Farey edge-path twist calculus: signed (possibly partial) edge paths per
// tangle, the total twist tau, boundary slopes as differences of twists, and
// the built-in parametric systems for the pretzel family K_m of type
// (-1/3, 1/(2m+1), 5/18).

#include <string>
#include <vector>

#include "dehn/numbers.hpp"

namespace dehn {

// Vertex p/q of the Farey diagram, reduced, with 1/0 the point at infinity.
struct FVertex {
    Int p;
    Int q;

    FVertex(Int p_, Int q_);
    static FVertex infinity() { return FVertex(1, 0); }
    static FVertex parse(const std::string& text);  // "p/q" or "p"

    bool operator==(const FVertex& o) const { return p == o.p && q == o.q; }
    std::string str() const;
};

// |p s - q r| = 1
bool farey_adjacent(const FVertex& u, const FVertex& v);

struct PathStep {
    FVertex from;
    FVertex to;       // target vertex; a partial step stops before reaching it
    bool complete;    // complete edge (weight 1) vs partial
    Rat weight;       // partial: barycentric coordinate k/(k+l) toward `to`
    int sign;         // +1 or -1

    static PathStep complete_edge(FVertex from, FVertex to, int sign);
    static PathStep partial_edge(FVertex from, FVertex toward, Rat weight, int sign);

    Rat contribution() const { return Rat(sign) * (complete ? Rat(1) : weight); }
};

struct EdgePathSystem {
    std::vector<std::vector<PathStep>> paths;  // one per tangle; empty = constant path

    // Checks signs, weight ranges, step chaining, and Farey adjacency
    // (complete edges always; partial edges except those aimed at 1/0,
    // where the diagram's edge fan is not a Farey edge).
    void validate() const;
};

// Total twist: 2 * sum of signed step weights. Validates first.
Rat tau(const EdgePathSystem& sys);

// tau(candidate) - tau(seifert_ref)
Rat boundary_slope(const EdgePathSystem& candidate, const EdgePathSystem& seifert_ref);

// The candidate-surface system of K_m (defined for m >= 9: the partial
// weights (m-7)/(m-6) and (m-9)/(m-6) must be barycentric).
EdgePathSystem candidate_system(const Int& m);

// The Seifert-surface reference system of K_m (m >= 1).
EdgePathSystem seifert_system(const Int& m);

struct PretzelFamilyResult {
    Int n;
    Int m;               // 4n + 6
    Rat slope;           // (16n^2 + 22n + 1) / n
    Int h1_order;        // 16n^2 + 22n + 1
    bool cross_checked;  // edge-path route ran and agreed with the closed form
};

// Requires |n| >= 3. For n >= 3 the slope is computed both from the closed
// form and from the edge-path systems, which must agree; for n <= -3 the
// parametric systems are not barycentric and only the closed form is used.
PretzelFamilyResult pretzel_family(const Int& n);

}  // namespace dehn
