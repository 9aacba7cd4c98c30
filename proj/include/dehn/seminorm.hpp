#pragma once

// Seminorms on the peripheral lattice given as finite sums of absolute values
// of integer linear functionals: evaluation, the norm/indefinite/zero
// trichotomy, the minimal nonzero value s, and the fundamental ball {|v| <= s}.

#include <string>
#include <variant>
#include <vector>

#include "dehn/lattice.hpp"
#include "dehn/numbers.hpp"

namespace dehn {

// phi(v) = c1*v.p + c2*v.q. (0,0) is allowed and means phi == 0.
struct IdealFunctional {
    Int c1;
    Int c2;
    std::string label;

    IdealFunctional() : c1(0), c2(0) {}
    IdealFunctional(Int a, Int b, std::string l = "") : c1(std::move(a)), c2(std::move(b)), label(std::move(l)) {}

    Int operator()(const PeripheralClass& v) const { return c1 * v.p + c2 * v.q; }
    bool is_zero() const { return c1 == 0 && c2 == 0; }

    // Primitive slope spanning {v : phi(v) = 0}. Requires phi != 0.
    Slope kernel_slope() const;
};

struct CullerShalenSeminorm {
    std::vector<IdealFunctional> functionals;
};

Int evaluate(const CullerShalenSeminorm& sn, const PeripheralClass& v);

// Pole multiplicity |phi(a)| of the trace function of a at the ideal point.
Int pole_order(const IdealFunctional& f, const PeripheralClass& a);

enum class SeminormKind { Zero, Indefinite, Norm };

struct Classification {
    SeminormKind kind;
    std::optional<Slope> kernel;  // set exactly for Indefinite

    bool is_norm() const { return kind == SeminormKind::Norm; }
    bool is_indefinite() const { return kind == SeminormKind::Indefinite; }
    bool is_zero() const { return kind == SeminormKind::Zero; }
    std::string str() const;
};

Classification classify(const CullerShalenSeminorm& sn);

// s: the minimum of |alpha| over primitive alpha with |alpha| > 0
// (0 for the zero seminorm).
Int minimal_value(const CullerShalenSeminorm& sn);

struct RatPoint {
    Rat x;
    Rat y;
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

// Norm case: the ball is a balanced convex polygon, vertices listed
// counterclockwise, exact rationals.
struct PolygonBall {
    Int s;
    std::vector<RatPoint> vertices;
};

// Indefinite case: {v : |psi(v)| <= halfwidth} where psi is the primitive
// functional vanishing on the kernel slope. halfwidth = s / sum|c_x|.
struct BandBall {
    Int s;
    Slope kernel;
    Rat halfwidth;
    IdealFunctional axis_functional;  // psi
};

struct PlaneBall {};

using BallGeometry = std::variant<PolygonBall, BandBall, PlaneBall>;

BallGeometry fundamental_ball(const CullerShalenSeminorm& sn);

// For a norm: the primitive slope on each +/- pair of vertex rays of the
// ball. Rejects indefinite/zero input.
std::vector<Slope> vertex_slopes(const CullerShalenSeminorm& sn);

// Exact vertices of {v : |v| <= level} for a norm and a positive rational
// level. Exposed for tests and ball construction.
std::vector<RatPoint> ball_polygon(const CullerShalenSeminorm& sn, const Rat& level);

}  // namespace dehn
