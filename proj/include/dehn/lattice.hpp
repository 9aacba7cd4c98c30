#pragma once

// Exact arithmetic on the rank-2 peripheral lattice of a torus boundary:
// homology classes, slopes (primitive classes up to sign), and the geometric
// intersection distance between them.

#include <optional>
#include <string>

#include "dehn/numbers.hpp"

namespace dehn {

// An integer class p*g1 + q*g2 in a fixed basis {g1, g2} of the lattice.
// For knot exteriors in S^3 the convention is g1 = meridian, g2 = longitude,
// so the class of the fraction m/n is (m, n).
struct PeripheralClass {
    Int p;
    Int q;

    PeripheralClass() : p(0), q(0) {}
    PeripheralClass(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {}

    bool operator==(const PeripheralClass& o) const { return p == o.p && q == o.q; }
    bool operator!=(const PeripheralClass& o) const { return !(*this == o); }
    PeripheralClass operator-() const { return {-p, -q}; }

    bool is_zero() const { return p == 0 && q == 0; }
};

// A slope: a +/- pair of primitive classes, stored by its canonical
// representative (p > 0, or p == 0 and q == 1).
class Slope {
  public:
    // Reduces by the gcd and canonicalizes the sign. Rejects (0,0).
    Slope(const Int& m, const Int& n);
    explicit Slope(const PeripheralClass& v) : Slope(v.p, v.q) {}

    const PeripheralClass& rep() const { return rep_; }
    const Int& p() const { return rep_.p; }
    const Int& q() const { return rep_.q; }

    bool operator==(const Slope& o) const { return rep_ == o.rep_; }
    bool operator!=(const Slope& o) const { return !(*this == o); }
    bool operator<(const Slope& o) const {  // ordering for containers/dedup
        return rep_.p != o.rep_.p ? rep_.p < o.rep_.p : rep_.q < o.rep_.q;
    }

    // "m/n" (e.g. "6/1", "1/0")
    std::string str() const;

    // Parses "m/n" or a bare integer "m" (== m/1).
    static Slope parse(const std::string& text);

  private:
    PeripheralClass rep_;
};

// |p1*q2 - p2*q1|: the minimal geometric intersection number of the slopes
// through a and b. Zero exactly when a and b are parallel.
Int distance(const PeripheralClass& a, const PeripheralClass& b);
Int distance(const Slope& a, const Slope& b);

bool is_primitive(const PeripheralClass& a);

Slope slope_of(const Int& m, const Int& n);

// Order of the first homology of m/n surgery on a knot in S^3: |m|, or
// nullopt for the longitude (infinite H_1).
std::optional<Int> h1_filling_order(const Slope& r);

std::string h1_order_str(const std::optional<Int>& order);

}  // namespace dehn
