#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dehn {

// Exact arithmetic throughout: slope/seminorm values are integers, everything
// derived from them (Euler characteristics, bound tables, twists) is rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Rat(num, den) requires den > 0; this normalizes the sign first.
inline Rat make_rat(const Int& num, const Int& den) {
    return den < 0 ? Rat(-num, -den) : Rat(num, den);
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);  // d > 0 canonically
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace dehn
