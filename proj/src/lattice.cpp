#include "dehn/lattice.hpp"

#include <stdexcept>

namespace dehn {

Slope::Slope(const Int& m, const Int& n) {
    if (m == 0 && n == 0) throw std::invalid_argument("slope: zero vector has no slope");
    Int g = gcd_int(m, n);
    Int p = m / g, q = n / g;
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    rep_ = PeripheralClass(p, q);
}

std::string Slope::str() const { return rep_.p.str() + "/" + rep_.q.str(); }

Slope Slope::parse(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("slope: cannot parse \"" + text + "\""); };
    std::string num = text, den = "1";
    if (auto pos = text.find('/'); pos != std::string::npos) {
        num = text.substr(0, pos);
        den = text.substr(pos + 1);
    }
    if (num.empty() || den.empty()) throw bad();
    try {
        return Slope(Int(num), Int(den));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

Int distance(const PeripheralClass& a, const PeripheralClass& b) {
    return abs_int(a.p * b.q - b.p * a.q);
}

Int distance(const Slope& a, const Slope& b) { return distance(a.rep(), b.rep()); }

bool is_primitive(const PeripheralClass& a) { return gcd_int(a.p, a.q) == 1; }

Slope slope_of(const Int& m, const Int& n) { return Slope(m, n); }

std::optional<Int> h1_filling_order(const Slope& r) {
    if (r.p() == 0) return std::nullopt;
    return abs_int(r.p());
}

std::string h1_order_str(const std::optional<Int>& order) {
    return order ? order->str() : std::string("infinite");
}

}  // namespace dehn
