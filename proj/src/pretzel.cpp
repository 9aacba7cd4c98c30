#include "dehn/pretzel.hpp"

#include <stdexcept>

namespace dehn {

FVertex::FVertex(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
    if (p == 0 && q == 0) throw std::invalid_argument("farey vertex: 0/0");
    Int g = gcd_int(p, q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
}

FVertex FVertex::parse(const std::string& text) {
    std::string num = text, den = "1";
    if (auto pos = text.find('/'); pos != std::string::npos) {
        num = text.substr(0, pos);
        den = text.substr(pos + 1);
    }
    if (num.empty() || den.empty())
        throw std::invalid_argument("farey vertex: cannot parse \"" + text + "\"");
    try {
        return FVertex(Int(num), Int(den));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("farey vertex: cannot parse \"" + text + "\"");
    }
}

std::string FVertex::str() const { return p.str() + "/" + q.str(); }

bool farey_adjacent(const FVertex& u, const FVertex& v) {
    return abs_int(u.p * v.q - u.q * v.p) == 1;
}

PathStep PathStep::complete_edge(FVertex from, FVertex to, int sign) {
    return {std::move(from), std::move(to), true, Rat(1), sign};
}

PathStep PathStep::partial_edge(FVertex from, FVertex toward, Rat weight, int sign) {
    return {std::move(from), std::move(toward), false, std::move(weight), sign};
}

void EdgePathSystem::validate() const {
    for (const auto& path : paths) {
        for (size_t i = 0; i < path.size(); ++i) {
            const auto& st = path[i];
            if (st.sign != 1 && st.sign != -1)
                throw std::invalid_argument("edge path: sign must be +/-1");
            if (!st.complete && (st.weight < 0 || st.weight > 1))
                throw std::invalid_argument("edge path: partial weight outside [0,1]");
            bool toward_infinity = !st.complete && st.to == FVertex::infinity();
            if (!toward_infinity && !farey_adjacent(st.from, st.to))
                throw std::invalid_argument("edge path: " + st.from.str() + " -> " +
                                            st.to.str() + " is not a Farey edge");
            if (i + 1 < path.size() && !(path[i + 1].from == st.to))
                throw std::invalid_argument("edge path: steps are not chained");
            if (!st.complete && i + 1 < path.size())
                throw std::invalid_argument("edge path: partial step must be last");
        }
    }
}

Rat tau(const EdgePathSystem& sys) {
    sys.validate();
    Rat total = 0;
    for (const auto& path : sys.paths)
        for (const auto& st : path) total += st.contribution();
    return 2 * total;
}

Rat boundary_slope(const EdgePathSystem& candidate, const EdgePathSystem& seifert_ref) {
    return tau(candidate) - tau(seifert_ref);
}

EdgePathSystem candidate_system(const Int& m) {
    if (m < 9)
        throw std::invalid_argument("candidate_system: partial weights are barycentric only for m >= 9");
    EdgePathSystem sys;
    sys.paths.resize(3);
    // first tangle: constant path
    // second tangle: partial step from 1/(2m+1) toward infinity, stopping at
    // (m-7)<1/0> + <1/(2m+1)>
    sys.paths[1].push_back(PathStep::partial_edge(FVertex(1, 2 * m + 1), FVertex::infinity(),
                                                  Rat(m - 7, m - 6), +1));
    // third tangle: 5/18 -> 2/7, then partway toward 1/3, stopping at
    // (m-9)<1/3> + 3<2/7>
    sys.paths[2].push_back(PathStep::complete_edge(FVertex(5, 18), FVertex(2, 7), -1));
    sys.paths[2].push_back(
        PathStep::partial_edge(FVertex(2, 7), FVertex(1, 3), Rat(m - 9, m - 6), -1));
    return sys;
}

EdgePathSystem seifert_system(const Int& m) {
    if (m < 1) throw std::invalid_argument("seifert_system: need m >= 1");
    EdgePathSystem sys;
    sys.paths.resize(3);
    // Per-edge signs are template data; only the per-path signed totals
    // (+1, -(2m+1), 0) are externally meaningful.
    sys.paths[0] = {
        PathStep::complete_edge(FVertex(-1, 3), FVertex(-1, 2), +1),
        PathStep::complete_edge(FVertex(-1, 2), FVertex(-1, 1), +1),
        PathStep::complete_edge(FVertex(-1, 1), FVertex::infinity(), -1),
    };
    for (Int k = 2 * m + 1; k >= 1; --k)
        sys.paths[1].push_back(PathStep::complete_edge(FVertex(1, k), FVertex(1, k - 1), -1));
    sys.paths[2] = {
        PathStep::complete_edge(FVertex(5, 18), FVertex(2, 7), -1),
        PathStep::complete_edge(FVertex(2, 7), FVertex(1, 4), +1),
        PathStep::complete_edge(FVertex(1, 4), FVertex(0, 1), +1),
        PathStep::complete_edge(FVertex(0, 1), FVertex::infinity(), -1),
    };
    return sys;
}

PretzelFamilyResult pretzel_family(const Int& n) {
    if (abs_int(n) < 3) throw std::invalid_argument("pretzel_family: need |n| >= 3");
    PretzelFamilyResult out;
    out.n = n;
    out.m = 4 * n + 6;
    out.h1_order = 16 * n * n + 22 * n + 1;
    out.slope = Rat(out.h1_order) / Rat(n);
    out.cross_checked = false;
    if (n >= 3) {
        Rat by_paths = boundary_slope(candidate_system(out.m), seifert_system(out.m));
        if (by_paths != out.slope)
            throw std::logic_error("pretzel_family: edge-path route disagrees with closed form");
        out.cross_checked = true;
    }
    return out;
}

}  // namespace dehn
