#include "dehn/seifert.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn {

Orbifold2::Orbifold2(bool orient, int g, std::vector<Int> cones, int boundary)
    : orientable(orient), genus(g), boundary_circles(boundary), cone_orders(std::move(cones)) {
    if (orientable && genus < 0) throw std::invalid_argument("orbifold: genus must be >= 0");
    if (!orientable && genus < 1) throw std::invalid_argument("orbifold: need >= 1 crosscap");
    if (boundary_circles < 0) throw std::invalid_argument("orbifold: negative boundary count");
    for (const auto& a : cone_orders)
        if (a < 2) throw std::invalid_argument("orbifold: cone orders must be >= 2");
    std::sort(cone_orders.begin(), cone_orders.end());
}

std::string Orbifold2::str() const {
    std::string base;
    if (orientable)
        base = genus == 0 ? "S2" : (genus == 1 ? "T2" : "Sigma" + std::to_string(genus));
    else
        base = genus == 1 ? "RP2" : (genus == 2 ? "K2" : "N" + std::to_string(genus));
    for (int i = 0; i < boundary_circles; ++i) base += "-d";
    if (cone_orders.empty()) return base;
    std::string s = base + "(";
    for (size_t i = 0; i < cone_orders.size(); ++i)
        s += (i ? "," : "") + cone_orders[i].str();
    return s + ")";
}

Rat chi_orb(const Orbifold2& o) {
    Rat chi = o.orientable ? Rat(2 - 2 * o.genus) : Rat(2 - o.genus);
    chi -= o.boundary_circles;
    for (const auto& a : o.cone_orders) chi -= Rat(1) - Rat(1) / Rat(a);
    return chi;
}

OrbifoldClass classify_orbifold(const Orbifold2& o) {
    Rat chi = chi_orb(o);
    if (chi < 0) return OrbifoldClass::Hyperbolic;
    if (chi == 0) return OrbifoldClass::Parabolic;
    return OrbifoldClass::Spherical;
}

std::string orbifold_class_str(OrbifoldClass c) {
    switch (c) {
        case OrbifoldClass::Hyperbolic: return "Hyperbolic";
        case OrbifoldClass::Parabolic: return "Parabolic";
        case OrbifoldClass::Spherical: return "Spherical";
    }
    return "?";
}

bool is_listed_parabolic(const Orbifold2& o) {
    if (!o.closed()) throw std::invalid_argument("is_listed_parabolic: orbifold must be closed");
    const auto& c = o.cone_orders;  // sorted
    if (o.orientable) {
        if (o.genus == 1 && c.empty()) return true;  // torus
        if (o.genus == 0 && c.size() == 4 && c == std::vector<Int>{2, 2, 2, 2}) return true;
        if (o.genus == 0 && c.size() == 3)
            return c == std::vector<Int>{2, 3, 6} || c == std::vector<Int>{2, 4, 4} ||
                   c == std::vector<Int>{3, 3, 3};
        return false;
    }
    if (o.genus == 2 && c.empty()) return true;  // Klein bottle
    if (o.genus == 1 && c == std::vector<Int>{2, 2}) return true;
    return false;
}

int teichmuller_dim(const Orbifold2& o) {
    if (!o.closed() || classify_orbifold(o) != OrbifoldClass::Hyperbolic)
        throw std::invalid_argument("teichmuller_dim: orbifold must be closed hyperbolic");
    int q = static_cast<int>(o.cone_orders.size());
    return o.orientable ? -6 + 6 * o.genus + 2 * q : -6 + 3 * o.genus + 2 * q;
}

SeifertData::SeifertData(Orbifold2 base_orb, Int g, std::vector<std::pair<Int, Int>> f)
    : base(std::move(base_orb)), gamma(std::move(g)), fibers(std::move(f)) {
    if (!base.closed()) throw std::invalid_argument("seifert: base orbifold must be closed");
    if (!base.cone_orders.empty())
        throw std::invalid_argument("seifert: cone points come from the fiber list");
    for (const auto& [a, b] : fibers) {
        if (a < 2 || b <= 0 || b >= a || gcd_int(a, b) != 1)
            throw std::invalid_argument("seifert: fiber invariants need gcd(a,b)=1, 0<b<a");
    }
}

Orbifold2 SeifertData::base_with_cones() const {
    std::vector<Int> cones;
    for (const auto& [a, b] : fibers) cones.push_back(a);
    return Orbifold2(base.orientable, base.genus, cones);
}

std::string Presentation::str() const {
    std::string s = "< ";
    for (size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
    s += " | ";
    if (h_central) s += "h central";
    for (size_t i = 0; i < relators.size(); ++i) {
        if (h_central || i) s += ", ";
        std::string w;
        for (const auto& [g, e] : relators[i]) {
            if (!w.empty()) w += " ";
            w += generators[g];
            if (e != 1) w += "^" + std::to_string(e);
        }
        s += w.empty() ? "1" : w;
    }
    return s + " >";
}

Presentation presentation(const SeifertData& sd) {
    Presentation pr;
    const int g = sd.base.genus;
    const int q = static_cast<int>(sd.fibers.size());
    // The framing relator is oriented as [a_1,b_1]...[a_g,b_g] x_1...x_q h^gamma
    // (so |H_1| of a sphere base is |gamma*prod(alpha) + sum beta_j*prod_{i!=j} alpha_i|,
    // the classical Seifert-invariant sign).
    if (sd.base.orientable) {
        // <a_i, b_i, x_j, h | h central, x_j^{a_j} = h^{b_j},
        //                     [a_1,b_1]...[a_g,b_g] x_1...x_q h^gamma = 1>
        for (int i = 1; i <= g; ++i) {
            pr.generators.push_back("a" + std::to_string(i));
            pr.generators.push_back("b" + std::to_string(i));
        }
        for (int j = 1; j <= q; ++j) pr.generators.push_back("x" + std::to_string(j));
        pr.generators.push_back("h");
        pr.h_central = true;
        const int xbase = 2 * g;
        const int h = 2 * g + q;
        for (int j = 0; j < q; ++j) {
            int alpha = sd.fibers[j].first.convert_to<int>();
            int beta = sd.fibers[j].second.convert_to<int>();
            pr.relators.push_back({{xbase + j, alpha}, {h, -beta}});
        }
        Presentation::Word w;
        for (int i = 0; i < g; ++i) {
            w.push_back({2 * i, 1});
            w.push_back({2 * i + 1, 1});
            w.push_back({2 * i, -1});
            w.push_back({2 * i + 1, -1});
        }
        for (int j = 0; j < q; ++j) w.push_back({xbase + j, 1});
        w.push_back({h, sd.gamma.convert_to<int>()});
        pr.relators.push_back(w);
    } else {
        // <a_i, x_j, h | a_i h a_i^-1 = h^-1, x_j^{a_j} = h^{b_j},
        //                x_j h x_j^-1 = h, a_1^2...a_g^2 x_1...x_q h^gamma = 1>
        for (int i = 1; i <= g; ++i) pr.generators.push_back("a" + std::to_string(i));
        for (int j = 1; j <= q; ++j) pr.generators.push_back("x" + std::to_string(j));
        pr.generators.push_back("h");
        const int xbase = g;
        const int h = g + q;
        for (int i = 0; i < g; ++i)
            pr.relators.push_back({{i, 1}, {h, 1}, {i, -1}, {h, 1}});
        for (int j = 0; j < q; ++j) {
            int alpha = sd.fibers[j].first.convert_to<int>();
            int beta = sd.fibers[j].second.convert_to<int>();
            pr.relators.push_back({{xbase + j, alpha}, {h, -beta}});
        }
        for (int j = 0; j < q; ++j)
            pr.relators.push_back({{xbase + j, 1}, {h, 1}, {xbase + j, -1}, {h, -1}});
        Presentation::Word w;
        for (int i = 0; i < g; ++i) w.push_back({i, 2});
        for (int j = 0; j < q; ++j) w.push_back({xbase + j, 1});
        w.push_back({h, sd.gamma.convert_to<int>()});
        pr.relators.push_back(w);
    }
    return pr;
}

Int AbelianGroup::order() const {
    if (!is_finite()) throw std::invalid_argument("order: group is infinite");
    Int n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

std::string AbelianGroup::str() const {
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + d.str());
    return s.empty() ? "0" : s;
}

std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<Int> diag;
    size_t r = 0, c = 0;
    while (r < rows && c < cols) {
        // pivot: smallest nonzero entry of the block, re-chosen after every
        // reduction round so intermediate entries stay small
        size_t pi = rows, pj = cols;
        for (size_t i = r; i < rows; ++i)
            for (size_t j = c; j < cols; ++j)
                if (m[i][j] != 0 && (pi == rows || abs_int(m[i][j]) < abs_int(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // all zero
        std::swap(m[r], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][pj]);

        const Int& pivot = m[r][c];
        bool reduced = false;
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Int f = m[i][c] / pivot;
            if (f != 0)
                for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            if (m[i][c] != 0) reduced = true;  // nonzero remainder, smaller than pivot
        }
        for (size_t j = c + 1; j < cols; ++j) {
            if (m[r][j] == 0) continue;
            Int f = m[r][j] / pivot;
            if (f != 0)
                for (size_t i = r; i < rows; ++i) m[i][j] -= f * m[i][c];
            if (m[r][j] != 0) reduced = true;
        }
        if (reduced) continue;  // a smaller entry exists somewhere: re-pick the pivot

        // pivot now divides its row and column; force it down to the gcd of
        // the whole block before accepting it
        bool divides_all = true;
        for (size_t i = r + 1; i < rows && divides_all; ++i)
            for (size_t j = c + 1; j < cols && divides_all; ++j)
                if (m[i][j] % pivot != 0) {
                    for (size_t t = c; t < cols; ++t) m[r][t] += m[i][t];
                    divides_all = false;
                }
        if (!divides_all) continue;

        diag.push_back(abs_int(pivot));
        ++r;
        ++c;
    }
    // enforce the divisibility chain d_i | d_{i+1}
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                Int g = gcd_int(diag[i], diag[j]);
                Int l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
    std::sort(diag.begin(), diag.end());
    return diag;
}

AbelianGroup h1(const SeifertData& sd) {
    Presentation pr = presentation(sd);
    const size_t n = pr.generators.size();
    std::vector<std::vector<Int>> m;
    for (const auto& rel : pr.relators) {
        std::vector<Int> row(n, 0);
        for (const auto& [g, e] : rel) row[g] += e;
        m.push_back(row);
    }
    auto diag = smith_normal_form(std::move(m));
    AbelianGroup out;
    size_t nonzero = 0;
    for (const auto& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = static_cast<int>(n - nonzero);
    return out;
}

std::string Decision::str() const {
    switch (result) {
        case Determination::Yes: return "Yes(" + reason + ")";
        case Determination::No: return "No(" + reason + ")";
        case Determination::Undetermined: return "Undetermined(" + reason + ")";
    }
    return "?";
}

bool is_s1_x_s2(const SeifertData& sd) {
    if (!sd.base.orientable || sd.base.genus != 0 || sd.fibers.size() > 2) return false;
    return h1(sd) == AbelianGroup{1, {}};
}

bool is_rp3_rp3(const SeifertData& sd) {
    return !sd.base.orientable && sd.base.genus == 1 && sd.fibers.empty() && sd.gamma == 0;
}

static bool is_triangle_sphere(const Orbifold2& o) {
    return o.orientable && o.genus == 0 && o.cone_orders.size() == 3;
}

Decision haken(const SeifertData& sd) {
    if (is_s1_x_s2(sd) || is_rp3_rp3(sd))
        return {Determination::No, "reducible"};
    Orbifold2 base = sd.base_with_cones();
    if (!h1(sd).is_finite()) return {Determination::Yes, "infinite first homology"};
    auto cls = classify_orbifold(base);
    if (cls == OrbifoldClass::Parabolic && !is_triangle_sphere(base))
        return {Determination::Yes, "parabolic base other than a triangle sphere"};
    if (is_triangle_sphere(base)) return {Determination::No, "triangle base with finite homology"};
    return {Determination::Undetermined, "no applicable criterion"};
}

Decision irreducible_curve_exists(const SeifertData& sd) {
    if (is_s1_x_s2(sd)) return {Determination::No, "S1 x S2: abelian fundamental group"};
    if (is_rp3_rp3(sd)) return {Determination::Yes, "RP3 # RP3"};
    Orbifold2 base = sd.base_with_cones();
    if (classify_orbifold(base) == OrbifoldClass::Spherical)
        return {Determination::No, "finite fundamental group (spherical base)"};
    Decision hk = haken(sd);
    if (hk.result == Determination::Undetermined)
        return {Determination::Undetermined, "Haken status undetermined: " + hk.reason};
    if (hk.no()) return {Determination::No, "non-Haken triangle base"};
    if (base.orientable && base.genus == 1 && base.cone_orders.empty())
        return {Determination::No, "torus without cone points excluded"};
    if (is_triangle_sphere(base)) return {Determination::No, "triangle base excluded"};
    return {Determination::Yes, "Haken, non-excluded base"};
}

Decision virtually_irreducible_curve_exists(const SeifertData& sd) {
    if (is_s1_x_s2(sd)) return {Determination::No, "S1 x S2: abelian fundamental group"};
    if (is_rp3_rp3(sd)) return {Determination::No, "index 2 virtually reducible"};
    Orbifold2 base = sd.base_with_cones();
    if (classify_orbifold(base) != OrbifoldClass::Hyperbolic)
        return {Determination::No, "base not hyperbolic"};
    if (is_triangle_sphere(base)) return {Determination::No, "triangle base excluded"};
    Decision hk = haken(sd);
    if (hk.yes()) return {Determination::Yes, "Haken, hyperbolic non-triangle base"};
    if (hk.no()) return {Determination::No, "non-Haken"};
    return {Determination::Undetermined, "Haken status undetermined: " + hk.reason};
}

}  // namespace dehn
