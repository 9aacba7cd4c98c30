#include "dehn/charvar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dehn {

ProjMatrix::ProjMatrix(cplx a_, cplx b_, cplx c_, cplx d_) : a(a_), b(b_), c(c_), d(d_) {
    if (std::abs(det() - 1.0) > 1e-7)
        throw std::invalid_argument("ProjMatrix: determinant must be 1");
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const {
    ProjMatrix r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    return r;
}

double ProjMatrix::max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

bool ProjMatrix::approx_equal(const ProjMatrix& o, double tol) const {
    double scale = 1.0 + std::max(max_abs(), o.max_abs());
    auto close = [&](const ProjMatrix& m, const ProjMatrix& n) {
        return std::abs(m.a - n.a) <= tol * scale && std::abs(m.b - n.b) <= tol * scale &&
               std::abs(m.c - n.c) <= tol * scale && std::abs(m.d - n.d) <= tol * scale;
    };
    return close(*this, o) || close(*this, -o);
}

bool ProjMatrix::is_central(double tol) const { return approx_equal(identity(), tol); }

Word::Word(std::initializer_list<std::pair<int, int>> letters)
    : Word(std::vector<std::pair<int, int>>(letters)) {}

Word::Word(std::vector<std::pair<int, int>> letters) {
    for (const auto& [g, e] : letters) {
        if (e != 1 && e != -1) throw std::invalid_argument("word: exponents must be +/-1");
        if (!letters_.empty() && letters_.back().first == g && letters_.back().second == -e)
            letters_.pop_back();  // free reduction
        else
            letters_.emplace_back(g, e);
    }
}

ComponentIndex::ComponentIndex(int p_, int q_, int j_, int k_) : p(p_), q(q_), j(j_), k(k_) {
    if (p < 2 || q < 2) throw std::invalid_argument("component: need p, q >= 2");
    if (j < 0 || j > p / 2 || k < 0 || k > q / 2)
        throw std::invalid_argument("component: need 0 <= j <= p/2 and 0 <= k <= q/2");
}

cplx ComponentIndex::lambda() const {
    return std::polar(1.0, std::numbers::pi * j / p);
}

cplx ComponentIndex::mu() const {
    return std::polar(1.0, std::numbers::pi * k / q);
}

cplx ComponentIndex::critical_parameter() const {
    cplx l = lambda();
    return -tau() / l / (l - 1.0 / l);
}

std::pair<long, long> component_counts(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("component_counts: need p, q >= 2");
    long hp = p / 2, hq = q / 2;
    return {(hp + 1) * (hq + 1), hp * hq};
}

ProjRep rho_a(const ComponentIndex& c, cplx a) {
    if (!c.is_curve())
        throw std::invalid_argument("rho_a: component is an isolated point, not a curve");
    cplx l = c.lambda();
    cplx t = c.tau();
    ProjRep rep;
    rep.generator_images.push_back(ProjMatrix(l, 0, 0, 1.0 / l));
    rep.generator_images.push_back(ProjMatrix(a, 1, a * (t - a) - 1.0, t - a));
    return rep;
}

ProjMatrix word_eval(const ProjRep& rep, const Word& w) {
    ProjMatrix out = ProjMatrix::identity();
    for (const auto& [g, e] : w.letters()) {
        if (g < 0 || g >= rep.num_generators())
            throw std::out_of_range("word_eval: generator index out of range");
        const ProjMatrix& m = rep.generator_images[g];
        out = out * (e == 1 ? m : m.inverse());
    }
    return out;
}

cplx f_gamma(const ProjRep& rep, const Word& w) {
    cplx t = word_eval(rep, w).trace();
    return t * t - 4.0;
}

std::vector<Word> canonical_words(int n) {
    std::vector<Word> words;
    for (int i = 0; i < n; ++i) words.push_back(Word{{i, 1}});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) words.push_back(Word{{i, 1}, {j, 1}});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) words.push_back(Word{{i, 1}, {j, 1}, {k, 1}});
    return words;
}

std::vector<cplx> trace_tuple(const ProjRep& rep) {
    std::vector<cplx> out;
    for (const auto& w : canonical_words(rep.num_generators()))
        out.push_back(word_eval(rep, w).trace());
    return out;
}

bool char_equal(const ProjRep& r1, const ProjRep& r2, const Tolerances& tol) {
    if (r1.num_generators() != r2.num_generators())
        throw std::invalid_argument("char_equal: generator counts differ");
    const int n = r1.num_generators();
    auto words = canonical_words(n);
    auto t1 = trace_tuple(r1);
    auto t2 = trace_tuple(r2);
    double scale = 1.0;
    for (const auto& t : t1) scale = std::max(scale, std::abs(t));
    for (const auto& t : t2) scale = std::max(scale, std::abs(t));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (size_t w = 0; w < words.size() && ok; ++w) {
            int sign = 1;
            for (const auto& [g, e] : words[w].letters())
                if (mask & (1u << g)) sign = -sign;
            ok = std::abs(t2[w] - double(sign) * t1[w]) <= tol.equality * scale;
        }
        if (ok) return true;
    }
    return false;
}

bool is_reducible(const ProjRep& rep, const Tolerances& tol) {
    const int n = rep.num_generators();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ProjMatrix comm = word_eval(rep, Word{{i, 1}, {j, 1}, {i, -1}, {j, -1}});
            if (std::abs(comm.trace() - 2.0) > tol.membership) return false;
        }
    return true;
}

// columns are eigenvectors of m, normalized to determinant 1
static ProjMatrix eigenbasis(const ProjMatrix& m) {
    double off = std::max(std::abs(m.b), std::abs(m.c));
    if (off <= 1e-12 * (1.0 + m.max_abs())) return ProjMatrix::identity();  // already diagonal
    cplx tr = m.trace();
    cplx disc = std::sqrt(tr * tr - 4.0);
    cplx l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
    cplx v1a, v1c, v2a, v2c;
    if (std::abs(m.b) >= std::abs(m.c)) {
        v1a = m.b; v1c = l1 - m.a;
        v2a = m.b; v2c = l2 - m.a;
    } else {
        v1a = l1 - m.d; v1c = m.c;
        v2a = l2 - m.d; v2c = m.c;
    }
    cplx det = v1a * v2c - v2a * v1c;
    cplx s = std::sqrt(det);
    return {v1a / s, v2a / s, v1c / s, v2c / s};
}

bool is_dihedral(const ProjRep& rep, const Tolerances& tol) {
    const ProjMatrix* pivot = nullptr;
    for (const auto& m : rep.generator_images)
        if (!m.is_central(tol.membership)) {
            pivot = &m;
            break;
        }
    if (!pivot)
        throw std::domain_error("is_dihedral: all generator images are central (+/- identity)");
    if (!is_reducible(rep, tol)) {
        // diagonalizable pivot required; a parabolic cannot normalize a torus
        if (std::abs(pivot->trace() * pivot->trace() - 4.0) <= tol.membership) return false;
        ProjMatrix basis = eigenbasis(*pivot);
        ProjMatrix inv = basis.inverse();
        for (const auto& m : rep.generator_images) {
            ProjMatrix t = inv * m * basis;
            double scale = 1.0 + t.max_abs();
            bool diagonal = std::abs(t.b) <= tol.membership * scale &&
                            std::abs(t.c) <= tol.membership * scale;
            bool antidiagonal = std::abs(t.a) <= tol.membership * scale &&
                                std::abs(t.d) <= tol.membership * scale;
            if (!diagonal && !antidiagonal) return false;
        }
        return true;
    }
    return false;
}

ReducibleLocus reducible_parameters(const ComponentIndex& c) {
    if (!c.is_curve())
        throw std::invalid_argument("reducible_parameters: component is not a curve");
    ReducibleLocus out;
    out.value_mu = c.mu();
    out.value_mu_inv = 1.0 / c.mu();
    bool half = (2 * c.j == c.p) || (2 * c.k == c.q);
    out.character_count = half ? 1 : 2;
    return out;
}

}  // namespace dehn
