#pragma once

// Numerical PSL2(C) representation and character computations: sign-blind
// 2x2 matrices, the explicit one-parameter curves of characters of
// Z/p * Z/q, trace tuples and the sign-homomorphism character-equality test,
// and reducibility / dihedral detection.

#include <complex>
#include <string>
#include <vector>

namespace dehn {

using cplx = std::complex<double>;

struct Tolerances {
    double equality = 1e-9;    // matrix / trace comparisons
    double membership = 1e-6;  // locus membership (reducible, dihedral)
};

// 2x2 unit-determinant matrix identified with its negation.
struct ProjMatrix {
    cplx a, b, c, d;

    ProjMatrix() : a(1), b(0), c(0), d(1) {}
    ProjMatrix(cplx a_, cplx b_, cplx c_, cplx d_);

    static ProjMatrix identity() { return {}; }

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }  // trace of the stored lift
    ProjMatrix inverse() const { return {d, -b, -c, a}; }
    ProjMatrix operator*(const ProjMatrix& o) const;
    ProjMatrix operator-() const { return {-a, -b, -c, -d}; }

    // A ~ B or A ~ -B entrywise
    bool approx_equal(const ProjMatrix& o, double tol = 1e-9) const;
    bool is_central(double tol = 1e-9) const;  // +/- identity

    double max_abs() const;
};

struct ProjRep {
    std::vector<ProjMatrix> generator_images;
    int num_generators() const { return static_cast<int>(generator_images.size()); }
};

// Reduced word in the generators; letters are (generator index, +/-1).
class Word {
  public:
    Word() = default;
    Word(std::initializer_list<std::pair<int, int>> letters);
    explicit Word(std::vector<std::pair<int, int>> letters);

    const std::vector<std::pair<int, int>>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

  private:
    std::vector<std::pair<int, int>> letters_;  // freely reduced
};

// Component C(j,k) of the character variety of Z/p * Z/q; a curve when
// j >= 1 and k >= 1, an isolated point otherwise.
struct ComponentIndex {
    int p, q, j, k;
    ComponentIndex(int p_, int q_, int j_, int k_);
    bool is_curve() const { return j >= 1 && k >= 1; }

    cplx lambda() const;  // e^{i pi j / p}
    cplx mu() const;      // e^{i pi k / q}
    cplx tau() const { return mu() + 1.0 / mu(); }

    // parameter value of the critical point of the squared xy-trace
    cplx critical_parameter() const;
};

// (total component count, curve component count) of the character variety of
// Z/p * Z/q.
std::pair<long, long> component_counts(int p, int q);

// The representation at parameter a on the curve C(j,k):
// x -> diag(lambda, lambda^-1), y -> [[a, 1], [a(tau-a)-1, tau-a]].
ProjRep rho_a(const ComponentIndex& c, cplx a);

ProjMatrix word_eval(const ProjRep& rep, const Word& w);

// Squared trace minus four of the image of the word; independent of the
// sign lift.
cplx f_gamma(const ProjRep& rep, const Word& w);

// The canonical n(n^2+5)/6 words: generators, ascending pairs, ascending
// triples.
std::vector<Word> canonical_words(int n);

// Traces of the stored lifts on the canonical words.
std::vector<cplx> trace_tuple(const ProjRep& rep);

// Character equality via a sign homomorphism on the generators.
bool char_equal(const ProjRep& r1, const ProjRep& r2, const Tolerances& tol = {});

// All generator-pair commutators have trace 2 (commutator traces are
// sign-unambiguous).
bool is_reducible(const ProjRep& rep, const Tolerances& tol = {});

// Irreducible with image in the diagonal/antidiagonal normalizer after
// diagonalizing a non-central generator. Throws if every generator image is
// central; parabolic leading generators yield false.
bool is_dihedral(const ProjRep& rep, const Tolerances& tol = {});

struct ReducibleLocus {
    cplx value_mu;       // a = mu
    cplx value_mu_inv;   // a = mu^-1
    int character_count; // 2 unless j = p/2 or k = q/2, else 1
};

ReducibleLocus reducible_parameters(const ComponentIndex& c);

}  // namespace dehn
