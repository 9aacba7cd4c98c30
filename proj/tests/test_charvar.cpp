#include <doctest.h>

#include <cmath>
#include <random>

#include "dehn/charvar.hpp"

using namespace dehn;
using doctest::Approx;

namespace {

// random SU(2) elements: well-conditioned, so long products keep det close to 1
ProjRep random_rep(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ProjRep rep;
    for (int i = 0; i < n; ++i) {
        cplx a(u(rng), u(rng)), b(u(rng), u(rng));
        double norm = std::sqrt(std::norm(a) + std::norm(b));
        if (norm < 0.1) {
            --i;
            continue;
        }
        a /= norm;
        b /= norm;
        rep.generator_images.push_back(ProjMatrix(a, b, -std::conj(b), std::conj(a)));
    }
    return rep;
}

Word xy() { return Word{{0, 1}, {1, 1}}; }

}  // namespace

TEST_SUITE_BEGIN("charvar");

TEST_CASE("component counts") {
    CHECK(component_counts(2, 3) == std::pair<long, long>{4, 1});
    CHECK(component_counts(2, 2) == std::pair<long, long>{4, 1});
    CHECK(component_counts(3, 5) == std::pair<long, long>{6, 2});
    CHECK(component_counts(8, 8) == std::pair<long, long>{25, 16});
}

TEST_CASE("curve representations") {
    ComponentIndex c(2, 3, 1, 1);
    auto rep = rho_a(c, cplx(0.7, -0.3));
    CHECK(std::abs(rep.generator_images[0].trace()) == Approx(0.0).epsilon(1e-12));  // 2cos(pi/2)

    // x^p and y^q are +/- identity
    for (int p = 2; p <= 6; ++p)
        for (int j = 1; j <= p / 2; ++j) {
            ComponentIndex ci(p, 5, j, 2);
            auto r = rho_a(ci, cplx(1.3, 0.4));
            std::vector<std::pair<int, int>> xp(p, {0, 1}), yq(5, {1, 1});
            CHECK(word_eval(r, Word(xp)).is_central(1e-9));
            CHECK(word_eval(r, Word(yq)).is_central(1e-9));
        }

    CHECK_THROWS_AS(rho_a(ComponentIndex(4, 4, 0, 1), cplx(1.0)), std::invalid_argument);
}

TEST_CASE("trace of the xy word matches the closed form") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int p = 2; p <= 5; ++p)
        for (int q = 2; q <= 5; ++q)
            for (int j = 1; j <= p / 2; ++j)
                for (int k = 1; k <= q / 2; ++k) {
                    ComponentIndex c(p, q, j, k);
                    cplx a(u(rng), u(rng));
                    cplx l = c.lambda(), t = c.tau();
                    cplx expect = (l - 1.0 / l) * a + t / l;
                    cplx got = word_eval(rho_a(c, a), xy()).trace();
                    CHECK(std::abs(got - expect) < 1e-10);
                }
}

TEST_CASE("word evaluation basics") {
    std::mt19937_64 rng(17);
    auto rep = random_rep(rng, 2);
    CHECK(word_eval(rep, Word{}).approx_equal(ProjMatrix::identity()));
    CHECK(word_eval(rep, Word{{0, 1}, {0, -1}}).approx_equal(ProjMatrix::identity()));
    CHECK_THROWS_AS(word_eval(rep, Word{{5, 1}}), std::out_of_range);
}

TEST_CASE("f_gamma values") {
    ProjRep rep;
    rep.generator_images.push_back(ProjMatrix::identity());
    rep.generator_images.push_back(ProjMatrix(cplx(0, 1), 0, 0, cplx(0, -1)));  // trace 0
    rep.generator_images.push_back(ProjMatrix(1, 1, 0, 1));                     // parabolic
    CHECK(std::abs(f_gamma(rep, Word{{0, 1}})) == Approx(0.0));
    CHECK(f_gamma(rep, Word{{1, 1}}).real() == Approx(-4.0));
    CHECK(std::abs(f_gamma(rep, Word{{2, 1}})) == Approx(0.0));
}

TEST_CASE("canonical word counts") {
    CHECK(canonical_words(2).size() == 3);
    CHECK(canonical_words(3).size() == 7);
    CHECK(canonical_words(4).size() == 14);  // n(n^2+5)/6
    ProjRep id2;
    id2.generator_images = {ProjMatrix::identity(), ProjMatrix::identity()};
    auto t = trace_tuple(id2);
    REQUIRE(t.size() == 3);
    for (const auto& v : t) CHECK(std::abs(v - cplx(2.0)) < 1e-12);
}

TEST_CASE("character equality") {
    std::mt19937_64 rng(23);
    auto rep = random_rep(rng, 2);
    CHECK(char_equal(rep, rep));

    // negating a generator image preserves the character
    auto negated = rep;
    negated.generator_images[0] = -negated.generator_images[0];
    CHECK(char_equal(rep, negated));

    // on a curve with j = p/2 the parameter fiber is {a, tau - a}
    ComponentIndex half(2, 3, 1, 1);
    cplx a(0.9, 0.4);
    CHECK(char_equal(rho_a(half, a), rho_a(half, half.tau() - a)));

    // generic component: distinct parameters give distinct characters
    ComponentIndex generic(3, 7, 1, 2);
    CHECK(char_equal(rho_a(generic, a), rho_a(generic, a)));
    CHECK_FALSE(char_equal(rho_a(generic, a), rho_a(generic, generic.tau() - a)));
    CHECK_FALSE(char_equal(rho_a(generic, a), rho_a(generic, a + cplx(0.5, 0.1))));
}

TEST_CASE("reducibility detection") {
    ProjRep diag;
    diag.generator_images.push_back(ProjMatrix(2, 0, 0, 0.5));
    diag.generator_images.push_back(ProjMatrix(cplx(0, 3), 0, 0, cplx(0, -1.0 / 3)));
    CHECK(is_reducible(diag));

    for (int p = 2; p <= 8; ++p)
        for (int q = p; q <= 8; ++q)
            for (int j = 1; j <= p / 2; ++j)
                for (int k = 1; k <= q / 2; ++k) {
                    ComponentIndex c(p, q, j, k);
                    auto locus = reducible_parameters(c);
                    CHECK(is_reducible(rho_a(c, locus.value_mu)));
                    CHECK(is_reducible(rho_a(c, locus.value_mu_inv)));
                    CHECK_FALSE(is_reducible(rho_a(c, locus.value_mu + cplx(0.4, 0.2))));
                }
}

TEST_CASE("dihedral detection") {
    ProjRep dihedral;
    dihedral.generator_images.push_back(ProjMatrix(cplx(0, 1), 0, 0, cplx(0, -1)));
    dihedral.generator_images.push_back(ProjMatrix(0, 1, -1, 0));
    CHECK(is_dihedral(dihedral));

    // conjugated version still detected
    ProjMatrix g(1, 1, cplx(0.5), cplx(1.5));
    ProjRep conj;
    for (const auto& m : dihedral.generator_images)
        conj.generator_images.push_back(g * m * g.inverse());
    CHECK(is_dihedral(conj));

    ComponentIndex c(3, 7, 1, 2);
    CHECK_FALSE(is_dihedral(rho_a(c, cplx(1.2, 0.7))));

    ProjRep diag;
    diag.generator_images.push_back(ProjMatrix(2, 0, 0, 0.5));
    diag.generator_images.push_back(ProjMatrix(3, 0, 0, cplx(1.0 / 3)));
    CHECK_FALSE(is_dihedral(diag));  // reducible

    ProjRep central;
    central.generator_images.push_back(ProjMatrix::identity());
    central.generator_images.push_back(-ProjMatrix::identity());
    CHECK_THROWS_AS(is_dihedral(central), std::domain_error);
}

TEST_CASE("reducible parameter loci") {
    auto locus = reducible_parameters(ComponentIndex(3, 3, 1, 1));
    CHECK(locus.character_count == 2);
    CHECK(std::abs(locus.value_mu - std::polar(1.0, std::acos(-1.0) / 3)) < 1e-12);

    CHECK(reducible_parameters(ComponentIndex(2, 3, 1, 1)).character_count == 1);
    auto ik = reducible_parameters(ComponentIndex(2, 2, 1, 1));
    CHECK(ik.character_count == 1);
    CHECK(std::abs(ik.value_mu - cplx(0, 1)) < 1e-12);
    CHECK(std::abs(ik.value_mu_inv - cplx(0, -1)) < 1e-12);
}

TEST_CASE("determinants stay 1 along random words") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> len(0, 20), gen(0, 2), sgn(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        auto rep = random_rep(rng, 3);
        std::vector<std::pair<int, int>> letters;
        int L = len(rng);
        for (int i = 0; i < L; ++i) letters.push_back({gen(rng), sgn(rng) ? 1 : -1});
        CHECK(std::abs(word_eval(rep, Word(letters)).det() - 1.0) < 1e-9);
    }
}

TEST_CASE("Fricke identity on lifts") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        auto rep = random_rep(rng, 2);
        cplx lhs = word_eval(rep, Word{{0, 1}, {1, 1}}).trace() +
                   word_eval(rep, Word{{0, 1}, {1, -1}}).trace();
        cplx rhs = rep.generator_images[0].trace() * rep.generator_images[1].trace();
        CHECK(std::abs(lhs - rhs) < 1e-8);
    }
}

TEST_CASE("f_gamma is insensitive to sign lifts") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        auto rep = random_rep(rng, 2);
        auto flipped = rep;
        flipped.generator_images[trial % 2] = -flipped.generator_images[trial % 2];
        CHECK(std::abs(f_gamma(rep, xy()) - f_gamma(flipped, xy())) < 1e-9);
    }
}

TEST_CASE("squared xy-trace has its critical point at the stated parameter") {
    const double h = 1e-5;
    for (int p = 2; p <= 6; ++p)
        for (int q = 2; q <= 6; ++q)
            for (int j = 1; j <= p / 2; ++j)
                for (int k = 1; k <= q / 2; ++k) {
                    ComponentIndex c(p, q, j, k);
                    auto g1 = [&](cplx a) { return f_gamma(rho_a(c, a), xy()) + 4.0; };
                    cplx astar = c.critical_parameter();
                    cplx deriv = (g1(astar + h) - g1(astar - h)) / (2 * h);
                    CHECK(std::abs(deriv) < 1e-4);
                    // derivative is nonzero away from the critical point
                    cplx away = astar + cplx(0.3, 0.1);
                    cplx d2 = (g1(away + h) - g1(away - h)) / (2 * h);
                    CHECK(std::abs(d2) > 1e-3);
                }
}

TEST_SUITE_END();
