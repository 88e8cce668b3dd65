#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "srg/geometry.hpp"
#include "srg/gf.hpp"
#include "srg/oracle.hpp"
#include "srg/polar.hpp"

using namespace srg;

TEST_CASE("prime power recognition") {
    CHECK(as_prime_power(8) == std::make_pair(2LL, 3));
    CHECK(as_prime_power(49) == std::make_pair(7LL, 2));
    CHECK(as_prime_power(13) == std::make_pair(13LL, 1));
    CHECK_FALSE(as_prime_power(6).has_value());
    CHECK_FALSE(as_prime_power(1).has_value());
    CHECK_FALSE(as_prime_power(100).has_value());
    CHECK(as_prime_power(121) == std::make_pair(11LL, 2));
}

TEST_CASE("make_field: modulus selection and bad inputs") {
    FiniteField f9 = FiniteField::make(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1
    FiniteField f4 = FiniteField::make(2, 2);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1
    CHECK_THROWS_AS(FiniteField::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(2, 25), std::invalid_argument);  // over cap
    CHECK(FiniteField::make(2, 1).q() == 2);
}

TEST_CASE("field axioms: exhaustive for small q, sampled for larger") {
    for (auto [p, e] : std::vector<std::pair<long long, int>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}, {7, 1}, {2, 4},
             {5, 2}, {3, 3}, {2, 5}, {2, 6}}) {
        FiniteField f = FiniteField::make(p, e);
        int q = static_cast<int>(f.q());
        if (q <= 64) {
            for (int a = 0; a < q; ++a) {
                for (int b = 0; b < q; ++b) {
                    CHECK(f.add(a, b) == f.add(b, a));
                    CHECK(f.mul(a, b) == f.mul(b, a));
                    for (int c = 0; c < std::min(q, 8); ++c) {
                        CHECK(f.mul(a, f.add(b, c)) ==
                              f.add(f.mul(a, b), f.mul(a, c)));
                        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    }
                }
                CHECK(f.add(a, f.neg(a)) == 0);
                if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            }
        }
        // Frobenius x -> x^p is additive and multiplicative
        std::mt19937 rng(43);
        for (int t = 0; t < 50; ++t) {
            int a = static_cast<int>(rng() % q), b = static_cast<int>(rng() % q);
            CHECK(f.pow(f.add(a, b), f.p()) ==
                  f.add(f.pow(a, f.p()), f.pow(b, f.p())));
            CHECK(f.pow(f.mul(a, b), f.p()) ==
                  f.mul(f.pow(a, f.p()), f.pow(b, f.p())));
        }
        // generator really generates
        std::set<int> seen;
        int cur = 1;
        for (long long i = 0; i < f.q() - 1; ++i) {
            seen.insert(cur);
            cur = f.mul(cur, f.generator());
        }
        CHECK(static_cast<long long>(seen.size()) == f.q() - 1);
    }
}

TEST_CASE("squares: worked examples and counts") {
    FiniteField f5 = FiniteField::make(5, 1);
    CHECK(f5.squares() == std::vector<int>{1, 4});
    FiniteField f13 = FiniteField::make(13, 1);
    CHECK(f13.squares() == std::vector<int>{1, 3, 4, 9, 10, 12});
    FiniteField f4 = FiniteField::make(2, 2);
    CHECK(f4.squares().size() == 3);  // every element of F* in even characteristic
    for (long long q : {5, 9, 13, 25, 49}) {
        auto pp = as_prime_power(q);
        FiniteField f = FiniteField::make(pp->first, pp->second);
        CHECK(static_cast<long long>(f.squares().size()) == (q - 1) / 2);
    }
}

TEST_CASE("projective point counts and canonical normalization") {
    FiniteField f2 = FiniteField::make(2, 1);
    CHECK(projective_points(f2, 2).size() == 7);  // Fano
    FiniteField f3 = FiniteField::make(3, 1);
    CHECK(projective_points(f3, 3).size() == 40);
    FiniteField f4 = FiniteField::make(2, 2);
    CHECK(projective_points(f4, 2).size() == 21);

    // canonical: any scalar multiple normalizes to the same vector
    FiniteField f5 = FiniteField::make(5, 1);
    auto p = normalize_projective(f5, {2, 3, 1});
    auto q = normalize_projective(f5, {4, 1, 2});  // 2 * (2,3,1)
    CHECK(p == q);
    CHECK(p[0] == 1);
    CHECK_THROWS_AS(normalize_projective(f5, {0, 0, 0}), std::invalid_argument);

    // no duplicates in the enumeration
    auto pts = projective_points(f3, 2);
    std::set<std::vector<int>> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == pts.size());
}

TEST_CASE("standard forms: isotropic point counts") {
    CHECK(isotropic_point_count(QuadraticForm::Kind::Plus, 4, 2) == 9);
    CHECK(isotropic_point_count(QuadraticForm::Kind::Minus, 4, 2) == 5);
    CHECK(isotropic_point_count(QuadraticForm::Kind::Parabolic, 5, 3) == 40);
    CHECK_THROWS_AS(QuadraticForm::standard(QuadraticForm::Kind::Plus, 5,
                                            FiniteField::make(2, 1)),
                    std::invalid_argument);
}

TEST_CASE("symplectic form is alternating") {
    FiniteField f3 = FiniteField::make(3, 1);
    auto form = QuadraticForm::standard(QuadraticForm::Kind::Symplectic, 4, f3);
    for (const auto& x : projective_points(f3, 3))
        CHECK(form.bilinear(x, x) == 0);
}

TEST_CASE("two independent canonical forms of one type agree on counts") {
    // Alternative plus-type form with the hyperbolic pairs interleaved
    // (0,2),(1,3) instead of (0,1),(2,3); counted exhaustively.
    FiniteField f3 = FiniteField::make(3, 1);
    auto standard = QuadraticForm::standard(QuadraticForm::Kind::Plus, 4, f3);
    long long std_count = 0, alt_count = 0;
    for (const auto& x : projective_points(f3, 3)) {
        if (standard.eval(x) == 0) ++std_count;
        int alt = f3.add(f3.mul(x[0], x[2]), f3.mul(x[1], x[3]));
        if (alt == 0) ++alt_count;
    }
    CHECK(std_count == alt_count);
}

TEST_CASE("polarization gives a symmetric bilinear form") {
    FiniteField f4 = FiniteField::make(2, 2);
    auto form = QuadraticForm::standard(QuadraticForm::Kind::Minus, 4, f4);
    auto pts = projective_points(f4, 3);
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto& x = pts[rng() % pts.size()];
        const auto& y = pts[rng() % pts.size()];
        CHECK(form.bilinear(x, y) == form.bilinear(y, x));
    }
}

TEST_CASE("hyperoval: sizes, line meets, odd q rejected") {
    FiniteField f2 = FiniteField::make(2, 1);
    CHECK(hyperoval(f2).size() == 4);
    FiniteField f4 = FiniteField::make(2, 2);
    auto oval = hyperoval(f4);
    CHECK(oval.size() == 6);
    // every line meets in 0 or 2 points (construction verifies; recheck one)
    int hits = 0;
    for (const auto& p : oval)
        if (p[2] == 0) ++hits;  // the line Z = 0
    CHECK((hits == 0 || hits == 2));
    CHECK_THROWS_AS(hyperoval(FiniteField::make(3, 1)), std::invalid_argument);
}

TEST_CASE("polar graphs measure their classical parameters") {
    auto sp43 = is_strongly_regular(polar_graph(QuadraticForm::Kind::Symplectic, 4, 3));
    REQUIRE(sp43.has_value());
    CHECK(*sp43 == SrgParams{40, 12, 2, 4});

    auto o53 = is_strongly_regular(polar_graph(QuadraticForm::Kind::Parabolic, 5, 3));
    REQUIRE(o53.has_value());
    CHECK(*o53 == SrgParams{40, 12, 2, 4});

    auto o6m2 = is_strongly_regular(polar_graph(QuadraticForm::Kind::Minus, 6, 2));
    REQUIRE(o6m2.has_value());
    CHECK(*o6m2 == SrgParams{27, 10, 1, 5});

    auto o6p2 = is_strongly_regular(polar_graph(QuadraticForm::Kind::Plus, 6, 2));
    REQUIRE(o6p2.has_value());
    CHECK(*o6p2 == SrgParams{35, 18, 9, 9});
}

TEST_CASE("affine polar graphs: Clebsch and friends") {
    auto vo4m = is_strongly_regular(affine_polar_graph(QuadraticForm::Kind::Minus, 4, 2));
    REQUIRE(vo4m.has_value());
    CHECK(*vo4m == SrgParams{16, 5, 0, 2});

    auto vo4p = is_strongly_regular(affine_polar_graph(QuadraticForm::Kind::Plus, 4, 2));
    REQUIRE(vo4p.has_value());
    CHECK(*vo4p == SrgParams{16, 9, 4, 6});

    auto vo6m = is_strongly_regular(affine_polar_graph(QuadraticForm::Kind::Minus, 6, 2));
    REQUIRE(vo6m.has_value());
    CHECK(*vo6m == SrgParams{64, 27, 10, 12});

    CHECK_THROWS_AS(affine_polar_graph(QuadraticForm::Kind::Parabolic, 4, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(affine_polar_graph(QuadraticForm::Kind::Plus, 5, 2),
                    std::invalid_argument);
}
