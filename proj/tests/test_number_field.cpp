#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knorm/number_field.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace knorm;
using test::frac;
using test::poly;

TEST_CASE("make_number_field examples") {
    auto Qi = make_number_field(poly({1, 0, 1}), "Q(i)");
    CHECK(Qi.degree() == 2);
    CHECK(real_places(Qi).empty());
    CHECK(Qi.status() == IrreducibilityStatus::verified);

    CHECK_THROWS_AS(make_number_field(poly({-1, 0, 1})), precondition_error); // roots +-1
    CHECK_THROWS_AS(make_number_field(poly({0, 0, 1})), precondition_error);  // x^2
    CHECK_THROWS_AS(make_number_field(poly({-2, 0, 2})), precondition_error); // not monic
    CHECK_THROWS_AS(make_number_field(poly({5})), precondition_error);        // degree 0

    auto Q = make_number_field(poly({0, 1}), "Q");
    CHECK(Q.degree() == 1);
    CHECK(real_places(Q).size() == 1);
    CHECK(Q.status() == IrreducibilityStatus::verified);
}

TEST_CASE("rational-root rejection catches non-integer roots") {
    // (x - 1/2)(x - 1/3) = x^2 - 5/6 x + 1/6
    CHECK_THROWS_AS(
        make_number_field(Polynomial<Rational>(
            std::vector<Rational>{frac(1, 6), frac(-5, 6), frac(1)})),
        precondition_error);
    // (x - 1/2)(x^2 + 1): one rational root among complex ones
    auto p = Polynomial<Rational>(std::vector<Rational>{frac(-1, 2), frac(1)}) * poly({1, 0, 1});
    CHECK_THROWS_AS(make_number_field(p), precondition_error);
}

TEST_CASE("irreducibility probing: verified for genuinely irreducible polynomials") {
    CHECK(make_number_field(poly({-2, 0, 1})).status() == IrreducibilityStatus::verified);
    CHECK(make_number_field(poly({-2, 0, 0, 1})).status() == IrreducibilityStatus::verified);
    CHECK(make_number_field(poly({-2, 0, 0, 0, 0, 1})).status() ==
          IrreducibilityStatus::verified);
    CHECK(make_number_field(poly({1, -4, 0, 1})).status() == IrreducibilityStatus::verified);
    CHECK(make_number_field(poly({-10, 0, 1})).status() == IrreducibilityStatus::verified);
}

TEST_CASE("irreducibility probing: asserted (with warning) when undecided") {
    // x^4 - 4 = (x^2-2)(x^2+2): squarefree, no rational roots, reducible,
    // so no modular pattern can rule factors out.
    auto F = make_number_field(poly({-4, 0, 0, 0, 1}), "bogus");
    CHECK(F.status() == IrreducibilityStatus::asserted);
    CHECK(!F.warning().empty());

    // ...and the inconsistency detector catches the lie: x^2 - 2 is a
    // nonzero element that vanishes at both real places (the roots of
    // x^4 - 4 are +-sqrt(2)).
    auto a = F.element({frac(-2), frac(0), frac(1)});
    CHECK(!a.is_zero());
    auto places = real_places(F);
    REQUIRE(places.size() == 2);
    CHECK_THROWS_AS(sign_at_place(a, places[0]), inconsistency_error);
    CHECK_THROWS_AS(a.inverse(), inconsistency_error);
}

TEST_CASE("element arithmetic in Q(sqrt2)") {
    auto F = make_number_field(poly({-2, 0, 1}), "Q(sqrt2)");
    auto x = F.generator();
    CHECK(x * x == F.from_rational(frac(2)));

    // inverse of x is x/2: multiply-back check
    auto inv = x.inverse();
    CHECK(inv == F.element({frac(0), frac(1, 2)}));
    CHECK(x * inv == F.one());

    CHECK(F.one().inverse() == F.one());
    CHECK_THROWS_AS(F.zero().inverse(), precondition_error);

    // (1 + x)(1 - x) = 1 - x^2 = -1
    CHECK(F.element({frac(1), frac(1)}) * F.element({frac(1), frac(-1)}) ==
          F.from_rational(frac(-1)));

    // eval of the minimal polynomial at the generator is zero
    CHECK(eval_at(F.min_poly(), x).is_zero());
}

TEST_CASE("elements of different fields do not mix") {
    auto F = make_number_field(poly({-2, 0, 1}));
    auto G = make_number_field(poly({-2, 0, 1}));
    CHECK(!F.same_as(G)); // field identity is handle identity
    CHECK_THROWS_AS(F.one() + G.one(), precondition_error);
}

TEST_CASE("real_places ordering and signature examples") {
    auto F = make_number_field(poly({-2, 0, 1}), "Q(sqrt2)");
    auto places = real_places(F);
    REQUIRE(places.size() == 2);
    CHECK(places[0].index == 0);
    CHECK(places[1].index == 1);
    CHECK(places[0].box.high < places[1].box.low);
    CHECK(places[0].box.high <= frac(0)); // -sqrt(2) first
    CHECK(signature(F) == std::pair<int, int>(2, 0));

    CHECK(signature(make_number_field(poly({-2, 0, 0, 1}))) == std::pair<int, int>(1, 1));
    CHECK(signature(make_number_field(poly({1, 0, 1}))) == std::pair<int, int>(0, 1));
    CHECK(signature(make_number_field(poly({0, 1}))) == std::pair<int, int>(1, 0));
}

TEST_CASE("sign_at_place examples") {
    auto F = make_number_field(poly({-2, 0, 1}), "Q(sqrt2)");
    auto x = F.generator();
    auto places = real_places(F);
    CHECK(sign_at_place(x, places[1]) == 1);
    CHECK(sign_at_place(x, places[0]) == -1);
    CHECK(sign_at_place(F.from_rational(frac(-3)), places[0]) == -1);
    CHECK(sign_at_place(F.from_rational(frac(-3)), places[1]) == -1);
    CHECK(sign_at_place(F.zero(), places[0]) == 0);

    auto G = make_number_field(poly({-2, 0, 1}));
    CHECK_THROWS_AS(sign_at_place(G.one(), places[0]), precondition_error);
}

TEST_CASE("sign_at_place agrees with the bisection oracle in Q(sqrt2)") {
    auto F = make_number_field(poly({-2, 0, 1}), "Q(sqrt2)");
    auto places = real_places(F);
    test::Rng rng(321);
    for (int i = 0; i < 200; ++i) {
        const Rational w = test::random_rational(rng);
        const Rational u = test::random_rational(rng);
        auto e = F.element({w, u});
        if (e.is_zero()) continue;
        CHECK(sign_at_place(e, places[0]) == test::sign_linear_in_sqrt(2, u, w, false));
        CHECK(sign_at_place(e, places[1]) == test::sign_linear_in_sqrt(2, u, w, true));
    }
}

TEST_CASE("sign_at_place in a cubic field via the cube-compare oracle") {
    for (long m : {2L, 3L, 5L}) {
        auto F = make_number_field(poly({-m, 0, 0, 1}));
        auto places = real_places(F);
        REQUIRE(places.size() == 1);
        auto x = F.generator();
        for (long num = -9; num <= 9; num += 3) {
            const Rational c(num, 4);
            // sign of cbrt(m) - c, exact via monotone cube compare
            auto e = x - F.from_rational(c);
            CHECK(sign_at_place(e, places[0]) == test::sign_cbrt_minus(m, c));
        }
    }
}

TEST_CASE("sign_at_place is multiplicative") {
    test::Rng rng(888);
    for (auto mp : {poly({-2, 0, 1}), poly({-2, 0, 0, 1})}) {
        auto F = make_number_field(mp);
        auto places = real_places(F);
        for (int i = 0; i < 150; ++i) {
            auto a = test::random_nonzero_element(rng, F);
            auto b = test::random_nonzero_element(rng, F);
            for (const auto& v : places)
                CHECK(sign_at_place(a * b, v) == sign_at_place(a, v) * sign_at_place(b, v));
        }
    }
}

TEST_CASE("field axioms on random elements") {
    test::Rng rng(1212);
    auto F = make_number_field(poly({1, -4, 0, 1})); // totally real cubic
    for (int i = 0; i < 80; ++i) {
        auto a = test::random_nonzero_element(rng, F);
        auto b = test::random_nonzero_element(rng, F);
        auto c = test::random_nonzero_element(rng, F);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * a.inverse() == F.one());
        CHECK((a / b) * b == a);
    }
}

TEST_CASE("r1 + 2*r2 = degree on random fields") {
    test::Rng rng(2023);
    int built = 0;
    while (built < 150) {
        auto p = test::random_poly(rng, 5, -6, 6);
        if (p.is_zero() || *p.degree() < 1) continue;
        // force monic
        std::vector<Rational> c = p.coeffs();
        c.back() = frac(1);
        try {
            auto F = make_number_field(Polynomial<Rational>(c));
            auto [r1, r2] = signature(F);
            CHECK(r1 + 2 * r2 == static_cast<int>(F.degree()));
            ++built;
        } catch (const precondition_error&) {
            // reducible or non-squarefree draw; try another
        }
    }
}

TEST_CASE("rational dominance: sign of a + t is sign of t for huge t") {
    test::Rng rng(777);
    auto F = make_number_field(poly({-2, 0, 1}));
    auto places = real_places(F);
    for (int i = 0; i < 60; ++i) {
        auto a = test::random_nonzero_element(rng, F);
        // |sigma(a)| <= sum |coeff_i| * B^i with B the root bound
        const Rational B = cauchy_root_bound(F.min_poly());
        Rational bound(0);
        Rational pow(1);
        for (const Rational& coeff : a.coeffs()) {
            bound += coeff.abs() * pow;
            pow = pow * B;
        }
        const Rational t = bound + frac(1);
        for (const auto& v : places) {
            CHECK(sign_at_place(a + F.from_rational(t), v) == 1);
            CHECK(sign_at_place(a - F.from_rational(t), v) == -1);
        }
    }
}

TEST_CASE("element_with_signs examples") {
    auto F = make_number_field(poly({-2, 0, 1}), "Q(sqrt2)");
    auto places = real_places(F);

    auto e = element_with_signs(F, {1, -1});
    CHECK(sign_at_place(e, places[0]) == 1);
    CHECK(sign_at_place(e, places[1]) == -1);

    CHECK(element_with_signs(F, {1, 1}) == F.one()); // constant interpolant 1

    auto Qi = make_number_field(poly({1, 0, 1}));
    CHECK(element_with_signs(Qi, {}) == Qi.one());

    CHECK_THROWS_AS(element_with_signs(F, {1}), precondition_error);
    CHECK_THROWS_AS(element_with_signs(F, {1, 0}), precondition_error);
}

TEST_CASE("element_with_signs hits every sign pattern (r1 <= 3)") {
    for (auto mp : {poly({0, 1}), poly({-2, 0, 1}), poly({1, -4, 0, 1})}) {
        auto F = make_number_field(mp);
        auto places = real_places(F);
        const std::size_t r1 = places.size();
        REQUIRE(r1 >= 1);
        REQUIRE(r1 <= 3);
        for (std::size_t mask = 0; mask < (std::size_t(1) << r1); ++mask) {
            std::vector<int> targets;
            for (std::size_t i = 0; i < r1; ++i)
                targets.push_back(mask & (std::size_t(1) << i) ? 1 : -1);
            auto e = element_with_signs(F, targets);
            for (std::size_t i = 0; i < r1; ++i)
                CHECK(sign_at_place(e, places[i]) == targets[i]);
        }
    }
}
