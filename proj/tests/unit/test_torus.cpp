#include "qclust/errors.hpp"
#include "qclust/glnsatake.hpp"
#include "qclust/torus.hpp"

#include "doctest.h"

#include <random>

using namespace qclust;

namespace {

// GL_2 with the example ordering (1,1),(1,0),(2,0),(2,1).
TorusPtr exampleTorus() { return makeTorus(reorderPair(buildGLnPair(2), {2, 0, 1, 3}).L, {}, "ex2"); }

Exponent ev(std::initializer_list<int> xs) { return Exponent(xs.begin(), xs.end()); }

TorusElement mono(const TorusPtr& t, std::initializer_list<int> v, QScalar c = 1) {
    return TorusElement::monomial(t, ev(v), c);
}

TorusPtr randomTorus(std::mt19937& rng, std::size_t r) {
    IntMatrix L = zeroMatrix(r, r);
    std::uniform_int_distribution<long> d(-3, 3);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            L[i][j] = d(rng);
            L[j][i] = -L[i][j];
        }
    return makeTorus(L);
}

Exponent randomExp(std::mt19937& rng, std::size_t r) {
    std::uniform_int_distribution<int> d(-3, 3);
    Exponent v(r, 0);
    for (auto& x : v) x = d(rng);
    return v;
}

TorusElement randomElement(std::mt19937& rng, const TorusPtr& t, int maxTerms) {
    std::uniform_int_distribution<int> count(1, maxTerms), h(-4, 4), c(-3, 3);
    TorusElement a(t);
    for (int i = count(rng); i > 0; --i) a += TorusElement::monomial(t, randomExp(rng, t->rank()), QScalar::monomial(h(rng), c(rng)));
    return a;
}

}  // namespace

TEST_SUITE("torus") {

TEST_CASE("monomial product in the example torus") {
    auto t = exampleTorus();
    CHECK(t->L()[0][1] == -2);
    CHECK(mono(t, {1, 0, 0, 0}) * mono(t, {0, 1, 0, 0}) == mono(t, {1, 1, 0, 0}, QScalar::monomial(-2)));
    TorusElement p = mono(t, {2, -1, 0, 1}) + mono(t, {0, 0, 1, 0}, 3);
    CHECK(TorusElement::unit(t) * p == p);
}

TEST_CASE("left and right products differ by per-term twists") {
    auto t = exampleTorus();
    TorusElement e1 = mono(t, {1, 0, 0, 0}), e2 = mono(t, {0, 1, 0, 0});
    TorusElement left = (e1 + e2) * e1, right = e1 * (e1 + e2);
    CHECK(left == mono(t, {2, 0, 0, 0}) + mono(t, {1, 1, 0, 0}, QScalar::monomial(2)));
    CHECK(right == mono(t, {2, 0, 0, 0}) + mono(t, {1, 1, 0, 0}, QScalar::monomial(-2)));
}

TEST_CASE("mixed tori are rejected") {
    auto t = exampleTorus();
    auto other = makeTorus(buildGLnPair(2).L);
    CHECK_THROWS_AS(mono(t, {1, 0, 0, 0}) * mono(other, {1, 0, 0, 0}), Error);
}

TEST_CASE("monomial rule and commutation on random exponents") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto t = randomTorus(rng, 5);
        Exponent u = randomExp(rng, 5), v = randomExp(rng, 5);
        long tw = t->twist(u, v);
        auto Xu = TorusElement::monomial(t, u), Xv = TorusElement::monomial(t, v);
        CHECK(Xu * Xv == TorusElement::monomial(t, u + v, QScalar::monomial(static_cast<int>(tw))));
        CHECK(Xu * Xv == (Xv * Xu).shifted(static_cast<int>(2 * tw)));
    }
}

TEST_CASE("bar fixes monomials and reverses products") {
    auto t = exampleTorus();
    CHECK(bar(mono(t, {0, 1, 0, 0}, QScalar::monomial(1))) == mono(t, {0, 1, 0, 0}, QScalar::monomial(-1)));
    TorusElement e1 = mono(t, {1, 0, 0, 0}), e2 = mono(t, {0, 1, 0, 0});
    CHECK(bar(e1 * e2) == e2 * e1);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = randomTorus(rng, 4);
        TorusElement a = randomElement(rng, r, 4), b = randomElement(rng, r, 4);
        CHECK(bar(bar(a)) == a);
        CHECK(bar(a * b) == bar(b) * bar(a));
    }
}

TEST_CASE("barNormalize") {
    auto t = exampleTorus();
    auto [s, x] = barNormalize(mono(t, {1, 1, 0, 0}, QScalar::monomial(-2)));
    CHECK(s == 2);  // half-units, i.e. q^1
    CHECK(x == mono(t, {1, 1, 0, 0}));
    auto [s0, x0] = barNormalize(mono(t, {0, 0, 1, -1}));
    CHECK(s0 == 0);
    CHECK(x0 == mono(t, {0, 0, 1, -1}));
    try {
        barNormalize(mono(t, {1, 0, 0, 0}) + mono(t, {0, 1, 0, 0}, QScalar::monomial(2)));
        FAIL("expected NotBarProportional");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotBarProportional");
    }
}

TEST_CASE("lambdaExponent on monomials and on a non q-commuting pair") {
    auto t = exampleTorus();
    TorusElement e1 = mono(t, {1, 0, 0, 0}), e2 = mono(t, {0, 1, 0, 0});
    CHECK(lambdaExponent(e1, e2) == 4);  // Lambda = 2
    CHECK(lambdaExponent(e1, e1) == 0);
    QuantumSeed s = initialSeed(reorderPair(buildGLnPair(2), {2, 0, 1, 3}));
    QuantumSeed m = mutateSeed(s, 0);
    CHECK_FALSE(lambdaExponent(s.vars[0], m.vars[0]).has_value());
}

TEST_CASE("lambdaExponent is additive over q-commuting products") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        auto r = randomTorus(rng, 4);
        auto a = TorusElement::monomial(r, randomExp(rng, 4));
        auto b = TorusElement::monomial(r, randomExp(rng, 4));
        auto c = TorusElement::monomial(r, randomExp(rng, 4));
        CHECK(*lambdaExponent(a, b * c) == *lambdaExponent(a, b) + *lambdaExponent(a, c));
    }
}

TEST_CASE("odot") {
    auto t = exampleTorus();
    TorusElement a = mono(t, {1, 0, -1, 2}), b = mono(t, {0, 3, 1, 0});
    CHECK(odot(a, b) == mono(t, {1, 3, 0, 2}));
    TorusElement x11 = mono(t, {1, 0, 0, 0}), inv20 = mono(t, {0, 0, -1, 0});
    CHECK(lambdaExponent(x11, inv20) == -4);  // Lambda = -2
    CHECK(odot(x11, inv20) == (x11 * inv20).shifted(-2));
    TorusElement p = mono(t, {1, 0, 0, 0}) + mono(t, {0, 0, 2, 1});
    CHECK(odot(p, TorusElement::unit(t)) == p);
    CHECK_NOTHROW(odot(p, mono(t, {0, 1, 0, 0})));  // both terms pair to -2 with X_2
    CHECK_THROWS_AS(odot(p, mono(t, {0, 0, 0, 1})), Error);
}

TEST_CASE("odot is symmetric on bar-invariant q-commuting pairs") {
    QuantumSeed s = runSequence(initialSeed(buildGLnPair(3)), {0, 3, 1});
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) CHECK(odot(s.vars[i], s.vars[j]) == odot(s.vars[j], s.vars[i]));
}

TEST_CASE("leftDivideExact") {
    auto t = exampleTorus();
    CHECK(leftDivideExact(mono(t, {1, 0, 0, 0}), mono(t, {1, 1, 0, 0}, QScalar::monomial(-2))) == mono(t, {0, 1, 0, 0}));
    QuantumSeed s = initialSeed(reorderPair(buildGLnPair(2), {2, 0, 1, 3}));
    TorusElement x = s.vars[0], xp = mutateSeed(s, 0).vars[0];
    CHECK(leftDivideExact(x, x * xp) == xp);
    try {
        leftDivideExact(mono(t, {1, 0, 0, 0}) + mono(t, {0, 1, 0, 0}), mono(t, {1, 0, 0, 0}), 2000);
        FAIL("expected ExactDivisionFailed");
    } catch (const Error& e) {
        CHECK(e.kind() == "ExactDivisionFailed");
    }
}

TEST_CASE("leftDivideExact inverts multiplication on random inputs") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto r = randomTorus(rng, 4);
        // Leading coefficient must be a unit.
        TorusElement d = randomElement(rng, r, 3);
        d += TorusElement::monomial(r, Exponent{4, 4, 4, 4}, QScalar::monomial(1, -1));
        TorusElement p = randomElement(rng, r, 20);
        CHECK(leftDivideExact(d, d * p) == p);
    }
}

TEST_CASE("specialize") {
    auto t = makeTorus(zeroMatrix(3, 3));
    CommPoly s = specialize(TorusElement::monomial(t, ev({1, 0, 2}), QScalar::monomial(3)), {2});
    CHECK(s == CommPoly::variable(3, 0));
    CHECK(specialize(TorusElement(t), {}).isZero());
    // The GL_2 mutated variable with frozen dropped: x1^-1 + x1^-1 x2^2 in example order.
    QuantumSeed s2 = initialSeed(reorderPair(buildGLnPair(2), {2, 0, 1, 3}));
    CommPoly sp = specialize(mutateSeed(s2, 0).vars[0], {2, 3});
    CommPoly want(4);
    want.addTerm(ev({-1, 0, 0, 0}), 1);
    want.addTerm(ev({-1, 2, 0, 0}), 1);
    CHECK(sp == want);
}

}
