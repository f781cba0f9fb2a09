#include "qclust/errors.hpp"
#include "qclust/exchange.hpp"
#include "qclust/glnsatake.hpp"

#include "doctest.h"

#include <random>

using namespace qclust;

namespace {

CompatiblePair examplePair() { return reorderPair(buildGLnPair(2), {2, 0, 1, 3}); }

ExchangeData randomSkew(std::mt19937& rng, std::size_t r) {
    IntMatrix B = zeroMatrix(r, r);
    std::uniform_int_distribution<long> d(-2, 2);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            B[i][j] = d(rng);
            B[j][i] = -B[i][j];
        }
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < r; ++i) ids.push_back(std::to_string(i));
    return ExchangeData::make(ids, std::vector<bool>(r, false), B);
}

}  // namespace

TEST_SUITE("exchange") {

TEST_CASE("mutateB on the GL_2 example") {
    CompatiblePair p = examplePair();
    CHECK(p.B.B == IntMatrix{{0, 2}, {-2, 0}, {1, 0}, {0, -1}});
    CHECK(mutateB(p.B, 0).B == IntMatrix{{0, -2}, {2, 0}, {-1, 2}, {0, -1}});
}

TEST_CASE("mutateB is an involution on B3") {
    CompatiblePair p = buildGLnPair(3);
    for (std::size_t k : p.B.exchangeable()) CHECK(mutateB(mutateB(p.B, k), k) == p.B);
}

TEST_CASE("mutations at unconnected vertices commute") {
    CompatiblePair p = buildGLnPair(3);
    std::size_t a = 0, b = 1;  // (1,0), (2,0)
    REQUIRE(p.B.entry(a, b) == 0);
    CHECK(mutateB(mutateB(p.B, a), b).B == mutateB(mutateB(p.B, b), a).B);
}

TEST_CASE("frozen vertices cannot be mutated") {
    CompatiblePair p = buildGLnPair(2);
    try {
        mutateB(p.B, 1);
        FAIL("expected FrozenMutation");
    } catch (const Error& e) {
        CHECK(e.kind() == "FrozenMutation");
    }
}

TEST_CASE("mutateL on the GL_2 example and involution") {
    CompatiblePair p = examplePair();
    CHECK(mutateL(p.L, p.B, 0) == IntMatrix{{0, 2, 2, 4}, {-2, 0, 0, 2}, {-2, 0, 0, 4}, {-4, -2, -4, 0}});
    CompatiblePair q = mutatePair(p, 0);
    CHECK(mutatePair(q, 0).L == p.L);
    CHECK(checkCompatible(q.L, q.B) == checkCompatible(p.L, p.B));
}

TEST_CASE("E and F factor the mutation") {
    CompatiblePair p = buildGLnPair(3);
    for (std::size_t k : p.B.exchangeable()) {
        IntMatrix E = mutationE(p.B, k), F = mutationF(p.B, k);
        CHECK(multiply(multiply(E, p.B.B), F) == mutateB(p.B, k).B);
        CHECK(multiply(multiply(transpose(E), p.L), E) == mutateL(p.L, p.B, k));
    }
}

TEST_CASE("checkCompatible") {
    CHECK(checkCompatible(buildGLnPair(3).L, buildGLnPair(3).B) == std::vector<long>{2, 2, 2, 2});
    CHECK(checkCompatible(examplePair().L, examplePair().B) == std::vector<long>{2, 2});
    try {
        checkCompatible(zeroMatrix(4, 4), buildGLnPair(2).B);
        FAIL("expected NotCompatible");
    } catch (const Error& e) {
        CHECK(e.kind() == "NotCompatible");
    }
}

TEST_CASE("compatibility is invariant along random walks") {
    std::mt19937 rng(17);
    CompatiblePair p = buildGLnPair(4);
    IntMatrix LB = multiply(p.L, p.B.B);
    auto ex = p.B.exchangeable();
    for (int i = 0; i < 60; ++i) {
        p = mutatePair(p, ex[std::uniform_int_distribution<std::size_t>(0, ex.size() - 1)(rng)]);
        CHECK(multiply(p.L, p.B.B) == LB);
    }
}

TEST_CASE("skew-symmetry survives mutation of random quivers") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t r = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        ExchangeData b = randomSkew(rng, r);
        std::size_t k = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
        ExchangeData m = mutateB(b, k);
        CHECK(isSkewSymmetric(m.principalPart()));
        CHECK(skewSymmetrizer(m.principalPart()).has_value());
    }
}

TEST_CASE("quiver view round trip") {
    ExchangeData b3 = buildGLnPair(3).B;
    CHECK(fromQuiver(toQuiver(b3)) == b3);
    Quiver q = toQuiver(examplePair().B);
    // Double arrow between (1,1) and (1,0): b_{(1,1),(1,0)} = 2 means two arrows (1,0) -> (1,1).
    CHECK(q.arrows.at({1, 0}) == 2);
    for (const auto& [e, m] : q.arrows) CHECK_FALSE((q.frozen[e.first] && q.frozen[e.second]));
    ExchangeData empty = ExchangeData::make({"a", "b"}, {false, false}, zeroMatrix(2, 2));
    CHECK(toQuiver(empty).arrows.empty());
    CHECK(fromQuiver(toQuiver(empty)).B == zeroMatrix(2, 2));
}

TEST_CASE("oriented 3-cycles") {
    ExchangeData b2 = buildGLnPair(2).B;
    for (std::size_t k : b2.exchangeable()) CHECK_FALSE(hasOriented3CycleAt(b2, k));
    ExchangeData b3 = buildGLnPair(3).B;
    // The unfrozen B3 quiver is the oriented 4-cycle (1,0) -> (1,1) -> (2,0) -> (2,1) -> (1,0).
    for (std::size_t k : b3.exchangeable()) CHECK_FALSE(hasOriented3CycleAt(b3, k));
    CHECK(hasOriented3CycleAt(mutateB(b3, 0), 0));
    CHECK(hasOriented3CycleAt(mutateB(b3, 0), 3));
    ExchangeData tri = ExchangeData::make({"a", "b", "c"}, {false, false, false},
                                          {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
    CHECK(hasOriented3CycleAt(tri, 0));
}

TEST_CASE("DOT export boxes frozen vertices") {
    std::string dot = toDot(buildGLnPair(2).B);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("shape=box") != std::string::npos);
}

}
