#include "qclust/characters.hpp"
#include "qclust/suites.hpp"

#include "doctest.h"

#include <random>

using namespace qclust;

namespace {

// Fill the k x l rectangle cell by cell; rows weakly increase, columns strictly increase.
void fillTableaux(int n, int k, int l, std::vector<int>& cells, std::size_t pos, SymPoly& acc) {
    if (pos == cells.size()) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int c : cells) ++e[static_cast<std::size_t>(c - 1)];
        acc += SymPoly::monomial(static_cast<std::size_t>(n), e);
        return;
    }
    int r = static_cast<int>(pos) / l, c = static_cast<int>(pos) % l;
    int lo = 1;
    if (c > 0) lo = std::max(lo, cells[pos - 1]);
    if (r > 0) lo = std::max(lo, cells[pos - static_cast<std::size_t>(l)] + 1);
    for (int v = lo; v <= n; ++v) {
        cells[pos] = v;
        fillTableaux(n, k, l, cells, pos + 1, acc);
    }
}

SymPoly tableauSchur(int n, int k, int l) {
    SymPoly acc(static_cast<std::size_t>(n));
    if (k == 0 || l == 0) return SymPoly::constant(static_cast<std::size_t>(n), 1);
    std::vector<int> cells(static_cast<std::size_t>(k * l), 0);
    fillTableaux(n, k, l, cells, 0, acc);
    return acc;
}

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("small Schur polynomials") {
    CHECK(schurRect(2, 1, 1) == SymPoly::monomial(2, {1, 0}) + SymPoly::monomial(2, {0, 1}));
    CHECK(schurRect(4, 2, 2).evaluateAtOnes() == 20);
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) CHECK(schurRect(n, k, 0) == SymPoly::constant(static_cast<std::size_t>(n), 1));
    for (int l = 0; l <= 6; ++l) CHECK(dimensionOf(2, 1, l) == l + 1);
}

TEST_CASE("dimension agrees with the hook-content formula") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= 4; ++l) CHECK(dimensionOf(n, k, l) == hookContentDimension(n, k, l));
}

TEST_CASE("Schur polynomials are symmetric") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        int n = std::uniform_int_distribution<int>(2, 5)(rng);
        int k = std::uniform_int_distribution<int>(1, n)(rng);
        int l = std::uniform_int_distribution<int>(1, 3)(rng);
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(n) - 1)(rng);
        std::size_t j = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(n) - 1)(rng);
        SymPoly s = schurRect(n, k, l);
        CHECK(s.swapped(i, j) == s);
    }
}

TEST_CASE("Jacobi-Trudi matches semistandard tableaux") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= 3; ++l) CHECK(schurRect(n, k, l) == tableauSchur(n, k, l));
}

TEST_CASE("Q-system") {
    CHECK(qSystemCheck(2, 1, 1).ok);
    CHECK(qSystemCheck(3, 1, 2).ok);
    CHECK(qSystemChecks(5, 4).ok());
}

TEST_CASE("classical cluster Q-system") {
    GLnContext ctx(2);
    CHECK(classicalClusterQSystem(ctx, 1, 1).ok);
    CHECK(classicalQSystemChecks(4, 3).ok());
}

}
