#include "qclust/errors.hpp"
#include "qclust/qscalar.hpp"

#include "doctest.h"

#include <random>

using namespace qclust;

namespace {

QScalar randomScalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-6, 6), coeff(-5, 5), count(0, 4);
    QScalar s;
    for (int i = count(rng); i > 0; --i) s += QScalar::monomial(exp(rng), coeff(rng));
    return s;
}

}  // namespace

TEST_SUITE("qscalar") {

TEST_CASE("zero is the empty map and no zero coefficient survives") {
    QScalar z;
    CHECK(z.isZero());
    QScalar a = QScalar::monomial(3, 7);
    QScalar b = QScalar::monomial(3, -7);
    CHECK((a + b).isZero());
    CHECK((a - a).terms().empty());
    CHECK(QScalar::monomial(2, 0).isZero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        QScalar a = randomScalar(rng), b = randomScalar(rng), c = randomScalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QScalar(1) == a);
    }
}

TEST_CASE("bar swaps q and its inverse") {
    QScalar a = QScalar::monomial(1, 1);
    CHECK(a.bar() == QScalar::monomial(-1, 1));
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        QScalar x = randomScalar(rng), y = randomScalar(rng);
        CHECK(x.bar().bar() == x);
        CHECK((x * y).bar() == x.bar() * y.bar());
    }
}

TEST_CASE("shift, units and evaluation at one") {
    QScalar a = QScalar::monomial(2, 3) + QScalar::monomial(-1, -1);
    CHECK(a.shifted(4) == QScalar::monomial(6, 3) + QScalar::monomial(3, -1));
    CHECK(a.atOne() == 2);
    CHECK(QScalar::monomial(5, -1).isUnit());
    CHECK_FALSE(QScalar::monomial(5, 2).isUnit());
    CHECK_FALSE(a.isUnit());
}

TEST_CASE("big coefficients stay exact") {
    QScalar a = QScalar::monomial(0, BigInt("123456789012345678901234567890"));
    QScalar sq = a * a;
    CHECK(sq.terms().front().second == BigInt("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("addProduct accumulates a shifted product") {
    QScalar acc = QScalar::monomial(0, 1);
    QScalar a = QScalar::monomial(1, 2), b = QScalar::monomial(-1, 3);
    acc.addProduct(a, b, 2);
    CHECK(acc == QScalar::monomial(0, 1) + QScalar::monomial(2, 6));
    acc.addProduct(a, b, 2, -1);
    CHECK(acc == QScalar::monomial(0, 1));
}

}
