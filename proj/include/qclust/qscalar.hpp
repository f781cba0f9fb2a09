#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qclust {

using BigInt = mpz_class;

// Element of Z[q^{1/2}, q^{-1/2}]. Exponents count half-units of q.
class QScalar {
public:
    using Term = std::pair<int, BigInt>;

    QScalar() = default;
    QScalar(long c);  // NOLINT: integers embed implicitly
    static QScalar monomial(int halfExp, const BigInt& c = 1);
    static QScalar fromTerms(std::vector<Term> terms);

    bool isZero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    int minExp() const { return terms_.front().first; }
    int maxExp() const { return terms_.back().first; }

    // True if this is c * q^{h/2} with c = +-1.
    bool isUnit() const;

    QScalar shifted(int halfUnits) const;
    QScalar negated() const;
    QScalar bar() const;
    BigInt atOne() const;

    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend bool operator==(const QScalar& a, const QScalar& b) = default;

    // Adds c * q^{h/2} * other into this.
    void addScaled(const QScalar& other, int h, int sign = 1);
    // Adds sign * q^{h/2} * a * b into this without temporaries.
    void addProduct(const QScalar& a, const QScalar& b, int h, int sign = 1);

    std::string toString() const;

private:
    void addTermProduct(int h, const BigInt& x, const BigInt& y, int sign);

    std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

}  // namespace qclust
