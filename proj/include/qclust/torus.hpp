#pragma once

#include "qclust/exponent.hpp"
#include "qclust/matrix.hpp"
#include "qclust/qscalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qclust {

// Commutation data of a quantum torus. X^u X^v = q^{(1/2) u^T L v} X^{u+v}.
// L has integer entries; all q-exponents elsewhere count half-units.
class QuantumTorus {
public:
    explicit QuantumTorus(IntMatrix L, std::vector<std::string> labels = {}, std::string id = "");

    std::size_t rank() const { return L_.size(); }
    const IntMatrix& L() const { return L_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& id() const { return id_; }

    // u^T L v, the half-unit exponent of the monomial product twist.
    long twist(const Exponent& u, const Exponent& v) const;
    // L v as a dense vector, for repeated twists against the same v.
    std::vector<long> apply(const Exponent& v) const;

    bool sameAs(const QuantumTorus& o) const { return L_ == o.L_; }

private:
    IntMatrix L_;
    std::vector<std::string> labels_;
    std::string id_;
};

using TorusPtr = std::shared_ptr<const QuantumTorus>;

TorusPtr makeTorus(IntMatrix L, std::vector<std::string> labels = {}, std::string id = "");

class TorusElement {
public:
    using Term = std::pair<Exponent, QScalar>;

    TorusElement() = default;
    explicit TorusElement(TorusPtr torus) : torus_(std::move(torus)) {}

    static TorusElement monomial(TorusPtr torus, Exponent v, QScalar c = 1);
    static TorusElement unit(TorusPtr torus);
    static TorusElement fromTerms(TorusPtr torus, std::vector<Term> terms);

    const TorusPtr& torus() const { return torus_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    bool isMonomial() const { return terms_.size() == 1; }
    const Term& leadingTerm() const { return terms_.back(); }
    const Term& trailingTerm() const { return terms_.front(); }
    const QScalar* coefficient(const Exponent& v) const;

    TorusElement scaled(const QScalar& c) const;
    TorusElement shifted(int halfUnits) const;
    TorusElement negated() const;

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string toString() const;

private:
    TorusPtr torus_;
    std::vector<Term> terms_;  // ascending grlex order, no zero coefficients
};

TorusElement mul(const TorusElement& a, const TorusElement& b);
inline TorusElement operator*(const TorusElement& a, const TorusElement& b) { return mul(a, b); }

// Anti-automorphism q -> q^{-1} fixing every X^v.
TorusElement bar(const TorusElement& a);
bool isBarInvariant(const TorusElement& a);

// Returns (s, q^{s/2} a) with the result bar-invariant; s in half-units.
std::pair<int, TorusElement> barNormalize(const TorusElement& a);

// Half-unit exponent L with b a = q^{L/2} a b, if one exists.
std::optional<int> lambdaExponent(const TorusElement& a, const TorusElement& b);

// q^{Lambda/2} a b with Lambda = lambdaExponent(a, b).
TorusElement odot(const TorusElement& a, const TorusElement& b);

// a^k for k >= 0; negative k allowed when a is a unit monomial.
TorusElement power(const TorusElement& a, int k);
TorusElement inverseMonomial(const TorusElement& a);

// Q with d Q = p.
TorusElement leftDivideExact(const TorusElement& d, const TorusElement& p,
                             std::size_t iterationCap = 1000000);

// Commutative Laurent polynomial with integer coefficients.
class CommPoly {
public:
    using Map = std::map<Exponent, BigInt, GrlexLess>;
    CommPoly() = default;
    explicit CommPoly(std::size_t nvars) : nvars_(nvars) {}
    static CommPoly constant(std::size_t nvars, const BigInt& c);
    static CommPoly variable(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t nvars() const { return nvars_; }
    const Map& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(const Exponent& v, const BigInt& c);
    BigInt evaluateAtOnes() const;
    CommPoly permuted(const std::vector<std::size_t>& perm) const;

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }

    std::string toString() const;

private:
    std::size_t nvars_ = 0;
    Map terms_;
};

// q -> 1 and every exponent at an index in setOne zeroed.
CommPoly specialize(const TorusElement& a, const std::set<std::size_t>& setOne);

}  // namespace qclust
