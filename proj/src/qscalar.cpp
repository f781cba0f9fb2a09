#include "qclust/qscalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qclust {

QScalar::QScalar(long c) {
    if (c != 0) terms_.emplace_back(0, BigInt(c));
}

QScalar QScalar::monomial(int halfExp, const BigInt& c) {
    QScalar s;
    if (c != 0) s.terms_.emplace_back(halfExp, c);
    return s;
}

QScalar QScalar::fromTerms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    QScalar s;
    for (auto& t : terms) {
        if (!s.terms_.empty() && s.terms_.back().first == t.first) {
            s.terms_.back().second += t.second;
            if (s.terms_.back().second == 0) s.terms_.pop_back();
        } else if (t.second != 0) {
            s.terms_.push_back(std::move(t));
        }
    }
    return s;
}

bool QScalar::isUnit() const {
    return terms_.size() == 1 && abs(terms_[0].second) == 1;
}

QScalar QScalar::shifted(int halfUnits) const {
    QScalar s = *this;
    for (auto& t : s.terms_) t.first += halfUnits;
    return s;
}

QScalar QScalar::negated() const {
    QScalar s = *this;
    for (auto& t : s.terms_) t.second = -t.second;
    return s;
}

QScalar QScalar::bar() const {
    QScalar s;
    s.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        s.terms_.emplace_back(-it->first, it->second);
    return s;
}

BigInt QScalar::atOne() const {
    BigInt r = 0;
    for (const auto& t : terms_) r += t.second;
    return r;
}

void QScalar::addScaled(const QScalar& other, int h, int sign) {
    if (other.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first + h)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == terms_.end() || b->first + h < a->first) {
            out.emplace_back(b->first + h, sign > 0 ? b->second : BigInt(-b->second));
            ++b;
        } else {
            BigInt c = a->second;
            if (sign > 0) c += b->second;
            else c -= b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

QScalar& QScalar::operator+=(const QScalar& o) {
    addScaled(o, 0, 1);
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) {
    addScaled(o, 0, -1);
    return *this;
}

void QScalar::addTermProduct(int h, const BigInt& x, const BigInt& y, int sign) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), h,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == h) {
        if (sign > 0) mpz_addmul(it->second.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        else mpz_submul(it->second.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        if (it->second == 0) terms_.erase(it);
        return;
    }
    BigInt c = x * y;
    if (sign < 0) c = -c;
    terms_.emplace(it, h, std::move(c));
}

void QScalar::addProduct(const QScalar& a, const QScalar& b, int h, int sign) {
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) addTermProduct(x.first + y.first + h, x.second, y.second, sign);
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar r;
    r.addProduct(a, b, 0);
    return r;
}

static std::string qPower(int h) {
    if (h % 2 == 0) {
        if (h == 2) return "q";
        return "q^" + std::to_string(h / 2);
    }
    return "q^(" + std::to_string(h) + "/2)";
}

std::string QScalar::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigInt c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        if (it->first == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << qPower(it->first);
        }
    }
    return os.str();
}

}  // namespace qclust
