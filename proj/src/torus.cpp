#include "qclust/torus.hpp"

#include "qclust/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace qclust {

QuantumTorus::QuantumTorus(IntMatrix L, std::vector<std::string> labels, std::string id)
    : L_(std::move(L)), labels_(std::move(labels)), id_(std::move(id)) {
    if (!isSkewSymmetric(L_)) throw makeError("NotSkewSymmetric", "torus matrix " + formatMatrix(L_));
}

long QuantumTorus::twist(const Exponent& u, const Exponent& v) const {
    long s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        long row = 0;
        for (std::size_t j = 0; j < v.size(); ++j) row += L_[i][j] * v[j];
        s += u[i] * row;
    }
    return s;
}

std::vector<long> QuantumTorus::apply(const Exponent& v) const {
    std::vector<long> r(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) r[i] += L_[i][j] * v[j];
    return r;
}

TorusPtr makeTorus(IntMatrix L, std::vector<std::string> labels, std::string id) {
    return std::make_shared<const QuantumTorus>(std::move(L), std::move(labels), std::move(id));
}

static long dot(const Exponent& u, const std::vector<long>& w) {
    long s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * w[i];
    return s;
}

static void requireSameTorus(const TorusElement& a, const TorusElement& b) {
    if (a.torus() == b.torus()) return;
    if (!a.torus() || !b.torus() || !a.torus()->sameAs(*b.torus()))
        throw makeError("TorusMismatch", "operands live in different quantum tori");
}

TorusElement TorusElement::monomial(TorusPtr torus, Exponent v, QScalar c) {
    if (v.size() != torus->rank()) throw makeError("RankMismatch", "exponent length");
    TorusElement e(std::move(torus));
    if (!c.isZero()) e.terms_.emplace_back(std::move(v), std::move(c));
    return e;
}

TorusElement TorusElement::unit(TorusPtr torus) {
    Exponent zero(torus->rank(), 0);
    return monomial(std::move(torus), std::move(zero), 1);
}

TorusElement TorusElement::fromTerms(TorusPtr torus, std::vector<Term> terms) {
    TorusElement e(std::move(torus));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return GrlexLess{}(a.first, b.first); });
    for (auto& t : terms) {
        if (t.first.size() != e.torus_->rank()) throw makeError("RankMismatch", "exponent length");
        if (!e.terms_.empty() && e.terms_.back().first == t.first) {
            e.terms_.back().second += t.second;
            if (e.terms_.back().second.isZero()) e.terms_.pop_back();
        } else if (!t.second.isZero()) {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

const QScalar* TorusElement::coefficient(const Exponent& v) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v, [](const Term& t, const Exponent& x) {
        return GrlexLess{}(t.first, x);
    });
    if (it != terms_.end() && it->first == v) return &it->second;
    return nullptr;
}

TorusElement TorusElement::scaled(const QScalar& c) const {
    TorusElement r(torus_);
    if (c.isZero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [v, x] : terms_) r.terms_.emplace_back(v, x * c);
    return r;
}

TorusElement TorusElement::shifted(int halfUnits) const {
    TorusElement r = *this;
    for (auto& t : r.terms_) t.second = t.second.shifted(halfUnits);
    return r;
}

TorusElement TorusElement::negated() const {
    TorusElement r = *this;
    for (auto& t : r.terms_) t.second = t.second.negated();
    return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    if (o.terms_.empty()) return *this;
    if (!torus_) torus_ = o.torus_;
    requireSameTorus(*this, o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    GrlexLess less;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && less(terms_[i].first, o.terms_[j].first))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || less(o.terms_[j].first, terms_[i].first)) {
            out.push_back(o.terms_[j++]);
        } else {
            QScalar c = std::move(terms_[i].second);
            c += o.terms_[j].second;
            if (!c.isZero()) out.emplace_back(std::move(terms_[i].first), std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) { return *this += o.negated(); }

std::string TorusElement::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (it != terms_.rbegin()) os << " + ";
        os << "(" << it->second.toString() << ")X^" << formatExponent(it->first);
    }
    return os.str();
}

TorusElement mul(const TorusElement& a, const TorusElement& b) {
    if (a.isZero()) return TorusElement(b.torus() ? b.torus() : a.torus());
    if (b.isZero()) return TorusElement(a.torus());
    requireSameTorus(a, b);
    const QuantumTorus& T = *a.torus();
    std::vector<std::vector<long>> Lv;
    Lv.reserve(b.size());
    for (const auto& [v, c] : b.terms()) Lv.push_back(T.apply(v));

    std::unordered_map<Exponent, QScalar, ExponentHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [u, cu] : a.terms()) {
        std::size_t k = 0;
        for (const auto& [v, cv] : b.terms()) {
            int tw = static_cast<int>(dot(u, Lv[k++]));
            Exponent w = u + v;
            acc[w].addProduct(cu, cv, tw);
        }
    }
    std::vector<TorusElement::Term> terms;
    terms.reserve(acc.size());
    for (auto& [w, c] : acc)
        if (!c.isZero()) terms.emplace_back(w, std::move(c));
    return TorusElement::fromTerms(a.torus(), std::move(terms));
}

TorusElement bar(const TorusElement& a) {
    std::vector<TorusElement::Term> terms;
    terms.reserve(a.size());
    for (const auto& [v, c] : a.terms()) terms.emplace_back(v, c.bar());
    return TorusElement::fromTerms(a.torus(), std::move(terms));
}

bool isBarInvariant(const TorusElement& a) {
    for (const auto& [v, c] : a.terms())
        if (!(c.bar() == c)) return false;
    return true;
}

std::pair<int, TorusElement> barNormalize(const TorusElement& a) {
    if (a.isZero()) return {0, a};
    std::optional<int> shift;
    for (const auto& [v, c] : a.terms()) {
        int m = c.minExp(), M = c.maxExp();
        if ((m + M) % 2 != 0)
            throw makeError("NotBarProportional", "coefficient of X^" + formatExponent(v) +
                                                      " has no symmetric shift");
        int s = -(m + M) / 2;
        if (shift && *shift != s)
            throw makeError("NotBarProportional", "terms require different shifts");
        shift = s;
    }
    TorusElement r = a.shifted(*shift);
    if (!isBarInvariant(r)) throw makeError("NotBarProportional", "shifted element is not bar-invariant");
    return {*shift, r};
}

std::optional<int> lambdaExponent(const TorusElement& a, const TorusElement& b) {
    if (a.isZero() || b.isZero()) return 0;
    requireSameTorus(a, b);
    const QuantumTorus& T = *a.torus();
    auto constantTwist = [&](const TorusElement& many, const Exponent& w, int sign) -> std::optional<int> {
        std::vector<long> Lw = T.apply(w);
        std::optional<long> val;
        for (const auto& [u, c] : many.terms()) {
            long t = dot(u, Lw);
            if (val && *val != t) return std::nullopt;
            val = t;
        }
        return static_cast<int>(sign * 2 * *val);
    };
    // b a = q^{Lambda/2} a b; on monomials Lambda = 2 v^T L u for a = X^u, b = X^v.
    if (b.isMonomial()) return constantTwist(a, b.leadingTerm().first, -1);
    if (a.isMonomial()) return constantTwist(b, a.leadingTerm().first, 1);

    TorusElement ab = mul(a, b), ba = mul(b, a);
    if (ab.isZero() || ba.isZero()) return ab.isZero() && ba.isZero() ? std::optional<int>(0) : std::nullopt;
    if (ab.size() != ba.size()) return std::nullopt;
    const auto& [m1, c1] = ab.leadingTerm();
    const auto& [m2, c2] = ba.leadingTerm();
    if (!(m1 == m2)) return std::nullopt;
    int s = c2.minExp() - c1.minExp();
    if (!(ab.shifted(s) == ba)) return std::nullopt;
    return s;
}

TorusElement odot(const TorusElement& a, const TorusElement& b) {
    auto lam = lambdaExponent(a, b);
    if (!lam) throw makeError("NotQCommuting", "operands do not q-commute");
    if (*lam % 2 != 0) throw makeError("NotQCommuting", "commutation exponent needs q^{1/4}");
    return mul(a, b).shifted(*lam / 2);
}

TorusElement inverseMonomial(const TorusElement& a) {
    if (!a.isMonomial() || !a.leadingTerm().second.isUnit())
        throw makeError("NotInvertible", "only unit monomials are invertible");
    const auto& [v, c] = a.leadingTerm();
    const auto& t = c.terms()[0];
    // (c X^v)^{-1} = c^{-1} X^{-v} since X^v X^{-v} = 1.
    return TorusElement::monomial(a.torus(), scaled(v, -1), QScalar::monomial(-t.first, t.second));
}

TorusElement power(const TorusElement& a, int k) {
    if (k < 0) return power(inverseMonomial(a), -k);
    if (a.isMonomial()) {
        const auto& [v, c] = a.leadingTerm();
        QScalar ck = 1;
        for (int i = 0; i < k; ++i) ck = ck * c;
        return TorusElement::monomial(a.torus(), scaled(v, k), ck);
    }
    TorusElement r = TorusElement::unit(a.torus());
    TorusElement base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return r;
}

TorusElement leftDivideExact(const TorusElement& d, const TorusElement& p, std::size_t iterationCap) {
    if (d.isZero()) throw makeError("ExactDivisionFailed", "division by zero");
    if (p.isZero()) return TorusElement(d.torus());
    requireSameTorus(d, p);
    const QuantumTorus& T = *d.torus();
    const auto& [ld, lc] = d.leadingTerm();
    if (!lc.isUnit()) throw makeError("ExactDivisionFailed", "divisor leading coefficient is not a unit");
    const int lcExp = lc.terms()[0].first;
    const BigInt lcSign = lc.terms()[0].second;
    // In grlex every quotient term w satisfies TT(p)-TT(d) <= w <= LT(p)-LT(d).
    const Exponent lowest = p.trailingTerm().first - d.trailingTerm().first;
    GrlexLess less;

    std::map<Exponent, QScalar, GrlexLess> rem;
    for (const auto& t : p.terms()) rem.emplace(t.first, t.second);
    std::vector<std::vector<long>> dRows;
    std::vector<TorusElement::Term> quotient;
    std::size_t steps = 0;
    while (!rem.empty()) {
        if (++steps > iterationCap) throw makeError("ExactDivisionFailed", "iteration bound exceeded");
        auto top = std::prev(rem.end());
        Exponent w = top->first - ld;
        if (less(w, lowest)) throw makeError("ExactDivisionFailed", "remainder cannot be cancelled");
        std::vector<long> Lw = T.apply(w);
        // lc X^ld * c X^w = lc c q^{tw/2} X^{ld+w}
        int tw = static_cast<int>(dot(ld, Lw));
        QScalar c = top->second.shifted(-lcExp - tw);
        if (lcSign < 0) c = c.negated();
        for (const auto& [e, ce] : d.terms()) {
            int t = static_cast<int>(dot(e, Lw));
            Exponent m = e + w;
            auto it = rem.try_emplace(std::move(m)).first;
            it->second.addProduct(ce, c, t, -1);
            if (it->second.isZero()) rem.erase(it);
        }
        quotient.emplace_back(std::move(w), std::move(c));
    }
    return TorusElement::fromTerms(d.torus(), std::move(quotient));
}

CommPoly CommPoly::constant(std::size_t nvars, const BigInt& c) {
    CommPoly p(nvars);
    p.addTerm(Exponent(nvars, 0), c);
    return p;
}

CommPoly CommPoly::variable(std::size_t nvars, std::size_t i, int pw) {
    CommPoly p(nvars);
    p.addTerm(unitVector(nvars, i, pw), 1);
    return p;
}

void CommPoly::addTerm(const Exponent& v, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(v, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt CommPoly::evaluateAtOnes() const {
    BigInt s = 0;
    for (const auto& [v, c] : terms_) s += c;
    return s;
}

CommPoly CommPoly::permuted(const std::vector<std::size_t>& perm) const {
    CommPoly r(nvars_);
    for (const auto& [v, c] : terms_) {
        Exponent w(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) w[perm[i]] = v[i];
        r.addTerm(w, c);
    }
    return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [v, c] : o.terms_) addTerm(v, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [v, c] : o.terms_) addTerm(v, -c);
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    std::unordered_map<Exponent, BigInt, ExponentHash> acc;
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_) acc[u + v] += cu * cv;
    CommPoly r(std::max(a.nvars_, b.nvars_));
    for (auto& [w, c] : acc)
        if (c != 0) r.terms_.emplace(w, std::move(c));
    return r;
}

std::string CommPoly::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigInt c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            mono << (any ? "*" : "") << "x" << (i + 1);
            if (e != 1) mono << "^" << e;
            any = true;
        }
        if (!any) os << c.get_str();
        else if (c == 1) os << mono.str();
        else os << c.get_str() << "*" << mono.str();
    }
    return os.str();
}

CommPoly specialize(const TorusElement& a, const std::set<std::size_t>& setOne) {
    std::size_t n = a.torus() ? a.torus()->rank() : 0;
    CommPoly r(n);
    for (const auto& [v, c] : a.terms()) {
        Exponent w = v;
        for (std::size_t i : setOne)
            if (i < w.size()) w[i] = 0;
        r.addTerm(w, c.atOne());
    }
    return r;
}

}  // namespace qclust
