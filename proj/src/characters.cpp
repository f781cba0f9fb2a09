#include "qclust/characters.hpp"

#include "qclust/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qclust {

namespace {

SymPoly::Key pack(const std::vector<int>& e) {
    SymPoly::Key k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255) throw makeError("OutOfRange", "exponent outside [0,255]");
        k |= static_cast<SymPoly::Key>(e[i]) << (8 * i);
    }
    return k;
}

}  // namespace

SymPoly::SymPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVars) throw makeError("OutOfRange", "at most 8 variables");
}

SymPoly SymPoly::constant(std::size_t nvars, const BigInt& c) {
    SymPoly p(nvars);
    p.addTerm(0, c);
    return p;
}

SymPoly SymPoly::monomial(std::size_t nvars, const std::vector<int>& e, const BigInt& c) {
    SymPoly p(nvars);
    p.addTerm(pack(e), c);
    return p;
}

std::vector<int> SymPoly::exponents(Key key) const {
    std::vector<int> e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = exponentOf(key, i);
    return e;
}

void SymPoly::addTerm(Key key, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt SymPoly::evaluateAtOnes() const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

SymPoly SymPoly::swapped(std::size_t i, std::size_t j) const {
    SymPoly r(nvars_);
    for (const auto& [k, c] : terms_) {
        auto e = exponents(k);
        std::swap(e[i], e[j]);
        r.addTerm(pack(e), c);
    }
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k, c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly r(std::max(a.nvars_, b.nvars_));
    r.terms_.reserve(a.size() * 4);
    BigInt t;
    // Packed addition is safe while every per-variable sum stays below 256.
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            t = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(ka + kb, t);
            if (!inserted) it->second += t;
        }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

SymPoly operator-(const SymPoly& a) {
    SymPoly r = a;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }

std::string SymPoly::toString() const {
    if (terms_.empty()) return "0";
    std::map<std::vector<int>, BigInt, std::greater<>> sorted;
    for (const auto& [k, c] : terms_) sorted.emplace(exponents(k), c);
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        BigInt mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            mono << (any ? "*" : "") << "x" << (i + 1);
            if (e[i] > 1) mono << "^" << e[i];
            any = true;
        }
        if (!any) os << mag.get_str();
        else if (mag != 1) os << mag.get_str() << "*" << mono.str();
        else os << mono.str();
    }
    return os.str();
}

SymPoly completeHomogeneous(std::size_t n, int degree) {
    SymPoly h(n);
    if (degree < 0) return h;
    std::vector<int> e(n, 0);
    // Enumerate weak compositions of degree into n parts.
    auto rec = [&](auto& self, std::size_t i, int left) -> void {
        if (i + 1 == n || n == 0) {
            if (n == 0) {
                if (left == 0) h.addTerm(0, 1);
                return;
            }
            e[i] = left;
            h.addTerm(pack(e), 1);
            e[i] = 0;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[i] = v;
            self(self, i + 1, left - v);
        }
        e[i] = 0;
    };
    rec(rec, 0, degree);
    return h;
}

SymPoly schurRect(int n, int k, int l) {
    if (n < 1 || n > static_cast<int>(SymPoly::kMaxVars) || k < 0 || k > n || l < 0)
        throw makeError("OutOfRange", "schurRect needs 0 <= k <= n <= 8 and l >= 0");
    std::size_t nv = static_cast<std::size_t>(n);
    if (k == 0 || l == 0) return SymPoly::constant(nv, 1);
    if (k == n) return SymPoly::monomial(nv, std::vector<int>(nv, l));
    std::vector<SymPoly> h;
    for (int d = 0; d <= l + k - 1; ++d) h.push_back(completeHomogeneous(nv, d));
    auto entry = [&](int i, int j) -> const SymPoly* {
        int d = l + j - i;
        return d < 0 ? nullptr : &h[d];
    };
    // Laplace expansion along rows, memoized on the set of columns already used.
    std::map<unsigned, SymPoly> memo;
    memo.emplace(0u, SymPoly::constant(nv, 1));
    for (unsigned size = 1; size <= static_cast<unsigned>(k); ++size) {
        int row = static_cast<int>(size) - 1;
        for (unsigned S = 0; S < (1u << k); ++S) {
            if (static_cast<unsigned>(__builtin_popcount(S)) != size) continue;
            SymPoly acc(nv);
            for (int j = 0; j < k; ++j) {
                if (!(S >> j & 1)) continue;
                const SymPoly* m = entry(row, j);
                if (!m) continue;
                auto it = memo.find(S & ~(1u << j));
                if (it == memo.end() || it->second.isZero()) continue;
                int above = __builtin_popcount(S >> (j + 1));
                SymPoly t = *m * it->second;
                acc += above % 2 ? -t : t;
            }
            memo.emplace(S, std::move(acc));
        }
    }
    return memo.at((1u << k) - 1);
}

BigInt dimensionOf(int n, int k, int l) { return schurRect(n, k, l).evaluateAtOnes(); }

BigInt hookContentDimension(int n, int k, int l) {
    mpq_class r = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n - k; ++j) r *= mpq_class(l + i + j - 1, i + j - 1);
    r.canonicalize();
    return r.get_num();
}

Report qSystemCheck(int n, int k, int l) {
    Report rep{"qsystem", {{"n", n}, {"k", k}, {"l", l}}, true, nullptr};
    if (k < 1 || k > n - 1 || l < 1) throw makeError("OutOfRange", "qSystemCheck needs 1 <= k <= n-1, l >= 1");
    SymPoly s = schurRect(n, k, l);
    SymPoly lhs = s * s;
    SymPoly rhs = schurRect(n, k, l + 1) * schurRect(n, k, l - 1) + schurRect(n, k - 1, l) * schurRect(n, k + 1, l);
    if (!(lhs == rhs)) {
        rep.ok = false;
        rep.witness = {{"lhsTerms", lhs.size()}, {"rhsTerms", rhs.size()},
                       {"lhsAtOnes", lhs.evaluateAtOnes().get_str()}, {"rhsAtOnes", rhs.evaluateAtOnes().get_str()}};
    }
    return rep;
}

Report classicalClusterQSystem(GLnContext& ctx, int k, int l) {
    int n = ctx.n();
    Report rep{"classical-qsystem", {{"n", n}, {"k", k}, {"l", l}}, true, nullptr};
    if (k < 1 || k > n - 1) throw makeError("OutOfRange", "k must lie in [1,n-1]");
    std::set<std::size_t> frozen{ctx.indexOf({n, 0}), ctx.indexOf({n, 1})};
    std::size_t nv = ctx.pair().B.size();
    auto sp = [&](int kk, int ll) {
        if (kk == 0 || kk == n) return CommPoly::constant(nv, 1);
        return specialize(ctx.extendedVariable(kk, ll), frozen);
    };
    CommPoly lhs = sp(k, l + 1) * sp(k, l - 1);
    CommPoly rhs = sp(k, l) * sp(k, l) + sp(k - 1, l) * sp(k + 1, l);
    if (!(lhs == rhs)) {
        rep.ok = false;
        rep.witness = {{"lhs", lhs.toString().substr(0, 2000)}, {"rhs", rhs.toString().substr(0, 2000)}};
    }
    return rep;
}

}  // namespace qclust
