#include "qclust/exchange.hpp"

#include "qclust/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace qclust {

ExchangeData ExchangeData::make(std::vector<std::string> indices, std::vector<bool> frozen, IntMatrix B) {
    ExchangeData d;
    d.labels = indices;
    d.indices = std::move(indices);
    d.frozen = std::move(frozen);
    d.B = std::move(B);
    validate(d);
    return d;
}

std::vector<std::size_t> ExchangeData::exchangeable() const {
    std::vector<std::size_t> ex;
    for (std::size_t i = 0; i < frozen.size(); ++i)
        if (!frozen[i]) ex.push_back(i);
    return ex;
}

std::size_t ExchangeData::column(std::size_t i) const {
    if (i >= frozen.size()) throw makeError("OutOfRange", "index " + std::to_string(i));
    if (frozen[i]) throw makeError("FrozenMutation", "index " + indices[i] + " is frozen");
    std::size_t c = 0;
    for (std::size_t j = 0; j < i; ++j)
        if (!frozen[j]) ++c;
    return c;
}

long ExchangeData::entry(std::size_t i, std::size_t j) const { return B[i][column(j)]; }

std::optional<std::size_t> ExchangeData::find(const std::string& key) const {
    for (std::size_t i = 0; i < indices.size(); ++i)
        if (indices[i] == key) return i;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == key) return i;
    return std::nullopt;
}

IntMatrix ExchangeData::principalPart() const {
    auto ex = exchangeable();
    IntMatrix p = zeroMatrix(ex.size(), ex.size());
    for (std::size_t a = 0; a < ex.size(); ++a)
        for (std::size_t c = 0; c < ex.size(); ++c) p[a][c] = B[ex[a]][c];
    return p;
}

void validate(const ExchangeData& b) {
    if (b.frozen.size() != b.indices.size() || b.B.size() != b.indices.size())
        throw makeError("MalformedExchangeData", "row count does not match index count");
    if (!b.labels.empty() && b.labels.size() != b.indices.size())
        throw makeError("MalformedExchangeData", "label count does not match index count");
    std::size_t nex = b.exchangeable().size();
    for (const auto& row : b.B)
        if (row.size() != nex) throw makeError("MalformedExchangeData", "column count does not match exchangeable count");
    if (!skewSymmetrizer(b.principalPart()))
        throw makeError("NotSkewSymmetrizable", "principal part " + formatMatrix(b.principalPart()));
}

IntMatrix mutationE(const ExchangeData& b, std::size_t k) {
    std::size_t kc = b.column(k);
    IntMatrix E = identityMatrix(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) E[i][k] = i == k ? -1 : std::max(0L, -b.B[i][kc]);
    return E;
}

IntMatrix mutationF(const ExchangeData& b, std::size_t k) {
    std::size_t kc = b.column(k);
    auto ex = b.exchangeable();
    IntMatrix F = identityMatrix(ex.size());
    for (std::size_t c = 0; c < ex.size(); ++c) F[kc][c] = c == kc ? -1 : std::max(0L, b.B[k][c]);
    return F;
}

ExchangeData mutateB(const ExchangeData& b, std::size_t k) {
    ExchangeData r = b;
    r.B = multiply(multiply(mutationE(b, k), b.B), mutationF(b, k));
    return r;
}

IntMatrix mutateL(const IntMatrix& L, const ExchangeData& b, std::size_t k) {
    IntMatrix E = mutationE(b, k);
    return multiply(multiply(transpose(E), L), E);
}

std::vector<long> checkCompatible(const IntMatrix& L, const ExchangeData& b) {
    if (L.size() != b.size()) throw makeError("NotCompatible", "shape mismatch");
    IntMatrix LB = multiply(L, b.B);
    auto ex = b.exchangeable();
    std::vector<long> diag(ex.size(), 0);
    for (std::size_t i = 0; i < LB.size(); ++i)
        for (std::size_t c = 0; c < ex.size(); ++c) {
            long v = LB[i][c];
            if (i == ex[c]) {
                if (v <= 0)
                    throw makeError("NotCompatible", "diagonal entry (" + b.indices[i] + "," +
                                                         b.indices[ex[c]] + ") = " + std::to_string(v));
                diag[c] = v;
            } else if (v != 0) {
                throw makeError("NotCompatible", "entry (" + b.indices[i] + "," + b.indices[ex[c]] +
                                                     ") = " + std::to_string(v));
            }
        }
    return diag;
}

CompatiblePair makePair(IntMatrix L, ExchangeData b) {
    if (!isSkewSymmetric(L)) throw makeError("NotSkewSymmetric", "L " + formatMatrix(L));
    validate(b);
    auto diag = checkCompatible(L, b);
    return {std::move(L), std::move(b), std::move(diag)};
}

CompatiblePair mutatePair(const CompatiblePair& p, std::size_t k) {
    CompatiblePair r{mutateL(p.L, p.B, k), mutateB(p.B, k), {}};
    r.diag = checkCompatible(r.L, r.B);
    return r;
}

std::optional<std::vector<long>> skewSymmetrizer(const IntMatrix& P) {
    std::size_t m = P.size();
    std::vector<mpq_class> d(m, 0);
    std::vector<bool> seen(m, false);
    for (std::size_t root = 0; root < m; ++root) {
        if (P[root].size() != m) return std::nullopt;
        if (P[root][root] != 0) return std::nullopt;
        if (seen[root]) continue;
        seen[root] = true;
        d[root] = 1;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < m; ++j) {
                long bij = P[i][j], bji = P[j][i];
                if ((bij == 0) != (bji == 0)) return std::nullopt;
                if (bij == 0) continue;
                if ((bij > 0) == (bji > 0)) return std::nullopt;
                // d_i b_ij = -d_j b_ji
                mpq_class dj = -d[i] * bij / mpq_class(bji);
                if (!seen[j]) {
                    seen[j] = true;
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    return std::nullopt;
                }
            }
        }
    }
    mpz_class lcm = 1;
    for (auto& x : d) {
        x.canonicalize();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<long> out;
    for (auto& x : d) out.push_back(mpz_class(x * lcm).get_si());
    return out;
}

Quiver toQuiver(const ExchangeData& b) {
    if (!isSkewSymmetric(b.principalPart())) throw makeError("NotSkewSymmetric", "principal part is not skew-symmetric");
    Quiver q{b.labels.empty() ? b.indices : b.labels, b.frozen, {}};
    auto ex = b.exchangeable();
    for (std::size_t c = 0; c < ex.size(); ++c) {
        std::size_t j = ex[c];
        for (std::size_t i = 0; i < b.size(); ++i) {
            long v = b.B[i][c];
            if (v == 0) continue;
            // Each unfrozen pair appears twice; record it from the smaller column index.
            if (!b.frozen[i] && i < j) continue;
            if (v > 0) q.arrows[{j, i}] = v;
            else q.arrows[{i, j}] = -v;
        }
    }
    return q;
}

ExchangeData fromQuiver(const Quiver& q) {
    std::size_t n = q.vertices.size();
    std::vector<std::size_t> ex;
    for (std::size_t i = 0; i < n; ++i)
        if (!q.frozen[i]) ex.push_back(i);
    IntMatrix B = zeroMatrix(n, ex.size());
    for (const auto& [e, mult] : q.arrows) {
        auto [from, to] = e;
        if (from == to) throw makeError("MalformedQuiver", "self-loop at " + q.vertices[from]);
        for (std::size_t c = 0; c < ex.size(); ++c) {
            if (ex[c] == to) B[from][c] -= mult;
            if (ex[c] == from) B[to][c] += mult;
        }
    }
    return ExchangeData::make(q.vertices, q.frozen, B);
}

bool hasOriented3CycleAt(const ExchangeData& b, std::size_t k) {
    if (b.frozen[k]) return false;
    auto ex = b.exchangeable();
    // arrow i -> j among unfrozen vertices iff b_ji > 0
    auto arrow = [&](std::size_t i, std::size_t j) { return b.B[j][b.column(i)] > 0; };
    for (std::size_t a : ex)
        for (std::size_t c : ex) {
            if (a == k || c == k || a == c) continue;
            if (arrow(k, a) && arrow(a, c) && arrow(c, k)) return true;
        }
    return false;
}

static std::string quote(const std::string& s) {
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') r += '\\';
        r += ch;
    }
    return r + "\"";
}

std::string toDot(const ExchangeData& b, const DotStyle& style) {
    Quiver q = toQuiver(b);
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
        os << "  v" << i << " [label=" << quote(q.vertices[i]);
        if (q.frozen[i]) os << ", shape=box";
        auto it = style.colors.find(i);
        if (it != style.colors.end()) os << ", style=filled, fillcolor=" << quote(it->second);
        os << "];\n";
    }
    for (const auto& [e, mult] : q.arrows) {
        os << "  v" << e.first << " -> v" << e.second;
        if (mult > 1) os << " [label=" << quote(std::to_string(mult)) << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qclust
