#include "qclust/qseed.hpp"

#include "qclust/errors.hpp"

namespace qclust {

QuantumSeed initialSeed(const CompatiblePair& pair, const std::string& torusId) {
    checkCompatible(pair.L, pair.B);
    QuantumSeed s;
    s.torus = makeTorus(pair.L, pair.B.labels, torusId);
    s.pair = pair;
    for (std::size_t i = 0; i < pair.B.size(); ++i)
        s.vars.push_back(TorusElement::monomial(s.torus, unitVector(pair.B.size(), i)));
    return s;
}

TorusElement normalizedProduct(const QuantumSeed& s, const std::vector<long>& a) {
    // Seed variables multiply like torus monomials under the seed's own L,
    // so the ordered product is q^{(1/2) sum_{s<t} L[i_s][i_t]} times the normalized one.
    std::vector<std::size_t> factors;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (long e = 0; e < a[i]; ++e) factors.push_back(i);
    if (factors.empty()) return TorusElement::unit(s.torus);
    long shift = 0;
    for (std::size_t x = 0; x < factors.size(); ++x)
        for (std::size_t y = x + 1; y < factors.size(); ++y) shift -= s.pair.L[factors[x]][factors[y]];
    TorusElement r = s.vars[factors[0]];
    for (std::size_t x = 1; x < factors.size(); ++x) r = mul(r, s.vars[factors[x]]);
    return shift == 0 ? r : r.shifted(static_cast<int>(shift));
}

ExchangeBinomial exchangeBinomial(const QuantumSeed& s, std::size_t k) {
    const ExchangeData& B = s.exchange();
    std::size_t kc = B.column(k);
    std::size_t n = s.size();
    std::vector<long> wp(n, 0), wm(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        long b = B.B[i][kc];
        if (b > 0) wp[i] = b;
        if (b < 0) wm[i] = -b;
    }
    ExchangeBinomial e;
    e.plus = normalizedProduct(s, wp);
    e.minus = normalizedProduct(s, wm);
    // q^{(1/2)(L w)_k} twists, counted in half-units
    for (std::size_t i = 0; i < n; ++i) {
        e.plusShift += static_cast<int>(s.pair.L[k][i] * wp[i]);
        e.minusShift += static_cast<int>(s.pair.L[k][i] * wm[i]);
    }
    return e;
}

QuantumSeed mutateSeed(const QuantumSeed& s, std::size_t k) {
    if (k >= s.size()) throw makeError("OutOfRange", "vertex " + std::to_string(k));
    if (s.exchange().frozen[k]) throw makeError("FrozenMutation", "vertex " + s.exchange().indices[k] + " is frozen");
    ExchangeBinomial e = exchangeBinomial(s, k);
    TorusElement xk;
    try {
        xk = leftDivideExact(s.vars[k], e.sum());
    } catch (const Error& err) {
        throw makeError("LaurentFailure", err.what());
    }
    auto [shift, normalized] = barNormalize(xk);
    if (shift != 0) throw makeError("LaurentFailure", "mutated variable is not bar-invariant");
    QuantumSeed r;
    r.torus = s.torus;
    r.pair = mutatePair(s.pair, k);
    r.vars = s.vars;
    r.vars[k] = std::move(xk);
    r.history = s.history;
    r.history.push_back(k);
    return r;
}

QuantumSeed runSequence(const QuantumSeed& s, const std::vector<std::size_t>& ks) {
    QuantumSeed cur = s;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        try {
            cur = mutateSeed(cur, ks[i]);
        } catch (const Error& err) {
            throw Error(err.kind(), "step " + std::to_string(i) + ": " + err.what());
        }
    }
    return cur;
}

TorusElement clusterMonomial(const QuantumSeed& s, const std::vector<long>& a) {
    TorusElement r = TorusElement::unit(s.torus);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (long e = 0; e < a[i]; ++e) r = odot(r, s.vars[i]);
    return r;
}

Report verifySeedConsistency(const QuantumSeed& s) {
    Report rep{"seed-consistency", {{"size", s.size()}, {"history", s.history}}, true, nullptr};
    auto fail = [&](nlohmann::json w) {
        rep.ok = false;
        if (rep.witness.is_null()) rep.witness = std::move(w);
    };
    try {
        checkCompatible(s.pair.L, s.pair.B);
    } catch (const Error& e) {
        fail({{"compatible", e.what()}});
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.vars[i].isZero()) fail({{"zero", i}});
        else if (!isBarInvariant(s.vars[i])) fail({{"barInvariant", i}});
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            auto lam = lambdaExponent(s.vars[i], s.vars[j]);
            long expected = -2 * s.pair.L[i][j];
            if (!lam || *lam != expected)
                fail({{"lambda", {i, j}}, {"expectedHalfUnits", expected},
                      {"found", lam ? nlohmann::json(*lam) : nlohmann::json(nullptr)}});
        }
    return rep;
}

}  // namespace qclust
