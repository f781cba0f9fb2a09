#include "qclust/green.hpp"

#include "qclust/errors.hpp"

namespace qclust {

FramedQuiver frame(const ExchangeData& b) {
    IntMatrix P = b.principalPart();
    if (!isSkewSymmetric(P)) throw makeError("NotSkewSymmetric", "framing needs a skew-symmetric principal part");
    std::size_t m = P.size();
    std::vector<std::string> ids;
    std::vector<bool> frozen(2 * m, false);
    for (std::size_t i : b.exchangeable()) ids.push_back(b.indices[i]);
    for (std::size_t i = 0; i < m; ++i) {
        ids.push_back(ids[i] + "'");
        frozen[m + i] = true;
    }
    IntMatrix B = zeroMatrix(2 * m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) B[i][j] = P[i][j];
        B[m + i][i] = 1;
    }
    FramedQuiver f;
    f.state = ExchangeData::make(ids, frozen, B);
    std::vector<std::string> labels;
    for (std::size_t i : b.exchangeable()) labels.push_back(b.labels[i]);
    for (std::size_t i = 0; i < m; ++i) labels.push_back(labels[i] + "'");
    f.state.labels = labels;
    f.original = P;
    return f;
}

VertexColor colorOf(const FramedQuiver& f, std::size_t v) {
    std::size_t m = f.rank();
    if (v >= m) throw makeError("OutOfRange", "framing vertices carry no color");
    bool pos = false, neg = false;
    for (std::size_t i = m; i < 2 * m; ++i) {
        long e = f.state.B[i][v];
        pos |= e > 0;
        neg |= e < 0;
    }
    if (pos && neg) throw makeError("SignCoherenceViolation", "vertex " + f.state.indices[v] + " has mixed framing signs");
    if (!pos && !neg) throw makeError("SignCoherenceViolation", "vertex " + f.state.indices[v] + " has a zero framing column");
    return pos ? VertexColor::Green : VertexColor::Red;
}

bool isGreen(const FramedQuiver& f, std::size_t v) { return colorOf(f, v) == VertexColor::Green; }

std::vector<bool> greenMask(const FramedQuiver& f) {
    std::vector<bool> out;
    for (std::size_t v = 0; v < f.rank(); ++v) out.push_back(isGreen(f, v));
    return out;
}

FramedQuiver mutateGreen(const FramedQuiver& f, std::size_t v, bool requireGreen) {
    if (v >= f.rank()) throw makeError(v < f.state.size() ? "FrozenMutation" : "OutOfRange",
                                       "vertex " + std::to_string(v));
    if (requireGreen && !isGreen(f, v)) throw makeError("RedVertexMutation", "vertex " + f.state.indices[v] + " is red");
    FramedQuiver r = f;
    r.state = mutateB(f.state, v);
    r.history.push_back(v);
    r.permutationWitness.reset();
    greenMask(r);  // sign-coherence is checked after every step
    return r;
}

FramedQuiver runGreen(const FramedQuiver& f, const std::vector<std::size_t>& seq) {
    FramedQuiver cur = f;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            cur = mutateGreen(cur, seq[i]);
        } catch (const Error& e) {
            throw Error(e.kind(), "step " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return cur;
}

std::optional<std::vector<std::size_t>> coFramedBijection(const FramedQuiver& f) {
    std::size_t m = f.rank();
    std::vector<std::size_t> sigma(m);
    std::vector<bool> used(m, false);
    // The framing rows force the bijection; what remains is to confirm it.
    for (std::size_t v = 0; v < m; ++v) {
        std::optional<std::size_t> w;
        for (std::size_t i = 0; i < m; ++i) {
            long e = f.state.B[m + i][v];
            if (e == 0) continue;
            if (e != -1 || w) return std::nullopt;
            w = i;
        }
        if (!w || used[*w]) return std::nullopt;
        used[*w] = true;
        sigma[v] = *w;
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (f.state.B[a][b] != f.original[sigma[a]][sigma[b]]) return std::nullopt;
    return sigma;
}

std::optional<std::vector<std::size_t>> isMaximalGreen(const FramedQuiver& f, const std::vector<std::size_t>& seq) {
    FramedQuiver end = runGreen(f, seq);
    for (bool g : greenMask(end))
        if (g) return std::nullopt;
    return coFramedBijection(end);
}

std::vector<Label> kedemSequence(int n) {
    if (n < 2) throw makeError("OutOfRange", "n >= 2");
    std::vector<Label> seq;
    for (int block = 0; block < n; ++block)
        for (int k = 1; k <= n - 1; ++k) seq.push_back({k, block % 2});
    return seq;
}

ExchangeData glnUnfrozenPart(int n) {
    ExchangeData full = buildGLnPair(n).B;
    auto ex = full.exchangeable();
    std::vector<std::string> ids;
    for (std::size_t i : ex) ids.push_back(full.indices[i]);
    return ExchangeData::make(ids, std::vector<bool>(ex.size(), false), full.principalPart());
}

std::vector<std::size_t> resolveVertices(const FramedQuiver& f, const std::vector<std::string>& ids) {
    std::vector<std::size_t> out;
    for (const auto& id : ids) {
        auto v = f.state.find(id);
        if (!v) throw makeError("UnknownVertex", id);
        out.push_back(*v);
    }
    return out;
}

std::string toDot(const FramedQuiver& f) {
    DotStyle style;
    for (std::size_t v = 0; v < f.rank(); ++v) {
        try {
            style.colors[v] = isGreen(f, v) ? "green" : "red";
        } catch (const Error&) {
            style.colors[v] = "gray";
        }
    }
    return toDot(f.state, style);
}

nlohmann::json toJson(const FramedQuiver& f) {
    nlohmann::json j;
    j["vertices"] = f.state.indices;
    j["labels"] = f.state.labels;
    j["frozen"] = f.state.frozen;
    j["B"] = f.state.B;
    j["history"] = f.history;
    nlohmann::json colors = nlohmann::json::array();
    for (std::size_t v = 0; v < f.rank(); ++v) {
        try {
            colors.push_back(isGreen(f, v) ? "green" : "red");
        } catch (const Error&) {
            colors.push_back(nullptr);
        }
    }
    j["colors"] = colors;
    if (f.permutationWitness) j["permutation"] = *f.permutationWitness;
    return j;
}

Report kedemCheck(int n) {
    Report rep{"green", {{"n", n}}, true, nullptr};
    FramedQuiver f = frame(glnUnfrozenPart(n));
    std::vector<std::string> ids;
    for (const auto& lab : kedemSequence(n)) ids.push_back(lab.str());
    try {
        auto sigma = isMaximalGreen(f, resolveVertices(f, ids));
        rep.params["length"] = ids.size();
        if (!sigma) {
            rep.ok = false;
            rep.witness = {{"error", "not a maximal green sequence with co-framed end"}};
        } else {
            nlohmann::json perm = nlohmann::json::object();
            for (std::size_t v = 0; v < sigma->size(); ++v)
                perm[f.state.indices[v]] = f.state.indices[(*sigma)[v]];
            rep.params["permutation"] = perm;
        }
    } catch (const Error& e) {
        rep.ok = false;
        rep.witness = {{"error", e.kind()}, {"detail", e.what()}};
    }
    return rep;
}

}  // namespace qclust
