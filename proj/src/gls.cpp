#include "qclust/gls.hpp"

#include "qclust/errors.hpp"

namespace qclust {

CartanDatum makeCartan(IntMatrix A) {
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (A[i].size() != A.size()) throw makeError("MalformedCartan", "matrix is not square");
        if (A[i][i] != 2) throw makeError("MalformedCartan", "diagonal entry is not 2");
        for (std::size_t j = 0; j < A.size(); ++j) {
            if (i != j && A[i][j] > 0) throw makeError("MalformedCartan", "positive off-diagonal entry");
            if (A[i][j] != A[j][i]) throw makeError("MalformedCartan", "only symmetric Cartan matrices are supported");
        }
    }
    return {std::move(A)};
}

CartanDatum affineA1() { return makeCartan({{2, -2}, {-2, 2}}); }

CartanDatum typeA(std::size_t r) {
    IntMatrix A = zeroMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        A[i][i] = 2;
        if (i + 1 < r) A[i][i + 1] = A[i + 1][i] = -1;
    }
    return makeCartan(A);
}

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
    Weight w{std::vector<long>(rank, 0), std::vector<long>(rank, 0)};
    w.c[i] = 1;
    return w;
}

Weight Weight::root(std::size_t rank, std::size_t i) {
    Weight w{std::vector<long>(rank, 0), std::vector<long>(rank, 0)};
    w.x[i] = 1;
    return w;
}

bool Weight::inRootLattice() const {
    for (long v : c)
        if (v != 0) return false;
    return true;
}

long pairing(const CartanDatum& A, const Weight& w, std::size_t i) {
    long s = w.c[i];
    for (std::size_t j = 0; j < A.rank(); ++j) s += w.x[j] * A.A[j][i];
    return s;
}

Weight reflect(const CartanDatum& A, const Weight& w, std::size_t i) {
    if (i >= A.rank()) throw makeError("OutOfRange", "reflection index");
    Weight r = w;
    r.x[i] -= pairing(A, w, i);
    return r;
}

long form(const CartanDatum& A, const Weight& a, const Weight& b) {
    if (!a.inRootLattice()) throw makeError("NotInRootLattice", "left argument of the form");
    long s = 0;
    for (std::size_t i = 0; i < A.rank(); ++i) {
        if (a.x[i] == 0) continue;
        long t = b.c[i];
        for (std::size_t j = 0; j < A.rank(); ++j) t += A.A[i][j] * b.x[j];
        s += a.x[i] * t;
    }
    return s;
}

std::vector<Weight> betas(const CartanDatum& A, const ReducedWord& w) {
    std::vector<Weight> out;
    for (std::size_t k = 1; k <= w.size(); ++k) {
        Weight om = Weight::fundamental(A.rank(), w[k - 1]);
        Weight img = om;
        for (std::size_t j = k; j >= 1; --j) img = reflect(A, img, w[j - 1]);
        Weight beta{std::vector<long>(A.rank(), 0), std::vector<long>(A.rank(), 0)};
        for (std::size_t i = 0; i < A.rank(); ++i) {
            beta.c[i] = om.c[i] - img.c[i];
            beta.x[i] = om.x[i] - img.x[i];
        }
        out.push_back(std::move(beta));
    }
    return out;
}

std::size_t nextOccurrence(const ReducedWord& w, std::size_t k) {
    for (std::size_t s = k + 1; s <= w.size(); ++s)
        if (w[s - 1] == w[k - 1]) return s;
    return w.size() + 1;
}

std::size_t prevOccurrence(const ReducedWord& w, std::size_t k) {
    for (std::size_t s = k - 1; s >= 1; --s)
        if (w[s - 1] == w[k - 1]) return s;
    return 0;
}

std::size_t firstOccurrence(const ReducedWord& w, std::size_t k) {
    for (std::size_t s = 1; s <= w.size(); ++s)
        if (w[s - 1] == w[k - 1]) return s;
    return k;
}

std::size_t lastOccurrence(const ReducedWord& w, std::size_t k) {
    for (std::size_t s = w.size(); s >= 1; --s)
        if (w[s - 1] == w[k - 1]) return s;
    return k;
}

std::size_t countBefore(const ReducedWord& w, std::size_t k, std::size_t letter) {
    std::size_t n = 0;
    for (std::size_t s = 1; s < k; ++s)
        if (w[s - 1] == letter) ++n;
    return n;
}

std::size_t occurrences(const ReducedWord& w, std::size_t letter) { return countBefore(w, w.size() + 1, letter); }

long glsCase(const CartanDatum& A, const ReducedWord& w, std::size_t k, std::size_t l) {
    std::size_t kp = nextOccurrence(w, k), lp = nextOccurrence(w, l);
    if (k < l && l < kp && kp <= lp) return A.A[w[k - 1]][w[l - 1]];
    if (k == prevOccurrence(w, l)) return 1;
    return 0;
}

GlsPair glsPair(const CartanDatum& A, const ReducedWord& w) {
    std::size_t r = w.size();
    for (std::size_t letter : w)
        if (letter >= A.rank()) throw makeError("OutOfRange", "word letter " + std::to_string(letter));
    GlsPair out;
    out.betas = betas(A, w);
    IntMatrix L = zeroMatrix(r, r);
    for (std::size_t k = 1; k <= r; ++k)
        for (std::size_t l = k + 1; l <= r; ++l) {
            Weight target = Weight::fundamental(A.rank(), w[l - 1]);
            for (auto& x : target.c) x *= 2;
            for (std::size_t i = 0; i < A.rank(); ++i) {
                target.c[i] -= out.betas[l - 1].c[i];
                target.x[i] -= out.betas[l - 1].x[i];
            }
            long v = form(A, out.betas[k - 1], target);
            L[k - 1][l - 1] = v;
            L[l - 1][k - 1] = -v;
        }
    std::vector<std::string> ids;
    std::vector<bool> frozen;
    for (std::size_t k = 1; k <= r; ++k) {
        ids.push_back(std::to_string(k));
        frozen.push_back(nextOccurrence(w, k) == r + 1);
    }
    std::vector<std::size_t> ex;
    for (std::size_t k = 1; k <= r; ++k)
        if (!frozen[k - 1]) ex.push_back(k);
    IntMatrix B = zeroMatrix(r, ex.size());
    for (std::size_t k = 1; k <= r; ++k)
        for (std::size_t c = 0; c < ex.size(); ++c)
            B[k - 1][c] = glsCase(A, w, ex[c], k) - glsCase(A, w, k, ex[c]);
    out.pair = makePair(std::move(L), ExchangeData::make(ids, frozen, B));
    return out;
}

std::vector<std::size_t> distinguishedSequence(const ReducedWord& w) {
    std::vector<std::size_t> seq;
    for (std::size_t k = 1; k <= w.size(); ++k) {
        std::size_t letter = w[k - 1];
        std::size_t t = occurrences(w, letter), before = countBefore(w, k, letter);
        if (t < 1 + before) continue;
        std::size_t take = t - 1 - before;
        for (std::size_t s = 1; s <= w.size() && take > 0; ++s)
            if (w[s - 1] == letter) {
                seq.push_back(s);
                --take;
            }
    }
    return seq;
}

std::pair<int, int> minorToVariable(long b, long d, int n) {
    if (b > d) throw makeError("OutOfRange", "minor needs b <= d");
    if ((d - b) % 2 != 0) throw makeError("ParityMismatch", "b and d carry different letters");
    return {static_cast<int>(1 + (d - b) / 2), static_cast<int>(n + 1 - (b + d) / 2)};
}

ReducedWord alternatingWord(std::size_t n) {
    ReducedWord w;
    for (std::size_t k = 0; k < n; ++k) {
        w.push_back(0);
        w.push_back(1);
    }
    return w;
}

}  // namespace qclust
