#pragma once

#include "qclust/exchange.hpp"

#include <utility>
#include <vector>

namespace qclust {

struct CartanDatum {
    IntMatrix A;
    std::size_t rank() const { return A.size(); }
};

CartanDatum makeCartan(IntMatrix A);
CartanDatum affineA1();
CartanDatum typeA(std::size_t r);

// sum c_i omega_i + sum x_j alpha_j
struct Weight {
    std::vector<long> c, x;
    static Weight fundamental(std::size_t rank, std::size_t i);
    static Weight root(std::size_t rank, std::size_t i);
    bool inRootLattice() const;
    friend bool operator==(const Weight&, const Weight&) = default;
};

using ReducedWord = std::vector<std::size_t>;

long pairing(const CartanDatum& A, const Weight& w, std::size_t i);  // <w, alpha_i^vee>
Weight reflect(const CartanDatum& A, const Weight& w, std::size_t i);
// (a|b) with (alpha_i|alpha_j) = a_ij, (alpha_i|omega_j) = delta_ij; a must lie in the root lattice.
long form(const CartanDatum& A, const Weight& a, const Weight& b);
std::vector<Weight> betas(const CartanDatum& A, const ReducedWord& w);

// Word combinatorics, positions 1-based.
std::size_t nextOccurrence(const ReducedWord& w, std::size_t k);  // k^+, r+1 if none
std::size_t prevOccurrence(const ReducedWord& w, std::size_t k);  // k^-, 0 if none
std::size_t firstOccurrence(const ReducedWord& w, std::size_t k); // k_min
std::size_t lastOccurrence(const ReducedWord& w, std::size_t k);  // k_max
std::size_t countBefore(const ReducedWord& w, std::size_t k, std::size_t letter);  // k[j]
std::size_t occurrences(const ReducedWord& w, std::size_t letter);                 // t_j

// The case function whose antisymmetrization gives the exchange matrix.
long glsCase(const CartanDatum& A, const ReducedWord& w, std::size_t k, std::size_t l);

struct GlsPair {
    CompatiblePair pair;
    std::vector<Weight> betas;
};

GlsPair glsPair(const CartanDatum& A, const ReducedWord& w);
std::vector<std::size_t> distinguishedSequence(const ReducedWord& w);
std::pair<int, int> minorToVariable(long b, long d, int n);
ReducedWord alternatingWord(std::size_t n);  // (0,1,...,0,1), length 2n

}  // namespace qclust
