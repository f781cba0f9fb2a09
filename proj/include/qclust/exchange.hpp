#pragma once

#include "qclust/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qclust {

// Extended exchange matrix: rows are all indices, columns the exchangeable ones.
struct ExchangeData {
    std::vector<std::string> indices;  // stable ids, one per row
    std::vector<bool> frozen;
    IntMatrix B;                       // |I| x |I_ex|
    std::vector<std::string> labels;   // display labels; may change under mutation

    static ExchangeData make(std::vector<std::string> indices, std::vector<bool> frozen, IntMatrix B);

    std::size_t size() const { return indices.size(); }
    std::vector<std::size_t> exchangeable() const;
    // Column position of exchangeable index i.
    std::size_t column(std::size_t i) const;
    long entry(std::size_t i, std::size_t j) const;  // b_ij, j exchangeable
    std::optional<std::size_t> find(const std::string& idOrLabel) const;
    IntMatrix principalPart() const;

    friend bool operator==(const ExchangeData&, const ExchangeData&) = default;
};

struct CompatiblePair {
    IntMatrix L;
    ExchangeData B;
    std::vector<long> diag;
};

void validate(const ExchangeData& b);
ExchangeData mutateB(const ExchangeData& b, std::size_t k);
IntMatrix mutateL(const IntMatrix& L, const ExchangeData& b, std::size_t k);
CompatiblePair mutatePair(const CompatiblePair& p, std::size_t k);
// The positive diagonal of the principal part of L B.
std::vector<long> checkCompatible(const IntMatrix& L, const ExchangeData& b);
CompatiblePair makePair(IntMatrix L, ExchangeData b);

// The auxiliary matrices with mu_k(B) = E B F and mu_k(L) = E^T L E.
IntMatrix mutationE(const ExchangeData& b, std::size_t k);
IntMatrix mutationF(const ExchangeData& b, std::size_t k);

// Positive integer diagonal D with D * principal part skew-symmetric.
std::optional<std::vector<long>> skewSymmetrizer(const IntMatrix& principal);

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<bool> frozen;
    std::map<std::pair<std::size_t, std::size_t>, long> arrows;  // (from, to) -> multiplicity

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

// Arrow convention: b_ij = #(j -> i) - #(i -> j).
Quiver toQuiver(const ExchangeData& b);
ExchangeData fromQuiver(const Quiver& q);
bool hasOriented3CycleAt(const ExchangeData& b, std::size_t k);

struct DotStyle {
    std::map<std::size_t, std::string> colors;
};
std::string toDot(const ExchangeData& b, const DotStyle& style = {});

}  // namespace qclust
