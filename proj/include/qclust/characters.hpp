#pragma once

#include "qclust/glnsatake.hpp"
#include "qclust/qscalar.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace qclust {

// Sparse commutative polynomial in at most 8 variables, exponents < 256 packed into one word.
class SymPoly {
public:
    static constexpr std::size_t kMaxVars = 8;
    using Key = std::uint64_t;

    SymPoly() = default;
    explicit SymPoly(std::size_t nvars);
    static SymPoly constant(std::size_t nvars, const BigInt& c);
    static SymPoly monomial(std::size_t nvars, const std::vector<int>& e, const BigInt& c = 1);

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    const std::unordered_map<Key, BigInt>& terms() const { return terms_; }

    static int exponentOf(Key key, std::size_t i) { return static_cast<int>((key >> (8 * i)) & 0xff); }
    std::vector<int> exponents(Key key) const;

    void addTerm(Key key, const BigInt& c);
    BigInt evaluateAtOnes() const;
    SymPoly swapped(std::size_t i, std::size_t j) const;

    SymPoly& operator+=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    friend SymPoly operator-(const SymPoly& a);
    friend bool operator==(const SymPoly& a, const SymPoly& b);

    std::string toString() const;

private:
    std::size_t nvars_ = 0;
    std::unordered_map<Key, BigInt> terms_;
};

SymPoly completeHomogeneous(std::size_t n, int degree);
// s_{(l^k)}(x_1..x_n) by the Jacobi-Trudi determinant det[h_{l+j-i}].
SymPoly schurRect(int n, int k, int l);
BigInt dimensionOf(int n, int k, int l);
// prod_{i<=k, j<=n-k} (l+i+j-1)/(i+j-1)
BigInt hookContentDimension(int n, int k, int l);

Report qSystemCheck(int n, int k, int l);
Report classicalClusterQSystem(GLnContext& ctx, int k, int l);

}  // namespace qclust
