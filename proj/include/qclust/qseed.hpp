#pragma once

#include "qclust/exchange.hpp"
#include "qclust/report.hpp"
#include "qclust/torus.hpp"

#include <vector>

namespace qclust {

struct QuantumSeed {
    TorusPtr torus;  // the initial torus all variables are expanded in
    CompatiblePair pair;
    std::vector<TorusElement> vars;
    std::vector<std::size_t> history;

    std::size_t size() const { return vars.size(); }
    const ExchangeData& exchange() const { return pair.B; }
};

QuantumSeed initialSeed(const CompatiblePair& pair, const std::string& torusId = "");

// The two summands of x_k x'_k: q^{plusShift/2} plus + q^{minusShift/2} minus.
struct ExchangeBinomial {
    TorusElement plus, minus;
    int plusShift = 0, minusShift = 0;
    TorusElement sum() const { return plus.shifted(plusShift) + minus.shifted(minusShift); }
};

// Bar-normalized ordered product of vars[i]^{a_i}.
TorusElement normalizedProduct(const QuantumSeed& s, const std::vector<long>& a);
ExchangeBinomial exchangeBinomial(const QuantumSeed& s, std::size_t k);
QuantumSeed mutateSeed(const QuantumSeed& s, std::size_t k);
QuantumSeed runSequence(const QuantumSeed& s, const std::vector<std::size_t>& ks);
TorusElement clusterMonomial(const QuantumSeed& s, const std::vector<long>& a);
Report verifySeedConsistency(const QuantumSeed& s);

}  // namespace qclust
