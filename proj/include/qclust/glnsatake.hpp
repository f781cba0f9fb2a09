#pragma once

#include "qclust/gls.hpp"
#include "qclust/qseed.hpp"
#include "qclust/report.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qclust {

struct Label {
    int k = 0;
    int l = 0;
    friend auto operator<=>(const Label&, const Label&) = default;
    std::string str() const { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }
};

std::optional<Label> parseLabel(const std::string& s);

// A seed whose vertices carry (k,l) labels of the variables they hold.
struct LabeledSeed {
    QuantumSeed seed;
    std::vector<std::optional<Label>> labels;

    std::optional<std::size_t> find(Label lab) const;
    std::size_t at(Label lab) const;  // throws UnknownLabel
};

// Mutating X_{k,l} whose unique neighbour X_{k,l'} (|l - l'| = 1) is present yields X_{k,2l'-l}.
std::optional<Label> labelAfterMutation(const std::vector<std::optional<Label>>& labels,
                                        const std::vector<bool>& frozen, std::size_t v);
LabeledSeed mutateLabeled(const LabeledSeed& s, std::size_t vertex);
LabeledSeed mutateLabeled(const LabeledSeed& s, Label lab);
LabeledSeed runLabeled(const LabeledSeed& s, const std::vector<Label>& seq);

// Canonical index order (1,0),...,(n,0),(1,1),...,(n,1); frozen (n,0),(n,1).
CompatiblePair buildGLnPair(int n);
std::vector<Label> glnIndexLabels(int n);
CompatiblePair reorderPair(const CompatiblePair& p, const std::vector<std::size_t>& order);
// B_C = [[C^T - C, -C^T], [C, 0]]
ExchangeData buildConjecturalB(const IntMatrix& C, const std::vector<bool>& frozen = {});

std::vector<Label> muSequence(int n);
std::vector<Label> muPrimeSequence(int n, int steps);
std::vector<Label> muPrimeStep(int n, int j);

struct KClass {
    TorusElement element;
    std::string provenance;
};

class GLnContext {
public:
    explicit GLnContext(int n);

    int n() const { return n_; }
    const CompatiblePair& pair() const { return pair_; }
    const TorusPtr& torus() const { return initial_.seed.torus; }
    const LabeledSeed& initialSeed() const { return initial_; }
    std::size_t indexOf(Label lab) const;

    TorusElement extendedVariable(int k, int l);
    // The labeled seed with cluster {X_{k,c}, X_{k,c+1}} plus frozen.
    LabeledSeed window(int c);
    LabeledSeed muResult();

    TorusElement unit() const;
    TorusElement frozenMonomial(int l, int power) const;  // X_{n,l}^power, l in {0,1}

    KClass classOfP(int k, int l);
    std::optional<int> checkCommutation(int k1, int l1, int k2, int l2);
    Report mutationSequenceIdentity(int k, int l);
    KClass wedgeClass(int k, int l, const std::vector<int>& j, bool simplify = false);
    KClass leftDualClass(int k, int l);

private:
    TorusElement wedgeRec(int k, int l, const std::vector<int>& j, bool simplify);

    int n_;
    CompatiblePair pair_;
    LabeledSeed initial_;
    std::recursive_mutex mutex_;
    std::map<int, LabeledSeed> windows_;
    std::map<Label, TorusElement> vars_;
    std::map<std::pair<Label, int>, TorusElement> classes_;  // second: 0 = P
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, TorusElement> wedges_;
    std::optional<LabeledSeed> muResult_;
};

// Checks of the structural claims.
Report compareMuWithGls(int n);
Report frozenRowPattern(const LabeledSeed& s, int n);
Report frozenRowsAlongMuPrime(int n, int steps);
Report keyMinorCheck(GLnContext& ctx);
Report lambdaFrozenCheck(GLnContext& ctx, int k, int m);
Report twistCheck(GLnContext& ctx, int k);

}  // namespace qclust
