#pragma once

#include "qclust/exchange.hpp"
#include "qclust/glnsatake.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qclust {

// Principal framing: one frozen v' per unfrozen v, initially a single arrow v -> v'.
// Rows 0..m-1 are the unfrozen vertices, rows m..2m-1 their framing copies.
struct FramedQuiver {
    ExchangeData state;
    IntMatrix original;  // principal part at framing time
    std::vector<std::size_t> history;
    std::optional<std::vector<std::size_t>> permutationWitness;

    std::size_t rank() const { return original.size(); }
};

FramedQuiver frame(const ExchangeData& b);

enum class VertexColor { Green, Red };

// Throws SignCoherenceViolation when the framing column has mixed signs.
VertexColor colorOf(const FramedQuiver& f, std::size_t v);
bool isGreen(const FramedQuiver& f, std::size_t v);
std::vector<bool> greenMask(const FramedQuiver& f);

FramedQuiver mutateGreen(const FramedQuiver& f, std::size_t v, bool requireGreen = true);
// Throws RedVertexMutation naming the offending step.
FramedQuiver runGreen(const FramedQuiver& f, const std::vector<std::size_t>& seq);

// sigma with sigma(v) = w when the final framing column of v is -e_{w'}.
std::optional<std::vector<std::size_t>> coFramedBijection(const FramedQuiver& f);
std::optional<std::vector<std::size_t>> isMaximalGreen(const FramedQuiver& f, const std::vector<std::size_t>& seq);

// Alternating columns (k,0) for all k, then (k,1), n blocks in total.
std::vector<Label> kedemSequence(int n);
ExchangeData glnUnfrozenPart(int n);
std::vector<std::size_t> resolveVertices(const FramedQuiver& f, const std::vector<std::string>& ids);

std::string toDot(const FramedQuiver& f);
nlohmann::json toJson(const FramedQuiver& f);

Report kedemCheck(int n);

}  // namespace qclust
