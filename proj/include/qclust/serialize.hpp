#pragma once

#include "qclust/exchange.hpp"
#include "qclust/torus.hpp"

#include "json.hpp"

#include <cstddef>

namespace qclust {

constexpr std::size_t kDefaultTermCap = 5000;

// [[halfExponent, "coefficient"], ...]
nlohmann::json toJson(const QScalar& c);
QScalar qscalarFromJson(const nlohmann::json& j);

// {"torus", "rank", "termCount", "truncated", "terms": [{"v": [...], "coeff": ...}]}
nlohmann::json toJson(const TorusElement& a, std::size_t termCap = kDefaultTermCap);
// Rejects truncated payloads and rank mismatches with ParseError.
TorusElement torusElementFromJson(const nlohmann::json& j, TorusPtr torus);

nlohmann::json toJson(const CommPoly& p, std::size_t termCap = kDefaultTermCap);

nlohmann::json toJson(const ExchangeData& b);
ExchangeData exchangeFromJson(const nlohmann::json& j);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a(const std::string& bytes);

}  // namespace qclust
