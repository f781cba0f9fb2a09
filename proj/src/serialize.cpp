#include "qclust/serialize.hpp"

#include "qclust/errors.hpp"

#include <cstdint>
#include <cstdio>

namespace qclust {

namespace {

BigInt parseBig(const nlohmann::json& j) {
    BigInt r;
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (!j.is_string() || r.set_str(j.get<std::string>(), 10) != 0)
        throw makeError("ParseError", "coefficient must be a decimal string");
    return r;
}

}  // namespace

nlohmann::json toJson(const QScalar& c) {
    auto out = nlohmann::json::array();
    for (const auto& [h, x] : c.terms()) out.push_back({h, x.get_str()});
    return out;
}

QScalar qscalarFromJson(const nlohmann::json& j) {
    if (!j.is_array()) throw makeError("ParseError", "scalar must be an array of [half, coeff]");
    std::vector<QScalar::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw makeError("ParseError", "scalar term must be [half, coeff]");
        terms.emplace_back(t[0].get<int>(), parseBig(t[1]));
    }
    return QScalar::fromTerms(std::move(terms));
}

nlohmann::json toJson(const TorusElement& a, std::size_t termCap) {
    nlohmann::json j;
    j["torus"] = a.torus() ? a.torus()->id() : "";
    j["rank"] = a.torus() ? a.torus()->rank() : 0;
    j["termCount"] = a.size();
    j["truncated"] = a.size() > termCap;
    auto terms = nlohmann::json::array();
    std::size_t emitted = 0;
    // Highest grlex terms first, which is how expansions are usually read.
    for (auto it = a.terms().rbegin(); it != a.terms().rend() && emitted < termCap; ++it, ++emitted)
        terms.push_back({{"v", std::vector<int>(it->first.begin(), it->first.end())}, {"coeff", toJson(it->second)}});
    j["terms"] = std::move(terms);
    return j;
}

TorusElement torusElementFromJson(const nlohmann::json& j, TorusPtr torus) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw makeError("ParseError", "torus element needs a terms array");
    if (j.value("truncated", false)) throw makeError("ParseError", "cannot rebuild a truncated element");
    std::vector<TorusElement::Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.contains("v") || !t["v"].is_array()) throw makeError("ParseError", "term needs v");
        auto v = t["v"].get<std::vector<int>>();
        if (v.size() != torus->rank()) throw makeError("ParseError", "exponent rank mismatch");
        terms.emplace_back(Exponent(v.begin(), v.end()), qscalarFromJson(t.at("coeff")));
    }
    return TorusElement::fromTerms(std::move(torus), std::move(terms));
}

nlohmann::json toJson(const CommPoly& p, std::size_t termCap) {
    nlohmann::json j;
    j["termCount"] = p.terms().size();
    j["truncated"] = p.terms().size() > termCap;
    auto terms = nlohmann::json::array();
    std::size_t emitted = 0;
    for (auto it = p.terms().rbegin(); it != p.terms().rend() && emitted < termCap; ++it, ++emitted)
        terms.push_back({{"v", std::vector<int>(it->first.begin(), it->first.end())}, {"coeff", it->second.get_str()}});
    j["terms"] = std::move(terms);
    if (p.terms().size() <= termCap) j["text"] = p.toString();
    return j;
}

nlohmann::json toJson(const ExchangeData& b) {
    std::vector<bool> frozen(b.frozen.begin(), b.frozen.end());
    auto labels = nlohmann::json::object();
    for (std::size_t i = 0; i < b.size(); ++i) labels[b.indices[i]] = b.labels[i];
    return {{"indices", b.indices}, {"labels", labels}, {"frozen", frozen}, {"B", b.B}};
}

ExchangeData exchangeFromJson(const nlohmann::json& j) {
    try {
        auto ids = j.at("indices").get<std::vector<std::string>>();
        auto frozen = j.at("frozen").get<std::vector<bool>>();
        auto B = j.at("B").get<IntMatrix>();
        ExchangeData b = ExchangeData::make(ids, frozen, B);
        // Labels arrive as {id: label}; ids without an entry keep their id.
        if (j.contains("labels")) {
            const auto& labels = j["labels"];
            if (!labels.is_object()) throw makeError("ParseError", "labels must map ids to labels");
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (labels.contains(ids[i])) b.labels[i] = labels[ids[i]].get<std::string>();
        }
        return b;
    } catch (const nlohmann::json::exception& e) {
        throw makeError("ParseError", e.what());
    }
}

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qclust
