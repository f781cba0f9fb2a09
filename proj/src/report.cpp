#include "qclust/report.hpp"

namespace qclust {

nlohmann::json Report::toJson() const {
    nlohmann::json j{{"check", check}, {"params", params}, {"status", ok ? "pass" : "fail"}};
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

bool ReportBook::ok() const { return failures() == 0; }

std::size_t ReportBook::failures() const {
    std::size_t n = 0;
    for (const auto& r : reports)
        if (!r.ok) ++n;
    return n;
}

const Report* ReportBook::firstFailure() const {
    for (const auto& r : reports)
        if (!r.ok) return &r;
    return nullptr;
}

}  // namespace qclust
