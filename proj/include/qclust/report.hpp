#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace qclust {

struct Report {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool ok = true;
    nlohmann::json witness;  // null when absent

    nlohmann::json toJson() const;
};

// Aggregates sub-reports; fails if any child fails, keeping the first failure as witness.
struct ReportBook {
    std::vector<Report> reports;
    void add(Report r) { reports.push_back(std::move(r)); }
    void merge(const ReportBook& o) { reports.insert(reports.end(), o.reports.begin(), o.reports.end()); }
    bool ok() const;
    std::size_t failures() const;
    const Report* firstFailure() const;
};

}  // namespace qclust
