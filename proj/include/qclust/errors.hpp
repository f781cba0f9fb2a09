#pragma once

#include <stdexcept>
#include <string>

namespace qclust {

// Every engine failure carries a stable machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

inline Error makeError(const std::string& kind, const std::string& detail) {
    return Error(kind, kind + ": " + detail);
}

}  // namespace qclust
