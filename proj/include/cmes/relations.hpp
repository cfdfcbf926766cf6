#pragma once

// Registry of every named identity the engine verifies, with a uniform
// checker producing machine-readable reports. Checks are exact coefficient
// equalities of truncated objects; there are no tolerances. An identity
// whose stated range does not fit the context truncation reports "skipped"
// rather than silently passing.

#include "cmes/eisenstein.hpp"

#include <string>
#include <vector>

namespace cmes {

struct RelationReport {
    std::string id;
    TruncationParams trunc;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string detail;  // first offending location/values, or the skip reason

    bool passed() const { return status == "pass"; }
    bool failed() const { return status == "fail"; }
    std::string json_line() const;
};

// ids in fixed registry order
std::vector<std::string> registry_ids();

// throws std::invalid_argument on an unknown id (message lists the registry)
RelationReport check_identity(const std::string& id, EisContext& ctx);

std::vector<RelationReport> run_all(EisContext& ctx);

inline bool none_failed(const std::vector<RelationReport>& reports) {
    for (const auto& r : reports)
        if (r.failed()) return false;
    return true;
}

}  // namespace cmes
