#pragma once

#include <string>

#include <json.hpp>

namespace hilbert::report {

using json = nlohmann::json;

// Machine-readable run report. JSON is the canonical format (keys sorted,
// compact dump); CSV is a flat projection of the rows. The timestamp is
// RFC 3339 and excluded from the canonical form used for determinism
// comparisons.
struct Report {
    std::string schema_version;
    std::string tool_version;
    std::string timestamp;
    json config = json::object();
    json rows = json::array();
    json summary = json::object();

    Report();

    json to_json() const;
    std::string canonical_json() const;
    std::string to_csv() const;
};

std::string rfc3339_now();

}  // namespace hilbert::report
