#include "hilbert/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "hilbert/version.hpp"

namespace hilbert::report {

Report::Report() : schema_version(kSchemaVersion), tool_version(kToolVersion),
                   timestamp(rfc3339_now()) {}

std::string rfc3339_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

json Report::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["tool_version"] = tool_version;
    j["timestamp"] = timestamp;
    j["config"] = config;
    j["rows"] = rows;
    j["summary"] = summary;
    return j;
}

std::string Report::canonical_json() const {
    json j = to_json();
    j.erase("timestamp");
    return j.dump();
}

namespace {
std::string csv_cell(const json& v) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"') out += '"';
                out += c;
            }
            out += '"';
            return out;
        }
        return s;
    }
    return v.dump();
}
}  // namespace

std::string Report::to_csv() const {
    std::ostringstream os;
    if (rows.empty()) return os.str();
    // columns: sorted keys of the first row (rows are homogeneous per subcommand)
    const json& first = rows.front();
    bool lead = true;
    for (auto it = first.begin(); it != first.end(); ++it) {
        if (!lead) os << ',';
        os << it.key();
        lead = false;
    }
    os << '\n';
    for (const json& row : rows) {
        lead = true;
        for (auto it = first.begin(); it != first.end(); ++it) {
            if (!lead) os << ',';
            os << (row.contains(it.key()) ? csv_cell(row.at(it.key())) : std::string());
            lead = false;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hilbert::report
