#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace anofol {

// Fixed 17-significant-digit rendering for every number that reaches an
// output file; shortest-roundtrip printing would also be reproducible, but
// pinning the digit count makes the byte-exactness contract explicit.
inline std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct property_record {
    std::string id;
    std::string ref;  // label of the claim being exercised
    long samples = 0;
    double worst_residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct verification_report {
    std::vector<property_record> properties;

    bool pass() const {
        for (const property_record& r : properties)
            if (!r.pass) return false;
        return true;
    }

    std::string to_json() const {
        std::string out = "{\"properties\":[";
        bool first = true;
        for (const property_record& r : properties) {
            if (!first) out += ",";
            first = false;
            out += "{\"id\":\"" + r.id + "\",\"paper_ref\":\"" + r.ref +
                   "\",\"samples\":" + std::to_string(r.samples) +
                   ",\"worst_residual\":" + format_number(r.worst_residual) +
                   ",\"threshold\":" + format_number(r.threshold) +
                   ",\"pass\":" + (r.pass ? "true" : "false") + "}";
        }
        out += "],\"pass\":";
        out += pass() ? "true" : "false";
        out += "}\n";
        return out;
    }
};

}  // namespace anofol
