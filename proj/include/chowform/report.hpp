#pragma once

#include <string>
#include <vector>

namespace chowform {

struct Violation {
    std::string code;    // stable identifier, e.g. "cell-not-cycle"
    std::string message; // human-readable detail naming the offending ids
};

/// Outcome of a validator: empty means every checked invariant holds.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string code, std::string message) {
        violations.push_back({std::move(code), std::move(message)});
    }
    void merge(const ValidationReport& o) {
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
    std::string to_text() const {
        if (ok())
            return "pass";
        std::string out;
        for (const auto& v : violations) {
            if (!out.empty())
                out += '\n';
            out += "  - [" + v.code + "] " + v.message;
        }
        return out;
    }
};

} // namespace chowform
