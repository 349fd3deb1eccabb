#pragma once

#include <string>
#include <vector>

namespace qd {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness; // failure detail, empty on pass
};

struct Report {
    std::string subject;
    std::vector<Check> checks;

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        checks.push_back({name, pass, witness});
    }
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
    std::string to_string() const {
        std::string s;
        for (const auto& c : checks) {
            s += (c.pass ? "[pass] " : "[FAIL] ") + c.name;
            if (!c.pass && !c.witness.empty()) s += "  -- " + c.witness;
            s += "\n";
        }
        return s;
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }
};

} // namespace qd
