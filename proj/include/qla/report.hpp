#pragma once

#include <string>
#include <vector>

namespace qla {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  // first failing instance, empty on success
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool passed, std::string witness = {}) {
        checks.push_back({std::move(name), passed, std::move(witness)});
    }
    void append(const Report &o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    bool passed() const {
        for (const auto &c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult *find(const std::string &name) const {
        for (const auto &c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

}  // namespace qla
