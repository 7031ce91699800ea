#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tau_atlas {

// Outcome of one family of checks.
struct CheckReport {
    CheckReport() = default;
    explicit CheckReport(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void expect(bool cond, const std::string& what) {
        ++checked;
        if (!cond && failures.size() < 50) failures.push_back(what);
    }
    void absorb(const CheckReport& other) {
        checked += other.checked;
        for (const auto& f : other.failures) failures.push_back(other.name + ": " + f);
    }
};

}  // namespace tau_atlas
