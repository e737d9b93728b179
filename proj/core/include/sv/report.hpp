#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sv {

// Outcome of a window-exhaustive or sampled verification sweep. A failing
// check appends a witness string; the witness list is capped so reports stay
// readable on badly broken inputs.
struct CheckReport {
    bool passed = true;
    std::uint64_t checks = 0;
    std::vector<std::string> violations;

    static constexpr std::size_t kMaxWitnesses = 16;

    void count() { ++checks; }
    void fail(std::string witness) {
        passed = false;
        if (violations.size() < kMaxWitnesses) violations.push_back(std::move(witness));
    }
    void merge(const CheckReport& o) {
        passed = passed && o.passed;
        checks += o.checks;
        for (const auto& v : o.violations)
            if (violations.size() < kMaxWitnesses) violations.push_back(v);
    }
};

} // namespace sv
