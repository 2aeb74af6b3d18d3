#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qq {

// Outcome of a batch check. Failures are data, not errors; the first few are
// kept verbatim so a counterexample can be replayed from the report alone.
struct Report {
    std::string name;
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> examples;

    Report() = default;
    explicit Report(std::string n) : name(std::move(n)) {}

    void ok() { ++checked; }
    void fail(const std::string& what) {
        ++checked;
        ++failed;
        if (examples.size() < 8) examples.push_back(what);
    }
    bool pass() const { return failed == 0; }
};

std::string to_text(const Report& r);
std::string to_text(const std::vector<Report>& rs);

} // namespace qq
