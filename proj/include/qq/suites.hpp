#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qq/report.hpp"

namespace qq::suites {

struct SuiteResult {
    std::string name;
    std::vector<Report> reports;
    double seconds = 0;

    bool pass() const {
        for (const Report& r : reports)
            if (!r.pass()) return false;
        return true;
    }
    std::size_t checked() const {
        std::size_t n = 0;
        for (const Report& r : reports) n += r.checked;
        return n;
    }
};

// Normal-form/family round trips over the module catalog.
SuiteResult run_bijection(std::uint64_t seed);

// Membership versus the union of reconstruction sets over the level window.
SuiteResult run_decomposition(std::uint64_t seed, std::size_t samples_per_module = 1000);

// Intersection as conjunction, sums landing, and exact sum realizations.
SuiteResult run_lattice(std::uint64_t seed, std::size_t pairs = 100,
                        std::size_t samples_per_pair = 1000);

// Generator round trips, strict shrinkage for non-finitely-generated modules,
// and the square-scale decomposition.
SuiteResult run_fg(std::uint64_t seed, std::size_t decompose_count = 1000,
                   std::size_t shrink_rounds = 20);

// The leading-coefficient map axioms with constructive witnesses.
SuiteResult run_axioms(std::uint64_t seed, std::size_t pair_count = 10000);

// Characteristic two: classification round trips, lattice laws against the
// descriptor grid, the two-squares witness, and membership upgrades.
SuiteResult run_char2(std::uint64_t seed, std::size_t random_count = 1000);

// Closure sampling of every catalog module in both characteristics.
SuiteResult run_structural(std::uint64_t seed, std::size_t total_samples = 10000);

std::vector<SuiteResult> run_all(std::uint64_t seed);

// Named entry point for the command line: axioms | decomp | lattice | fg |
// char2 | all. A nonzero count overrides the per-check sample count.
// Throws errc::precondition for unknown names.
std::vector<SuiteResult> run_named(const std::string& name, std::uint64_t seed,
                                   std::size_t count = 0);

std::string to_text(const SuiteResult& s);

} // namespace qq::suites
