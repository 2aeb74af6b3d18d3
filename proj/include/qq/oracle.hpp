#pragma once

#include <functional>
#include <vector>

#include "qq/char2_module.hpp"
#include "qq/qq_module.hpp"
#include "qq/report.hpp"

namespace qq {

// Parameters of every randomized check; identical configs (seed included)
// reproduce identical sample streams bit-for-bit.
struct SampleConfig {
    std::uint64_t seed = 0;
    std::size_t count = 1000;
    unsigned max_summands = 4;
    long coeff_height = 8;
    unsigned precision = 12;

    SplitMix rng_for(std::uint64_t batch) const { return SplitMix(seed).split(batch); }
};

// Random element of A with bounded coefficient height.
Series random_A_element(SplitMix& rng, unsigned precision, long height);

// Random sum a_1^2 s_1 + ... + a_n^2 s_n over the generators.
Series sample_closure_element(const std::vector<Series>& gens, const SampleConfig& cfg,
                              SplitMix& rng);

// Random member of a module in normal form (by valuation level and a leading
// coefficient drawn from the level cone).
Series sample_member(const QQModule& M, SplitMix& rng, unsigned precision, long height = 8);

// Random element of A for mixed positive/negative membership checks.
Series sample_mixed(const QQModule& M, SplitMix& rng, unsigned precision, long height = 8);

// Searches the bounded grid of quasi-quadratic combinations of the generators
// for an exact representation of the target. "Not found" is evidence, not
// proof; pair it with an analytic certificate.
struct SearchResult {
    bool found = false;
    std::vector<std::pair<Series, Series>> combination; // (a_i, s_i) terms a_i^2 s_i
};
SearchResult bounded_realization_search(const Series& target, const std::vector<Series>& gens,
                                        const SampleConfig& cfg);

// Exhaustive scan of all 16 subsets of the four-element field for closure
// under addition and prime-field square scaling: exactly the five additive
// subgroups.
std::vector<F4Submodule> enumerate_f4_submodules();

// Per-sample agreement of two membership predicates; the first disagreement
// is recorded with its input for reproduction.
template <class T>
Report set_equiv_report(const std::function<bool(const T&)>& pred_a,
                        const std::function<bool(const T&)>& pred_b,
                        const std::vector<T>& samples,
                        const std::function<std::string(const T&)>& describe) {
    Report r;
    r.name = "set-equivalence";
    for (const T& x : samples) {
        if (pred_a(x) == pred_b(x))
            r.ok();
        else
            r.fail(describe(x));
    }
    return r;
}

} // namespace qq
