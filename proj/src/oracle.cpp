#include "qq/oracle.hpp"
#include "qq/char2.hpp"

#include <algorithm>

#include "qq/error.hpp"
#include "qq/pan_axioms.hpp"

namespace qq {

Series random_A_element(SplitMix& rng, unsigned precision, long height) {
    std::map<unsigned, GaussRat> coeffs;
    GaussRat c0(random_rat(rng, height));
    if (!c0.is_zero()) coeffs.emplace(0u, c0);
    for (unsigned e = 1; e < precision; ++e) {
        if (rng.below(2) == 0) continue; // keep the support sparse
        GaussRat c(random_rat(rng, height), random_rat(rng, height));
        if (!c.is_zero()) coeffs.emplace(e, c);
    }
    return Series(std::move(coeffs), precision);
}

Series sample_closure_element(const std::vector<Series>& gens, const SampleConfig& cfg,
                              SplitMix& rng) {
    if (gens.empty()) throw error(errc::precondition, "no generators to sample from");
    unsigned n = 1 + static_cast<unsigned>(rng.below(cfg.max_summands));
    Series acc = Series::zero(cfg.precision);
    for (unsigned i = 0; i < n; ++i) {
        const Series& s = gens[rng.below(gens.size())];
        Series a = random_A_element(rng, cfg.precision, cfg.coeff_height);
        acc = acc + a * a * s;
    }
    return acc;
}

Series sample_member(const QQModule& M, SplitMix& rng, unsigned precision, long height) {
    if (M.is_zero_module()) return Series::zero(precision);
    unsigned m = M.min_level();
    // pick a valuation level with a nonzero cone
    std::vector<unsigned> levels;
    for (unsigned g = m; g <= m + 3; ++g)
        if (!level_of(M, g).is_zero()) levels.push_back(g);
    unsigned g = levels[rng.below(levels.size())];
    GaussRat lead = cone_sample_point(level_of(M, g), rng, height);
    if (lead.is_zero()) return Series::zero(precision);
    std::map<unsigned, GaussRat> coeffs;
    coeffs.emplace(g, lead);
    for (unsigned e = g + 1; e < precision; ++e) {
        if (rng.below(2) == 0) continue;
        GaussRat c(random_rat(rng, height), random_rat(rng, height));
        if (!c.is_zero()) coeffs.emplace(e, c);
    }
    return Series(std::move(coeffs), precision);
}

Series sample_mixed(const QQModule& M, SplitMix& rng, unsigned precision, long height) {
    switch (rng.below(3)) {
    case 0: return sample_member(M, rng, precision, height);
    case 1: return random_A_element(rng, precision, height);
    default: {
        // a low-valuation element, likely outside the module
        unsigned g = static_cast<unsigned>(
            rng.below(M.is_zero_module() ? 3 : M.min_level() + 2));
        GaussRat lead = g == 0 ? GaussRat(random_rat_nonzero(rng, height))
                               : random_gauss_nonzero(rng, height);
        Series tail = random_A_element(rng, precision, height);
        Series mono = Series::monomial(lead, g, precision);
        return mono + Series::monomial(GaussRat(1), g + 1, precision) * tail;
    }
    }
}

SearchResult bounded_realization_search(const Series& target, const std::vector<Series>& gens,
                                        const SampleConfig& cfg) {
    SearchResult res;
    if (gens.empty()) return res;
    // structured pass: small monomial coefficients a = q X^e
    std::vector<Series> small;
    for (long num = 1; num <= 3; ++num)
        for (long den = 1; den <= 2; ++den)
            for (unsigned e = 0; e <= 2; ++e) {
                for (const GaussRat& u :
                     {GaussRat(rat(num, den)), GaussRat(Rat(0), rat(num, den))})
                    small.push_back(Series::monomial(u, e, cfg.precision));
            }
    auto check = [&](const std::vector<std::pair<Series, Series>>& combo) {
        Series acc = Series::zero(cfg.precision);
        for (const auto& [a, s] : combo) acc = acc + a * a * s;
        if (agree_to_precision(acc, target)) {
            res.found = true;
            res.combination = combo;
            return true;
        }
        return false;
    };
    // single terms
    for (const Series& g : gens)
        for (const Series& a : small)
            if (check({{a, g}})) return res;
    // pairs of terms over the small grid
    for (const Series& g1 : gens)
        for (const Series& g2 : gens)
            for (const Series& a1 : small)
                for (const Series& a2 : small)
                    if (check({{a1, g1}, {a2, g2}})) return res;
    // randomized pass within the configured bounds
    SplitMix rng = cfg.rng_for(0x5ea7c4);
    for (std::size_t i = 0; i < cfg.count; ++i) {
        unsigned n = 1 + static_cast<unsigned>(rng.below(cfg.max_summands));
        std::vector<std::pair<Series, Series>> combo;
        for (unsigned k = 0; k < n; ++k)
            combo.emplace_back(random_A_element(rng, cfg.precision, cfg.coeff_height),
                               gens[rng.below(gens.size())]);
        if (check(combo)) return res;
    }
    return res;
}

std::vector<F4Submodule> enumerate_f4_submodules() {
    std::vector<F4Submodule> out;
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (!(mask & 1u)) continue; // must contain zero
        bool closed = true;
        for (unsigned i = 0; i < 4 && closed; ++i)
            for (unsigned j = 0; j < 4 && closed; ++j)
                if (((mask >> i) & 1u) && ((mask >> j) & 1u) && !((mask >> (i ^ j)) & 1u))
                    closed = false;
        // square scaling by the prime field {0,1} is automatic, but scan it
        for (unsigned a = 0; a < 2 && closed; ++a) {
            F4 sq = F4(a).square();
            for (unsigned i = 0; i < 4 && closed; ++i)
                if (((mask >> i) & 1u) && !((mask >> (sq * F4(i)).bits()) & 1u))
                    closed = false;
        }
        if (closed) out.push_back(F4Submodule::of_mask(mask));
    }
    return out;
}

} // namespace qq
