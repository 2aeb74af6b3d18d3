#include "qq/suites.hpp"

#include <chrono>
#include <sstream>

#include "qq/catalog.hpp"
#include "qq/error.hpp"
#include "qq/oracle.hpp"
#include "qq/pan_axioms.hpp"

namespace qq::suites {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr unsigned kPrecision = 12;
constexpr long kHeight = 8;

Series nonzero_A_element(SplitMix& rng, unsigned precision, long height) {
    for (;;) {
        Series s = random_A_element(rng, precision, height);
        if (!s.is_zero()) return s;
    }
}

// Random pair of nonzero A-elements, steered toward the interesting
// configurations: shared valuations, exact leading-term cancellation, and
// square-scaled partners.
std::pair<Series, Series> axiom_pair(SplitMix& rng) {
    Series a = nonzero_A_element(rng, kPrecision, kHeight);
    unsigned va = val(a).value;
    switch (rng.below(4)) {
    case 0: return {a, nonzero_A_element(rng, kPrecision, kHeight)};
    case 1: {
        // same valuation, independent leading coefficient
        GaussRat lead = va == 0 ? GaussRat(random_rat_nonzero(rng, kHeight))
                                : random_gauss_nonzero(rng, kHeight);
        Series b = Series::monomial(lead, va, kPrecision) +
                   Series::monomial(GaussRat(1), va + 1, kPrecision) *
                       random_A_element(rng, kPrecision, kHeight);
        return {a, b};
    }
    case 2: {
        // exact cancellation of the leading terms
        Series tail = Series::monomial(GaussRat(1), va + 1, kPrecision) *
                      random_A_element(rng, kPrecision, kHeight);
        return {a, -a + tail};
    }
    default: {
        // same parity, scaled by a rational square
        Rat k = random_rat_nonzero(rng, kHeight);
        Series b = Series::monomial(GaussRat(k * k), va + 2 * unsigned(rng.below(3)),
                                    kPrecision + 4) *
                   a;
        if (b.is_zero()) return {a, a};
        return {a, b};
    }
    }
}

std::string module_pair_text(const QQModule& a, const QQModule& b) {
    return to_string(a) + " vs " + to_string(b);
}

} // namespace

SuiteResult run_bijection(std::uint64_t seed) {
    auto start = Clock::now();
    SuiteResult res;
    res.name = "bijection";
    Report size{"catalog-size"};
    size.seed = seed;
    const auto& catalog = module_catalog();
    if (catalog.size() >= 200)
        size.ok();
    else
        size.fail("catalog has only " + std::to_string(catalog.size()) + " modules");
    Report round{"normal-form-round-trip"};
    round.seed = seed;
    Report fam_round{"family-round-trip"};
    fam_round.seed = seed;
    for (const QQModule& M : catalog) {
        if (rho(sigma(M)) == M)
            round.ok();
        else
            round.fail(to_string(M));
        LevelFamily fam = sigma(M);
        if (sigma(rho(fam)) == fam)
            fam_round.ok();
        else
            fam_round.fail(to_string(M));
    }
    res.reports = {size, round, fam_round};
    res.seconds = elapsed(start);
    return res;
}

SuiteResult run_decomposition(std::uint64_t seed, std::size_t samples_per_module) {
    auto start = Clock::now();
    SuiteResult res;
    res.name = "decomposition";
    Report agg{"member-vs-psi-union"};
    agg.seed = seed;
    const auto& catalog = module_catalog();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        SplitMix rng = SplitMix(seed).split(i);
        std::vector<Series> samples;
        samples.reserve(samples_per_module);
        for (std::size_t k = 0; k < samples_per_module; ++k)
            samples.push_back(sample_mixed(catalog[i], rng, kPrecision, kHeight));
        Report r = qq_decompose_check(catalog[i], samples);
        agg.checked += r.checked;
        agg.failed += r.failed;
        for (const std::string& e : r.examples)
            if (agg.examples.size() < 8)
                agg.examples.push_back(to_string(catalog[i]) + ": " + e);
    }
    res.reports = {agg};
    res.seconds = elapsed(start);
    return res;
}

SuiteResult run_lattice(std::uint64_t seed, std::size_t pairs, std::size_t samples_per_pair) {
    auto start = Clock::now();
    SuiteResult res;
    res.name = "lattice";
    Report inter{"intersection-is-conjunction"};
    inter.seed = seed;
    Report sums_land{"member-sums-land"};
    sums_land.seed = seed;
    Report realized{"sum-members-realized"};
    realized.seed = seed;

    const auto& catalog = module_catalog();
    SplitMix pick(seed);
    for (std::size_t p = 0; p < pairs; ++p) {
        const QQModule& M1 = catalog[pick.below(catalog.size())];
        const QQModule& M2 = catalog[pick.below(catalog.size())];
        SplitMix rng = SplitMix(seed).split(0x1000 + p);
        QQModule I = qq_intersect(M1, M2);
        QQModule S = qq_sum(M1, M2);

        for (std::size_t k = 0; k < samples_per_pair; ++k) {
            Series x = k % 3 == 0   ? sample_member(M1, rng, kPrecision, kHeight)
                       : k % 3 == 1 ? sample_member(M2, rng, kPrecision, kHeight)
                                    : sample_mixed(I, rng, kPrecision, kHeight);
            bool both = qq_member(M1, x) && qq_member(M2, x);
            if (qq_member(I, x) == both)
                inter.ok();
            else
                inter.fail(module_pair_text(M1, M2) + " on " + to_string(x));
        }

        for (std::size_t k = 0; k < 10; ++k) {
            Series x1 = sample_member(M1, rng, kPrecision, kHeight);
            Series x2 = sample_member(M2, rng, kPrecision, kHeight);
            if (qq_member(S, x1 + x2))
                sums_land.ok();
            else
                sums_land.fail(module_pair_text(M1, M2) + " on " + to_string(x1) + " + " +
                               to_string(x2));
        }

        Series x = sample_member(S, rng, kPrecision, kHeight);
        Series x1 = Series::zero(kPrecision), x2 = Series::zero(kPrecision);
        if (qq_sum_realize(M1, M2, x, x1, x2) && agree_to_precision(x1 + x2, x) &&
            qq_member(M1, x1) && qq_member(M2, x2))
            realized.ok();
        else
            realized.fail(module_pair_text(M1, M2) + " on " + to_string(x));
    }
    res.reports = {inter, sums_land, realized};
    res.seconds = elapsed(start);
    return res;
}

SuiteResult run_fg(std::uint64_t seed, std::size_t decompose_count, std::size_t shrink_rounds) {
    auto start = Clock::now();
    SuiteResult res;
    res.name = "finite-generation";
    Report regen{"generators-regenerate"};
    regen.seed = seed;
    Report shrink{"non-fg-samples-shrink"};
    shrink.seed = seed;
    Report lemma{"square-scale-decomposition"};
    lemma.seed = seed;

    const auto& catalog = module_catalog();
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const QQModule& M = catalog[i];
        if (qq_is_fg(M)) {
            if (qq_from_generators(qq_fg_generators(M)) == M)
                regen.ok();
            else
                regen.fail(to_string(M));
        } else {
            SplitMix rng = SplitMix(seed).split(0x2000 + i);
            for (std::size_t round = 0; round < shrink_rounds; ++round) {
                std::vector<Series> sample;
                for (int k = 0; k < 12; ++k)
                    sample.push_back(sample_member(M, rng, kPrecision, kHeight));
                QQModule regen_mod = qq_from_generators(sample);
                bool smaller =
                    regen_mod != M && qq_intersect(regen_mod, M) == regen_mod;
                if (smaller)
                    shrink.ok();
                else
                    shrink.fail(to_string(M) + " regenerated " + to_string(regen_mod));
            }
        }
    }

    SplitMix rng = SplitMix(seed).split(0x3000);
    for (std::size_t k = 0; k < decompose_count; ++k) {
        Series f = nonzero_A_element(rng, kPrecision, kHeight);
        SquareScaleDecomposition d = lemma43_decompose(f);
        if (agree_to_precision(d.recombine(), f) && in_A(d.base))
            lemma.ok();
        else
            lemma.fail(to_string(f));
    }
    res.reports = {regen, shrink, lemma};
    res.seconds = elapsed(start);
    return res;
}

SuiteResult run_axioms(std::uint64_t seed, std::size_t pair_count) {
    auto start = Clock::now();
    SuiteResult res;
    res.name = "pan-axioms";
    SplitMix rng(seed);
    std::vector<std::pair<Series, Series>> pairs;
    pairs.reserve(pair_count);
    for (std::size_t k = 0; k < pair_count; ++k) pairs.push_back(axiom_pair(rng));
    res.reports = pan_axiom_report(pairs);
    for (Report& r : res.reports) r.seed = seed;
    res.seconds = elapsed(start);
    return res;
}

namespace {

// Realizes a random member of a characteristic-two module as a series.
DyadicSeries sample_c2_member(const Char2Module& M, SplitMix& rng) {
    if (M.segment().is_empty()) return DyadicSeries::zero();
    const Dyadic& cut = M.segment().cut();
    Dyadic v = cut;
    F4 lead;
    bool at_min = M.segment().has_min() && rng.coin();
    if (at_min) {
        if (M.is_d1()) {
            bool min_zero = cut == Dyadic::integer(0);
            lead = min_zero ? F4::one() : F4(1 + unsigned(rng.below(3)));
        } else {
            std::vector<F4> opts;
            for (unsigned b = 1; b < 4; ++b)
                if (M.level().contains(F4(b))) opts.push_back(F4(b));
            lead = opts[rng.below(opts.size())];
        }
    } else {
        v = cut + Dyadic::make(1 + rng.range(0, 7), 3);
        lead = F4(1 + unsigned(rng.below(3)));
    }
    DyadicSeries out = DyadicSeries::term(lead, v);
    for (int extra = rng.range(0, 2); extra > 0; --extra) {
        Dyadic e = v + Dyadic::make(1 + rng.range(0, 7), 2);
        out = out + DyadicSeries::term(F4(1 + unsigned(rng.below(3))), e);
    }
    return out;
}

DyadicSeries random_A_dyadic(SplitMix& rng) {
    DyadicSeries s = random_dyadic_series(rng);
    F4 c0 = s.coeff(Dyadic::integer(0));
    if (!c0.in_f2())
        s = s + DyadicSeries::term(c0 + F4::one(), Dyadic::integer(0));
    return s;
}

// Split search for the sum oracle: x = (x + y) + y over monomial y from the
// descriptor grid.
bool c2_sum_realizable(const Char2Module& M1, const Char2Module& M2, const DyadicSeries& x) {
    if (c2_member(M1, dy_val_pan(x)) || c2_member(M2, dy_val_pan(x))) return true;
    for (const Descriptor& d : descriptor_grid()) {
        if (d.is_zero()) continue;
        DyadicSeries y = DyadicSeries::term(d.p, *d.v);
        if (c2_member(M2, dy_val_pan(y)) && c2_member(M1, dy_val_pan(x + y))) return true;
        if (c2_member(M1, dy_val_pan(y)) && c2_member(M2, dy_val_pan(x + y))) return true;
    }
    return false;
}

} // namespace

SuiteResult run_char2(std::uint64_t seed, std::size_t random_count) {
    auto start = Clock::now();
    SuiteResult res;
    res.name = "char2";
    Report bij{"classifier-round-trip"};
    bij.seed = seed;
    Report lattice{"lattice-vs-descriptor-grid"};
    lattice.seed = seed;
    Report squares{"two-squares-witness"};
    squares.seed = seed;
    Report upgrade{"membership-upgrade"};
    upgrade.seed = seed;

    const auto& catalog = char2_catalog();

    // classifier identities, exhaustively in both directions
    for (const Char2Module& M : catalog) {
        if (c2_psi(c2_phi(M)) == M)
            bij.ok();
        else
            bij.fail(to_string(M));
    }
    {
        const std::vector<Dyadic> cuts = {Dyadic::integer(0), Dyadic::make(1, 1),
                                          Dyadic::integer(1), Dyadic::make(3, 1),
                                          Dyadic::integer(2)};
        std::vector<C2Classifier> space;
        space.push_back({FinalSegment::empty(), std::nullopt});
        for (const Dyadic& cut : cuts) {
            space.push_back({FinalSegment::from(cut, false), std::nullopt});
            std::vector<F4Submodule> levels = {F4Submodule::f2()};
            if (cut != Dyadic::integer(0)) {
                levels.push_back(F4Submodule::omega_line());
                levels.push_back(F4Submodule::omega1_line());
                levels.push_back(F4Submodule::all());
            }
            for (F4Submodule lv : levels)
                space.push_back({FinalSegment::from(cut, true), lv});
        }
        for (const C2Classifier& cls : space) {
            if (c2_phi(c2_psi(cls)) == cls)
                bij.ok();
            else
                bij.fail("classifier(" + to_string(cls.segment) + ")");
        }
    }

    // lattice laws against exhaustive set semantics on the grid
    for (const Char2Module& M1 : catalog) {
        for (const Char2Module& M2 : catalog) {
            Char2Module I = c2_intersect(M1, M2);
            Char2Module S = c2_sum(M1, M2);
            bool all_ok = true;
            std::string witness;
            for (const Descriptor& d : descriptor_grid()) {
                bool conj = c2_member(M1, d) && c2_member(M2, d);
                if (c2_member(I, d) != conj) {
                    all_ok = false;
                    witness = "intersection at " + to_string(d);
                    break;
                }
                DyadicSeries x =
                    d.is_zero() ? DyadicSeries::zero() : DyadicSeries::term(d.p, *d.v);
                if (c2_member(S, d) != c2_sum_realizable(M1, M2, x)) {
                    all_ok = false;
                    witness = "sum at " + to_string(d);
                    break;
                }
            }
            if (all_ok)
                lattice.ok();
            else
                lattice.fail(to_string(M1) + " / " + to_string(M2) + ": " + witness);
        }
    }

    SplitMix rng(seed);
    for (std::size_t k = 0; k < random_count; ++k) {
        // an element of the maximal ideal
        DyadicSeries x = random_dyadic_series(rng);
        F4 c0 = x.coeff(Dyadic::integer(0));
        if (!c0.is_zero()) x = x + DyadicSeries::term(c0, Dyadic::integer(0));
        auto [u, v] = two_squares(x);
        if (u * u + v * v == x && dy_in_A(u) && dy_in_A(v))
            squares.ok();
        else
            squares.fail(to_string(x));
    }

    for (std::size_t k = 0; k < random_count; ++k) {
        const Char2Module& M = catalog[rng.below(catalog.size())];
        DyadicSeries x = sample_c2_member(M, rng);
        if (x.is_zero()) {
            upgrade.ok();
            continue;
        }
        DyadicSeries z = random_dyadic_series(rng);
        F4 c0 = z.coeff(Dyadic::integer(0));
        if (!c0.is_zero()) z = z + DyadicSeries::term(c0, Dyadic::integer(0));
        if (z.is_zero()) z = DyadicSeries::term(F4::one(), Dyadic::make(1, 1));
        DyadicSeries y = z * x; // strictly higher valuation than x
        auto [u, v] = two_squares(z);
        bool witness_exact = (u * u + v * v) * x == y;
        if (witness_exact && c2_member(M, dy_val_pan(x)) && c2_member(M, dy_val_pan(y)))
            upgrade.ok();
        else
            upgrade.fail(to_string(x) + " * " + to_string(z));
    }

    res.reports = {bij, lattice, squares, upgrade};
    res.seconds = elapsed(start);
    return res;
}

SuiteResult run_structural(std::uint64_t seed, std::size_t total_samples) {
    auto start = Clock::now();
    SuiteResult res;
    res.name = "structural-closure";
    Report closure{"sum-and-square-closure"};
    closure.seed = seed;
    Report closure2{"char2-sum-and-square-closure"};
    closure2.seed = seed;

    const auto& catalog = module_catalog();
    std::size_t per_module = (total_samples * 7 / 10) / catalog.size() + 1;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const QQModule& M = catalog[i];
        SplitMix rng = SplitMix(seed).split(0x4000 + i);
        for (std::size_t k = 0; k < per_module; ++k) {
            Series x = sample_member(M, rng, kPrecision, kHeight);
            Series y = sample_member(M, rng, kPrecision, kHeight);
            Series a = random_A_element(rng, kPrecision, kHeight);
            if (qq_member(M, x + y) && qq_member(M, a * a * x))
                closure.ok();
            else
                closure.fail(to_string(M) + " on " + to_string(x) + ", " + to_string(y));
        }
    }

    const auto& c2cat = char2_catalog();
    std::size_t per_c2 = (total_samples * 3 / 10) / c2cat.size() + 1;
    for (std::size_t i = 0; i < c2cat.size(); ++i) {
        const Char2Module& M = c2cat[i];
        SplitMix rng = SplitMix(seed).split(0x5000 + i);
        for (std::size_t k = 0; k < per_c2; ++k) {
            DyadicSeries x = sample_c2_member(M, rng);
            DyadicSeries y = sample_c2_member(M, rng);
            DyadicSeries a = random_A_dyadic(rng);
            if (c2_member(M, dy_val_pan(x + y)) && c2_member(M, dy_val_pan(a * a * x)))
                closure2.ok();
            else
                closure2.fail(to_string(M) + " on " + to_string(x) + ", " + to_string(y));
        }
    }

    res.reports = {closure, closure2};
    res.seconds = elapsed(start);
    return res;
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
    return {run_bijection(seed),  run_decomposition(seed), run_lattice(seed),
            run_fg(seed),         run_axioms(seed),        run_char2(seed),
            run_structural(seed)};
}

std::vector<SuiteResult> run_named(const std::string& name, std::uint64_t seed,
                                   std::size_t count) {
    if (name == "axioms") return {run_axioms(seed, count ? count : 10000)};
    if (name == "decomp")
        return {run_bijection(seed), run_decomposition(seed, count ? count : 1000)};
    if (name == "lattice") return {run_lattice(seed, 100, count ? count : 1000)};
    if (name == "fg") return {run_fg(seed, count ? count : 1000)};
    if (name == "char2") return {run_char2(seed, count ? count : 1000)};
    if (name == "all") return run_all(seed);
    throw error(errc::precondition, "unknown suite: " + name);
}

std::string to_text(const SuiteResult& s) {
    std::ostringstream os;
    os << "suite " << s.name << ": " << (s.pass() ? "PASS" : "FAIL") << " ("
       << s.checked() << " checks, " << s.seconds << "s)\n";
    for (const Report& r : s.reports) os << "  " << qq::to_text(r);
    return os.str();
}

} // namespace qq::suites
