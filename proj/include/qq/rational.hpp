#pragma once

#include <gmpxx.h>

#include <string>

#include "qq/error.hpp"
#include "qq/rng.hpp"

namespace qq {

// Exact rational scalar. GMP keeps values in lowest terms with positive
// denominator, which is exactly the invariant the domain types need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q". Throws errc::parse on anything else.
inline Rat parse_rat(const std::string& text) {
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw error(errc::parse, "bad rational: '" + text + "'");
    }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

// Nonzero rational with numerator and denominator bounded by height.
inline Rat random_rat_nonzero(SplitMix& rng, long height) {
    long num = rng.range(1, height);
    long den = rng.range(1, height);
    if (rng.coin()) num = -num;
    return rat(num, den);
}

inline Rat random_rat(SplitMix& rng, long height) {
    if (rng.below(4) == 0) return Rat(0);
    return random_rat_nonzero(rng, height);
}

} // namespace qq
