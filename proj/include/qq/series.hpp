#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qq/gauss.hpp"

namespace qq {

// Valuation of a truncated series: either the exact least exponent with a
// nonzero coefficient, or the statement that all known coefficients vanish.
struct Valuation {
    enum class Kind { finite, at_least };
    Kind kind;
    unsigned value;

    static Valuation finite(unsigned n) { return {Kind::finite, n}; }
    static Valuation at_least(unsigned n) { return {Kind::at_least, n}; }

    bool is_finite() const { return kind == Kind::finite; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.kind == b.kind && a.value == b.value;
    }
};

std::string to_string(const Valuation& v);

// Truncated formal power series over the Gaussian rationals. Coefficients are
// known exactly for exponents < precision and unknown beyond; stored
// coefficients are nonzero. Values are immutable after construction.
class Series {
public:
    static constexpr unsigned max_precision = 64; // desk-scale guarantee

    // Truncates away exponents >= precision and drops zero coefficients.
    Series(std::map<unsigned, GaussRat> coeffs, unsigned precision);

    static Series zero(unsigned precision) { return Series({}, precision); }
    static Series one(unsigned precision) { return monomial(GaussRat(1), 0, precision); }
    static Series monomial(const GaussRat& c, unsigned exponent, unsigned precision);

    const std::map<unsigned, GaussRat>& coeffs() const { return coeffs_; }
    unsigned precision() const { return precision_; }

    GaussRat coeff(unsigned exponent) const; // zero when absent or >= precision
    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const Series& a, const Series& b) {
        return a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series truncated(unsigned precision) const { return Series(coeffs_, precision); }

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    // Defined only when the quotient stays in C[[X]]; see series_div.
    friend Series operator/(const Series& a, const Series& b);

private:
    std::map<unsigned, GaussRat> coeffs_;
    unsigned precision_;
};

Valuation val(const Series& s);

// Leading coefficient (pseudo-angular component). Requires finite valuation.
GaussRat pan(const Series& s);

// Membership in A = R + X*C[[X]]: real constant term.
bool in_A(const Series& s);

// Strict units are series with constant coefficient exactly 1.
bool is_strict_unit(const Series& s);

// Unique square root with constant coefficient 1 of a strict unit,
// coefficient-exact to the input precision.
Series sqrt_strict_unit(const Series& s);

// Given val(x) = val(y) (mod 2), pan(x) = pan(y) and val(y) >= val(x),
// returns u in A with y = u^2 * x to working precision.  When the valuations
// are equal, u is a unit of A with constant coefficient +-1.
Series square_witness(const Series& x, const Series& y);

// u = k*X^g; then val(u) = g and pan(a*u^2) = pan(a)*k^2.
Series mixed_square_witness(const Series& a, unsigned g, const GaussRat& k);

enum class ArithOp { add, sub, mul, div };
Series series_arith(ArithOp op, const Series& a, const Series& b);

// Text grammar: terms joined by +/-; term = coefficient, optional X or X^k;
// coefficient = (re+imi) | re | imi | i; rationals as p/q.
// Default precision is (max written exponent) + 4 unless overridden.
Series parse_series(const std::string& text,
                    std::optional<unsigned> precision_override = std::nullopt);

std::string to_string(const Series& s);

} // namespace qq
