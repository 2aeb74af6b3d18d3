#pragma once

#include <map>
#include <optional>
#include <string>

#include "qq/error.hpp"
#include "qq/rng.hpp"

namespace qq {

// The four-element field, encoded as bit pairs a + b*w with w^2 = w + 1.
// Squaring is the Frobenius map, a bijection, so every element has a unique
// square root.
class F4 {
public:
    constexpr F4() : bits_(0) {}
    constexpr explicit F4(unsigned bits) : bits_(bits & 3u) {}

    static constexpr F4 zero() { return F4(0); }
    static constexpr F4 one() { return F4(1); }
    static constexpr F4 omega() { return F4(2); }
    static constexpr F4 omega1() { return F4(3); }

    unsigned bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    bool in_f2() const { return bits_ < 2; }

    friend constexpr F4 operator+(F4 a, F4 b) { return F4(a.bits_ ^ b.bits_); }
    friend constexpr F4 operator*(F4 a, F4 b) {
        unsigned a0 = a.bits_ & 1u, a1 = a.bits_ >> 1;
        unsigned b0 = b.bits_ & 1u, b1 = b.bits_ >> 1;
        unsigned c0 = (a0 & b0) ^ (a1 & b1);
        unsigned c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        return F4(c0 | (c1 << 1));
    }
    friend constexpr bool operator==(F4 a, F4 b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(F4 a, F4 b) { return a.bits_ != b.bits_; }

    F4 square() const { return *this * *this; }
    // Frobenius is an involution here: x^4 = x.
    F4 sqrt() const { return square(); }

private:
    unsigned bits_;
};

std::string to_string(F4 c); // 0 | 1 | w | w+1

// Nonnegative dyadic rational num / 2^kexp in reduced form (num odd or
// kexp = 0). The dense value group of the characteristic-two model.
struct Dyadic {
    long long num = 0;
    unsigned kexp = 0;

    static Dyadic make(long long num, unsigned kexp);
    static Dyadic integer(long long n) { return make(n, 0); }

    Dyadic halved() const;
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num == b.num && a.kexp == b.kexp;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b);
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }
};

std::string to_string(const Dyadic& d); // "3/2"
Dyadic parse_dyadic(const std::string& text);

// (valuation, leading coefficient) of a characteristic-two element; the zero
// element carries an infinite valuation and the zero marker.
struct Descriptor {
    std::optional<Dyadic> v;
    F4 p;

    static Descriptor zero() { return {std::nullopt, F4::zero()}; }
    static Descriptor of(Dyadic val, F4 lead) { return {val, lead}; }
    bool is_zero() const { return !v.has_value(); }

    friend bool operator==(const Descriptor& a, const Descriptor& b) {
        return a.v == b.v && a.p == b.p;
    }
};

std::string to_string(const Descriptor& d);

// Finitely supported series over F4 with dyadic exponents. Every element is a
// square, and sums/products of finitely supported elements stay finitely
// supported, so no truncation bookkeeping is needed.
class DyadicSeries {
public:
    DyadicSeries() = default;
    explicit DyadicSeries(std::map<Dyadic, F4> terms);

    static DyadicSeries zero() { return DyadicSeries(); }
    static DyadicSeries one() { return term(F4::one(), Dyadic::integer(0)); }
    static DyadicSeries term(F4 c, Dyadic e);

    const std::map<Dyadic, F4>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    F4 coeff(const Dyadic& e) const;

    friend bool operator==(const DyadicSeries& a, const DyadicSeries& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const DyadicSeries& a, const DyadicSeries& b) {
        return !(a == b);
    }

    friend DyadicSeries operator+(const DyadicSeries& a, const DyadicSeries& b);
    friend DyadicSeries operator*(const DyadicSeries& a, const DyadicSeries& b);

private:
    std::map<Dyadic, F4> terms_;
};

Descriptor dy_val_pan(const DyadicSeries& s);

// The unique t with t*t = s: exponents halve, coefficients pass through the
// inverse Frobenius.
DyadicSeries dy_sqrt(const DyadicSeries& s);

// Constant coefficient in the prime field.
bool dy_in_A(const DyadicSeries& s);

// For x with positive (or infinite) valuation: (u, v) with u^2 + v^2 = x.
std::pair<DyadicSeries, DyadicSeries> two_squares(const DyadicSeries& x);

// Text grammar: terms joined by '+'; term = coeff | coeff '*' X-part | X-part;
// coeff = 0 | 1 | w | (w+1); X-part = X | X^2 | X^{3/2}.
DyadicSeries parse_dyadic_series(const std::string& text);
std::string to_string(const DyadicSeries& s);

DyadicSeries random_dyadic_series(SplitMix& rng, unsigned max_terms = 4,
                                  unsigned max_num = 8, unsigned max_kexp = 3);

} // namespace qq
