#pragma once

#include <string>

#include "qq/rational.hpp"

namespace qq {

// Gaussian rational: the exact stand-in for a complex scalar. The real
// subfield (im == 0) plays the role of the residue field of A.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    GaussRat operator-() const { return {-re, -im}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        if (b.is_zero()) throw error(errc::domain, "division by zero Gaussian rational");
        Rat n = b.norm();
        GaussRat t = a * b.conj();
        return {t.re / n, t.im / n};
    }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
};

inline GaussRat gauss_i() { return GaussRat(Rat(0), Rat(1)); }

// "2+3i", "-1/2", "i", "-i", "3i". Pure display form; the series parser has
// its own coefficient grammar.
std::string to_string(const GaussRat& z);

inline GaussRat random_gauss_nonzero(SplitMix& rng, long height) {
    GaussRat z(random_rat(rng, height), random_rat(rng, height));
    if (z.is_zero()) z.re = rat(rng.range(1, height));
    return z;
}

} // namespace qq
