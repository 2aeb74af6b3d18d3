#pragma once

#include <optional>
#include <vector>

#include "qq/char2.hpp"

namespace qq {

// Upward-closed set of nonnegative dyadic exponents, encoded as a cut. An
// inclusive cut is the minimum; an exclusive cut has no minimum since the
// dyadics are dense.
class FinalSegment {
public:
    static FinalSegment empty() { return FinalSegment(); }
    static FinalSegment from(Dyadic cut, bool inclusive) {
        FinalSegment s;
        s.empty_ = false;
        s.cut_ = cut;
        s.inclusive_ = inclusive;
        return s;
    }
    static FinalSegment everything() { return from(Dyadic::integer(0), true); }

    bool is_empty() const { return empty_; }
    const Dyadic& cut() const;
    bool inclusive() const;
    bool has_min() const { return !empty_ && inclusive_; }
    bool contains(const Dyadic& g) const;

    friend bool operator==(const FinalSegment& a, const FinalSegment& b) {
        if (a.empty_ != b.empty_) return false;
        if (a.empty_) return true;
        return a.cut_ == b.cut_ && a.inclusive_ == b.inclusive_;
    }
    friend bool operator!=(const FinalSegment& a, const FinalSegment& b) {
        return !(a == b);
    }

private:
    FinalSegment() = default;
    bool empty_ = true;
    Dyadic cut_;
    bool inclusive_ = false;
};

std::string to_string(const FinalSegment& s);

enum class SegOrder { subset, equal, superset };

// Total by the cut representation: one of S1 <= S2, S1 = S2, S1 >= S2.
SegOrder seg_compare(const FinalSegment& s1, const FinalSegment& s2);

// One of the five additive subgroups of F4 (each is automatically closed
// under multiplication by squares from the prime field).
class F4Submodule {
public:
    static F4Submodule zero() { return F4Submodule(0b0001); }
    static F4Submodule f2() { return F4Submodule(0b0011); }
    static F4Submodule omega_line() { return F4Submodule(0b0101); }
    static F4Submodule omega1_line() { return F4Submodule(0b1001); }
    static F4Submodule all() { return F4Submodule(0b1111); }
    // Validates closure; throws errc::validation otherwise.
    static F4Submodule of_mask(unsigned mask);

    unsigned mask() const { return mask_; }
    bool contains(F4 c) const { return (mask_ >> c.bits()) & 1u; }
    bool is_zero() const { return mask_ == 0b0001; }
    bool is_all() const { return mask_ == 0b1111; }
    bool in_f2() const { return (mask_ & 0b1100) == 0; }

    friend F4Submodule intersect(F4Submodule a, F4Submodule b) {
        return F4Submodule(a.mask_ & b.mask_);
    }
    // Additive span of the union.
    friend F4Submodule span(F4Submodule a, F4Submodule b);

    friend bool operator==(F4Submodule a, F4Submodule b) { return a.mask_ == b.mask_; }
    friend bool operator!=(F4Submodule a, F4Submodule b) { return a.mask_ != b.mask_; }

private:
    explicit F4Submodule(unsigned mask) : mask_(mask) {}
    unsigned mask_;
};

std::string to_string(F4Submodule m);

// Normal form of a quasi-quadratic module in the characteristic-two model:
// either a membership set cut out by a final segment alone, or a segment with
// a minimum refined by a level module at that minimum. Construction
// canonicalizes the two overlapping descriptions, so equality is structural.
class Char2Module {
public:
    static Char2Module d1(FinalSegment segment);
    // Requires a segment with a minimum and a nonzero level module; at the
    // zero cut the level module must lie in the prime field.
    static Char2Module d2(FinalSegment segment, F4Submodule level);

    bool is_d1() const { return d1_; }
    const FinalSegment& segment() const { return seg_; }
    F4Submodule level() const; // d2 only

    friend bool operator==(const Char2Module& a, const Char2Module& b) {
        return a.d1_ == b.d1_ && a.seg_ == b.seg_ &&
               (a.d1_ || a.level_ == b.level_);
    }
    friend bool operator!=(const Char2Module& a, const Char2Module& b) {
        return !(a == b);
    }

private:
    Char2Module(bool d1, FinalSegment seg, F4Submodule level)
        : d1_(d1), seg_(std::move(seg)), level_(level) {}
    bool d1_;
    FinalSegment seg_;
    F4Submodule level_;
};

std::string to_string(const Char2Module& m);

bool c2_member(const Char2Module& M, const Descriptor& d);

Char2Module c2_intersect(const Char2Module& M1, const Char2Module& M2);
Char2Module c2_sum(const Char2Module& M1, const Char2Module& M2);

// Invariant data of a module: its valuation segment, plus the level module at
// the minimum when there is one.
struct C2Classifier {
    FinalSegment segment;
    std::optional<F4Submodule> level;

    friend bool operator==(const C2Classifier& a, const C2Classifier& b) {
        return a.segment == b.segment && a.level == b.level;
    }
};

C2Classifier c2_phi(const Char2Module& M);
Char2Module c2_psi(const C2Classifier& data);

// Normal form of the quasi-quadratic closure of elements with the given
// (valuation, leading coefficient) data. All-zero input yields the zero
// module d1(empty).
Char2Module c2_from_generators(const std::vector<Descriptor>& ds);

} // namespace qq
