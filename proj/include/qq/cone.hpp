#pragma once

#include <string>
#include <vector>

#include "qq/gauss.hpp"
#include "qq/rng.hpp"

namespace qq {

// Primitive integer direction in the plane. Orientation tests use exact
// cross/dot signs; angles are never represented numerically.
struct Direction {
    long long x;
    long long y;

    friend bool operator==(const Direction& a, const Direction& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Direction& a, const Direction& b) { return !(a == b); }
};

Direction normalize_dir(long long x, long long y);          // primitive, same ray
Direction normalize_axis(long long x, long long y);         // primitive, first nonzero > 0
inline Direction operator-(const Direction& d) { return {-d.x, -d.y}; }
inline Direction rot90(const Direction& d) { return {-d.y, d.x}; } // counterclockwise

inline __int128 cross(const Direction& a, const Direction& b) {
    return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
}
inline __int128 dot(const Direction& a, const Direction& b) {
    return static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y;
}

inline GaussRat to_point(const Direction& d) {
    return GaussRat(Rat(static_cast<long>(d.x)), Rat(static_cast<long>(d.y)));
}

// Primitive integer direction of a nonzero rational point.
Direction dir_of_point(const GaussRat& z);

// Normal form of a quasi-quadratic R-module in the plane: the zero module,
// the full plane, a line through the origin, a single closed ray, or a convex
// fan spanning a counterclockwise angle in (0, 180] degrees with independently
// open/closed boundary rays. Construction goes through the factory functions,
// which collapse every degenerate encoding, so equality is structural.
class Cone {
public:
    enum class Kind { zero, full, line, ray, fan };

    static Cone zero();
    static Cone full();
    static Cone line(Direction axis);                 // axis sign is canonicalized
    static Cone ray(Direction dir);
    static Cone fan(Direction lo, bool lo_closed, Direction hi, bool hi_closed);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::zero; }
    bool is_full() const { return kind_ == Kind::full; }

    const Direction& axis() const;                    // line only
    const Direction& dir() const;                     // ray only
    const Direction& lo() const;                      // fan only
    const Direction& hi() const;
    bool lo_closed() const;
    bool hi_closed() const;
    bool is_half_plane() const;                       // fan spanning exactly 180 degrees

    friend bool operator==(const Cone& a, const Cone& b);
    friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

private:
    Cone() = default;
    Kind kind_ = Kind::zero;
    Direction a_{1, 0};
    Direction b_{1, 0};
    bool ac_ = true;
    bool bc_ = true;
};

// Exact point membership; z = 0 belongs to every cone.
bool cone_member(const Cone& c, const GaussRat& z);

// Membership of the ray spanned by an integer direction.
bool cone_has_dir(const Cone& c, const Direction& d);

Cone cone_intersect(const Cone& a, const Cone& b);

// Normal form of {p + q : p in a, q in b} (the quasi-quadratic closure of the
// union).
Cone cone_sum(const Cone& a, const Cone& b);

// Quasi-quadratic closure over the full complex scalars: everything nonzero
// closes up to the whole plane.
Cone cone_cl_full(const Cone& c);

// True when the cone contains some u != 0 together with -u.
bool cone_is_symmetric(const Cone& c);

// Finite generation as a quasi-quadratic R-module: every variant except a fan
// with an open boundary.
bool cone_is_fg(const Cone& c);

// Finite generating set: the closure of the returned rays reproduces c.
std::vector<GaussRat> cone_generators(const Cone& c);

Cone cone_restrict_real(const Cone& c);

Cone cone_negate(const Cone& c);

// A nonzero member point with small rational coordinates; boundary rays are
// hit with positive probability when they are closed.
GaussRat cone_sample_point(const Cone& c, SplitMix& rng, long height = 8);

// Exact decomposition z = p + q with p in a, q in b, if one exists.
struct ConeSplit {
    GaussRat p;
    GaussRat q;
};
bool cone_sum_realize(const Cone& a, const Cone& b, const GaussRat& z, ConeSplit& out);

// Compact text form: zero | full | line(1,2) | ray(1,0) | fan[cc](1,0;0,1)
std::string to_string(const Cone& c);
Cone parse_cone(const std::string& text);

} // namespace qq
