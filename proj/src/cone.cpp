#include "qq/cone.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qq/error.hpp"

namespace qq {

namespace {

long long checked_ll(long long v) {
    if (v > (1LL << 60) || v < -(1LL << 60))
        throw error(errc::limit, "direction coordinate overflow");
    return v;
}

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & ~0ULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

// cross(d, z) and friends with an exact rational point.
Rat cross_dz(const Direction& d, const GaussRat& z) {
    return Rat(static_cast<long>(d.x)) * z.im - Rat(static_cast<long>(d.y)) * z.re;
}
Rat dot_dz(const Direction& d, const GaussRat& z) {
    return Rat(static_cast<long>(d.x)) * z.re + Rat(static_cast<long>(d.y)) * z.im;
}

// Closed-arc membership for a counterclockwise arc of length in (0, 180].
bool in_closed_arc(const Direction& lo, const Direction& hi, const Direction& d) {
    if (d == lo || d == hi) return true;
    if (hi == -lo) return cross(lo, d) > 0;
    return cross(lo, d) > 0 && cross(d, hi) > 0;
}

// A direction strictly inside the arc.
Direction arc_mid(const Direction& lo, const Direction& hi) {
    if (hi == -lo) return rot90(lo);
    return normalize_dir(checked_ll(lo.x + hi.x), checked_ll(lo.y + hi.y));
}

struct Arc {
    Direction lo, hi;
    bool lc, hc;
    bool single; // a ray viewed as a zero-width arc
};

Arc as_arc(const Cone& c) {
    if (c.kind() == Cone::Kind::ray) return {c.dir(), c.dir(), true, true, true};
    return {c.lo(), c.hi(), c.lo_closed(), c.hi_closed(), false};
}

bool arc_contains_dir_closed(const Arc& a, const Direction& d) {
    if (a.single) return d == a.lo;
    return in_closed_arc(a.lo, a.hi, d);
}

// arc b fully inside the closed arc a.
bool arc_contains_arc(const Arc& a, const Arc& b) {
    if (!arc_contains_dir_closed(a, b.lo) || !arc_contains_dir_closed(a, b.hi)) return false;
    if (b.single) return true;
    return arc_contains_dir_closed(a, arc_mid(b.lo, b.hi));
}

Cone cone_from_dir_set(const std::vector<Direction>& dirs) {
    std::vector<Direction> uniq;
    for (const auto& d : dirs)
        if (std::find(uniq.begin(), uniq.end(), d) == uniq.end()) uniq.push_back(d);
    if (uniq.empty()) return Cone::zero();
    if (uniq.size() == 1) return Cone::ray(uniq[0]);
    if (uniq.size() == 2 && uniq[1] == -uniq[0]) return Cone::line(uniq[0]);
    throw error(errc::domain, "internal: point set is not a cone normal form");
}

} // namespace

Direction normalize_dir(long long x, long long y) {
    if (x == 0 && y == 0) throw error(errc::precondition, "zero vector is not a direction");
    long long g = std::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
    return {x / g, y / g};
}

Direction normalize_axis(long long x, long long y) {
    Direction d = normalize_dir(x, y);
    if (d.x < 0 || (d.x == 0 && d.y < 0)) d = -d;
    return d;
}

Direction dir_of_point(const GaussRat& z) {
    if (z.is_zero()) throw error(errc::precondition, "zero point has no direction");
    mpz_class a = z.re.get_num() * z.im.get_den();
    mpz_class b = z.im.get_num() * z.re.get_den();
    mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    if (!a.fits_slong_p() || !b.fits_slong_p())
        throw error(errc::limit, "direction coordinate overflow");
    return {a.get_si(), b.get_si()};
}

Cone Cone::zero() { return Cone(); }

Cone Cone::full() {
    Cone c;
    c.kind_ = Kind::full;
    return c;
}

Cone Cone::line(Direction axis) {
    Cone c;
    c.kind_ = Kind::line;
    c.a_ = normalize_axis(axis.x, axis.y);
    return c;
}

Cone Cone::ray(Direction dir) {
    Cone c;
    c.kind_ = Kind::ray;
    c.a_ = normalize_dir(dir.x, dir.y);
    return c;
}

Cone Cone::fan(Direction lo, bool lo_closed, Direction hi, bool hi_closed) {
    lo = normalize_dir(lo.x, lo.y);
    hi = normalize_dir(hi.x, hi.y);
    if (lo == hi) {
        // zero-width: only the doubly closed flavor is a nonempty set (a ray)
        if (lo_closed && hi_closed) return ray(lo);
        return zero();
    }
    if (hi != -lo && cross(lo, hi) <= 0)
        throw error(errc::precondition, "fan must span a counterclockwise angle in (0, 180]");
    Cone c;
    c.kind_ = Kind::fan;
    c.a_ = lo;
    c.b_ = hi;
    c.ac_ = lo_closed;
    c.bc_ = hi_closed;
    return c;
}

const Direction& Cone::axis() const {
    if (kind_ != Kind::line) throw error(errc::precondition, "not a line");
    return a_;
}
const Direction& Cone::dir() const {
    if (kind_ != Kind::ray) throw error(errc::precondition, "not a ray");
    return a_;
}
const Direction& Cone::lo() const {
    if (kind_ != Kind::fan) throw error(errc::precondition, "not a fan");
    return a_;
}
const Direction& Cone::hi() const {
    if (kind_ != Kind::fan) throw error(errc::precondition, "not a fan");
    return b_;
}
bool Cone::lo_closed() const {
    if (kind_ != Kind::fan) throw error(errc::precondition, "not a fan");
    return ac_;
}
bool Cone::hi_closed() const {
    if (kind_ != Kind::fan) throw error(errc::precondition, "not a fan");
    return bc_;
}
bool Cone::is_half_plane() const { return kind_ == Kind::fan && b_ == -a_; }

bool operator==(const Cone& a, const Cone& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case Cone::Kind::zero:
    case Cone::Kind::full: return true;
    case Cone::Kind::line:
    case Cone::Kind::ray: return a.a_ == b.a_;
    case Cone::Kind::fan:
        return a.a_ == b.a_ && a.b_ == b.b_ && a.ac_ == b.ac_ && a.bc_ == b.bc_;
    }
    return false;
}

bool cone_member(const Cone& c, const GaussRat& z) {
    if (z.is_zero()) return true;
    switch (c.kind()) {
    case Cone::Kind::zero: return false;
    case Cone::Kind::full: return true;
    case Cone::Kind::line: return cross_dz(c.axis(), z) == 0;
    case Cone::Kind::ray: return cross_dz(c.dir(), z) == 0 && dot_dz(c.dir(), z) > 0;
    case Cone::Kind::fan: {
        if (cross_dz(c.lo(), z) == 0 && dot_dz(c.lo(), z) > 0) return c.lo_closed();
        if (cross_dz(c.hi(), z) == 0 && dot_dz(c.hi(), z) > 0) return c.hi_closed();
        // interior; for half-planes the two conditions coincide
        return cross_dz(c.lo(), z) > 0 && cross_dz(c.hi(), z) < 0;
    }
    }
    return false;
}

bool cone_has_dir(const Cone& c, const Direction& d) { return cone_member(c, to_point(d)); }

Cone cone_intersect(const Cone& a, const Cone& b) {
    using K = Cone::Kind;
    if (a.is_zero() || b.is_zero()) return Cone::zero();
    if (a.is_full()) return b;
    if (b.is_full()) return a;

    // a line intersects any other cone inside its two boundary rays
    if (a.kind() == K::line || b.kind() == K::line) {
        if (a.kind() == K::line && b.kind() == K::line)
            return a.axis() == b.axis() ? a : Cone::zero();
        const Cone& ln = a.kind() == K::line ? a : b;
        const Cone& other = a.kind() == K::line ? b : a;
        std::vector<Direction> pts;
        if (cone_has_dir(other, ln.axis())) pts.push_back(ln.axis());
        if (cone_has_dir(other, -ln.axis())) pts.push_back(-ln.axis());
        if (pts.size() == 2) return Cone::line(ln.axis());
        return cone_from_dir_set(pts);
    }

    if (a.kind() == K::ray || b.kind() == K::ray) {
        const Cone& ry = a.kind() == K::ray ? a : b;
        const Cone& other = a.kind() == K::ray ? b : a;
        return cone_has_dir(other, ry.dir()) ? ry : Cone::zero();
    }

    // fan against fan: intersect the closed arcs, then restore flags
    Arc A = as_arc(a), B = as_arc(b);

    auto point_result = [&](std::initializer_list<Direction> cands) {
        std::vector<Direction> pts;
        for (const auto& d : cands)
            if (cone_has_dir(a, d) && cone_has_dir(b, d)) pts.push_back(d);
        return cone_from_dir_set(pts);
    };

    const Direction* start = nullptr;
    if (arc_contains_dir_closed(A, B.lo))
        start = &B.lo;
    else if (arc_contains_dir_closed(B, A.lo))
        start = &A.lo;
    const Direction* end = nullptr;
    if (arc_contains_dir_closed(A, B.hi))
        end = &B.hi;
    else if (arc_contains_dir_closed(B, A.hi))
        end = &A.hi;
    if (!start || !end) return Cone::zero();

    Direction s = *start, e = *end;
    if (s == e) return point_result({s, Direction(-s)});
    // an arc exceeding 180 degrees cannot be an intersection of two convex
    // cones; the shared set is at most a pair of antipodal boundary rays
    if (e != -s && cross(s, e) < 0) return point_result({A.lo, A.hi, B.lo, B.hi});

    Direction mid = arc_mid(s, e);
    if (!arc_contains_dir_closed(A, mid) || !arc_contains_dir_closed(B, mid))
        return point_result({A.lo, A.hi, B.lo, B.hi});

    bool sc = cone_has_dir(a, s) && cone_has_dir(b, s);
    bool ec = cone_has_dir(a, e) && cone_has_dir(b, e);
    return Cone::fan(s, sc, e, ec);
}

Cone cone_sum(const Cone& a, const Cone& b) {
    using K = Cone::Kind;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_full() || b.is_full()) return Cone::full();

    if (a.kind() == K::line || b.kind() == K::line) {
        if (a.kind() == K::line && b.kind() == K::line)
            return a.axis() == b.axis() ? a : Cone::full();
        const Cone& ln = a.kind() == K::line ? a : b;
        const Cone& other = a.kind() == K::line ? b : a;
        const Direction& u = ln.axis();
        // the sum is the closed half-plane holding the other cone, the line
        // itself when the other cone is colinear, or everything
        auto side_ok = [&](const Direction& boundary) {
            Arc o = as_arc(other);
            auto nonneg = [&](const Direction& d) { return cross(boundary, d) >= 0; };
            if (o.single) return nonneg(o.lo);
            return nonneg(o.lo) && nonneg(o.hi) && nonneg(arc_mid(o.lo, o.hi));
        };
        if (other.kind() == K::ray && cross(u, other.dir()) == 0) return ln;
        if (side_ok(u)) return Cone::fan(u, true, -u, true);
        if (side_ok(-u)) return Cone::fan(-u, true, u, true);
        return Cone::full();
    }

    if (a.kind() == K::ray && b.kind() == K::ray) {
        if (a.dir() == b.dir()) return a;
        if (a.dir() == -b.dir()) return Cone::line(a.dir());
        if (cross(a.dir(), b.dir()) > 0) return Cone::fan(a.dir(), true, b.dir(), true);
        return Cone::fan(b.dir(), true, a.dir(), true);
    }

    // positive hull of two arcs: the minimal well-formed arc [s, e] with
    // s among the lows and e among the highs that contains both inputs
    Arc A = as_arc(a), B = as_arc(b);
    std::vector<Arc> valid;
    for (const Direction* s : {&A.lo, &B.lo}) {
        for (const Direction* e : {&A.hi, &B.hi}) {
            Arc cand{*s, *e, true, true, *s == *e};
            if (!cand.single && *e != -*s && cross(*s, *e) <= 0) continue;
            if (arc_contains_arc(cand, A) && arc_contains_arc(cand, B)) valid.push_back(cand);
        }
    }
    if (valid.empty()) return Cone::full();
    const Arc* best = nullptr;
    for (const Arc& v : valid) {
        bool minimal = true;
        for (const Arc& w : valid)
            if (!arc_contains_arc(w, v)) { minimal = false; break; }
        if (minimal) { best = &v; break; }
    }
    if (!best) throw error(errc::domain, "internal: no minimal hull arc");
    bool sc = cone_has_dir(a, best->lo) || cone_has_dir(b, best->lo);
    bool ec = cone_has_dir(a, best->hi) || cone_has_dir(b, best->hi);
    return Cone::fan(best->lo, sc, best->hi, ec);
}

Cone cone_cl_full(const Cone& c) { return c.is_zero() ? Cone::zero() : Cone::full(); }

bool cone_is_symmetric(const Cone& c) {
    switch (c.kind()) {
    case Cone::Kind::full:
    case Cone::Kind::line: return true;
    case Cone::Kind::fan: return c.is_half_plane() && c.lo_closed() && c.hi_closed();
    default: return false;
    }
}

bool cone_is_fg(const Cone& c) {
    if (c.kind() != Cone::Kind::fan) return true;
    return c.lo_closed() && c.hi_closed();
}

std::vector<GaussRat> cone_generators(const Cone& c) {
    if (!cone_is_fg(c)) throw error(errc::precondition, "cone is not finitely generated");
    switch (c.kind()) {
    case Cone::Kind::zero: return {};
    case Cone::Kind::full:
        return {GaussRat(1), GaussRat(-1), gauss_i(), -gauss_i()};
    case Cone::Kind::line: return {to_point(c.axis()), to_point(-c.axis())};
    case Cone::Kind::ray: return {to_point(c.dir())};
    case Cone::Kind::fan:
        return {to_point(c.lo()), to_point(arc_mid(c.lo(), c.hi())), to_point(c.hi())};
    }
    return {};
}

Cone cone_restrict_real(const Cone& c) { return cone_intersect(c, Cone::line({1, 0})); }

Cone cone_negate(const Cone& c) {
    switch (c.kind()) {
    case Cone::Kind::zero:
    case Cone::Kind::full:
    case Cone::Kind::line: return c;
    case Cone::Kind::ray: return Cone::ray(-c.dir());
    case Cone::Kind::fan:
        return Cone::fan(-c.lo(), c.lo_closed(), -c.hi(), c.hi_closed());
    }
    return c;
}

GaussRat cone_sample_point(const Cone& c, SplitMix& rng, long height) {
    auto scale = [&](const Direction& d, const Rat& t) {
        return GaussRat(t * Rat(static_cast<long>(d.x)), t * Rat(static_cast<long>(d.y)));
    };
    Rat pos = rat(rng.range(1, height), rng.range(1, height));
    switch (c.kind()) {
    case Cone::Kind::zero: return GaussRat();
    case Cone::Kind::full: return random_gauss_nonzero(rng, height);
    case Cone::Kind::line: return scale(c.axis(), rng.coin() ? pos : -pos);
    case Cone::Kind::ray: return scale(c.dir(), pos);
    case Cone::Kind::fan: {
        unsigned roll = static_cast<unsigned>(rng.below(4));
        if (roll == 0 && c.lo_closed()) return scale(c.lo(), pos);
        if (roll == 1 && c.hi_closed()) return scale(c.hi(), pos);
        Rat t = rat(rng.range(1, height), rng.range(1, height));
        if (c.is_half_plane()) {
            Rat s = rat(rng.range(-height, height), rng.range(1, height));
            return scale(c.lo(), s) + scale(rot90(c.lo()), t);
        }
        return scale(c.lo(), pos) + scale(c.hi(), t);
    }
    }
    return GaussRat();
}

namespace {

// Witness directions of c that can span a decomposition of z: all closed
// extremes, one interior direction, and for open boundaries a ladder of
// interior directions pushed toward the boundary (plus an exact push computed
// from z, so any rational z strictly inside the hull is reachable).
std::vector<Direction> witness_dirs(const Cone& c, const GaussRat& z) {
    std::vector<Direction> out;
    auto add = [&](Direction d) {
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    };
    switch (c.kind()) {
    case Cone::Kind::zero: break;
    case Cone::Kind::full:
        add({1, 0});
        add({0, 1});
        add({-1, 0});
        add({0, -1});
        break;
    case Cone::Kind::line:
        add(c.axis());
        add(-c.axis());
        break;
    case Cone::Kind::ray: add(c.dir()); break;
    case Cone::Kind::fan: {
        Direction mid = arc_mid(c.lo(), c.hi());
        add(mid);
        if (c.lo_closed()) add(c.lo());
        if (c.hi_closed()) add(c.hi());
        auto push = [&](const Direction& bound) {
            for (long long k : {2LL, 16LL, 1LL << 16, 1LL << 32}) {
                add(normalize_dir(checked_ll(bound.x * k + mid.x),
                                  checked_ll(bound.y * k + mid.y)));
            }
            // exact ladder rung: far enough that z lies on the interior side
            Rat cb = cross_dz(bound, z);
            if (cb != 0) {
                Rat cm = abs(cross_dz(mid, z)) / abs(cb);
                mpz_class k = cm.get_num() / cm.get_den() + 2;
                if (k.fits_slong_p()) {
                    long long kk = k.get_si();
                    if (kk < (1LL << 40))
                        add(normalize_dir(checked_ll(bound.x * kk + mid.x),
                                          checked_ll(bound.y * kk + mid.y)));
                }
            }
        };
        if (!c.lo_closed()) push(c.lo());
        if (!c.hi_closed()) push(c.hi());
        break;
    }
    }
    return out;
}

} // namespace

bool cone_sum_realize(const Cone& a, const Cone& b, const GaussRat& z, ConeSplit& out) {
    if (z.is_zero()) {
        out = {GaussRat(), GaussRat()};
        return true;
    }
    if (cone_member(a, z)) {
        out = {z, GaussRat()};
        return true;
    }
    if (cone_member(b, z)) {
        out = {GaussRat(), z};
        return true;
    }
    for (const Direction& v : witness_dirs(a, z)) {
        for (const Direction& u : witness_dirs(b, z)) {
            __int128 det = cross(v, u);
            if (det == 0) continue;
            Rat det_q(mpz_from_i128(det));
            // z = s v + t u  =>  s = cross(z,u)/cross(v,u), t = cross(v,z)/cross(v,u)
            Rat s = -cross_dz(u, z) / det_q;
            Rat t = cross_dz(v, z) / det_q;
            if (s < 0 || t < 0) continue;
            GaussRat p(s * Rat(static_cast<long>(v.x)), s * Rat(static_cast<long>(v.y)));
            GaussRat q(t * Rat(static_cast<long>(u.x)), t * Rat(static_cast<long>(u.y)));
            if (!cone_member(a, p) || !cone_member(b, q)) continue;
            if (p + q != z) continue;
            out = {p, q};
            return true;
        }
    }
    return false;
}

std::string to_string(const Cone& c) {
    std::ostringstream os;
    switch (c.kind()) {
    case Cone::Kind::zero: return "zero";
    case Cone::Kind::full: return "full";
    case Cone::Kind::line:
        os << "line(" << c.axis().x << "," << c.axis().y << ")";
        break;
    case Cone::Kind::ray:
        os << "ray(" << c.dir().x << "," << c.dir().y << ")";
        break;
    case Cone::Kind::fan:
        os << "fan[" << (c.lo_closed() ? 'c' : 'o') << (c.hi_closed() ? 'c' : 'o') << "]("
           << c.lo().x << "," << c.lo().y << ";" << c.hi().x << "," << c.hi().y << ")";
        break;
    }
    return os.str();
}

namespace {

struct ConeTextParser {
    const std::string& t;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw error(errc::parse, "cone syntax error at position " + std::to_string(pos) +
                                     ": " + msg);
    }
    void ws() {
        while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    }
    bool lit(const std::string& s) {
        ws();
        if (t.compare(pos, s.size(), s) == 0) {
            pos += s.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        ws();
        if (pos >= t.size() || t[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    long long integer() {
        ws();
        std::size_t start = pos;
        if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(t.substr(start, pos - start));
    }
    Direction direction() {
        long long x = integer();
        expect(',');
        long long y = integer();
        return {x, y};
    }
};

} // namespace

Cone parse_cone(const std::string& text) {
    ConeTextParser p{text};
    if (p.lit("zero")) return Cone::zero();
    if (p.lit("full")) return Cone::full();
    if (p.lit("line")) {
        p.expect('(');
        Direction d = p.direction();
        p.expect(')');
        return Cone::line(d);
    }
    if (p.lit("ray")) {
        p.expect('(');
        Direction d = p.direction();
        p.expect(')');
        return Cone::ray(d);
    }
    if (p.lit("fan")) {
        p.expect('[');
        p.ws();
        auto flag = [&]() {
            if (p.pos >= p.t.size()) p.fail("expected flag");
            char c = p.t[p.pos++];
            if (c == 'c') return true;
            if (c == 'o') return false;
            p.fail("flag must be 'o' or 'c'");
        };
        bool lc = flag(), hc = flag();
        p.expect(']');
        p.expect('(');
        Direction lo = p.direction();
        p.expect(';');
        Direction hi = p.direction();
        p.expect(')');
        return Cone::fan(lo, lc, hi, hc);
    }
    p.fail("expected zero|full|line|ray|fan");
}

} // namespace qq
