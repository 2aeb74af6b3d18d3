#include "qq/qq_module.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qq/error.hpp"

namespace qq {

const char* to_string(LevelsViolation v) {
    switch (v) {
    case LevelsViolation::none: return "none";
    case LevelsViolation::zero_min_level: return "level m cone must be nonzero";
    case LevelsViolation::real_level_zero: return "level 0 must lie inside the real axis";
    case LevelsViolation::symmetric_needs_full:
        return "a symmetric level m forces level m+1 to be the full plane";
    }
    return "unknown";
}

const char* to_string(PsiClass c) {
    switch (c) {
    case PsiClass::not_member: return "not-member";
    case PsiClass::in_psi1: return "psi1";
    case PsiClass::in_psi2: return "psi2";
    }
    return "unknown";
}

LevelsViolation check_levels(unsigned m, const Cone& level_m, const Cone& level_m1) {
    if (level_m.is_zero()) return LevelsViolation::zero_min_level;
    if (m == 0 && cone_restrict_real(level_m) != level_m)
        return LevelsViolation::real_level_zero;
    if (cone_is_symmetric(level_m) && !level_m1.is_full())
        return LevelsViolation::symmetric_needs_full;
    return LevelsViolation::none;
}

QQModule QQModule::zero_module() { return QQModule(); }

QQModule QQModule::levels(unsigned m, Cone level_m, Cone level_m1) {
    LevelsViolation v = check_levels(m, level_m, level_m1);
    if (v != LevelsViolation::none) throw error(errc::validation, to_string(v));
    QQModule M;
    M.zero_ = false;
    M.m_ = m;
    M.mm_ = std::move(level_m);
    M.mm1_ = std::move(level_m1);
    return M;
}

unsigned QQModule::min_level() const {
    if (zero_) throw error(errc::precondition, "zero module has no minimum valuation");
    return m_;
}
const Cone& QQModule::cone_m() const {
    if (zero_) throw error(errc::precondition, "zero module has no level cones");
    return mm_;
}
const Cone& QQModule::cone_m1() const {
    if (zero_) throw error(errc::precondition, "zero module has no level cones");
    return mm1_;
}

bool operator==(const QQModule& a, const QQModule& b) {
    if (a.zero_ != b.zero_) return false;
    if (a.zero_) return true;
    return a.m_ == b.m_ && a.mm_ == b.mm_ && a.mm1_ == b.mm1_;
}

Cone level_of(const QQModule& M, unsigned g) {
    if (M.is_zero_module()) return Cone::zero();
    unsigned m = M.min_level();
    if (g < m) return Cone::zero();
    if (g == m) return M.cone_m();
    if (g == m + 1) return M.cone_m1();
    return Cone::full();
}

PsiClass psi_classify(const Cone& M, unsigned g, const Series& x) {
    if (!in_A(x)) throw error(errc::precondition, "element is not in A");
    if (x.is_zero()) return PsiClass::not_member; // zero is folded into membership
    unsigned vx = val(x).value;
    if ((vx & 1u) == (g & 1u) && vx >= g) {
        if (vx == g) {
            if (cone_member(M, pan(x))) return PsiClass::in_psi1;
        } else if (!M.is_zero()) {
            return PsiClass::in_psi1; // closure over the full scalars is everything
        }
    }
    // a pair +-u below val(x): at level g when M is symmetric, or at level g+2
    // with arbitrary leading coefficient once M is nonzero
    bool witness = (cone_is_symmetric(M) && g < vx) || (!M.is_zero() && g + 2 < vx);
    return witness ? PsiClass::in_psi2 : PsiClass::not_member;
}

bool psi_member(const Cone& M, unsigned g, const Series& x) {
    if (x.is_zero()) return true;
    return psi_classify(M, g, x) != PsiClass::not_member;
}

bool qq_member(const QQModule& M, const Series& x) {
    if (!in_A(x)) throw error(errc::precondition, "element is not in A");
    if (M.is_zero_module()) return x.is_zero();
    unsigned m = M.min_level();
    Valuation v = val(x);
    if (!v.is_finite()) {
        // all known coefficients vanish: a member whether the element is zero
        // or has valuation at least the precision, provided the window closes
        if (v.value >= m + 2) return true;
        throw error(errc::precision,
                    "membership undecidable: series precision " + std::to_string(v.value) +
                        " is below the valuation window " + std::to_string(m + 2));
    }
    if (v.value < m) return false;
    if (v.value == m) return cone_member(M.cone_m(), pan(x));
    if (v.value == m + 1) return cone_member(M.cone_m1(), pan(x));
    return true;
}

Report qq_decompose_check(const QQModule& M, const std::vector<Series>& samples) {
    Report r;
    r.name = "decompose-consistency";
    for (const Series& x : samples) {
        bool direct = qq_member(M, x);
        bool via_psi = false;
        if (M.is_zero_module()) {
            via_psi = x.is_zero();
        } else {
            unsigned m = M.min_level();
            for (unsigned g = m; g <= m + 2 && !via_psi; ++g)
                via_psi = psi_member(level_of(M, g), g, x);
        }
        if (direct == via_psi)
            r.ok();
        else
            r.fail("disagreement on " + to_string(x) + ": member=" +
                   (direct ? "true" : "false"));
    }
    return r;
}

LevelFamily sigma(const QQModule& M) {
    LevelFamily fam;
    unsigned top = M.is_zero_module() ? 2 : M.min_level() + 2;
    for (unsigned g = 0; g <= top; ++g) fam.emplace_back(g, level_of(M, g));
    return fam;
}

QQModule rho(const LevelFamily& family) {
    std::map<unsigned, Cone> fam;
    for (const auto& [g, c] : family) {
        if (!fam.emplace(g, c).second)
            throw error(errc::validation, "duplicate level " + std::to_string(g));
    }
    unsigned m = 0;
    bool found = false;
    for (const auto& [g, c] : fam) {
        if (!c.is_zero()) {
            m = g;
            found = true;
            break;
        }
    }
    if (!found) return QQModule::zero_module();

    for (const auto& [g, c] : fam) {
        if (g >= m + 2 && !c.is_full())
            throw error(errc::validation,
                        "level " + std::to_string(g) +
                            " must be the full plane: the closure of level " +
                            std::to_string(m) + " over the complex scalars fills it");
    }
    Cone level_m = fam.at(m);
    Cone level_m1 = Cone::zero();
    if (auto it = fam.find(m + 1); it != fam.end()) level_m1 = it->second;
    if (cone_is_symmetric(level_m) && !level_m1.is_full()) {
        // the family itself names a symmetric pair at level m; the module it
        // spans is everything one level up
        throw error(errc::validation, to_string(LevelsViolation::symmetric_needs_full));
    }
    return QQModule::levels(m, level_m, level_m1);
}

QQModule qq_negate(const QQModule& M) {
    if (M.is_zero_module()) return M;
    return QQModule::levels(M.min_level(), cone_negate(M.cone_m()), cone_negate(M.cone_m1()));
}

QQModule qq_intersect(const QQModule& M1, const QQModule& M2) {
    if (M1.is_zero_module() || M2.is_zero_module()) return QQModule::zero_module();
    unsigned lo = std::min(M1.min_level(), M2.min_level());
    unsigned hi = std::max(M1.min_level(), M2.min_level()) + 2;
    for (unsigned g = lo; g <= hi; ++g) {
        Cone c = cone_intersect(level_of(M1, g), level_of(M2, g));
        if (!c.is_zero()) {
            Cone c1 = cone_intersect(level_of(M1, g + 1), level_of(M2, g + 1));
            return QQModule::levels(g, c, c1);
        }
    }
    throw error(errc::domain, "internal: intersection has no nonzero level in the window");
}

namespace {

Cone sum_level(const QQModule& M1, const QQModule& M2, unsigned g, unsigned min_m) {
    for (unsigned h = min_m; h < g; ++h) {
        Cone c = cone_intersect(level_of(M1, h), cone_negate(level_of(M2, h)));
        if (!c.is_zero()) return Cone::full();
    }
    return cone_sum(level_of(M1, g), level_of(M2, g));
}

} // namespace

QQModule qq_sum(const QQModule& M1, const QQModule& M2) {
    if (M1.is_zero_module()) return M2;
    if (M2.is_zero_module()) return M1;
    unsigned m = std::min(M1.min_level(), M2.min_level());
    return QQModule::levels(m, sum_level(M1, M2, m, m), sum_level(M1, M2, m + 1, m));
}

QQModule qq_symmetric_part(const QQModule& M) { return qq_intersect(M, qq_negate(M)); }

bool qq_is_ideal(const QQModule& M) {
    if (M.is_zero_module()) return true;
    // validity already forces level m+1 (and everything above) to be symmetric
    return cone_is_symmetric(M.cone_m());
}

QQModule qq_from_generators(const std::vector<Series>& gens) {
    if (gens.size() > 32)
        throw error(errc::limit, "generator lists are limited to 32 elements");
    if (gens.empty()) return QQModule::zero_module();
    unsigned m = 0;
    bool first = true;
    for (const Series& g : gens) {
        if (!in_A(g)) throw error(errc::precondition, "generator is not in A");
        Valuation v = val(g);
        if (!v.is_finite())
            throw error(errc::precondition,
                        "generators must be nonzero with a known valuation");
        if (first || v.value < m) m = v.value;
        first = false;
    }
    Cone level_m = Cone::zero();
    for (const Series& g : gens)
        if (val(g).value == m) level_m = cone_sum(level_m, Cone::ray(dir_of_point(pan(g))));
    if (m == 0) level_m = cone_restrict_real(level_m);
    Cone level_m1 = Cone::zero();
    if (cone_is_symmetric(level_m)) {
        level_m1 = Cone::full();
    } else {
        for (const Series& g : gens)
            if (val(g).value == m + 1)
                level_m1 = cone_sum(level_m1, Cone::ray(dir_of_point(pan(g))));
    }
    return QQModule::levels(m, level_m, level_m1);
}

bool qq_is_fg(const QQModule& M) {
    if (M.is_zero_module()) return true;
    return cone_is_fg(M.cone_m()) && cone_is_fg(M.cone_m1());
}

std::vector<Series> qq_fg_generators(const QQModule& M) {
    if (!qq_is_fg(M))
        throw error(errc::precondition, "module is not finitely generated");
    std::vector<Series> out;
    if (M.is_zero_module()) return out;
    unsigned m = M.min_level();
    for (const GaussRat& a : cone_generators(M.cone_m()))
        out.push_back(Series::monomial(a, m, m + 4));
    for (const GaussRat& b : cone_generators(M.cone_m1()))
        out.push_back(Series::monomial(b, m + 1, m + 5));
    for (unsigned e : {m + 2, m + 3})
        for (const GaussRat& u : {GaussRat(1), GaussRat(-1), gauss_i(), -gauss_i()})
            out.push_back(Series::monomial(u, e, e + 4));
    return out;
}

namespace {

// Deterministic nonzero point of a nonzero cone.
GaussRat cone_some_point(const Cone& c) {
    switch (c.kind()) {
    case Cone::Kind::zero:
        throw error(errc::precondition, "zero cone has no nonzero point");
    case Cone::Kind::full: return GaussRat(1);
    case Cone::Kind::line: return to_point(c.axis());
    case Cone::Kind::ray: return to_point(c.dir());
    case Cone::Kind::fan: {
        if (c.lo_closed()) return to_point(c.lo());
        if (c.hi_closed()) return to_point(c.hi());
        if (c.is_half_plane()) return to_point(rot90(c.lo()));
        return to_point(c.lo()) + to_point(c.hi());
    }
    }
    return GaussRat(1);
}

} // namespace

bool qq_sum_realize(const QQModule& M1, const QQModule& M2, const Series& x, Series& x1,
                    Series& x2) {
    if (x.is_zero()) {
        x1 = Series::zero(x.precision());
        x2 = Series::zero(x.precision());
        return true;
    }
    if (qq_member(M1, x)) {
        x1 = x;
        x2 = Series::zero(x.precision());
        return true;
    }
    if (qq_member(M2, x)) {
        x1 = Series::zero(x.precision());
        x2 = x;
        return true;
    }
    if (M1.is_zero_module() || M2.is_zero_module()) return false;
    unsigned g = val(x).value;

    // split the leading coefficient inside the level-g cone sum
    ConeSplit cs;
    if (cone_sum_realize(level_of(M1, g), level_of(M2, g), pan(x), cs) && !cs.p.is_zero() &&
        !cs.q.is_zero()) {
        x1 = Series::monomial(cs.p, g, x.precision());
        x2 = x - x1;
        if (qq_member(M1, x1) && qq_member(M2, x2)) return true;
    }

    // opposite leading coefficients at a lower level push everything above
    // into the sum: x = w + (x - w) with val(w) = h < g
    unsigned min_m = std::min(M1.min_level(), M2.min_level());
    for (unsigned h = min_m; h < g; ++h) {
        Cone c = cone_intersect(level_of(M1, h), cone_negate(level_of(M2, h)));
        if (c.is_zero()) continue;
        GaussRat a = cone_some_point(c);
        Series w = Series::monomial(a, h, x.precision());
        Series rest = x - w;
        if (qq_member(M1, w) && qq_member(M2, rest)) {
            x1 = w;
            x2 = rest;
            return true;
        }
    }
    return false;
}

Series SquareScaleDecomposition::recombine() const {
    Series sq = base * base;
    return Series::monomial(GaussRat(alpha, beta), shift, sq.precision() + shift) * sq;
}

std::string to_string(const QQModule& M) {
    if (M.is_zero_module()) return "zero";
    std::ostringstream os;
    os << "levels(" << M.min_level() << "; " << to_string(M.cone_m()) << "; "
       << to_string(M.cone_m1()) << ")";
    return os.str();
}

SquareScaleDecomposition lemma43_decompose(const Series& f) {
    Valuation v = val(f);
    if (!v.is_finite())
        throw error(errc::precision, "decomposition needs a determinate valuation");
    unsigned vf = v.value;
    GaussRat c = pan(f);
    unsigned shift = vf & 1u;
    unsigned half = (vf - shift) / 2;
    Series unit = f / Series::monomial(c, vf, f.precision());
    Series root = sqrt_strict_unit(unit);
    Series base = Series::monomial(GaussRat(1), half, root.precision() + half) * root;
    return {c.re, c.im, shift, base};
}

} // namespace qq
