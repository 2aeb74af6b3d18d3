#include "qq/char2_module.hpp"

#include <sstream>

namespace qq {

const Dyadic& FinalSegment::cut() const {
    if (empty_) throw error(errc::precondition, "empty segment has no cut");
    return cut_;
}
bool FinalSegment::inclusive() const {
    if (empty_) throw error(errc::precondition, "empty segment has no cut");
    return inclusive_;
}

bool FinalSegment::contains(const Dyadic& g) const {
    if (empty_) return false;
    return g > cut_ || (inclusive_ && g == cut_);
}

std::string to_string(const FinalSegment& s) {
    if (s.is_empty()) return "empty";
    return std::string(s.inclusive() ? "[" : "(") + to_string(s.cut()) + ", inf)";
}

SegOrder seg_compare(const FinalSegment& s1, const FinalSegment& s2) {
    if (s1 == s2) return SegOrder::equal;
    if (s1.is_empty()) return SegOrder::subset;
    if (s2.is_empty()) return SegOrder::superset;
    // larger cut (or an exclusive cut at the same point) is the smaller set
    if (s1.cut() == s2.cut()) return s1.inclusive() ? SegOrder::superset : SegOrder::subset;
    return s1.cut() > s2.cut() ? SegOrder::subset : SegOrder::superset;
}

F4Submodule F4Submodule::of_mask(unsigned mask) {
    mask &= 0xF;
    if (!(mask & 1u)) throw error(errc::validation, "level module must contain zero");
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j)
            if (((mask >> i) & 1u) && ((mask >> j) & 1u) && !((mask >> (i ^ j)) & 1u))
                throw error(errc::validation, "level module is not additively closed");
    return F4Submodule(mask);
}

F4Submodule span(F4Submodule a, F4Submodule b) {
    unsigned mask = a.mask_ | b.mask_;
    bool grew = true;
    while (grew) {
        grew = false;
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j)
                if (((mask >> i) & 1u) && ((mask >> j) & 1u) && !((mask >> (i ^ j)) & 1u)) {
                    mask |= 1u << (i ^ j);
                    grew = true;
                }
    }
    return F4Submodule(mask);
}

std::string to_string(F4Submodule m) {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < 4; ++i) {
        if (!m.contains(F4(i))) continue;
        if (!first) out += ",";
        first = false;
        out += to_string(F4(i));
    }
    return out + "}";
}

Char2Module Char2Module::d1(FinalSegment segment) {
    return Char2Module(true, std::move(segment), F4Submodule::zero());
}

Char2Module Char2Module::d2(FinalSegment segment, F4Submodule level) {
    if (!segment.has_min())
        throw error(errc::validation, "refined form needs a segment with a minimum");
    if (level.is_zero())
        throw error(errc::validation, "refined form needs a nonzero level module");
    bool min_zero = segment.cut() == Dyadic::integer(0);
    if (min_zero && !level.in_f2())
        throw error(errc::validation,
                    "at the zero cut the level module must lie in the prime field");
    // the two descriptions overlap exactly here; keep the segment-only form
    if ((min_zero && level == F4Submodule::f2()) || (!min_zero && level.is_all()))
        return d1(std::move(segment));
    return Char2Module(false, std::move(segment), level);
}

F4Submodule Char2Module::level() const {
    if (d1_) throw error(errc::precondition, "segment-only module has no level part");
    return level_;
}

std::string to_string(const Char2Module& m) {
    std::ostringstream os;
    if (m.is_d1()) {
        os << "d1(" << to_string(m.segment()) << ")";
    } else {
        os << "d2(" << to_string(m.segment()) << ", " << to_string(m.level()) << ")";
    }
    return os.str();
}

bool c2_member(const Char2Module& M, const Descriptor& d) {
    if (d.is_zero()) return true;
    if (M.is_d1()) return M.segment().contains(*d.v);
    const Dyadic& min = M.segment().cut();
    return *d.v > min || (*d.v == min && M.level().contains(d.p));
}

namespace {

// The effective level module of a canonical form at its minimum, when the
// segment has one.
F4Submodule level_at_min(const Char2Module& M) {
    if (!M.is_d1()) return M.level();
    bool min_zero = M.segment().cut() == Dyadic::integer(0);
    return min_zero ? F4Submodule::f2() : F4Submodule::all();
}

} // namespace

Char2Module c2_intersect(const Char2Module& M1, const Char2Module& M2) {
    // a strictly smaller segment sits above the other's minimum, so the whole
    // smaller module is contained in the larger one
    SegOrder ord = seg_compare(M1.segment(), M2.segment());
    if (ord == SegOrder::subset) return M1;
    if (ord == SegOrder::superset) return M2;
    // equal segments
    if (M1.segment().is_empty()) return M1;
    if (!M1.segment().has_min()) return M1; // both segment-only by canonical form
    F4Submodule meet = intersect(level_at_min(M1), level_at_min(M2));
    if (meet.is_zero())
        return Char2Module::d1(FinalSegment::from(M1.segment().cut(), false));
    return Char2Module::d2(M1.segment(), meet);
}

Char2Module c2_sum(const Char2Module& M1, const Char2Module& M2) {
    SegOrder ord = seg_compare(M1.segment(), M2.segment());
    if (ord == SegOrder::subset) return M2;
    if (ord == SegOrder::superset) return M1;
    if (M1.segment().is_empty()) return M1;
    if (!M1.segment().has_min()) return M1;
    return Char2Module::d2(M1.segment(), span(level_at_min(M1), level_at_min(M2)));
}

C2Classifier c2_phi(const Char2Module& M) {
    if (!M.segment().has_min()) return {M.segment(), std::nullopt};
    return {M.segment(), level_at_min(M)};
}

Char2Module c2_psi(const C2Classifier& data) {
    if (!data.level.has_value()) {
        if (data.segment.has_min())
            throw error(errc::validation,
                        "a segment with a minimum needs a level module");
        return Char2Module::d1(data.segment);
    }
    if (!data.segment.has_min())
        throw error(errc::validation, "a level module needs a segment with a minimum");
    return Char2Module::d2(data.segment, *data.level);
}

Char2Module c2_from_generators(const std::vector<Descriptor>& ds) {
    std::optional<Dyadic> gmin;
    for (const Descriptor& d : ds) {
        if (d.is_zero()) continue;
        if (*d.v == Dyadic::integer(0) && !d.p.in_f2())
            throw error(errc::precondition, "generator is not in A");
        if (!gmin || *d.v < *gmin) gmin = *d.v;
    }
    if (!gmin) return Char2Module::d1(FinalSegment::empty());
    F4Submodule level = F4Submodule::zero();
    for (const Descriptor& d : ds)
        if (!d.is_zero() && *d.v == *gmin)
            level = span(level, F4Submodule::of_mask(1u | (1u << d.p.bits())));
    return Char2Module::d2(FinalSegment::from(*gmin, true), level);
}

} // namespace qq
