#include <doctest.h>

#include "qq/catalog.hpp"
#include "qq/cone.hpp"
#include "qq/error.hpp"

using namespace qq;

namespace {

GaussRat pt(long re, long im) { return GaussRat(re, im); }

Cone quarter_cc() { return Cone::fan({1, 0}, true, {0, 1}, true); }
Cone quarter_oo() { return Cone::fan({1, 0}, false, {0, 1}, false); }

// Rational sample points for the set-level oracles: scaled catalog directions
// (to hit boundaries) plus a small grid.
std::vector<GaussRat> oracle_points() {
    std::vector<GaussRat> pts;
    pts.push_back(GaussRat());
    for (const Cone& c : cone_catalog()) {
        std::vector<Direction> dirs;
        switch (c.kind()) {
        case Cone::Kind::line: dirs = {c.axis(), -c.axis()}; break;
        case Cone::Kind::ray: dirs = {c.dir()}; break;
        case Cone::Kind::fan: dirs = {c.lo(), c.hi()}; break;
        default: break;
        }
        for (const Direction& d : dirs) {
            pts.push_back(to_point(d));
            pts.push_back(GaussRat(rat(3, 2)) * to_point(d));
        }
    }
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            if (x || y) pts.push_back(pt(x, y));
    return pts;
}

} // namespace

TEST_CASE("direction normalization") {
    CHECK(normalize_dir(4, -6) == Direction{2, -3});
    CHECK(normalize_axis(0, -5) == Direction{0, 1});
    CHECK(normalize_axis(-2, 4) == Direction{1, -2});
    CHECK_THROWS_AS(normalize_dir(0, 0), error);
}

TEST_CASE("normal-form construction collapses degenerate fans") {
    CHECK(Cone::fan({2, 0}, true, {3, 0}, true) == Cone::ray({1, 0}));
    CHECK(Cone::fan({1, 0}, true, {1, 0}, false) == Cone::zero());
    CHECK(Cone::fan({1, 0}, false, {1, 0}, false) == Cone::zero());
    CHECK(Cone::line({0, -1}) == Cone::line({0, 1}));
    CHECK_THROWS_AS(Cone::fan({1, 0}, true, {0, -1}, true), error); // 270 degrees
}

TEST_CASE("point membership") {
    CHECK(cone_member(quarter_cc(), pt(1, 1)));
    CHECK_FALSE(cone_member(quarter_oo(), pt(1, 0)));
    CHECK(cone_member(Cone::line({1, 1}), pt(-2, -2)));

    // boundary flags
    CHECK(cone_member(quarter_cc(), pt(2, 0)));
    CHECK_FALSE(cone_member(quarter_cc(), pt(-1, 0)));
    CHECK(cone_member(Cone::fan({1, 0}, false, {0, 1}, true), pt(0, 3)));
    CHECK_FALSE(cone_member(Cone::fan({1, 0}, false, {0, 1}, true), pt(3, 0)));

    // the origin belongs to everything
    for (const Cone& c : cone_catalog()) CHECK(cone_member(c, GaussRat()));

    // half-plane interior and boundary
    Cone upper = Cone::fan({1, 0}, true, {-1, 0}, false);
    CHECK(cone_member(upper, pt(-5, 1)));
    CHECK(cone_member(upper, pt(5, 0)));
    CHECK_FALSE(cone_member(upper, pt(-5, 0)));
    CHECK_FALSE(cone_member(upper, pt(0, -1)));
}

TEST_CASE("intersection examples") {
    CHECK(cone_intersect(Cone::line({1, 1}), quarter_cc()) == Cone::ray({1, 1}));
    for (const Cone& c : cone_catalog()) {
        CHECK(cone_intersect(Cone::full(), c) == c);
        CHECK(cone_intersect(c, c) == c);
        CHECK(cone_intersect(Cone::zero(), c) == Cone::zero());
    }
    CHECK(cone_intersect(quarter_cc(), Cone::fan({0, 1}, true, {-1, 0}, true)) ==
          Cone::ray({0, 1}));

    // opposite closed half-planes share their boundary line
    Cone upper = Cone::fan({1, 0}, true, {-1, 0}, true);
    Cone lower = Cone::fan({-1, 0}, true, {1, 0}, true);
    CHECK(cone_intersect(upper, lower) == Cone::line({1, 0}));
    // with one boundary open only one ray survives
    Cone lower_open = Cone::fan({-1, 0}, false, {1, 0}, true);
    CHECK(cone_intersect(upper, lower_open) == Cone::ray({1, 0}));
}

TEST_CASE("sum examples") {
    Cone upper_cc = Cone::fan({1, 0}, true, {-1, 0}, true);
    CHECK(cone_sum(quarter_cc(), Cone::fan({0, 1}, true, {-1, 0}, true)) == upper_cc);
    CHECK(cone_sum(Cone::ray({1, 0}), Cone::ray({-1, 0})) == Cone::line({1, 0}));
    CHECK(cone_sum(upper_cc, Cone::ray({0, -1})) == Cone::full());

    for (const Cone& c : cone_catalog()) {
        CHECK(cone_sum(Cone::zero(), c) == c);
        CHECK(cone_sum(Cone::full(), c) == Cone::full());
        CHECK(cone_sum(c, c) == c);
    }

    // open boundaries survive only when not absorbed
    CHECK(cone_sum(quarter_oo(), Cone::ray({1, 0})) ==
          Cone::fan({1, 0}, true, {0, 1}, false));
    CHECK(cone_sum(quarter_oo(), Cone::ray({1, 5})) == quarter_oo());

    // line against off-line cones
    CHECK(cone_sum(Cone::line({1, 0}), Cone::ray({0, 1})) == upper_cc);
    CHECK(cone_sum(Cone::line({1, 0}), Cone::line({0, 1})) == Cone::full());
    CHECK(cone_sum(Cone::line({1, 0}), Cone::ray({-1, 0})) == Cone::line({1, 0}));
}

TEST_CASE("closure over the full scalars") {
    CHECK(cone_cl_full(Cone::zero()) == Cone::zero());
    CHECK(cone_cl_full(Cone::line({1, 0})) == Cone::full());
    CHECK(cone_cl_full(Cone::ray({2, 3})) == Cone::full());
}

TEST_CASE("symmetry") {
    CHECK(cone_is_symmetric(Cone::line({1, 2})));
    CHECK(cone_is_symmetric(Cone::fan({1, 0}, true, {-1, 0}, true)));
    CHECK_FALSE(cone_is_symmetric(Cone::fan({1, 0}, false, {-1, 0}, true)));
    CHECK_FALSE(cone_is_symmetric(quarter_cc()));
    CHECK_FALSE(cone_is_symmetric(Cone::ray({1, 0})));
    CHECK(cone_is_symmetric(Cone::full()));
    CHECK_FALSE(cone_is_symmetric(Cone::zero()));
}

TEST_CASE("finite generation of cones") {
    CHECK_FALSE(cone_is_fg(quarter_oo()));
    CHECK(cone_is_fg(quarter_cc()));
    CHECK(cone_is_fg(Cone::line({0, 1})));
    CHECK(cone_is_fg(Cone::ray({1, 1})));
    CHECK_FALSE(cone_is_fg(Cone::fan({1, 0}, true, {0, 1}, false)));
}

TEST_CASE("generators regenerate their cone") {
    CHECK(cone_generators(Cone::line({1, 0})) ==
          std::vector<GaussRat>{pt(1, 0), pt(-1, 0)});
    CHECK(cone_generators(quarter_cc()) ==
          std::vector<GaussRat>{pt(1, 0), pt(1, 1), pt(0, 1)});
    CHECK(cone_generators(Cone::full()) ==
          std::vector<GaussRat>{pt(1, 0), pt(-1, 0), pt(0, 1), pt(0, -1)});
    CHECK_THROWS_AS(cone_generators(quarter_oo()), error);

    for (const Cone& c : cone_catalog()) {
        if (!cone_is_fg(c)) continue;
        Cone rebuilt = Cone::zero();
        for (const GaussRat& g : cone_generators(c))
            rebuilt = cone_sum(rebuilt, Cone::ray(dir_of_point(g)));
        CHECK(rebuilt == c);
    }
}

TEST_CASE("restriction to the real axis") {
    CHECK(cone_restrict_real(Cone::full()) == Cone::line({1, 0}));
    CHECK(cone_restrict_real(quarter_cc()) == Cone::ray({1, 0}));
    CHECK(cone_restrict_real(quarter_oo()) == Cone::zero());
    CHECK(cone_restrict_real(Cone::line({0, 1})) == Cone::zero());
    CHECK(cone_restrict_real(Cone::ray({-1, 0})) == Cone::ray({-1, 0}));
}

TEST_CASE("sampled points are members and closed under the module laws") {
    SplitMix rng(3);
    for (const Cone& c : cone_catalog()) {
        for (int k = 0; k < 60; ++k) {
            GaussRat p = cone_sample_point(c, rng);
            GaussRat q = cone_sample_point(c, rng);
            CHECK(cone_member(c, p));
            CHECK(cone_member(c, p + q));
            Rat t = random_rat(rng, 6);
            CHECK(cone_member(c, GaussRat(t * t) * p));
        }
    }
}

TEST_CASE("intersection and sum against set-level oracles") {
    const auto pts = oracle_points();
    const auto& cat = cone_catalog();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        for (std::size_t j = 0; j < cat.size(); ++j) {
            Cone inter = cone_intersect(cat[i], cat[j]);
            Cone sum = cone_sum(cat[i], cat[j]);
            for (const GaussRat& z : pts) {
                bool conj = cone_member(cat[i], z) && cone_member(cat[j], z);
                CAPTURE(i);
                CAPTURE(j);
                CAPTURE(z.re.get_str());
                CAPTURE(z.im.get_str());
                REQUIRE(cone_member(inter, z) == conj);
                ConeSplit split;
                bool realizable = cone_sum_realize(cat[i], cat[j], z, split);
                if (realizable) {
                    REQUIRE(split.p + split.q == z);
                    REQUIRE(cone_member(cat[i], split.p));
                    REQUIRE(cone_member(cat[j], split.q));
                }
                REQUIRE(cone_member(sum, z) == realizable);
            }
        }
    }
}

TEST_CASE("cone text forms round trip") {
    for (const Cone& c : cone_catalog()) CHECK(parse_cone(to_string(c)) == c);
    CHECK(parse_cone("fan[cc](1,0;0,1)") == quarter_cc());
    CHECK(parse_cone(" line( 2 , 4 ) ") == Cone::line({1, 2}));
    CHECK_THROWS_AS(parse_cone("cone(1,0)"), error);
    CHECK_THROWS_AS(parse_cone("fan[xy](1,0;0,1)"), error);
}

namespace {

// Arbitrary valid cone over a wider direction pool than the catalog.
Cone random_cone(SplitMix& rng) {
    auto rand_dir = [&]() -> Direction {
        for (;;) {
            long long x = rng.range(-5, 5), y = rng.range(-5, 5);
            if (x || y) return normalize_dir(x, y);
        }
    };
    switch (rng.below(6)) {
    case 0: return Cone::zero();
    case 1: return Cone::full();
    case 2: return Cone::line(rand_dir());
    case 3: return Cone::ray(rand_dir());
    case 4: { // half-plane
        Direction d = rand_dir();
        return Cone::fan(d, rng.coin(), -d, rng.coin());
    }
    default: {
        for (;;) {
            Direction lo = rand_dir(), hi = rand_dir();
            if (lo == hi || cross(lo, hi) <= 0) continue;
            return Cone::fan(lo, rng.coin(), hi, rng.coin());
        }
    }
    }
}

} // namespace

TEST_CASE("randomized cones agree with the set-level oracles") {
    SplitMix rng(0xC0FFEE);
    for (int round = 0; round < 400; ++round) {
        Cone a = random_cone(rng), b = random_cone(rng);
        Cone inter = cone_intersect(a, b);
        Cone sum = cone_sum(a, b);
        std::vector<GaussRat> pts;
        for (int k = 0; k < 12; ++k) {
            pts.push_back(cone_sample_point(a, rng));
            pts.push_back(cone_sample_point(b, rng));
            pts.push_back(GaussRat(rat(rng.range(-6, 6), rng.range(1, 4)),
                                   rat(rng.range(-6, 6), rng.range(1, 4))));
        }
        // boundary directions of both cones, both signs
        for (const Cone* c : {&a, &b}) {
            std::vector<Direction> dirs;
            switch (c->kind()) {
            case Cone::Kind::line: dirs = {c->axis()}; break;
            case Cone::Kind::ray: dirs = {c->dir()}; break;
            case Cone::Kind::fan: dirs = {c->lo(), c->hi()}; break;
            default: break;
            }
            for (const Direction& d : dirs) {
                pts.push_back(to_point(d));
                pts.push_back(to_point(-d));
            }
        }
        for (const GaussRat& z : pts) {
            CAPTURE(to_string(a));
            CAPTURE(to_string(b));
            CAPTURE(to_string(z));
            bool conj = cone_member(a, z) && cone_member(b, z);
            REQUIRE(cone_member(inter, z) == conj);
            ConeSplit split;
            bool realizable = cone_sum_realize(a, b, z, split);
            if (realizable) {
                REQUIRE(split.p + split.q == z);
                REQUIRE(cone_member(a, split.p));
                REQUIRE(cone_member(b, split.q));
            }
            REQUIRE(cone_member(sum, z) == realizable);
        }
    }
}
