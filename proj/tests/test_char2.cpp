#include <doctest.h>

#include "qq/catalog.hpp"
#include "qq/char2_module.hpp"
#include "qq/error.hpp"

using namespace qq;

namespace {

DyadicSeries D(const std::string& text) { return parse_dyadic_series(text); }
Dyadic dy(long long n, unsigned k = 0) { return Dyadic::make(n, k); }

} // namespace

TEST_CASE("field of four elements") {
    // field laws, exhaustively
    for (unsigned i = 0; i < 4; ++i) {
        F4 a(i);
        CHECK(a + F4::zero() == a);
        CHECK(a * F4::one() == a);
        CHECK(a + a == F4::zero()); // characteristic two
        for (unsigned j = 0; j < 4; ++j) {
            F4 b(j);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (unsigned k = 0; k < 4; ++k) {
                F4 c(k);
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    }
    CHECK(F4::omega() * F4::omega() == F4::omega1()); // w^2 = w + 1
    CHECK(F4::omega() * F4::omega1() == F4::one());   // w (w+1) = 1

    // Frobenius is a bijection and its own inverse
    bool seen[4] = {false, false, false, false};
    for (unsigned i = 0; i < 4; ++i) {
        F4 sq = F4(i).square();
        seen[sq.bits()] = true;
        CHECK(F4(i).sqrt().square() == F4(i));
        CHECK(sq.sqrt() == F4(i));
    }
    for (bool s : seen) CHECK(s);
}

TEST_CASE("dyadic exponents") {
    CHECK(dy(4, 2) == dy(1, 0));
    CHECK(dy(3, 1).halved() == dy(3, 2));
    CHECK(dy(1, 1) + dy(1, 1) == dy(1, 0));
    CHECK(dy(3, 1) < dy(2, 0));
    CHECK(dy(9, 3) > dy(1, 0));
    CHECK(parse_dyadic("3/2") == dy(3, 1));
    CHECK(parse_dyadic("5") == dy(5, 0));
    CHECK_THROWS_AS(parse_dyadic("1/3"), error);
    CHECK_THROWS_AS(Dyadic::make(-1, 0), error);
    CHECK(to_string(dy(3, 1)) == "3/2");
}

TEST_CASE("finitely supported series arithmetic") {
    CHECK((D("X") + D("X")).is_zero());
    CHECK(D("X^{1/2}") * D("X^{1/2}") == D("X"));
    CHECK(D("1 + X") + D("1") == D("X"));
    CHECK(D("w*X") * D("w*X") == D("(w+1)*X^2"));
    CHECK(D("w+1") == D("(w+1)"));

    // parse/print round trip
    for (const char* t : {"w*X^{3/2} + X^2", "1 + X", "0", "(w+1)*X^{1/2}", "X^3"}) {
        DyadicSeries s = D(t);
        CHECK(parse_dyadic_series(to_string(s)) == s);
    }
    CHECK_THROWS_AS(D("q"), error);
    CHECK_THROWS_AS(D("w*"), error);
}

TEST_CASE("valuation descriptor") {
    CHECK(dy_val_pan(D("w*X^{3/2} + X^2")) == Descriptor::of(dy(3, 1), F4::omega()));
    CHECK(dy_val_pan(D("0")) == Descriptor::zero());
    CHECK(dy_val_pan(D("1 + X")) == Descriptor::of(dy(0), F4::one()));
}

TEST_CASE("termwise square roots") {
    CHECK(dy_sqrt(D("X")) == D("X^{1/2}"));
    CHECK(dy_sqrt(D("X + X^3")) == D("X^{1/2} + X^{3/2}"));
    CHECK(dy_sqrt(D("w+1")) == D("w")); // Frobenius inverse
    SplitMix rng(13);
    for (int k = 0; k < 2000; ++k) {
        DyadicSeries s = random_dyadic_series(rng, 6, 16, 4);
        DyadicSeries r = dy_sqrt(s);
        CHECK(r * r == s);
    }
}

TEST_CASE("membership in the characteristic-two A") {
    CHECK(dy_in_A(D("w*X^{1/2}")));
    CHECK_FALSE(dy_in_A(D("w + X")));
    CHECK(dy_in_A(D("1 + w*X")));
}

TEST_CASE("two squares") {
    auto [u, v] = two_squares(D("X"));
    CHECK(u == D("1 + X^{1/2}"));
    CHECK(v == D("1"));
    CHECK(u * u + v * v == D("X"));

    auto [u2, v2] = two_squares(D("w*X^{1/2}"));
    CHECK(u2 * u2 + v2 * v2 == D("w*X^{1/2}"));

    auto [u3, v3] = two_squares(D("0"));
    CHECK(u3 == D("1"));
    CHECK(v3 == D("1"));

    CHECK_THROWS_AS(two_squares(D("1 + X")), error);

    SplitMix rng(31);
    for (int k = 0; k < 500; ++k) {
        DyadicSeries x = random_dyadic_series(rng);
        F4 c0 = x.coeff(Dyadic::integer(0));
        if (!c0.is_zero()) x = x + DyadicSeries::term(c0, Dyadic::integer(0));
        auto [a, b] = two_squares(x);
        CHECK(a * a + b * b == x);
        CHECK(dy_in_A(a));
        CHECK(dy_in_A(b));
    }
}

TEST_CASE("final segments") {
    FinalSegment closed1 = FinalSegment::from(dy(1), true);
    FinalSegment open1 = FinalSegment::from(dy(1), false);
    CHECK(seg_compare(closed1, open1) == SegOrder::superset);
    CHECK(seg_compare(FinalSegment::from(dy(1, 1), true), FinalSegment::from(dy(2), true)) ==
          SegOrder::superset);
    CHECK(seg_compare(FinalSegment::empty(), open1) == SegOrder::subset);
    CHECK(seg_compare(open1, open1) == SegOrder::equal);

    CHECK(closed1.contains(dy(1)));
    CHECK_FALSE(open1.contains(dy(1)));
    CHECK(open1.contains(dy(9, 3)));
    CHECK(closed1.has_min());
    CHECK_FALSE(open1.has_min());
}

TEST_CASE("canonical module forms") {
    FinalSegment s1 = FinalSegment::from(dy(1), true);
    // the all-coefficients refinement is the segment-only form
    CHECK(Char2Module::d2(s1, F4Submodule::all()) == Char2Module::d1(s1));
    // at the zero cut the prime-field refinement is everything
    FinalSegment s0 = FinalSegment::from(dy(0), true);
    CHECK(Char2Module::d2(s0, F4Submodule::f2()) == Char2Module::d1(s0));
    CHECK_THROWS_AS(Char2Module::d2(s0, F4Submodule::omega_line()), error);
    CHECK_THROWS_AS(Char2Module::d2(FinalSegment::from(dy(1), false), F4Submodule::f2()),
                    error);
    CHECK_THROWS_AS(Char2Module::d2(s1, F4Submodule::zero()), error);
}

TEST_CASE("descriptor membership") {
    FinalSegment s1 = FinalSegment::from(dy(1), true);
    Char2Module M = Char2Module::d2(s1, F4Submodule::f2());
    CHECK_FALSE(c2_member(M, Descriptor::of(dy(1), F4::omega())));
    CHECK(c2_member(M, Descriptor::of(dy(3, 1), F4::omega())));
    CHECK(c2_member(M, Descriptor::of(dy(1), F4::one())));
    CHECK(c2_member(M, Descriptor::zero()));

    Char2Module open1 = Char2Module::d1(FinalSegment::from(dy(1), false));
    CHECK_FALSE(c2_member(open1, Descriptor::of(dy(1), F4::one())));
    CHECK(c2_member(open1, Descriptor::of(dy(9, 3), F4::omega())));

    Char2Module zero = Char2Module::d1(FinalSegment::empty());
    CHECK(c2_member(zero, Descriptor::zero()));
    CHECK_FALSE(c2_member(zero, Descriptor::of(dy(1), F4::one())));
}

TEST_CASE("lattice operations") {
    FinalSegment s1 = FinalSegment::from(dy(1), true);
    Char2Module f2 = Char2Module::d2(s1, F4Submodule::f2());
    Char2Module omega = Char2Module::d2(s1, F4Submodule::omega_line());

    // disjoint level modules: the minimum drops out
    CHECK(c2_intersect(f2, omega) == Char2Module::d1(FinalSegment::from(dy(1), false)));
    // spanning level modules: everything at the minimum
    CHECK(c2_sum(f2, omega) == Char2Module::d1(s1));

    Char2Module wider = Char2Module::d1(FinalSegment::from(dy(1, 1), true));
    CHECK(c2_intersect(f2, wider) == f2);
    CHECK(c2_sum(f2, wider) == wider);

    for (const Char2Module& M : char2_catalog()) {
        CHECK(c2_intersect(M, M) == M);
        CHECK(c2_sum(M, M) == M);
    }
}

TEST_CASE("classifier round trips") {
    Char2Module open1 = Char2Module::d1(FinalSegment::from(dy(1), false));
    C2Classifier c1 = c2_phi(open1);
    CHECK_FALSE(c1.level.has_value());
    CHECK(c2_psi(c1) == open1);

    FinalSegment s1 = FinalSegment::from(dy(1), true);
    Char2Module omega = Char2Module::d2(s1, F4Submodule::omega_line());
    C2Classifier c2 = c2_phi(omega);
    REQUIRE(c2.level.has_value());
    CHECK(*c2.level == F4Submodule::omega_line());

    // segment-only forms with a minimum still report their level module
    C2Classifier c3 = c2_phi(Char2Module::d1(s1));
    REQUIRE(c3.level.has_value());
    CHECK(*c3.level == F4Submodule::all());
    C2Classifier c4 = c2_phi(Char2Module::d1(FinalSegment::from(dy(0), true)));
    REQUIRE(c4.level.has_value());
    CHECK(*c4.level == F4Submodule::f2());

    CHECK_THROWS_AS(
        c2_psi({FinalSegment::from(dy(0), true), F4Submodule::omega_line()}), error);
    CHECK_THROWS_AS(c2_psi({s1, std::nullopt}), error);

    for (const Char2Module& M : char2_catalog()) CHECK(c2_psi(c2_phi(M)) == M);
}

TEST_CASE("closures of descriptor sets") {
    CHECK(c2_from_generators({Descriptor::of(dy(1), F4::one())}) ==
          Char2Module::d2(FinalSegment::from(dy(1), true), F4Submodule::f2()));
    CHECK(c2_from_generators(
              {Descriptor::of(dy(1), F4::one()), Descriptor::of(dy(1), F4::omega())}) ==
          Char2Module::d1(FinalSegment::from(dy(1), true)));
    CHECK(c2_from_generators({Descriptor::of(dy(3, 1), F4::omega())}) ==
          Char2Module::d2(FinalSegment::from(dy(3, 1), true), F4Submodule::omega_line()));
    CHECK(c2_from_generators({Descriptor::zero()}) ==
          Char2Module::d1(FinalSegment::empty()));
    CHECK_THROWS_AS(c2_from_generators({Descriptor::of(dy(0), F4::omega())}), error);
}

TEST_CASE("valuation laws in characteristic two") {
    SplitMix rng(61);
    auto nonzero = [&]() {
        for (;;) {
            DyadicSeries s = random_dyadic_series(rng, 5, 12, 3);
            if (!s.is_zero()) return s;
        }
    };
    for (int k = 0; k < 2500; ++k) {
        DyadicSeries a = nonzero(), b = nonzero();
        Descriptor da = dy_val_pan(a), db = dy_val_pan(b);
        // multiplicativity of the leading term
        Descriptor dp = dy_val_pan(a * b);
        REQUIRE_FALSE(dp.is_zero());
        CHECK(*dp.v == *da.v + *db.v);
        CHECK(dp.p == da.p * db.p);
        // sums: the lower valuation wins; at equal valuations the leading
        // coefficients add or the valuation strictly rises
        Descriptor ds = dy_val_pan(a + b);
        if (*da.v < *db.v) {
            CHECK(ds == da);
        } else if (*da.v == *db.v) {
            if (da.p + db.p != F4::zero()) {
                CHECK(ds == Descriptor::of(*da.v, da.p + db.p));
            } else {
                CHECK((ds.is_zero() || *ds.v > *da.v));
            }
        }
    }
}

TEST_CASE("segment comparison agrees with pointwise containment") {
    std::vector<FinalSegment> segs;
    segs.push_back(FinalSegment::empty());
    for (const Char2Module& M : char2_catalog()) segs.push_back(M.segment());
    for (const FinalSegment& s1 : segs) {
        for (const FinalSegment& s2 : segs) {
            SegOrder ord = seg_compare(s1, s2);
            bool fwd = true, bwd = true; // s1 subseteq s2, s2 subseteq s1
            for (const Descriptor& d : descriptor_grid()) {
                if (d.is_zero()) continue;
                if (s1.contains(*d.v) && !s2.contains(*d.v)) fwd = false;
                if (s2.contains(*d.v) && !s1.contains(*d.v)) bwd = false;
            }
            // the grid cannot separate a closed cut from its open version,
            // but the order must at least be consistent with it
            if (ord == SegOrder::subset) CHECK(fwd);
            if (ord == SegOrder::superset) CHECK(bwd);
            if (ord == SegOrder::equal) CHECK((fwd && bwd));
        }
    }
}

TEST_CASE("characteristic-two closure property at the series level") {
    const auto& grid = descriptor_grid();
    for (const Char2Module& M : char2_catalog()) {
        // every pair of grid members sums back into the module, including the
        // exact-cancellation pairs of characteristic two
        std::vector<DyadicSeries> members;
        for (const Descriptor& d : grid)
            if (!d.is_zero() && c2_member(M, d))
                members.push_back(DyadicSeries::term(d.p, *d.v));
        for (std::size_t i = 0; i < members.size(); i += 9) {
            for (std::size_t j = i; j < members.size(); j += 11) {
                CHECK(c2_member(M, dy_val_pan(members[i] + members[j])));
                DyadicSeries a = DyadicSeries::one() +
                                 DyadicSeries::term(F4::omega(), Dyadic::make(1, 1));
                CHECK(c2_member(M, dy_val_pan(a * a * members[i])));
            }
        }
    }
}
