#include <doctest.h>

#include "qq/error.hpp"
#include "qq/oracle.hpp"
#include "qq/pan_axioms.hpp"
#include "qq/series.hpp"

using namespace qq;

namespace {

Series S(const std::string& text) { return parse_series(text); }

} // namespace

TEST_CASE("series parsing") {
    Series a = S("(2+3i)X^2 + X^5");
    CHECK(a.precision() == 9);
    CHECK(a.coeff(2) == GaussRat(2, 3));
    CHECK(a.coeff(5) == GaussRat(1));
    CHECK(a.coeffs().size() == 2);

    Series z = S("0");
    CHECK(z.is_zero());
    CHECK(z.precision() == 4);

    Series b = S("1 + iX");
    CHECK(b.coeff(0) == GaussRat(1));
    CHECK(b.coeff(1) == gauss_i());

    CHECK(S("1/2 + iX^3").coeff(0) == GaussRat(rat(1, 2)));
    CHECK(S("-X").coeff(1) == GaussRat(-1));
    CHECK(S("(2-3i)X").coeff(1) == GaussRat(2, -3));
    CHECK(S("3iX^2").coeff(2) == GaussRat(0, 3));

    CHECK_THROWS_AS(S("X +"), error);
    CHECK_THROWS_AS(S("(2+"), error);
    CHECK_THROWS_AS(S(""), error);
    CHECK_THROWS_AS(S("X^^2"), error);
    CHECK_THROWS_AS(parse_series("X", 100u), error); // precision limit

    // round trip through the text form
    for (const char* t : {"(2+3i)X^2 + X^5", "1 + iX", "0", "1/2 - X^3", "-iX"}) {
        Series s = S(t);
        CHECK(parse_series(to_string(s), s.precision()) == s);
    }
}

TEST_CASE("series arithmetic") {
    CHECK(S("X") + S("iX") == S("(1+1i)X"));
    CHECK(S("1+X") * S("1-X") == parse_series("1 - X^2", 5u));
    CHECK(S("X^3 + X^4") / S("X") == parse_series("X^2 + X^3", 4u));

    // division errors
    CHECK_THROWS_AS(S("X") / S("0"), error);
    CHECK_THROWS_AS(S("1") / S("X"), error); // negative valuation quotient

    // effective precision of products with shifted factors
    Series shifted = S("1+X") * Series::monomial(GaussRat(1), 3, 10);
    CHECK(shifted.precision() == 8);
    CHECK(shifted.coeff(4) == GaussRat(1));
}

TEST_CASE("valuation and leading coefficient") {
    CHECK(val(S("(2+3i)X^2 + X^5")) == Valuation::finite(2));
    CHECK(val(S("0")) == Valuation::at_least(4));
    CHECK(val(S("1 + iX")) == Valuation::finite(0));

    CHECK(pan(S("(2+3i)X^2 + X^5")) == GaussRat(2, 3));
    CHECK(pan(S("1 + iX")) == GaussRat(1));
    CHECK(pan(S("iX^3")) == gauss_i());
    CHECK_THROWS_AS(pan(S("0")), error);
}

TEST_CASE("membership in A") {
    CHECK(in_A(S("iX")));
    CHECK_FALSE(in_A(S("i + X")));
    CHECK(in_A(S("3 + iX^2")));
}

TEST_CASE("square roots of strict units") {
    Series r = sqrt_strict_unit(parse_series("1 + X", 4u));
    CHECK(r == parse_series("1 + 1/2X - 1/8X^2 + 1/16X^3", 4u));
    CHECK(agree_to_precision(r * r, S("1 + X")));

    CHECK(sqrt_strict_unit(S("1")) == S("1"));
    CHECK(sqrt_strict_unit(S("1 + 2X + X^2")) == parse_series("1 + X", 6u));

    CHECK_THROWS_AS(sqrt_strict_unit(S("2 + X")), error);
    CHECK_THROWS_AS(sqrt_strict_unit(S("X")), error);

    // squaring inverts the construction on random strict units
    SplitMix rng(11);
    for (int k = 0; k < 400; ++k) {
        Series t = random_A_element(rng, 10, 6);
        Series u = S("1") + Series::monomial(GaussRat(1), 1, 11) * t;
        CHECK(agree_to_precision(sqrt_strict_unit(u) * sqrt_strict_unit(u), u));
    }
}

TEST_CASE("square witnesses") {
    SUBCASE("monomial case") {
        Series u = square_witness(S("X^2"), S("X^4"));
        CHECK(val(u) == Valuation::finite(1));
        CHECK(agree_to_precision(u * u * S("X^2"), S("X^4")));
    }
    SUBCASE("unit ratio") {
        Series u = square_witness(S("X"), S("X + X^2"));
        CHECK(u == sqrt_strict_unit(parse_series("1 + X", u.precision())));
        CHECK(agree_to_precision(u * u * S("X"), S("X + X^2")));
    }
    SUBCASE("shifted unit ratio") {
        Series x = S("iX");
        Series y = S("iX^3 + iX^4");
        Series u = square_witness(x, y);
        CHECK(in_A(u));
        CHECK(agree_to_precision(u * u * x, y));
    }
    SUBCASE("equal valuations give a unit with square residue one") {
        Series x = S("2X^2");
        Series y = S("2X^2 + X^3");
        Series u = square_witness(x, y);
        CHECK(val(u) == Valuation::finite(0));
        CHECK((u * u).coeff(0) == GaussRat(1));
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(square_witness(S("X"), S("X^2")), error);   // parity
        CHECK_THROWS_AS(square_witness(S("X"), S("2X^3")), error);  // leading coefficient
        CHECK_THROWS_AS(square_witness(S("X^3"), S("X")), error);   // would leave C[[X]]
        CHECK_THROWS_AS(square_witness(S("0"), S("X")), error);
    }
}

TEST_CASE("mixed square witnesses") {
    Series u = mixed_square_witness(S("X"), 1, GaussRat(2));
    CHECK(val(u) == Valuation::finite(1));
    CHECK(pan(u) == GaussRat(2));
    CHECK(u.coeffs().size() == 1);
    Series au2 = S("X") * u * u;
    CHECK(val(au2) == Valuation::finite(3));
    CHECK(pan(au2) == GaussRat(4));

    Series v = mixed_square_witness(S("1"), 0, gauss_i());
    CHECK(pan(S("1") * v * v) == GaussRat(-1));

    Series w = mixed_square_witness(S("(1+1i)X^2"), 2, GaussRat(3));
    CHECK(pan(S("(1+1i)X^2") * w * w) == GaussRat(9, 9));

    CHECK_THROWS_AS(mixed_square_witness(S("X"), 1, GaussRat(0)), error);
}

TEST_CASE("leading-coefficient laws on random samples") {
    SplitMix rng(5);
    auto nonzero = [&]() {
        for (;;) {
            Series s = random_A_element(rng, 10, 6);
            if (!s.is_zero()) return s;
        }
    };
    for (int k = 0; k < 500; ++k) {
        Series a = nonzero(), b = nonzero();
        // multiplicativity
        Series p = a * b;
        if (!p.is_zero()) {
            CHECK(val(p).value == val(a).value + val(b).value);
            CHECK(pan(p) == pan(a) * pan(b));
        }
        // lower valuation wins in sums
        if (val(a).value < val(b).value) {
            CHECK(val(a + b) == val(a));
            CHECK(pan(a + b) == pan(a));
        }
        // exact cancellation raises the valuation
        Series c = -a + Series::monomial(GaussRat(1), val(a).value + 1, 12) * nonzero();
        Valuation vs = val(a + c);
        CHECK((!vs.is_finite() || vs.value > val(a).value));
    }
}

TEST_CASE("A is closed under ring operations and square scaling") {
    SplitMix rng(7);
    for (int k = 0; k < 300; ++k) {
        Series a = random_A_element(rng, 8, 6);
        Series b = random_A_element(rng, 8, 6);
        CHECK(in_A(a + b));
        CHECK(in_A(a * b));
        CHECK(in_A(b * b * a));
    }
}

TEST_CASE("axiom report on crafted samples") {
    std::vector<std::pair<Series, Series>> samples = {
        {S("1+X"), S("iX")},
        {S("X"), S("iX")},
        {S("X"), S("-X")},
    };
    auto reports = pan_axiom_report(samples);
    for (const Report& r : reports) {
        CAPTURE(r.name);
        CHECK(r.pass());
    }
    // the cancellation pair exercised the cancellation law
    for (const Report& r : reports)
        if (r.name == "cancellation-raises-valuation") CHECK(r.checked == 1);
}
