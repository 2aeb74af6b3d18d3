#include "qq/pan_axioms.hpp"

#include <algorithm>

#include "qq/error.hpp"

namespace qq {

bool agree_to_precision(const Series& a, const Series& b) {
    unsigned p = std::min(a.precision(), b.precision());
    return a.truncated(p) == b.truncated(p);
}

namespace {

std::string pair_text(const Series& a, const Series& b) {
    return "(" + to_string(a) + ", " + to_string(b) + ")";
}

} // namespace

std::vector<Report> pan_axiom_report(const std::vector<std::pair<Series, Series>>& samples) {
    Report units{"units-map-to-residue"};          // pan(u) = residue of u on units
    Report unit_mult{"unit-multiplicativity"};     // pan(u x) = residue(u) pan(x)
    Report surjective{"prescribed-value-witness"}; // monomial with given val and pan
    Report sum_lower{"sum-keeps-lower-valuation"};
    Report sum_equal{"sum-adds-leading-coefficients"};
    Report cancel{"cancellation-raises-valuation"};
    Report square_wit{"square-witness"};
    Report square_scale{"square-scaling"};

    for (const auto& [a, b] : samples) {
        if (!val(a).is_finite() || !val(b).is_finite())
            throw error(errc::precondition, "axiom samples need finite valuations");
        unsigned va = val(a).value, vb = val(b).value;

        for (const Series* s : {&a, &b}) {
            if (val(*s).value != 0) continue;
            if (pan(*s) == s->coeff(0))
                units.ok();
            else
                units.fail(to_string(*s));
        }

        if (va == 0) {
            Series prod = a * b;
            if (pan(prod) == a.coeff(0) * pan(b))
                unit_mult.ok();
            else
                unit_mult.fail(pair_text(a, b));
        }

        {
            Series w = Series::monomial(pan(b), va, va + 4);
            if (val(w) == Valuation::finite(va) && pan(w) == pan(b))
                surjective.ok();
            else
                surjective.fail(pair_text(a, b));
        }

        Series s = a + b;
        if (va < vb) {
            if (val(s) == Valuation::finite(va) && pan(s) == pan(a))
                sum_lower.ok();
            else
                sum_lower.fail(pair_text(a, b));
        } else if (va == vb && !(pan(a) + pan(b)).is_zero()) {
            if (val(s) == Valuation::finite(va) && pan(s) == pan(a) + pan(b))
                sum_equal.ok();
            else
                sum_equal.fail(pair_text(a, b));
        } else if (va == vb) {
            Valuation vs = val(s);
            if (!vs.is_finite() || vs.value > va)
                cancel.ok();
            else
                cancel.fail(pair_text(a, b));
        }

        {
            // rescale b to share a's leading coefficient and valuation parity,
            // then ask for the square witness between them
            unsigned delta = (va & 1u) ^ (vb & 1u);
            Series y = Series::monomial(pan(a) / pan(b), delta, b.precision() + delta) * b;
            const Series& lo = (vb + delta <= va) ? y : a;
            const Series& hi = (vb + delta <= va) ? a : y;
            Series u = square_witness(lo, hi);
            if (in_A(u) && agree_to_precision(u * u * lo, hi))
                square_wit.ok();
            else
                square_wit.fail(pair_text(a, b));
        }

        {
            // k = pan(b) scales the leading coefficient of a b^2 as a square
            GaussRat k = pan(b);
            Series ab2 = a * b * b;
            if (pan(ab2) == pan(a) * k * k)
                square_scale.ok();
            else
                square_scale.fail(pair_text(a, b));
        }

        {
            // prescribed witness with val(u) = g and pan(a u^2) = pan(a) k^2
            GaussRat k = pan(b);
            unsigned g = vb;
            Series u = mixed_square_witness(a, g, k);
            Series au2 = a * u * u;
            if (val(u) == Valuation::finite(g) && pan(au2) == pan(a) * k * k)
                square_scale.ok();
            else
                square_scale.fail("mixed witness on " + pair_text(a, b));
        }
    }

    return {units,  unit_mult, surjective,  sum_lower,
            sum_equal, cancel,    square_wit, square_scale};
}

} // namespace qq
