#pragma once

#include <utility>
#include <vector>

#include "qq/report.hpp"
#include "qq/series.hpp"

namespace qq {

// Equality of all coefficients below the smaller of the two precisions.
bool agree_to_precision(const Series& a, const Series& b);

// Checks the leading-coefficient map against its defining conditions on the
// given sample pairs. Conditions over concrete pairs (units, products, sums,
// cancellation) are tested directly; the existential ones (prescribed
// valuation and leading coefficient, square witnesses, square scaling) are
// discharged by running their constructions and verifying the results
// exactly. Failures are reported, not thrown.
std::vector<Report> pan_axiom_report(const std::vector<std::pair<Series, Series>>& samples);

} // namespace qq
