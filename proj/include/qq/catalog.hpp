#pragma once

#include <vector>

#include "qq/char2_module.hpp"
#include "qq/qq_module.hpp"

namespace qq {

// Fixed catalog of exactly 40 cones with small-height directions, covering
// every variant and flag combination. Deterministic order.
const std::vector<Cone>& cone_catalog();

// Valid normal-form modules built from the cone catalog (several hundred).
const std::vector<QQModule>& module_catalog();

// Every canonical characteristic-two module with cut points in
// {0, 1/2, 1, 3/2, 2}: the full finite classification space at desk scale.
const std::vector<Char2Module>& char2_catalog();

// Descriptor grid used by the exhaustive characteristic-two set checks:
// the zero descriptor plus all (v, p) with v = k/8 <= 3 and p != 0.
const std::vector<Descriptor>& descriptor_grid();

} // namespace qq
