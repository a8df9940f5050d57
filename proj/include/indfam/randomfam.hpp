#pragma once

#include <utility>

#include "indfam/core.hpp"
#include "indfam/ground.hpp"
#include "indfam/rng.hpp"

namespace indfam {

// Documented random-family distribution for the property suites: include each
// candidate set independently with probability permille/1000, repair by
// greedy deletion in scan order, fall back to a fixed seed family when the
// draw repairs to nothing.

Family random_gamma_family(const Params& p, int permille, SplitMix64& rng);

// Repaired to intersecting (greedy keep-scan); falls back to the (1,1) star
// seed {{(1,1),...}} when everything is deleted.
Family random_gamma_intersecting(const Params& p, int permille, SplitMix64& rng);

// Interleaved greedy repair to a cross-intersecting pair; falls back to
// ({[r] x {1}}, {[r] x {1}}).
std::pair<Family, Family> random_gamma_cross_pair(const Params& p, int permille,
                                                  SplitMix64& rng);

GroundFamily random_ground_family(int n, int r, int permille, SplitMix64& rng);
GroundFamily random_ground_intersecting(int n, int r, int permille, SplitMix64& rng);
std::pair<GroundFamily, GroundFamily> random_ground_cross_pair(int n, int r, int permille,
                                                               SplitMix64& rng);

} // namespace indfam
