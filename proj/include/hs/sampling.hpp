#pragma once

#include <random>

#include "hs/periodic_field.hpp"

namespace hs {

// Random real trigonometric polynomial sum_{k=1}^{max_mode}
// (a_k cos 2 pi k x + b_k sin 2 pi k x) / k^decay with standard normal a_k,
// b_k. No constant term.
GridFunction random_trig_polynomial(const Grid& grid, int max_mode,
                                    std::mt19937_64& rng, double decay = 2.0);

// Mode cap used for band-limited sampling: products of up to four such
// fields stay below the grid's Nyquist frequency.
inline int band_limit(const Grid& grid) { return grid.size() / 8; }

}  // namespace hs
