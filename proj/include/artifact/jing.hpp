#pragma once

#include <vector>

#include "artifact/cartan.hpp"
#include "artifact/mpoly.hpp"

namespace artifact {

using JingPoly = MPoly<Laurent>;  // variables F_1..F_s (indices 0..s-1), G (index s)

// A_{pi,r}(F;G) for a permutation pi of {0..s-1} (pi[t] = image of t).
JingPoly jing_term(const CartanData& cd, int i, int j, const std::vector<int>& pi, int r);

// sum_pi sum_r (-1)^r binom(s,r)_{q_i} A_{pi,r}; the contract value is 0.
JingPoly jing_identity(const CartanData& cd, int i, int j);
JingPoly jing_identity_serial(const CartanData& cd, int i, int j);

}  // namespace artifact
