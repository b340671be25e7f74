#pragma once

#include "wcifano/wps.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wcifano {

// Outcome of an independent search for singular points on random members of
// a complete-intersection shape, carried out over the prime field F_p with
// p = 2^31 - 1.  The search is sound: a reported witness is an exactly
// verified rank drop of the 2x6 Jacobian at an actual nonzero point of the
// affine cone.  It is complete only for F_p-rational phenomena on the
// 0- and 1-dimensional coordinate strata (vertices and edges, plus sampled
// faces whose intersection with X is positive-dimensional); anything else
// is listed in `skipped`.
struct FalsifierReport {
    bool definite = false;        // witness found on every sampled member
    int members_checked = 0;
    int members_with_witness = 0;
    std::string witness;          // description of the first witness found
    std::vector<std::string> skipped;  // strata outside the search scope
};

// Instantiates `members` random members of the shape over F_p (coefficients
// uniform and nonzero, derived from `seed`) and searches the coordinate
// strata for singular points.  `definite` means every member carried one,
// i.e. the general member is singular beyond reasonable doubt.
FalsifierReport falsify_quasismooth(const WCIShape& s, std::uint64_t seed,
                                    int members = 3);

} // namespace wcifano
