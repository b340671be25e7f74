#pragma once

#include "wcifano/rational.hpp"
#include "wcifano/wps.hpp"

namespace wcifano {

// Numerics of the flopping locus over a distinguished point p = p_{x_k}:
// e copies of a curve Gamma with A.Gamma = 1/a_k, pairwise intersection
// wp/(d1*a_k) and self-intersection -1 + wp/(d1*a_k) on the Kawamata blowup.
struct FlopNumbers {
    long long e = 0;           // number of flopping curves: d1*d2 / wp
    Rational a_gamma;          // A . Gamma = 1/a_k
    Rational pair_int;         // wp / (d1 * a_k)
    Rational self_int;         // -1 + wp / (d1 * a_k)
};

// Throws NonIntegralCount when d1*d2/wp is not an integer.
FlopNumbers flop_numbers(const WCIShape& s, const DistinguishedConfig& c);

// The flop proposition applies iff wp >= d1 (non-strict) and e is integral.
// Also verifies the exact identity 1/a_k + (1 - wp/(d1*a_k)) * d1/wp = d1/wp.
bool flop_prop_applicable(const WCIShape& s, const DistinguishedConfig& c);

// Restrictions of F1, F2 to the (a_{i1}, a_{i2}) coordinate plane are both
// nonzero and share no common dividing variable (so the boundary of Upsilon
// misses the coordinate axes).
bool upsilon_boundary_check(const WCIShape& s, const DistinguishedConfig& c);

// Table-1/2 consistency identity: a_{j2}/a_k == self + (e-1)*pair together
// with d2 = a_k + a_{j2}.
bool consistency_T1(const WCIShape& s, const DistinguishedConfig& c);

} // namespace wcifano
