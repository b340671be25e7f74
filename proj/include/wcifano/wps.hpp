#pragma once

#include "wcifano/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wcifano {

// A codimension <= 2 weighted complete intersection shape.  No invariant is
// enforced at construction: predicates below (index_check, wellformed, ...)
// are separate so that deliberately broken inputs can be analyzed too.
struct WCIShape {
    std::vector<long long> weights;  // ascending, first entry the weight of x
    std::vector<long long> degrees;  // 0, 1 or 2 entries
};

// A^3 = d1*d2 / prod(a_i) for codimension 2 (and the analogous product
// formula for 0 or 1 degrees).
Rational anticanonical_degree(const WCIShape& s);

// sum(weights) - sum(degrees) == 1 (Fano index one).
bool index_check(const WCIShape& s);

// Ambient space is well formed (gcd of every (n-1)-subset of weights is 1)
// and a general complete intersection of the given degrees misses the
// ambient singular strata in codimension >= 2.
bool wellformed(const WCIShape& s);

// General-hypersurface quasi-smoothness (Iano-Fletcher style test): for
// every nonempty coordinate subset I there is a pure-I monomial of degree d,
// or |I| monomials (I-monomial)*x_e with |I| distinct external variables e.
bool quasismooth_hypersurface(long long d, const std::vector<long long>& weights);

// Necessary stratum-by-stratum conditions for a general codimension-2
// complete intersection to be quasi-smooth.  Sound in the falsifying
// direction: a false return means the general member really is singular.
bool quasismooth_ci_necessary(const WCIShape& s);

// --- singularity basket -----------------------------------------------

struct ComputedBasketEntry {
    long long r = 0;  // order of the cyclic quotient group
    long long a = 0;  // type 1/r(1, a, r-a)
    int count = 0;
};

// One orbifold-Bezout checksum row: on stratum J (ambient coordinate
// indices) with stabilizer mu_g, sum of 1/r over the X-points of the closed
// stratum equals (product of non-vanishing restricted degrees) / (product of
// stratum weights).
struct BasketAuditRow {
    std::vector<int> J;
    long long g = 0;
    Rational lhs, rhs;
};

// Interior point counts and quotient types per ambient singular stratum,
// with types normalized to 1/r(1, a, r-a).  Throws AmbiguousStratum /
// NonIntegralCount when the closed-form count does not apply.
std::vector<ComputedBasketEntry> compute_basket(const WCIShape& s,
                                                std::vector<BasketAuditRow>* audit = nullptr);

// Normalize a quotient type 1/r(w1,w2,w3) with weights prime to r into the
// terminal normal form 1/r(1, a, r-a); returns {r, a}.
std::pair<long long, long long> normalize_quotient_type(long long r,
                                                        const std::vector<long long>& tw);

// --- distinguished singular points --------------------------------------

// Index assignment for a distinguished point p_{x_k}: a_k + a_{j1} = d1,
// a_k + a_{j2} = d2, and the complementary indices i1, i2 carry the
// transverse weights a_{i1} < a_{i2} < a_k.  Index 0 is reserved for x.
struct DistinguishedConfig {
    int k = 0, j1 = 0, j2 = 0, i1 = 0, i2 = 0;
};

std::vector<DistinguishedConfig> detect_distinguished(const WCIShape& s);

// wp(p) = a_{i1} * a_{i2}.
long long weight_product(const WCIShape& s, const DistinguishedConfig& c);

// B^3 = A^3 - 1/(r*a*(r-a)) after a Kawamata blowup of a 1/r(1,a,r-a) point.
Rational kawamata_degree(const Rational& A3, long long r, long long a);

// Classification of a family by its numerical characters ("F(i)", "F(ii)"
// or "other"); see the certify module for the full rule.
std::string classify_family(const WCIShape& s);

} // namespace wcifano
