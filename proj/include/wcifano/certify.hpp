#pragma once

#include "wcifano/db.hpp"
#include "wcifano/rational.hpp"
#include "wcifano/wps.hpp"

#include <string>
#include <vector>

namespace wcifano {

// --- inequality primitives (exact rational arithmetic throughout) -------

// Exclusion at a point of index r lying on the curve L_xy:
// r * c1 * c2 * A3 <= 1 together with mult_p(L_xy) <= c2.
bool check_exclL(long long r, long long c1, long long c2, const Rational& A3,
                 int mult);

enum class ExclGVariant { two_divisors, lc_divisor };

// Exclusion over a stratum carrying an isolating class of degree l:
//   two_divisors: max(c1, c2) * l * A3 <= 1
//   lc_divisor:   c1 * l * A3 <= 1       (c2 is ignored)
bool check_exclG(ExclGVariant v, long long c1, long long c2, long long l,
                 const Rational& A3);

enum class CriwisolOutcome { pass_a, pass_b, fail };

// Curve/isolation dichotomy for a stratum whose non-log-canonical locus can
// only be a recorded curve C with A.C = d and mult bound m:
//   (a) l*d <= m  and  c*m*A3 <= d
//   (b) l*d >  m  and  c*l*A3 <= 1
CriwisolOutcome check_criwisol(long long c, long long l, const Rational& d,
                               int m, const Rational& A3);

struct SingptNEResult {
    bool pass = false;
    Rational kawamata;          // A^3 - 1/(r*a*(r-a))
    bool weight_found = false;  // some ambient weight a_j < r in {1, a, r-a}
};

// Numeric part of the exclusion at a 1/r(1,a,r-a) point: the Kawamata
// blowup drops the anticanonical degree to <= 0 and some coordinate of
// weight 1, a or r-a below r realizes a suitable surface through the point.
// The cone condition (NE of the blowup spanned by two rays) is recorded as
// an assumption by the caller, never verified here.
SingptNEResult check_singptNE_numeric(const Rational& A3, long long r,
                                      long long a,
                                      const std::vector<long long>& weights);

// Exclusion at a distinguished point through the flopped model: the
// boundary of Upsilon avoids the coordinate axes and a_k * a_{j2} * A^3 <= 2.
bool check_somedistsingpt(const WCIShape& s, const DistinguishedConfig& c);

// --- full certificate run for one family --------------------------------

struct CheckRecord {
    std::string kind;     // classify / exclL / exclG / criwisol / flop /
                          // singptNE / somedistsingpt / stratum / open_point
    std::string subject;  // point, stratum or locus the check speaks about
    std::string status;   // pass / fail / open / anomalous / not_applicable
    std::string detail;
    std::vector<std::string> assumptions;
};

struct CertifyResult {
    int family_no = 0;
    std::string computed_class;
    std::string verdict;  // lct_equals_1 / lct_on_Xcirc_equals_1 / not_certified
    bool ok = false;      // no failed check and verdict == expected_verdict
    std::vector<CheckRecord> checks;
    std::vector<std::string> open_points;
    std::vector<std::string> anomalies;
};

// Runs every certificate recorded for the family: the classification rule,
// nonsingular points of L_xy, all stratum records, flop applicability at the
// distinguished points, basket-point exclusions, the QI/EI points and the
// distinguished points themselves.  A check that fails numerically makes the
// verdict "not_certified"; an inconclusive numeric test at a point the
// records still claim excluded is reported as "anomalous" and listed in
// `anomalies` without blocking.  Throws IncompleteData when a required
// record is absent.
CertifyResult certify_family(const Family& f);

} // namespace wcifano
