#pragma once

#include "wcifano/db.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wcifano {

struct SuperrigidReport {
    long long d = 0;        // input degree
    long long d_prime = 0;  // complementary degree sum(a_i) - 1 - d
    int family_no = 0;      // matched database family
    bool certified = false;
    std::vector<std::string> notes;
};

// Parses "d;a0,a1,a2,a3,a4,a5" (exactly one degree and six weights, all
// positive integers).  Throws ParseError on anything else.
std::pair<long long, std::vector<long long>> parse_septuple(const std::string& text);

// Decides whether a general complete intersection of the input hypersurface
// of degree d with one of the complementary degree d' = sum(a_i) - 1 - d is
// one of the certified lct(X) = 1 families, and hence birationally
// superrigid.  Throws NonPositiveDPrime when d' < 1 and NoMatchingFamily
// when (min(d,d'), max(d,d'); weights) is not in the database; other
// disqualifications are reported with certified = false and a reason note.
SuperrigidReport superrigid_check(long long d,
                                  const std::vector<long long>& weights,
                                  const Database& db);

} // namespace wcifano
