#pragma once

#include "wcifano/rational.hpp"
#include "wcifano/wps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wcifano {

// l such that l*A isolates the point cut out by projection from x_j:
// max over k != j of lcm(a_j, a_k).
long long isolating_by_projection(const std::vector<long long>& weights, int j);

// Structured isolating class for a point in the open stratum described by
// `mask` (true = coordinate generically nonzero).  The first two entries of
// `ws` are the base pair (both must be unmasked/nonzero); for i >= 2,
// l_i = ws[i] * min{ k > 0 : k*ws[i] in <ws[0], ws[1]> } when masked nonzero,
// else ws[i].  Returns the maximum of lcm(ws[0], ws[1]) and the l_i.
long long isolating_structured(const std::vector<long long>& ws,
                               const std::vector<int>& mask);

// --- certificate-database stratum entries --------------------------------

// How an entry's isolating number l was obtained, for recomputation.
struct Recipe {
    std::string kind;        // "projection", "structured" or "recorded"
    int j = -1;              // projection: index into the family weights
    std::vector<int> order;  // structured: weight indices, base pair first
    std::vector<int> mask;   // structured: nonzero flags aligned with order
};

// Flopping/low-degree curve data attached to a stratum entry.
struct CurveData {
    Rational d;           // A . Gamma
    int m = 1;            // multiplicity bound fed into the criwisol check
    std::string formula;  // "2a5", "a4a5" or "explicit"
};

struct StratumEntry {
    std::string id;      // e.g. "off_Hx", "Hx_alpha_nonzero"
    std::string lemma;   // "isol-i", "isolstr", "isol-iia", "isol-iibc1", "isol-iic"
    long long l = 0;     // isolating number: p is isolated in the base locus of l*A
    long long c = 1;     // the divisor family used is |cA|
    std::optional<CurveData> curve;
    Recipe recipe;
    std::vector<std::string> assume;
};

// Recomputes whatever the entry's recipe allows and checks the recorded
// data for consistency:
//  - projection / structured recipes must reproduce l exactly;
//  - curve formula tags "2a5" and "a4a5" must match d = 2/a5 resp.
//    (a4+a5)/(a4*a5);
//  - lemma "isol-iic" additionally requires l <= 1/A^3.
// Returns a list of human-readable violations (empty = consistent).
// Throws UnknownLemmaTag for a lemma outside the known set.
std::vector<std::string> verify_stratum_entry(const WCIShape& shape,
                                              const StratumEntry& entry);

} // namespace wcifano
