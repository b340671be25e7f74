#include "wcifano/isolating.hpp"
#include "wcifano/errors.hpp"
#include "wcifano/semigroup.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace wcifano {

long long isolating_by_projection(const std::vector<long long>& weights, int j) {
    if (j < 0 || j >= static_cast<int>(weights.size()))
        throw Error("isolating_by_projection: index out of range");
    if (weights.size() == 1)
        return weights[0];
    long long best = 0;
    for (int k = 0; k < static_cast<int>(weights.size()); ++k) {
        if (k == j)
            continue;
        best = std::max(best, std::lcm(weights[static_cast<size_t>(j)],
                                       weights[static_cast<size_t>(k)]));
    }
    return best;
}

long long isolating_structured(const std::vector<long long>& ws,
                               const std::vector<int>& mask) {
    if (ws.size() < 2 || ws.size() != mask.size())
        throw Error("isolating_structured: need >= 2 weights and a matching mask");
    if (!mask[0] || !mask[1])
        throw Error("isolating_structured: base pair must be unmasked");
    long long l = std::lcm(ws[0], ws[1]);
    for (size_t i = 2; i < ws.size(); ++i) {
        long long li = mask[i] ? ws[i] * semigroup_min_multiple(ws[0], ws[1], ws[i])
                               : ws[i];
        l = std::max(l, li);
    }
    return l;
}

std::vector<std::string> verify_stratum_entry(const WCIShape& shape,
                                              const StratumEntry& entry) {
    static const std::set<std::string> known = {
        "isol-i", "isolstr", "isol-iia", "isol-iibc1", "isol-iic"};
    if (!known.count(entry.lemma))
        throw UnknownLemmaTag("stratum entry '" + entry.id +
                              "': unknown lemma tag '" + entry.lemma + "'");
    std::vector<std::string> bad;
    auto complain = [&](const std::string& what) {
        bad.push_back("stratum '" + entry.id + "': " + what);
    };
    const auto& W = shape.weights;
    if (entry.recipe.kind == "projection") {
        long long l = isolating_by_projection(W, entry.recipe.j);
        if (l != entry.l) {
            std::ostringstream os;
            os << "projection recipe gives l = " << l << ", recorded " << entry.l;
            complain(os.str());
        }
    } else if (entry.recipe.kind == "structured") {
        std::vector<long long> ws;
        for (int i : entry.recipe.order) {
            if (i < 0 || i >= static_cast<int>(W.size())) {
                complain("structured recipe order index out of range");
                return bad;
            }
            ws.push_back(W[static_cast<size_t>(i)]);
        }
        long long l = isolating_structured(ws, entry.recipe.mask);
        if (l != entry.l) {
            std::ostringstream os;
            os << "structured recipe gives l = " << l << ", recorded " << entry.l;
            complain(os.str());
        }
    } else if (entry.recipe.kind != "recorded") {
        complain("unknown recipe kind '" + entry.recipe.kind + "'");
    }
    if (entry.curve) {
        const auto& cd = *entry.curve;
        long long a4 = W[4], a5 = W[5];
        if (cd.formula == "2a5") {
            if (cd.d != Rational(Int(2), Int(a5)))
                complain("curve degree does not match 2/a5");
        } else if (cd.formula == "a4a5") {
            if (cd.d != Rational(Int(a4 + a5), Int(a4) * a5))
                complain("curve degree does not match (a4+a5)/(a4*a5)");
        } else if (cd.formula != "explicit") {
            complain("unknown curve degree formula '" + cd.formula + "'");
        }
        if (cd.m < 1)
            complain("curve multiplicity bound must be >= 1");
    }
    if (entry.lemma == "isol-iic") {
        Rational A3 = anticanonical_degree(shape);
        if (Rational(Int(entry.l)) * A3 > 1)
            complain("lemma isol-iic requires l <= 1/A^3");
    }
    if (entry.l <= 0)
        complain("isolating number must be positive");
    if (entry.c <= 0)
        complain("divisor multiple c must be positive");
    return bad;
}

} // namespace wcifano
