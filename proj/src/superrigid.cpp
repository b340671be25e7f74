#include "wcifano/superrigid.hpp"

#include "wcifano/certify.hpp"
#include "wcifano/errors.hpp"
#include "wcifano/wps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wcifano {

std::pair<long long, std::vector<long long>> parse_septuple(
    const std::string& text) {
    auto fail = [&]() -> void {
        throw ParseError("malformed septuple '" + text +
                         "' (expected \"d;a0,a1,a2,a3,a4,a5\")");
    };
    auto semi = text.find(';');
    if (semi == std::string::npos)
        fail();
    auto to_ll = [&](const std::string& tok) {
        if (tok.empty() ||
            !std::all_of(tok.begin(), tok.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            fail();
        try {
            return std::stoll(tok);
        } catch (const std::exception&) {
            fail();
            return 0LL;  // unreachable
        }
    };
    long long d = to_ll(text.substr(0, semi));
    std::vector<long long> weights;
    std::string rest = text.substr(semi + 1);
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ','))
        weights.push_back(to_ll(tok));
    if (!rest.empty() && rest.back() == ',')
        fail();
    if (weights.size() != 6 || d < 1)
        fail();
    for (long long w : weights)
        if (w < 1)
            fail();
    return {d, weights};
}

SuperrigidReport superrigid_check(long long d,
                                  const std::vector<long long>& weights,
                                  const Database& db) {
    if (weights.size() != 6)
        throw ParseError("superrigid check needs exactly six weights");
    SuperrigidReport rep;
    rep.d = d;
    long long wsum = std::accumulate(weights.begin(), weights.end(), 0LL);
    rep.d_prime = wsum - 1 - d;
    if (rep.d_prime < 1) {
        std::ostringstream os;
        os << "complementary degree d' = " << wsum << " - 1 - " << d << " = "
           << rep.d_prime << " is not positive";
        throw NonPositiveDPrime(os.str());
    }

    std::vector<long long> sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    std::vector<long long> degs = {std::min(d, rep.d_prime),
                                   std::max(d, rep.d_prime)};
    const Family* match = nullptr;
    for (const auto& f : db.families)
        if (f.weights == sorted && f.degrees == degs)
            match = &f;
    if (!match) {
        std::ostringstream os;
        os << "no database family with degrees (" << degs[0] << "," << degs[1]
           << ") and the given weights";
        throw NoMatchingFamily(os.str());
    }
    rep.family_no = match->no;
    {
        std::ostringstream os;
        os << "matches family " << match->no << ": X_{" << degs[0] << ","
           << degs[1] << "} with d' = " << rep.d_prime;
        rep.notes.push_back(os.str());
    }

    bool ok = true;
    CertifyResult cert = certify_family(*match);
    if (cert.ok && cert.verdict == "lct_equals_1") {
        rep.notes.push_back("family " + std::to_string(match->no) +
                            " certifies lct(X) = 1 at every point");
    } else {
        ok = false;
        rep.notes.push_back(
            "family " + std::to_string(match->no) + " certifies only '" +
            cert.verdict + "'; superrigidity is not established this way");
    }
    if (quasismooth_hypersurface(d, weights)) {
        rep.notes.push_back("general degree-" + std::to_string(d) +
                            " hypersurface is quasi-smooth");
    } else {
        ok = false;
        rep.notes.push_back("general degree-" + std::to_string(d) +
                            " hypersurface is not quasi-smooth");
    }
    if (wellformed(WCIShape{weights, {d}})) {
        rep.notes.push_back("degree-" + std::to_string(d) +
                            " hypersurface is well formed");
    } else {
        ok = false;
        rep.notes.push_back("degree-" + std::to_string(d) +
                            " hypersurface is not well formed");
    }
    rep.certified = ok;
    return rep;
}

} // namespace wcifano
