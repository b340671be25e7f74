#include "wcifano/floplocus.hpp"
#include "wcifano/errors.hpp"
#include "wcifano/monomial.hpp"

#include <sstream>

namespace wcifano {

FlopNumbers flop_numbers(const WCIShape& s, const DistinguishedConfig& c) {
    long long d1 = s.degrees[0], d2 = s.degrees[1];
    long long ak = s.weights[static_cast<size_t>(c.k)];
    long long wp = weight_product(s, c);
    if ((d1 * d2) % wp != 0) {
        std::ostringstream os;
        os << "flopping curve count d1*d2/wp = " << d1 * d2 << "/" << wp
           << " is not an integer";
        throw NonIntegralCount(os.str());
    }
    FlopNumbers out;
    out.e = (d1 * d2) / wp;
    out.a_gamma = Rational(Int(1), Int(ak));
    out.pair_int = Rational(Int(wp), Int(d1) * ak);
    out.self_int = out.pair_int - 1;
    return out;
}

bool flop_prop_applicable(const WCIShape& s, const DistinguishedConfig& c) {
    long long d1 = s.degrees[0], d2 = s.degrees[1];
    long long ak = s.weights[static_cast<size_t>(c.k)];
    long long wp = weight_product(s, c);
    if ((d1 * d2) % wp != 0)
        return false;
    if (wp < d1)
        return false;
    // Exact identity behind the proposition: pushing A.Gamma through one
    // flop must reproduce d1/wp.
    Rational lhs = Rational(Int(1), Int(ak)) +
                   (Rational(1) - Rational(Int(wp), Int(d1) * ak)) *
                       Rational(Int(d1), Int(wp));
    if (lhs != Rational(Int(d1), Int(wp)))
        throw Error("flop identity violated (should be impossible)");
    return true;
}

bool upsilon_boundary_check(const WCIShape& s, const DistinguishedConfig& c) {
    std::vector<long long> ws = {s.weights[static_cast<size_t>(c.i1)],
                                 s.weights[static_cast<size_t>(c.i2)]};
    auto r1 = monomials_of_degree(s.degrees[0], ws);
    auto r2 = monomials_of_degree(s.degrees[1], ws);
    if (r1.empty() || r2.empty())
        return false;
    for (int var = 0; var < 2; ++var) {
        bool divides_all = true;
        for (const auto& m : r1)
            if (m[static_cast<size_t>(var)] == 0)
                divides_all = false;
        for (const auto& m : r2)
            if (m[static_cast<size_t>(var)] == 0)
                divides_all = false;
        if (divides_all)
            return false;
    }
    return true;
}

bool consistency_T1(const WCIShape& s, const DistinguishedConfig& c) {
    long long d2 = s.degrees[1];
    long long ak = s.weights[static_cast<size_t>(c.k)];
    long long aj2 = s.weights[static_cast<size_t>(c.j2)];
    if (d2 != ak + aj2)
        return false;
    FlopNumbers fn = flop_numbers(s, c);
    return Rational(Int(aj2), Int(ak)) ==
           fn.self_int + Rational(Int(fn.e - 1)) * fn.pair_int;
}

} // namespace wcifano
