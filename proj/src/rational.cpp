#include "wcifano/rational.hpp"
#include "wcifano/errors.hpp"

namespace wcifano {

std::string rat_str(const Rational& r) {
    Int n = numer(r), d = denom(r);
    if (d == 1)
        return n.str();
    return n.str() + "/" + d.str();
}

Rational rat_parse(const std::string& s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    auto slash = s.find('/');
    Int n, d = 1;
    try {
        if (slash == std::string::npos) {
            n = Int(s);
        } else {
            n = Int(s.substr(0, slash));
            d = Int(s.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
    if (d == 0)
        throw ParseError("zero denominator in rational literal '" + s + "'");
    return Rational(n, d);
}

} // namespace wcifano
