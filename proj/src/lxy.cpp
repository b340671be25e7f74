#include "wcifano/lxy.hpp"
#include "wcifano/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace wcifano {

namespace {

constexpr int kCap = 26;  // truncation order for local power series

using Exp4 = std::array<int, 4>;
using Series = std::map<Exp4, Rational>;  // truncated at total degree kCap

int total_deg(const Exp4& e) { return e[0] + e[1] + e[2] + e[3]; }

void add_term(Series& s, const Exp4& e, const Rational& c) {
    if (total_deg(e) >= kCap || c == 0)
        return;
    auto it = s.find(e);
    if (it == s.end()) {
        s.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            s.erase(it);
    }
}

Series mul(const Series& a, const Series& b) {
    Series out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exp4 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            add_term(out, e, ca * cb);
        }
    }
    return out;
}

// substitute variable `var` := phi (phi free of `var`)
Series subst(const Series& p, int var, const Series& phi) {
    std::map<int, Series> powers;
    powers[0] = Series{{Exp4{0, 0, 0, 0}, Rational(1)}};
    std::function<const Series&(int)> pw = [&](int k) -> const Series& {
        auto it = powers.find(k);
        if (it == powers.end())
            it = powers.emplace(k, mul(pw(k - 1), phi)).first;
        return it->second;
    };
    Series out;
    for (const auto& [e, c] : p) {
        Exp4 base = e;
        int k = base[static_cast<size_t>(var)];
        base[static_cast<size_t>(var)] = 0;
        for (const auto& [ep, cp] : pw(k)) {
            Exp4 ee{base[0] + ep[0], base[1] + ep[1], base[2] + ep[2],
                    base[3] + ep[3]};
            add_term(out, ee, c * cp);
        }
    }
    return out;
}

Rational coeff_value(const LxyTerm& t, const Rational& param_value) {
    return t.param.empty() ? t.coeff : param_value;
}

// germ of one equation at the coordinate point `vi`: that variable is set
// to 1, i.e. its exponent dropped.
Series germ(const std::vector<LxyTerm>& g, int vi, const Rational& param_value) {
    Series out;
    for (const auto& t : g) {
        Exp4 e = t.exp;
        e[static_cast<size_t>(vi)] = 0;
        add_term(out, e, coeff_value(t, param_value));
    }
    return out;
}

} // namespace

int lxy_point_index(const std::string& point) {
    if (point == "p_z") return 0;
    if (point == "p_s") return 1;
    if (point == "p_t") return 2;
    if (point == "p_u") return 3;
    throw SchemaError("unknown L_xy point id '" + point + "'");
}

void lxy_validate(const LxyRecord& rec, const std::vector<long long>& weights,
                  const std::vector<long long>& degrees, int family_no) {
    auto fail = [&](const std::string& field, const std::string& what) {
        std::ostringstream os;
        os << "family " << family_no << ", lxy." << field << ": " << what;
        throw SchemaError(os.str());
    };
    if (rec.vars != std::vector<std::string>{"z", "s", "t", "u"})
        fail("vars", "must be [z,s,t,u]");
    if (weights.size() != 6 || degrees.size() != 2)
        fail("(shape)", "family must have 6 weights and 2 degrees");
    const std::vector<long long> vw(weights.begin() + 2, weights.end());
    auto check_eq = [&](const std::vector<LxyTerm>& g, long long d,
                        const std::string& name) {
        if (g.empty())
            fail(name, "equation has no terms");
        for (const auto& t : g) {
            long long deg = 0;
            for (int i = 0; i < 4; ++i) {
                if (t.exp[static_cast<size_t>(i)] < 0)
                    fail(name, "negative exponent");
                deg += t.exp[static_cast<size_t>(i)] * vw[static_cast<size_t>(i)];
            }
            if (deg != d) {
                std::ostringstream os;
                os << "term of weighted degree " << deg << ", expected " << d;
                fail(name, os.str());
            }
            if (t.param.empty() && t.coeff == 0)
                fail(name, "zero literal coefficient");
        }
    };
    check_eq(rec.g1, degrees[0], "g1");
    check_eq(rec.g2, degrees[1], "g2");
    for (const auto& f : rec.forced) {
        if (f.eq != 1 && f.eq != 2)
            fail("forced", "eq must be 1 or 2");
        const auto& g = (f.eq == 1) ? rec.g1 : rec.g2;
        bool present = std::any_of(g.begin(), g.end(), [&](const LxyTerm& t) {
            return t.exp == f.exp && (!t.param.empty() || t.coeff != 0);
        });
        if (!present)
            fail("forced", "quasi-smoothness-forced monomial missing from equation");
    }
    for (const auto& p : rec.sing)
        lxy_point_index(p);  // throws on bad ids
}

bool lxy_on_curve(const LxyRecord& rec, const std::string& point,
                  const Rational& param_value) {
    int vi = lxy_point_index(point);
    for (const auto* g : {&rec.g1, &rec.g2}) {
        Series s = germ(*g, vi, param_value);
        auto it = s.find(Exp4{0, 0, 0, 0});
        if (it != s.end() && it->second != 0)
            return false;
    }
    return true;
}

bool lxy_jacobian_sing_check(const LxyRecord& rec, const std::string& point,
                             const Rational& param_value) {
    int vi = lxy_point_index(point);
    if (!lxy_on_curve(rec, point, param_value))
        return false;
    // gradient rows of (g1, g2) at the point (all coords 0 except vi = 1)
    std::array<std::array<Rational, 4>, 2> rows;
    int ri = 0;
    for (const auto* g : {&rec.g1, &rec.g2}) {
        for (const auto& t : *g) {
            for (int j = 0; j < 4; ++j) {
                if (t.exp[static_cast<size_t>(j)] < 1)
                    continue;
                Exp4 e = t.exp;
                e[static_cast<size_t>(j)] -= 1;
                bool at_point = true;
                for (int i = 0; i < 4; ++i)
                    if (i != vi && e[static_cast<size_t>(i)] != 0)
                        at_point = false;
                if (at_point)
                    rows[static_cast<size_t>(ri)][static_cast<size_t>(j)] +=
                        coeff_value(t, param_value) * t.exp[static_cast<size_t>(j)];
            }
        }
        ++ri;
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (rows[0][static_cast<size_t>(i)] * rows[1][static_cast<size_t>(j)] -
                    rows[0][static_cast<size_t>(j)] * rows[1][static_cast<size_t>(i)] !=
                0)
                return false;  // a nonzero 2x2 minor: rank 2
    return true;
}

int lxy_mult_at(const LxyRecord& rec, const std::string& point,
                const Rational& param_value) {
    int vi = lxy_point_index(point);
    Series eqs[2] = {germ(rec.g1, vi, param_value), germ(rec.g2, vi, param_value)};
    // find a pure linear term, scanning equations then variables
    int qi = -1, var = -1;
    Rational cv;
    for (int q = 0; q < 2 && qi < 0; ++q) {
        for (int v = 0; v < 4; ++v) {
            if (v == vi)
                continue;
            Exp4 unit{0, 0, 0, 0};
            unit[static_cast<size_t>(v)] = 1;
            auto it = eqs[q].find(unit);
            if (it != eqs[q].end() && it->second != 0) {
                qi = q;
                var = v;
                cv = it->second;
                break;
            }
        }
    }
    if (qi < 0)
        throw NotEliminable("no pure linear term in either germ equation at " + point);
    Series R = eqs[qi];
    {
        Exp4 unit{0, 0, 0, 0};
        unit[static_cast<size_t>(var)] = 1;
        R.erase(unit);
    }
    // iterate var = -(R with var := phi)/cv to the fixpoint (valuation of the
    // correction strictly increases each round, so <= kCap rounds suffice)
    Series phi;
    for (int round = 0; round <= kCap + 1; ++round) {
        Series nxt = subst(R, var, phi);
        for (auto& [e, c] : nxt)
            c = -c / cv;
        if (nxt == phi)
            break;
        phi = std::move(nxt);
    }
    for (const auto& [e, c] : phi)
        if (e[static_cast<size_t>(var)] != 0)
            throw Error("elimination did not converge at " + point);
    Series resid = subst(eqs[qi], var, phi);
    if (!resid.empty())
        throw Error("elimination residual nonzero at " + point);
    Series h = subst(eqs[1 - qi], var, phi);
    if (h.empty())
        throw NotEliminable("plane germ vanishes to the truncation cap at " + point);
    int mult = kCap;
    for (const auto& [e, c] : h)
        mult = std::min(mult, total_deg(e));
    return mult;
}

} // namespace wcifano
