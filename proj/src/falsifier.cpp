#include "wcifano/falsifier.hpp"

#include "wcifano/errors.hpp"
#include "wcifano/monomial.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace wcifano {

namespace {

using u64 = std::uint64_t;

constexpr u64 P = 2147483647ULL;  // 2^31 - 1, so products of residues fit in u64

u64 addm(u64 a, u64 b) {
    u64 s = a + b;
    return s >= P ? s - P : s;
}
u64 subm(u64 a, u64 b) { return a >= b ? a - b : a + P - b; }
u64 mulm(u64 a, u64 b) { return (a * b) % P; }
u64 powm(u64 b, u64 e) {
    u64 r = 1;
    b %= P;
    while (e) {
        if (e & 1)
            r = mulm(r, b);
        b = mulm(b, b);
        e >>= 1;
    }
    return r;
}
u64 invm(u64 a) { return powm(a, P - 2); }

u64 primitive_root() {
    static const u64 kFactors[] = {2, 3, 7, 11, 31, 151, 331};  // of P - 1
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : kFactors)
            if (powm(g, (P - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
}

// --- multivariate members ------------------------------------------------

struct Term {
    std::array<int, 6> e{};
    u64 c = 0;
};
using MPoly = std::vector<Term>;

MPoly random_member(long long d, const std::vector<long long>& w,
                    std::mt19937_64& rng) {
    MPoly out;
    for (const auto& m : monomials_of_degree(d, w)) {
        Term t;
        t.c = rng() % (P - 1) + 1;  // nonzero: a general member omits nothing
        for (int i = 0; i < 6; ++i)
            t.e[static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
        out.push_back(t);
    }
    return out;
}

// Power table so that repeated evaluations at one point stay cheap.
struct PowerTable {
    std::array<std::vector<u64>, 6> p;
    explicit PowerTable(const std::array<u64, 6>& x, int max_exp) {
        for (int i = 0; i < 6; ++i) {
            auto& v = p[static_cast<size_t>(i)];
            v.resize(static_cast<size_t>(max_exp) + 1);
            v[0] = 1;
            for (int e = 1; e <= max_exp; ++e)
                v[static_cast<size_t>(e)] =
                    mulm(v[static_cast<size_t>(e) - 1], x[static_cast<size_t>(i)]);
        }
    }
    u64 at(int i, int e) const {
        return p[static_cast<size_t>(i)][static_cast<size_t>(e)];
    }
};

int max_exponent(const MPoly& f) {
    int m = 1;
    for (const auto& t : f)
        for (int e : t.e)
            m = std::max(m, e);
    return m;
}

u64 eval(const MPoly& f, const PowerTable& pt) {
    u64 acc = 0;
    for (const auto& t : f) {
        u64 v = t.c;
        for (int i = 0; i < 6; ++i)
            if (t.e[static_cast<size_t>(i)])
                v = mulm(v, pt.at(i, t.e[static_cast<size_t>(i)]));
        acc = addm(acc, v);
    }
    return acc;
}

std::array<u64, 6> gradient(const MPoly& f, const PowerTable& pt) {
    std::array<u64, 6> g{};
    for (const auto& t : f) {
        for (int m = 0; m < 6; ++m) {
            int em = t.e[static_cast<size_t>(m)];
            if (!em)
                continue;
            u64 v = mulm(t.c, static_cast<u64>(em));
            for (int i = 0; i < 6; ++i) {
                int e = t.e[static_cast<size_t>(i)] - (i == m ? 1 : 0);
                if (e)
                    v = mulm(v, pt.at(i, e));
            }
            g[static_cast<size_t>(m)] = addm(g[static_cast<size_t>(m)], v);
        }
    }
    return g;
}

int jacobian_rank(const MPoly& f1, const MPoly& f2,
                  const std::array<u64, 6>& x, int max_exp) {
    PowerTable pt(x, max_exp);
    auto g1 = gradient(f1, pt);
    auto g2 = gradient(f2, pt);
    bool z1 = std::all_of(g1.begin(), g1.end(), [](u64 v) { return v == 0; });
    bool z2 = std::all_of(g2.begin(), g2.end(), [](u64 v) { return v == 0; });
    if (z1 && z2)
        return 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (subm(mulm(g1[static_cast<size_t>(i)], g2[static_cast<size_t>(j)]),
                     mulm(g1[static_cast<size_t>(j)],
                          g2[static_cast<size_t>(i)])) != 0)
                return 2;
    return 1;
}

MPoly partial(const MPoly& f, int m) {
    MPoly out;
    for (const auto& t : f) {
        int em = t.e[static_cast<size_t>(m)];
        if (!em)
            continue;
        Term u = t;
        u.c = mulm(t.c, static_cast<u64>(em));
        u.e[static_cast<size_t>(m)] = em - 1;
        out.push_back(u);
    }
    return out;
}

bool supported_in(const MPoly& f, const std::set<int>& supp, MPoly* out = nullptr) {
    bool any = false;
    for (const auto& t : f) {
        bool inside = true;
        for (int i = 0; i < 6; ++i)
            if (t.e[static_cast<size_t>(i)] && !supp.count(i))
                inside = false;
        if (inside) {
            any = true;
            if (out)
                out->push_back(t);
        }
    }
    return any;
}

// --- univariate polynomials over F_p ------------------------------------

using UPoly = std::vector<u64>;  // coefficient of s^k at index k

void trim(UPoly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

UPoly pmul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty())
        return {};
    UPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = addm(out[i + j], mulm(a[i], b[j]));
    }
    trim(out);
    return out;
}

UPoly psub(UPoly a, const UPoly& b) {
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] = subm(a[i], b[i]);
    trim(a);
    return a;
}

// Remainder of a modulo b; b must be nonzero.
UPoly pmod(UPoly a, const UPoly& b) {
    trim(a);
    u64 inv_lead = invm(b.back());
    while (a.size() >= b.size()) {
        u64 q = mulm(a.back(), inv_lead);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = subm(a[off + i], mulm(q, b[i]));
        a.pop_back();
        trim(a);
    }
    return a;
}

// Quotient of a by b when the division is exact enough for splitting.
UPoly pdiv(UPoly a, const UPoly& b) {
    trim(a);
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    u64 inv_lead = invm(b.back());
    while (a.size() >= b.size()) {
        u64 c = mulm(a.back(), inv_lead);
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = subm(a[off + i], mulm(c, b[i]));
        a.pop_back();
        trim(a);
        if (a.empty())
            break;
    }
    trim(q);
    return q;
}

UPoly pgcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = pmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv_lead = invm(a.back());
        for (auto& c : a)
            c = mulm(c, inv_lead);
    }
    return a;
}

UPoly ppowmod(UPoly base, u64 e, const UPoly& f) {
    UPoly r = {1};
    base = pmod(std::move(base), f);
    while (e) {
        if (e & 1)
            r = pmod(pmul(r, base), f);
        base = pmod(pmul(base, base), f);
        e >>= 1;
    }
    return r;
}

// Collects the distinct roots of a product of linear factors (monic).
void split_linear(UPoly g, std::vector<u64>& out, std::mt19937_64& rng) {
    trim(g);
    if (g.size() <= 1)
        return;
    if (g.size() == 2) {
        out.push_back(subm(0, mulm(g[0], invm(g[1]))));
        return;
    }
    for (;;) {
        u64 r = rng() % P;
        UPoly w = ppowmod({r, 1}, (P - 1) / 2, g);
        if (w.empty())
            w = {0};
        w[0] = subm(w[0], 1);
        UPoly h = pgcd(w, g);
        if (h.size() > 1 && h.size() < g.size()) {
            split_linear(h, out, rng);
            split_linear(pdiv(g, h), out, rng);
            return;
        }
    }
}

// Distinct F_p roots of f (the root 0 is reported too; callers filter).
std::vector<u64> proots(UPoly f, std::mt19937_64& rng) {
    trim(f);
    std::vector<u64> out;
    if (f.size() <= 1)
        return out;
    size_t val = 0;
    while (val < f.size() && f[val] == 0)
        ++val;
    if (val > 0) {
        out.push_back(0);
        f.erase(f.begin(), f.begin() + static_cast<long>(val));
    }
    if (f.size() <= 1)
        return out;
    // gcd(x^P - x, f) isolates the distinct linear factors
    UPoly xp = ppowmod({0, 1}, P, f);
    if (xp.size() < 2)
        xp.resize(2, 0);
    xp[1] = subm(xp[1], 1);
    UPoly lin = pgcd(xp, f);
    split_linear(std::move(lin), out, rng);
    return out;
}

// Specializes a multivariate polynomial at `fixed` (coordinates outside the
// stratum are zero there), leaving coordinate `var` symbolic.
UPoly specialize(const MPoly& f, int var, const std::array<u64, 6>& fixed) {
    UPoly out;
    for (const auto& t : f) {
        u64 v = t.c;
        for (int i = 0; i < 6; ++i) {
            if (i == var || !t.e[static_cast<size_t>(i)])
                continue;
            if (fixed[static_cast<size_t>(i)] == 0) {
                v = 0;
                break;
            }
            v = mulm(v, powm(fixed[static_cast<size_t>(i)],
                             static_cast<u64>(t.e[static_cast<size_t>(i)])));
        }
        if (!v)
            continue;
        size_t e = static_cast<size_t>(t.e[static_cast<size_t>(var)]);
        if (out.size() <= e)
            out.resize(e + 1, 0);
        out[e] = addm(out[e], v);
    }
    trim(out);
    return out;
}

// --- the search ----------------------------------------------------------

struct MemberSearch {
    const MPoly& F1;
    const MPoly& F2;
    const std::vector<long long>& w;
    u64 omega;
    std::mt19937_64& rng;
    std::set<std::string>& skipped;
    int max_exp;

    static constexpr int kFaceSamples = 6;

    std::string coord(int i) const {
        static const char* kNames[6] = {"x", "y", "z", "s", "t", "u"};
        return kNames[i];
    }

    bool on_member(const std::array<u64, 6>& x) const {
        PowerTable pt(x, max_exp);
        return eval(F1, pt) == 0 && eval(F2, pt) == 0;
    }

    // Exact verification; returns a witness string when the Jacobian drops
    // rank at an actual point of the cone.
    std::string verify(const std::array<u64, 6>& x, const std::string& where) {
        if (!on_member(x))
            return {};
        int rk = jacobian_rank(F1, F2, x, max_exp);
        if (rk >= 2)
            return {};
        std::ostringstream os;
        os << where << ": point (";
        for (int i = 0; i < 6; ++i)
            os << (i ? "," : "") << x[static_cast<size_t>(i)];
        os << ") on the member has Jacobian rank " << rk;
        return os.str();
    }

    std::string vertices() {
        for (int i = 0; i < 6; ++i) {
            std::array<u64, 6> x{};
            x[static_cast<size_t>(i)] = 1;
            std::string res = verify(x, "vertex p_" + coord(i));
            if (!res.empty())
                return res;
        }
        return {};
    }

    // Representatives of F_p^* modulo a-th powers.
    std::vector<u64> coset_reps(long long a) const {
        u64 g = std::gcd<u64>(static_cast<u64>(a), P - 1);
        std::vector<u64> reps;
        for (u64 m = 0; m < g; ++m)
            reps.push_back(powm(omega, m));
        return reps;
    }

    std::string edge(int i, int j) {
        std::set<int> supp = {i, j};
        bool n1 = supported_in(F1, supp);
        bool n2 = supported_in(F2, supp);
        const std::string name = "edge {" + coord(i) + "," + coord(j) + "}";
        for (u64 rho : coset_reps(w[static_cast<size_t>(j)])) {
            std::array<u64, 6> fixed{};
            fixed[static_cast<size_t>(j)] = rho;
            if (n1 || n2) {
                // X meets the open edge in the common zeros of the
                // restricted equations; roots over F_p are complete.
                UPoly f1 = specialize(F1, i, fixed);
                UPoly f2 = specialize(F2, i, fixed);
                UPoly g;
                if (f1.empty() && f2.empty()) {
                    // cancellation for this rep: every s qualifies
                    for (u64 s = 1; s <= 8; ++s) {
                        auto x = fixed;
                        x[static_cast<size_t>(i)] = s;
                        std::string res = verify(x, name);
                        if (!res.empty())
                            return res;
                    }
                    continue;
                }
                if (f1.empty())
                    g = f2;
                else if (f2.empty())
                    g = f1;
                else
                    g = pgcd(f1, f2);
                for (u64 s : proots(g, rng)) {
                    if (!s)
                        continue;
                    auto x = fixed;
                    x[static_cast<size_t>(i)] = s;
                    std::string res = verify(x, name);
                    if (!res.empty())
                        return res;
                }
            } else {
                // whole edge inside X: singular points are the common
                // zeros of all 2x2 Jacobian minors along the edge
                std::array<UPoly, 6> d1, d2;
                for (int m = 0; m < 6; ++m) {
                    d1[static_cast<size_t>(m)] = specialize(partial(F1, m), i, fixed);
                    d2[static_cast<size_t>(m)] = specialize(partial(F2, m), i, fixed);
                }
                UPoly g;
                bool have = false, all_zero = true;
                for (int m = 0; m < 6; ++m)
                    for (int l = m + 1; l < 6; ++l) {
                        UPoly mn = psub(pmul(d1[static_cast<size_t>(m)],
                                             d2[static_cast<size_t>(l)]),
                                        pmul(d1[static_cast<size_t>(l)],
                                             d2[static_cast<size_t>(m)]));
                        if (mn.empty())
                            continue;
                        all_zero = false;
                        g = have ? pgcd(g, mn) : mn;
                        have = true;
                    }
                if (all_zero) {
                    auto x = fixed;
                    x[static_cast<size_t>(i)] = 1;
                    std::string res = verify(x, name + " (inside X)");
                    if (!res.empty())
                        return res;
                    continue;
                }
                for (u64 s : proots(g, rng)) {
                    if (!s)
                        continue;
                    auto x = fixed;
                    x[static_cast<size_t>(i)] = s;
                    std::string res = verify(x, name + " (inside X)");
                    if (!res.empty())
                        return res;
                }
            }
        }
        return {};
    }

    std::string face(int i, int j, int k) {
        std::set<int> supp = {i, j, k};
        bool n1 = supported_in(F1, supp);
        bool n2 = supported_in(F2, supp);
        const std::string name =
            "face {" + coord(i) + "," + coord(j) + "," + coord(k) + "}";
        if (n1 && n2) {
            skipped.insert(
                "faces meeting X in finitely many orbits: not searched");
            return {};
        }
        // X contains the face or cuts a surface out of it; random sampling
        // over F_p reaches both.
        skipped.insert(name + ": sampled, not exhaustive");
        for (u64 rho : coset_reps(w[static_cast<size_t>(k)])) {
            for (int n = 0; n < kFaceSamples; ++n) {
                std::array<u64, 6> fixed{};
                fixed[static_cast<size_t>(k)] = rho;
                fixed[static_cast<size_t>(j)] = rng() % (P - 1) + 1;
                if (!n1 && !n2) {
                    fixed[static_cast<size_t>(i)] = rng() % (P - 1) + 1;
                    std::string res = verify(fixed, name + " (inside X)");
                    if (!res.empty())
                        return res;
                    continue;
                }
                const MPoly& nz = n1 ? F1 : F2;
                for (u64 s : proots(specialize(nz, i, fixed), rng)) {
                    if (!s)
                        continue;
                    auto x = fixed;
                    x[static_cast<size_t>(i)] = s;
                    std::string res = verify(x, name);
                    if (!res.empty())
                        return res;
                }
            }
        }
        return {};
    }

    std::string run() {
        std::string res = vertices();
        if (!res.empty())
            return res;
        for (int i = 0; i < 6 && res.empty(); ++i)
            for (int j = i + 1; j < 6 && res.empty(); ++j)
                res = edge(i, j);
        if (!res.empty())
            return res;
        for (int i = 0; i < 6 && res.empty(); ++i)
            for (int j = i + 1; j < 6 && res.empty(); ++j)
                for (int k = j + 1; k < 6 && res.empty(); ++k)
                    res = face(i, j, k);
        skipped.insert("coordinate strata of dimension >= 3: not searched");
        return res;
    }
};

} // namespace

FalsifierReport falsify_quasismooth(const WCIShape& s, std::uint64_t seed,
                                    int members) {
    if (s.weights.size() != 6 || s.degrees.size() != 2)
        throw Error("falsifier expects six weights and two degrees");
    for (long long w : s.weights)
        if (w < 1)
            throw Error("falsifier expects positive weights");
    for (long long d : s.degrees)
        if (d < 1)
            throw Error("falsifier expects positive degrees");

    FalsifierReport rep;
    const u64 omega = primitive_root();
    std::set<std::string> skipped;
    for (int mem = 0; mem < members; ++mem) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<u64>(mem));
        MPoly f1 = random_member(s.degrees[0], s.weights, rng);
        MPoly f2 = random_member(s.degrees[1], s.weights, rng);
        ++rep.members_checked;
        int max_exp = std::max(max_exponent(f1), max_exponent(f2));
        MemberSearch search{f1, f2, s.weights, omega, rng, skipped, max_exp};
        std::string witness = search.run();
        if (!witness.empty()) {
            ++rep.members_with_witness;
            if (rep.witness.empty())
                rep.witness = witness;
        }
    }
    rep.skipped.assign(skipped.begin(), skipped.end());
    rep.definite =
        rep.members_checked > 0 && rep.members_with_witness == rep.members_checked;
    return rep;
}

} // namespace wcifano
