#include "wcifano/wps.hpp"
#include "wcifano/errors.hpp"
#include "wcifano/monomial.hpp"
#include "wcifano/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wcifano {

namespace {

long long gcd_of(const std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v)
        g = std::gcd(g, x);
    return g;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::string stratum_name(const std::vector<int>& J) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < J.size(); ++i)
        os << (i ? "," : "") << J[i];
    os << "}";
    return os.str();
}

} // namespace

Rational anticanonical_degree(const WCIShape& s) {
    Rational num(1), den(1);
    for (long long d : s.degrees)
        num *= d;
    for (long long w : s.weights)
        den *= w;
    return num / den;
}

bool index_check(const WCIShape& s) {
    long long sw = std::accumulate(s.weights.begin(), s.weights.end(), 0LL);
    long long sd = std::accumulate(s.degrees.begin(), s.degrees.end(), 0LL);
    return sw - sd == 1;
}

bool wellformed(const WCIShape& s) {
    const auto& W = s.weights;
    int n = static_cast<int>(W.size());
    for (const auto& I : subsets_of_size(n, n - 1)) {
        std::vector<long long> sub;
        for (int i : I)
            sub.push_back(W[static_cast<size_t>(i)]);
        if (gcd_of(sub) != 1)
            return false;
    }
    int dimX = (n - 1) - static_cast<int>(s.degrees.size());
    for (int sz = 1; sz <= n; ++sz) {
        for (const auto& J : subsets_of_size(n, sz)) {
            std::vector<long long> ws;
            for (int j : J)
                ws.push_back(W[static_cast<size_t>(j)]);
            if (gcd_of(ws) <= 1)
                continue;
            int m = 0;
            for (long long d : s.degrees)
                if (has_monomials(d, ws))
                    ++m;
            if ((sz - 1) - m > dimX - 2)
                return false;
        }
    }
    return true;
}

bool quasismooth_hypersurface(long long d, const std::vector<long long>& weights) {
    int n = static_cast<int>(weights.size());
    for (int sz = 1; sz <= n; ++sz) {
        for (const auto& I : subsets_of_size(n, sz)) {
            std::vector<long long> ws;
            std::set<int> inI(I.begin(), I.end());
            for (int i : I)
                ws.push_back(weights[static_cast<size_t>(i)]);
            if (has_monomials(d, ws))
                continue;
            int exts = 0;
            for (int e = 0; e < n; ++e) {
                if (inI.count(e))
                    continue;
                long long r = d - weights[static_cast<size_t>(e)];
                if (r == 0 || (r > 0 && has_monomials(r, ws)))
                    ++exts;
            }
            if (exts < sz)
                return false;
        }
    }
    return true;
}

namespace {

// For vertex i and degree d, the external coordinates e such that some
// monomial x_i^m x_e (m >= 1) has degree d.
std::vector<int> vertex_elim_set(const std::vector<long long>& W, int i, long long d) {
    std::vector<int> out;
    long long ai = W[static_cast<size_t>(i)];
    for (int e = 0; e < static_cast<int>(W.size()); ++e) {
        if (e == i)
            continue;
        long long rest = d - W[static_cast<size_t>(e)];
        if (rest >= ai && rest % ai == 0)
            out.push_back(e);
    }
    return out;
}

// External derivative columns on stratum I for the equation of degree d:
// e -> the restricted monomial set of degree d - a_e (nonempty columns only;
// degree 0 counts as the single constant monomial).
std::map<int, long long> external_columns(const std::vector<long long>& W,
                                          const std::vector<int>& I, long long d) {
    std::vector<long long> ws;
    for (int i : I)
        ws.push_back(W[static_cast<size_t>(i)]);
    std::set<int> inI(I.begin(), I.end());
    std::map<int, long long> out;
    for (int e = 0; e < static_cast<int>(W.size()); ++e) {
        if (inI.count(e))
            continue;
        long long r = d - W[static_cast<size_t>(e)];
        long long cnt = (r == 0) ? 1 : (r > 0 ? count_monomials_of_degree(r, ws) : 0);
        if (cnt > 0)
            out[e] = cnt;
    }
    return out;
}

} // namespace

bool quasismooth_ci_necessary(const WCIShape& s) {
    const auto& W = s.weights;
    const auto& D = s.degrees;
    if (D.size() != 2)
        throw Error("quasismooth_ci_necessary expects exactly two degrees");
    int n = static_cast<int>(W.size());
    for (int sz = 1; sz <= n; ++sz) {
        for (const auto& I : subsets_of_size(n, sz)) {
            std::vector<long long> ws;
            for (int i : I)
                ws.push_back(W[static_cast<size_t>(i)]);
            bool m1 = has_monomials(D[0], ws);
            bool m2 = has_monomials(D[1], ws);
            if (sz == 1) {
                if (m1 || m2)
                    continue;  // a pure power puts the vertex off X
                auto E1 = vertex_elim_set(W, I[0], D[0]);
                auto E2 = vertex_elim_set(W, I[0], D[1]);
                bool ok = false;
                for (int e1 : E1)
                    for (int e2 : E2)
                        if (e1 != e2)
                            ok = true;
                if (!ok)
                    return false;
                continue;
            }
            if (m1 && m2)
                continue;  // both rows have an interior part: Bertini
            if (m1 || m2) {
                // exactly one equation vanishes identically on the stratum
                long long dv = m1 ? D[1] : D[0];
                auto cols = external_columns(W, I, dv);
                bool single = std::any_of(cols.begin(), cols.end(),
                                          [](const auto& kv) { return kv.second == 1; });
                if (single || static_cast<int>(cols.size()) >= sz - 1)
                    continue;
                return false;
            }
            // both equations vanish identically on the stratum
            auto c1 = external_columns(W, I, D[0]);
            auto c2 = external_columns(W, I, D[1]);
            auto rowok = [&](const std::map<int, long long>& c) {
                bool single = std::any_of(c.begin(), c.end(),
                                          [](const auto& kv) { return kv.second == 1; });
                return single || static_cast<int>(c.size()) >= sz;
            };
            std::set<int> all;
            for (const auto& kv : c1)
                all.insert(kv.first);
            for (const auto& kv : c2)
                all.insert(kv.first);
            if (rowok(c1) && rowok(c2) && static_cast<int>(all.size()) >= sz + 1)
                continue;
            return false;
        }
    }
    return true;
}

std::pair<long long, long long> normalize_quotient_type(long long r,
                                                        const std::vector<long long>& tw) {
    if (tw.size() != 3)
        throw Error("normalize_quotient_type expects 3 transverse weights");
    std::set<std::pair<long long, long long>> cands;
    for (long long lam = 1; lam < r; ++lam) {
        if (std::gcd(lam, r) != 1)
            continue;
        std::vector<long long> ws;
        for (long long w : tw)
            ws.push_back((lam * w) % r);
        std::sort(ws.begin(), ws.end());
        if (ws[0] == 1 && ws[1] > 0 && (ws[1] + ws[2]) % r == 0)
            cands.insert({r, std::min(ws[1], ws[2])});
    }
    if (cands.size() != 1) {
        std::ostringstream os;
        os << "quotient type 1/" << r << "(";
        for (size_t i = 0; i < tw.size(); ++i)
            os << (i ? "," : "") << tw[i];
        os << ") is not of terminal normal form";
        throw AmbiguousStratum(os.str());
    }
    return *cands.begin();
}

std::vector<ComputedBasketEntry> compute_basket(const WCIShape& s,
                                                std::vector<BasketAuditRow>* audit) {
    const auto& W = s.weights;
    const auto& D = s.degrees;
    if (W.size() != 6 || D.size() != 2)
        throw Error("compute_basket expects 6 weights and 2 degrees");
    std::map<std::pair<long long, long long>, int> raw;
    std::map<std::vector<int>, long long> NJ;  // interior counts per stratum
    std::vector<std::pair<std::vector<int>, long long>> strata;
    for (int sz = 1; sz <= 6; ++sz) {
        for (const auto& J : subsets_of_size(6, sz)) {
            std::vector<long long> ws;
            for (int j : J)
                ws.push_back(W[static_cast<size_t>(j)]);
            long long g = gcd_of(ws);
            if (g > 1)
                strata.push_back({J, g});
        }
    }
    for (const auto& [J, g] : strata) {
        int sz = static_cast<int>(J.size());
        if (sz >= 4)
            throw AmbiguousStratum("stratum " + stratum_name(J) +
                                   " has |J| >= 4 with gcd > 1");
        std::vector<long long> ws;
        std::set<int> inJ(J.begin(), J.end());
        std::vector<int> ext;
        for (int e = 0; e < 6; ++e)
            if (!inJ.count(e))
                ext.push_back(e);
        for (int j : J)
            ws.push_back(W[static_cast<size_t>(j)]);
        auto M1 = monomials_of_degree(D[0], ws);
        auto M2 = monomials_of_degree(D[1], ws);
        long long N = 0;
        if (sz == 1) {
            int i = J[0];
            if (M1.empty() && M2.empty()) {
                auto E1 = vertex_elim_set(W, i, D[0]);
                auto E2 = vertex_elim_set(W, i, D[1]);
                std::set<std::pair<long long, long long>> types;
                for (int e1 : E1) {
                    for (int e2 : E2) {
                        if (e1 == e2)
                            continue;
                        std::vector<long long> tw;
                        for (int e = 0; e < 6; ++e)
                            if (e != i && e != e1 && e != e2)
                                tw.push_back(W[static_cast<size_t>(e)] % g);
                        types.insert(normalize_quotient_type(g, tw));
                    }
                }
                if (types.empty())
                    throw AmbiguousStratum("vertex " + stratum_name(J) +
                                           " on X but not eliminable");
                if (types.size() != 1)
                    throw AmbiguousStratum("vertex " + stratum_name(J) +
                                           " has ambiguous quotient type");
                raw[*types.begin()] += 1;
                N = 1;
            }
        } else if (sz == 2) {
            long long b1 = ws[0], b2 = ws[1];
            if (M1.empty() && M2.empty())
                throw AmbiguousStratum("edge " + stratum_name(J) +
                                       " is contained in X");
            if (!M1.empty() && !M2.empty()) {
                N = 0;
            } else {
                const auto& mons = M1.empty() ? M2 : M1;
                long long d = M1.empty() ? D[1] : D[0];
                long long dv = M1.empty() ? D[0] : D[1];
                int cmin1 = mons[0][0], cmin2 = mons[0][1];
                for (const auto& m : mons) {
                    cmin1 = std::min(cmin1, m[0]);
                    cmin2 = std::min(cmin2, m[1]);
                }
                long long Dd = d - cmin1 * b1 - cmin2 * b2;
                if (Dd != 0) {
                    long long num = Dd * g;
                    if (num % (b1 * b2) != 0)
                        throw NonIntegralCount("edge " + stratum_name(J) +
                                               " interior count is not integral");
                    N = num / (b1 * b2);
                    // eliminate one external direction for the vanishing eq
                    std::set<std::pair<long long, long long>> types;
                    for (int e : ext) {
                        long long rest = dv - W[static_cast<size_t>(e)];
                        if (rest == 0 || (rest > 0 && semigroup_contains(b1, b2, rest))) {
                            std::vector<long long> tw;
                            for (int e2 : ext)
                                if (e2 != e)
                                    tw.push_back(W[static_cast<size_t>(e2)] % g);
                            types.insert(normalize_quotient_type(g, tw));
                        }
                    }
                    if (types.empty())
                        throw AmbiguousStratum("edge " + stratum_name(J) +
                                               ": vanishing equation not eliminable");
                    if (types.size() != 1)
                        throw AmbiguousStratum("edge " + stratum_name(J) +
                                               " has ambiguous quotient type");
                    raw[*types.begin()] += static_cast<int>(N);
                }
            }
        } else {
            long long b1 = ws[0], b2 = ws[1], b3 = ws[2];
            if (M1.empty() || M2.empty())
                throw AmbiguousStratum("face " + stratum_name(J) +
                                       " meets X in positive dimension");
            Rational bez = Rational(Int(D[0]) * D[1], Int(b1) * b2 * b3);
            Rational sub(0);
            for (const auto& [Jp, gp] : strata) {
                if (Jp.size() < J.size() &&
                    std::includes(J.begin(), J.end(), Jp.begin(), Jp.end()))
                    sub += Rational(Int(NJ[Jp]), Int(gp));
            }
            Rational cnt = Rational(Int(g)) * (bez - sub);
            if (!is_integer(cnt) || cnt < 0)
                throw NonIntegralCount("face " + stratum_name(J) +
                                       " interior count is not a nonnegative integer");
            N = numer(cnt).convert_to<long long>();
            if (N > 0) {
                std::vector<long long> tw;
                for (int e : ext)
                    tw.push_back(W[static_cast<size_t>(e)] % g);
                raw[normalize_quotient_type(g, tw)] += static_cast<int>(N);
            }
        }
        NJ[J] = N;
        if (audit) {
            int nonvanishing = 0;
            Rational rhs(1);
            for (long long w : ws)
                rhs /= w;
            if (!M1.empty()) { rhs *= D[0]; ++nonvanishing; }
            if (!M2.empty()) { rhs *= D[1]; ++nonvanishing; }
            if (sz - 1 == nonvanishing) {  // X meets the closed stratum in dim 0
                Rational lhs(0);
                for (const auto& [Jp, gp] : strata) {
                    if (std::includes(J.begin(), J.end(), Jp.begin(), Jp.end()))
                        lhs += Rational(Int(NJ[Jp]), Int(gp));
                }
                audit->push_back({J, g, lhs, rhs});
            }
        }
    }
    std::vector<ComputedBasketEntry> out;
    for (const auto& [t, c] : raw)
        if (c > 0)
            out.push_back({t.first, t.second, c});
    return out;
}

std::vector<DistinguishedConfig> detect_distinguished(const WCIShape& s) {
    const auto& W = s.weights;
    const auto& D = s.degrees;
    if (W.size() != 6 || D.size() != 2)
        throw Error("detect_distinguished expects 6 weights and 2 degrees");
    std::vector<DistinguishedConfig> out;
    for (int k = 1; k < 6; ++k) {
        long long ak = W[static_cast<size_t>(k)];
        // p_{x_k} lies on a general member unless a pure power of x_k (or of
        // the 2-dim weight-a_k coordinate space) appears in some equation.
        bool on_x = true;
        for (long long d : D) {
            if (d % ak == 0 &&
                std::count(W.begin(), W.end(), ak) < 2)
                on_x = false;
        }
        if (!on_x)
            continue;
        for (int j1 = 1; j1 < 6; ++j1) {
            if (j1 == k || W[static_cast<size_t>(j1)] != D[0] - ak)
                continue;
            for (int j2 = 1; j2 < 6; ++j2) {
                if (j2 == k || j2 == j1 || W[static_cast<size_t>(j2)] != D[1] - ak)
                    continue;
                std::vector<int> rest;
                for (int i = 1; i < 6; ++i)
                    if (i != k && i != j1 && i != j2)
                        rest.push_back(i);
                int i1 = rest[0], i2 = rest[1];
                if (W[static_cast<size_t>(i1)] > W[static_cast<size_t>(i2)])
                    std::swap(i1, i2);
                if (!(W[static_cast<size_t>(i1)] < W[static_cast<size_t>(i2)] &&
                      W[static_cast<size_t>(i2)] < ak))
                    continue;
                out.push_back({k, j1, j2, i1, i2});
            }
        }
    }
    return out;
}

long long weight_product(const WCIShape& s, const DistinguishedConfig& c) {
    return s.weights[static_cast<size_t>(c.i1)] * s.weights[static_cast<size_t>(c.i2)];
}

Rational kawamata_degree(const Rational& A3, long long r, long long a) {
    return A3 - Rational(Int(1), Int(r) * a * (r - a));
}

std::string classify_family(const WCIShape& s) {
    const auto& W = s.weights;
    Rational A3 = anticanonical_degree(s);
    Rational t5 = Rational(Int(W[1]) * W[5]) * A3;
    if (t5 <= 1)
        return "F(i)";
    Rational t3 = Rational(Int(W[1]) * W[3]) * A3;
    bool wp_ok = false;
    for (const auto& c : detect_distinguished(s))
        if (weight_product(s, c) >= s.degrees[0])
            wp_ok = true;
    if (t5 <= 2 && t3 <= 1 && wp_ok)
        return "F(ii)";
    return "other";
}

} // namespace wcifano
