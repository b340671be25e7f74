#include "wcifano/monomial.hpp"
#include "wcifano/errors.hpp"

namespace wcifano {

static void enumerate(long long d, const std::vector<long long>& w, size_t i,
                      Exponents& cur, std::vector<Exponents>& out) {
    if (i == w.size()) {
        if (d == 0)
            out.push_back(cur);
        return;
    }
    for (long long e = 0; e * w[i] <= d; ++e) {
        cur[i] = static_cast<int>(e);
        enumerate(d - e * w[i], w, i + 1, cur, out);
    }
    cur[i] = 0;
}

std::vector<Exponents> monomials_of_degree(long long d,
                                           const std::vector<long long>& weights) {
    for (long long w : weights)
        if (w <= 0)
            throw Error("monomials_of_degree: weights must be positive");
    std::vector<Exponents> out;
    if (d < 0)
        return out;
    Exponents cur(weights.size(), 0);
    enumerate(d, weights, 0, cur, out);
    return out;
}

long long count_monomials_of_degree(long long d,
                                    const std::vector<long long>& weights) {
    if (d < 0)
        return 0;
    std::vector<long long> dp(static_cast<size_t>(d) + 1, 0);
    dp[0] = 1;
    for (long long w : weights)
        for (long long v = w; v <= d; ++v)
            dp[static_cast<size_t>(v)] += dp[static_cast<size_t>(v - w)];
    return dp[static_cast<size_t>(d)];
}

} // namespace wcifano
