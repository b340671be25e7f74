#pragma once

#include <vector>

namespace wcifano {

using Exponents = std::vector<int>;

// All exponent vectors e with sum_i e_i * weights_i == d, in lexicographic
// order of the exponent vector (first variable varies slowest, ascending).
std::vector<Exponents> monomials_of_degree(long long d,
                                           const std::vector<long long>& weights);

// Number of such vectors, computed by a dynamic program (independent of the
// recursive enumeration; used as a cross-check oracle).
long long count_monomials_of_degree(long long d,
                                    const std::vector<long long>& weights);

inline bool has_monomials(long long d, const std::vector<long long>& weights) {
    return !monomials_of_degree(d, weights).empty();
}

} // namespace wcifano
