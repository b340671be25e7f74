#include "wcifano/semigroup.hpp"
#include "wcifano/errors.hpp"

namespace wcifano {

bool semigroup_contains(long long a, long long b, long long x) {
    if (a <= 0 || b <= 0)
        throw Error("semigroup generators must be positive");
    if (x <= 0)
        return false;
    for (long long m = 0; m <= x / a; ++m) {
        long long r = x - m * a;
        if (r % b == 0 && (m > 0 || r > 0))
            return true;
    }
    return false;
}

long long semigroup_min_multiple(long long a0, long long a1, long long ai) {
    if (ai <= 0)
        throw Error("semigroup_min_multiple: ai must be positive");
    // Terminates: k = a0 gives k*ai = a0*ai, a multiple of a0.
    for (long long k = 1;; ++k) {
        if (semigroup_contains(a0, a1, k * ai))
            return k;
    }
}

} // namespace wcifano
