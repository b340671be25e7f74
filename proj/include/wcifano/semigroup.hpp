#pragma once

namespace wcifano {

// True iff x = m*a + n*b with m, n >= 0 and (m, n) != (0, 0).
bool semigroup_contains(long long a, long long b, long long x);

// Smallest k > 0 with k*ai in the numerical semigroup <a0, a1>.
long long semigroup_min_multiple(long long a0, long long a1, long long ai);

} // namespace wcifano
