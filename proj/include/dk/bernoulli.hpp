#pragma once
// Exact Bernoulli numbers B_{2n} as rationals, cached process-wide.

#include <gmpxx.h>

#include "dk/encl.hpp"

namespace dk {

// B_{2n} for 0 <= n <= max_index(); B_1 = -1/2 is not exposed (never needed).
const mpq_class& bernoulli_2n(int n);
int bernoulli_max_index();  // highest supported n (>= 64)

// Enclosure of B_{2n} at precision p.
Encl bernoulli_2n_encl(int n, Prec p = 0);

}  // namespace dk
