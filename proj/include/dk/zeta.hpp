#pragma once
// Euler-Maclaurin zeta evaluators with certified truncation remainders.
//
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//             + sum_{j=1}^{q} B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1} + R,
//   |R| <= |B_{2q+2}|/(2q+2)! * |(s)_{2q+2}| * N^{-sigma-2q-1}/(sigma+2q+1).
//
// The remainder is folded into the returned box, so results are enclosures.

#include "dk/complex.hpp"
#include "dk/encl.hpp"

namespace dk {

// Real zeta on s > 1 + 1e-6 (DomainError otherwise).
Encl zeta_real(const Encl& s);

// zeta(1/2 + i t) for 0 <= t <= 1e4; t may be a wide interval (the box is
// then an enclosure over the whole segment).  RangeError above 1e4.
CEncl zeta_critical(const Encl& t);

// General engine: Re(s) > 0 and the box excludes the pole s = 1.
CEncl zeta_em(const CEncl& s);

// Value and s-derivative together; both carry certified remainders.
// |R'| is bounded via the pochhammer log-derivative and the log-weighted
// kernel integral; pass dval = nullptr to skip the derivative work.
void zeta_em_d(const CEncl& s, CEncl& val, CEncl* dval);

}  // namespace dk
