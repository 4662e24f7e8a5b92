#pragma once
// Principal complex log-Gamma by Stirling with certified remainder, and the
// functional-equation factor chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2).

#include "dk/complex.hpp"

namespace dk {

// Principal log Gamma(z).  The box is shifted to Re >= 26 internally; the
// imaginary part is the principal value up to the shift-consistent branch
// (modulus and ratios of Gamma values are branch-independent).
// PoleError if the box meets a nonpositive integer.
CEncl log_gamma(const CEncl& z);

// Digamma psi(z) with the same shift scheme; used for the t-derivative of
// log |chi(b+it)| inside the certified quadrature.
CEncl digamma(const CEncl& z);

// chi(s); PoleError at poles of the Gamma ratio.
CEncl chi_factor(const CEncl& s);

// |chi(b + it)|^k upper/lower enclosure straight from exp(Re log chi).
Encl chi_modulus_pow(const CEncl& s, int k);

}  // namespace dk
