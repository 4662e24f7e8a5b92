#pragma once
// Stieltjes constants gamma_0..gamma_J (gamma_0 = Euler-Mascheroni) by
// Euler-Maclaurin on f_j(x) = ln^j(x)/x with exact integer derivative
// coefficients and a certified tail integral.

#include <vector>

#include "dk/encl.hpp"

namespace dk {

struct StieltjesTable {
  std::vector<Encl> values;  // values[j] encloses gamma_j
};

// count = J+1 entries, J <= 16; each width < 1e-30 at default precision or
// PrecisionExhausted.
StieltjesTable stieltjes_constants(int count, Prec p = 0);

}  // namespace dk
