#pragma once
// Lambert W on both real branches, certified by sign-bracketing w e^w - x.

#include "dk/encl.hpp"

namespace dk {

enum class WBranch { Principal, MinusOne };

// Principal: x >= -1/e (DomainError below).  MinusOne: -1/e <= x < 0.
// Returns an enclosure of W(x); width < 1e-30 away from the branch point.
// If the input encloses the branch point -1/e, the result still encloses the
// branch value -1 but its width degrades like sqrt(input width).
Encl lambert_w(WBranch branch, const Encl& x);

}  // namespace dk
