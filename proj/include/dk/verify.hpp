#pragma once
// Empirical verification: sweep a bound over the half-integer lattice
// against exact divisor sums, with a double fast path and certified
// escalation near the bound.

#include <cstdint>
#include <string>
#include <vector>

#include "dk/divisor.hpp"
#include "dk/methods.hpp"

namespace dk {

struct VerifyOptions {
  int workers = 1;
  Prec prec = 0;
  // When set, every tenth lattice site also checks this all-reals bound at
  // a deterministic off-lattice offset (one multiplicative-congruential
  // step on a seed mixed from (k, t_lo) and the site index).
  const ExplicitBound* reals = nullptr;
};

struct Violation {
  uint64_t t = 0;          // site x = t/2
  bool offlattice = false;  // the perturbed all-reals sample, not t/2 itself
  double ratio_up = 0;     // certified upper bound of |Delta|/bound there
};

struct VerificationReport {
  int k = 0;
  std::string bound_desc;
  uint64_t t_lo = 0, t_hi = 0;  // sweep range in half-units, x = t/2
  uint64_t count = 0;           // sites checked, off-lattice samples included
  double max_ratio = 0;  // certified upper estimate of the worst |Delta|/bound
  std::string worst_x;
  bool pass = false;  // no violations and max_ratio < 1
  std::vector<Violation> violations;  // capped at 16 for reporting

  std::string render() const;  // one-line summary ending in PASS/FAIL
};

// Sweep x = t/2, t in [t_lo, t_hi] (2 <= t, t_hi <= 2N).  Integer sites are
// checked when the bound's domain admits integers, half-integer sites when
// it admits half-integers.  T_k is exact; the main term is outward-rounded,
// so every reported ratio is an upper estimate.  The double fast path
// escalates to certified enclosures above ratio 0.95 -- seven orders of
// magnitude beyond any double rounding effect in play -- and the per-chunk
// argmax is always re-evaluated certified.  Deterministic in the worker
// count.
VerificationReport verify_bound(const DivisorSieve& s,
                                const MainTermPolynomial& P,
                                const ExplicitBound& bound, uint64_t t_lo,
                                uint64_t t_hi, const VerifyOptions& opt = {});

}  // namespace dk
