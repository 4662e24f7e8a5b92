#pragma once
// Main term x P_k(log x): P_k is the residue of zeta^k(w) x^w / w at w = 1.
// Built from the Laurent expansion of zeta about 1 (Stieltjes coefficients),
// raised to the k-th power, and convolved with the expansions of x^w and 1/w.

#include <vector>

#include "dk/encl.hpp"
#include "dk/stieltjes.hpp"

namespace dk {

// Truncated Laurent series sum_{i >= lowest} coeff[i - lowest] u^i in the
// local variable u = w - 1.
struct LaurentSeries {
  int lowest = 0;               // order of the first stored coefficient
  std::vector<Encl> coeff;

  int order_count() const { return (int)coeff.size(); }
  const Encl& at(int power) const;  // coefficient of u^power (0 outside range)
};

// zeta(1 + u) = 1/u + sum_{j>=0} (-1)^j gamma_j u^j / j!, truncated to
// `terms` stored coefficients (lowest = -1).  terms - 1 <= 14.
LaurentSeries zeta_laurent(int terms, Prec p = 0);

// product truncated to keep min(a,b) lowest order and a bounded length
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b, int keep);
LaurentSeries series_pow(const LaurentSeries& a, int k, int keep);

struct MainTermPolynomial {
  int k = 0;
  std::vector<Encl> a;  // a[j] multiplies (log x)^j, j = 0..k-1
};

// P_k for 2 <= k <= 12; truncation guard order k+2 internally.
MainTermPolynomial mainterm_poly(int k, Prec p = 0);

// x * P_k(log x) for x > 1 given as an enclosure.
Encl eval_mainterm(const MainTermPolynomial& P, const Encl& x);
// P_k(L) directly on a log-point L.
Encl eval_mainterm_log(const MainTermPolynomial& P, const Encl& L);

// sum_j |a_j| r(j) profiles need the absolute coefficients.
std::vector<Encl> abs_coeff_profile(const MainTermPolynomial& P);

}  // namespace dk
